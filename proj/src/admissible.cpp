#include "kr/admissible.hpp"

#include <algorithm>
#include <array>

namespace kr {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// DFS over the raised-coordinate model.  Writing R_i for the set of g
// coordinates where x_i exceeds omega_i, a legal step decrements either
// coordinate i (always) or a raised coordinate j != i provided coordinate i
// is not raised; in the latter case i becomes raised.  Levels 0..g-1 fix
// x_0..x_g; the remaining entries are forced by duality and the bounds for
// them hold automatically.
struct AlcoveDfs {
  int g, n;
  std::vector<std::vector<Vec>> out;
  std::vector<Vec> chain;  // x_0..x_g as they are chosen

  void run() {
    for (int mask = 0; mask < (1 << g); ++mask) {
      Vec x0(n, 0);
      for (int j = 0; j < g; ++j) {
        if (mask & (1 << j))
          x0[j] = 1;
        else
          x0[n - 1 - j] = 1;
      }
      chain.assign(1, x0);
      descend(0);
    }
  }

  void descend(int i) {
    if (i == g) {
      const Vec& xg = chain.back();
      for (int j = 0; j < n; ++j)
        if (xg[j] + xg[n - 1 - j] != 0) return;
      emit();
      return;
    }
    const Vec& xi = chain.back();
    // raised <=> x_i(j) == omega_i(j) + 1, omega_i = (-1^(i), 0^(n-i)).
    auto raised = [&](int j) { return xi[j] == (j < i ? 0 : 1); };
    auto step = [&](int j) {
      chain.push_back(xi);
      chain.back()[j] -= 1;
      descend(i + 1);
      chain.pop_back();
    };
    step(i);
    if (!raised(i)) {
      for (int j = 0; j < n; ++j)
        if (j != i && raised(j)) step(j);
    }
  }

  void emit() {
    std::vector<Vec> xs = chain;  // x_0..x_g
    for (int i = g - 1; i >= 1; --i) {
      Vec dual(n);
      for (int k = 0; k < n; ++k) dual[k] = -chain[i][n - 1 - k];
      xs.push_back(std::move(dual));
    }
    out.push_back(std::move(xs));
  }
};

}  // namespace

std::vector<StratumRecord> enumerate_admissible(int g) {
  require(g >= 1 && g <= kMaxGenus, "g out of supported range");
  GroupContext ctx = GroupContext::symplectic(g);
  AlcoveDfs dfs{g, 2 * g, {}, {}};
  dfs.run();
  std::sort(dfs.out.begin(), dfs.out.end());

  ExtendedAlcove tau_alc = alcove_of(tau(ctx));
  std::vector<StratumRecord> records;
  records.reserve(dfs.out.size());
  for (auto& xs : dfs.out) {
    StratumRecord rec;
    rec.alcove = ExtendedAlcove(ctx, std::move(xs));
    rec.element = element_of(rec.alcove);
    rec.word = reduced_word(rec.element);
    rec.dim = static_cast<int>(rec.word.letters.size());
    rec.p_rank = p_rank(rec.element);
    for (int i = 0; i <= g / 2; ++i)
      if (rec.alcove.entries()[i] == tau_alc.entries()[i] &&
          rec.alcove.entries()[g - i] == tau_alc.entries()[g - i])
        rec.superspecial_at.push_back(i);
    records.push_back(std::move(rec));
  }
  return records;
}

std::set<ExtAffineElement> enumerate_admissible_oracle(int g) {
  require(g >= 1 && g <= 3, "oracle limited to g <= 3");
  GroupContext ctx = GroupContext::symplectic(g);
  std::set<ExtAffineElement> out;
  for (const ExtAffineElement& m : maximal_elements(g)) {
    ReducedWord w = reduced_word(m);
    size_t len = w.letters.size();
    ExtAffineElement om = w.omega_part();
    for (size_t bits = 0; bits < (size_t{1} << len); ++bits) {
      ExtAffineElement x = ExtAffineElement::identity(ctx);
      for (size_t k = 0; k < len; ++k)
        if (bits & (size_t{1} << k))
          x = x * simple_reflection(ctx, w.letters[k]);
      out.insert(x * om);
    }
  }
  return out;
}

int p_rank(const ExtAffineElement& x) {
  return x.finite_part().fixed_point_count() / 2;
}

std::vector<ExtAffineElement> maximal_elements(int g) {
  GroupContext ctx = GroupContext::symplectic(g);
  int n = 2 * g;
  std::vector<ExtAffineElement> out;
  for (int mask = 0; mask < (1 << g); ++mask) {
    Vec nu(n, 0);
    for (int j = 0; j < g; ++j) {
      if (mask & (1 << j))
        nu[j] = 1;
      else
        nu[n - 1 - j] = 1;
    }
    out.push_back(ExtAffineElement::translation(ctx, std::move(nu)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long component_count_A_J(int g, const std::vector<int>& J) {
  require(!J.empty(), "J must be non-empty");
  require(std::is_sorted(J.begin(), J.end()), "J must be sorted");
  require(J.front() >= 0 && J.back() <= g, "J not inside {0..g}");
  long long prod = 1;  // k_0 = 0 contributes the factor 1
  for (size_t j = 1; j < J.size(); ++j) {
    require(J[j] > J[j - 1], "J has repeated entries");
    prod *= J[j] - J[j - 1] + 1;
  }
  return prod;
}

}  // namespace kr
