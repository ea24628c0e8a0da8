#include "kr/invariants.hpp"

#include <algorithm>
#include <set>

#include "kr/admissible.hpp"

namespace kr {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

int mod(int a, int n) { return ((a % n) + n) % n; }

// Cyclic-sum r_{ij} for row/column indices taken in Z/2g.  The walk starts
// at k = j+1 and takes ((i-j-1) mod n)+1 steps, so the "diagonal" entries
// traverse the full cycle and evaluate to the constant r = g.
int raw_r(const ExtendedAlcove& a, int i, int j) {
  int n = a.context().rank;
  i = mod(i, n);
  j = mod(j, n);
  const Vec& xi = a.entries()[i];
  int count = mod(i - j - 1, n) + 1;
  int total = 0;
  int k = j;
  for (int step = 0; step < count; ++step) {
    k = (k + 1 == n) ? 0 : k + 1;
    int pos = (k == 0) ? n - 1 : k - 1;  // residue class k read as coordinate in 1..n
    int omega = (pos < i) ? -1 : 0;
    total += omega - xi[pos] + 1;
  }
  return total;
}

}  // namespace

InvariantTable::InvariantTable(int g, std::vector<std::vector<int>> rows)
    : g_(g), rows_(std::move(rows)) {}

int InvariantTable::r(int i, int j) const {
  require(i >= g_ && i <= 2 * g_ && j >= 0 && j < 2 * g_, "r index out of range");
  return rows_[i - g_][j];
}

int InvariantTable::sigma(int j, int i) const {
  require(0 <= j && j < i && i <= g_, "sigma index out of range");
  return g_ - r(2 * g_ - i, mod(2 * g_ - j, 2 * g_));
}

int InvariantTable::sigma_prime(int i, int j) const {
  require(0 <= i && i < j && j <= g_, "sigma' index out of range");
  return j - i - r(2 * g_ - i, 2 * g_ - j);
}

int InvariantTable::d(int i, int j) const {
  require(0 <= i && i <= g_ && 0 <= j && j <= g_, "d index out of range");
  return r(2 * g_ - i, j) + j;
}

InvariantTable r_table(const ExtendedAlcove& a) {
  require(a.context().symplectic_kind() && is_mu_permissible(a),
          "r_table requires a mu-permissible symplectic alcove");
  int g = a.context().genus();
  std::vector<std::vector<int>> rows(g + 1, std::vector<int>(2 * g));
  for (int i = g; i <= 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j) rows[i - g][j] = raw_r(a, i, j);
  return InvariantTable(g, std::move(rows));
}

bool invariants_separate_strata(int g) {
  require(g >= 1 && g <= 4, "injectivity scan limited to g <= 4");
  std::set<InvariantTable> seen;
  for (const StratumRecord& rec : enumerate_admissible(g))
    if (!seen.insert(r_table(rec.alcove)).second) return false;
  return true;
}

std::vector<int> superspecial_indices(const ExtAffineElement& x) {
  const GroupContext& ctx = x.context();
  int g = ctx.genus();
  ExtendedAlcove a = alcove_of(x);
  ExtendedAlcove t = alcove_of(tau(ctx));
  std::vector<int> out;
  for (int i = 0; i <= g / 2; ++i)
    if (a.entries()[i] == t.entries()[i] &&
        a.entries()[g - i] == t.entries()[g - i])
      out.push_back(i);
  return out;
}

bool is_supersingular(const ExtAffineElement& x) {
  return !superspecial_indices(x).empty();
}

std::pair<int, std::vector<int>> superspecial_union_dimension(int g) {
  require(g >= 1, "g must be positive");
  int best = -1;
  std::vector<int> argmax;
  for (int i = 0; i <= g / 2; ++i) {
    int len = 2 * i * i + (g - 2 * i) * (g - 2 * i - 1) / 2;
    if (len > best) {
      best = len;
      argmax.assign(1, i);
    } else if (len == best) {
      argmax.push_back(i);
    }
  }
  return {best, argmax};
}

ExtAffineElement longest_element(int g, int i) {
  require(0 <= i && i <= g / 2, "index out of range");
  GroupContext ctx = GroupContext::symplectic(g);
  // Saturate ascents within the parabolic generated by all s_k, k != i, g-i.
  ExtAffineElement u = ExtAffineElement::identity(ctx);
  int len = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int k = 0; k <= g && !grew; ++k) {
      if (k == i || k == g - i) continue;
      ExtAffineElement su = simple_reflection(ctx, k) * u;
      int l = length(su);
      if (l > len) {
        u = std::move(su);
        len = l;
        grew = true;
      }
    }
  }
  return u * tau(ctx);
}

}  // namespace kr
