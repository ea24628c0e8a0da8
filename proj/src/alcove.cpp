#include "kr/alcove.hpp"

#include <numeric>
#include <optional>

namespace kr {

namespace {

Vec omega_entry(int n, int i) {
  // Defined for all integers i through the same periodic extension.
  int q = i >= 0 ? i / n : -((-i + n - 1) / n);
  int r = i - q * n;
  Vec v(n, -q);
  for (int j = 0; j < r; ++j) v[j] -= 1;
  return v;
}

// Position decremented between entry i and entry i+1, or -1 if the step
// condition fails there.
int step_position(const Vec& a, const Vec& b) {
  int pos = -1;
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j] == b[j]) continue;
    if (b[j] != a[j] - 1 || pos >= 0) return -1;
    pos = static_cast<int>(j);
  }
  return pos;
}

}  // namespace

ExtendedAlcove::ExtendedAlcove(GroupContext ctx, std::vector<Vec> entries)
    : ctx_(ctx), x_(std::move(entries)) {
  int n = ctx_.rank;
  if (static_cast<int>(x_.size()) != n)
    throw std::invalid_argument("alcove needs n entries");
  for (const Vec& v : x_)
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("alcove entry of wrong dimension");
  for (int i = 0; i < n; ++i) {
    const Vec next = (i + 1 < n) ? x_[i + 1] : entry(n);
    if (step_position(x_[i], next) < 0)
      throw std::invalid_argument("step condition violated");
  }
}

Vec ExtendedAlcove::entry(int i) const {
  int n = ctx_.rank;
  int q = i >= 0 ? i / n : -((-i + n - 1) / n);
  int r = i - q * n;
  Vec v = x_[r];
  for (int& c : v) c -= q;
  return v;
}

std::optional<int> ExtendedAlcove::duality_constant() const {
  int n = ctx_.rank;
  if (!ctx_.symplectic_kind()) return std::nullopt;
  // 1-based: x_i(j) + x_{2g-i}(2g-j+1) = c-1.
  int c = x_[0][0] + entry(n)[n - 1] + 1;
  for (int i = 0; i <= n / 2; ++i) {
    Vec dual = entry(n - i);
    for (int j = 0; j < n; ++j)
      if (x_[i][j] + dual[n - 1 - j] != c - 1) return std::nullopt;
  }
  return c;
}

ExtendedAlcove standard_alcove(const GroupContext& ctx) {
  std::vector<Vec> xs;
  xs.reserve(ctx.rank);
  for (int i = 0; i < ctx.rank; ++i) xs.push_back(omega_entry(ctx.rank, i));
  return ExtendedAlcove(ctx, std::move(xs));
}

ExtendedAlcove alcove_of(const ExtAffineElement& x) {
  const GroupContext& ctx = x.context();
  std::vector<Vec> xs;
  xs.reserve(ctx.rank);
  for (int i = 0; i < ctx.rank; ++i)
    xs.push_back(x.act(omega_entry(ctx.rank, i)));
  return ExtendedAlcove(ctx, std::move(xs));
}

ExtAffineElement element_of(const ExtendedAlcove& a) {
  // The element maps omega_i to x_i; since omega_i - omega_{i+1} = e_{i+1},
  // the finite part sends e_i (0-based) to the coordinate stepped at i.
  const GroupContext& ctx = a.context();
  int n = ctx.rank;
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) {
    int pos = step_position(a.entries()[i],
                            i + 1 < n ? a.entries()[i + 1] : a.entry(n));
    img[i] = pos;  // constructor already guaranteed pos >= 0
  }
  return ExtAffineElement(ctx, a.entries()[0], Permutation(std::move(img)));
}

bool is_mu_permissible(const ExtendedAlcove& a) {
  const GroupContext& ctx = a.context();
  int n = ctx.rank, r = ctx.weight_ones;
  for (int i = 0; i < n; ++i) {
    Vec om = omega_entry(n, i);
    int sum = 0;
    for (int j = 0; j < n; ++j) {
      int d = a.entries()[i][j] - om[j];
      if (d < 0 || d > 1) return false;
      sum += a.entries()[i][j];
    }
    if (sum != n - r - i) return false;
  }
  if (ctx.symplectic_kind()) {
    std::optional<int> c = a.duality_constant();
    if (!c) return false;
    if (*c != 1)
      throw std::logic_error(
          "permissible symplectic alcove with duality constant != 1");
  }
  return true;
}

Vec extend_indices(const ExtendedAlcove& a, int i) { return a.entry(i); }

}  // namespace kr
