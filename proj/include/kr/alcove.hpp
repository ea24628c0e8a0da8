#pragma once

#include <optional>

#include "kr/weyl.hpp"

// Kottwitz-Rapoport extended alcoves: tuples (x_0, ..., x_{n-1}) of integer
// vectors with x_{i+1} obtained from x_i by decrementing exactly one
// coordinate, extended periodically by x_{i+kn} = x_i - k*(1,...,1).  They
// model Iwahori orbits of complete periodic lattice chains; the extended
// affine Weyl group acts entrywise and simply transitively.

namespace kr {

class ExtendedAlcove {
 public:
  ExtendedAlcove() = default;
  // Validates the step condition.
  ExtendedAlcove(GroupContext ctx, std::vector<Vec> entries);

  const GroupContext& context() const { return ctx_; }
  int size() const { return static_cast<int>(x_.size()); }
  const std::vector<Vec>& entries() const { return x_; }

  // x_i for any integer i, via x_{i+kn} = x_i - k*1.
  Vec entry(int i) const;

  // The constant c with x_i(j) + x_{2g-i}(2g+1-j) = c - 1, or nullopt if the
  // duality condition fails.  Symplectic contexts only.
  std::optional<int> duality_constant() const;

  friend bool operator==(const ExtendedAlcove&, const ExtendedAlcove&) = default;

 private:
  GroupContext ctx_;
  std::vector<Vec> x_;
};

// omega_i = (-1^(i), 0^(n-i)).
ExtendedAlcove standard_alcove(const GroupContext& ctx);

// Entrywise action on the standard alcove: (alcove_of(x))_i = w.omega_i + nu.
ExtendedAlcove alcove_of(const ExtAffineElement& x);

// Inverse of alcove_of; throws if the entries are not in the W~-orbit of the
// standard alcove (step condition violated, or not symplectic for a
// symplectic context).
ExtAffineElement element_of(const ExtendedAlcove& a);

// Kottwitz-Rapoport mu-permissibility: omega_i <= x_i <= omega_i + 1
// componentwise and sum x_i = n - r - i for all i; in the symplectic case
// additionally the duality condition (whose constant is then necessarily 1).
bool is_mu_permissible(const ExtendedAlcove& a);

// Convenience accessor used by the permissibility and invariant code.
Vec extend_indices(const ExtendedAlcove& a, int i);

}  // namespace kr
