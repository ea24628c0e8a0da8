#pragma once

#include <utility>

#include "kr/alcove.hpp"
#include "kr/weyl.hpp"

// Numerical invariants of Kottwitz-Rapoport strata: the r_{ij} chain
// dimensions, the derived sigma / sigma' / d tables characterizing strata in
// terms of Hodge filtrations of abelian-variety chains, and the
// superspecial / supersingular classification.

namespace kr {

// r_{ij}(x) = sum_{k=j+1}^{i} (omega_i(k) - x_i(k) + 1) with cyclic index
// walk in Z/2g; rows are stored for i in {g..2g} (row 2g reads r_{0j}),
// columns j in {0..2g-1}.  Derived tables, for 0 <= i, j <= g:
//   sigma_{ji}  = g - r_{2g-i,2g-j}        (j < i)
//   sigma'_{ij} = j - i - r_{2g-i,2g-j}    (i < j)
//   d_{ij}      = r_{2g-i,j} + j
// with out-of-range indices reduced cyclically (r_{.,2g} = r_{.,0}).
class InvariantTable {
 public:
  InvariantTable() = default;
  InvariantTable(int g, std::vector<std::vector<int>> rows);

  int genus() const { return g_; }
  // i in {g..2g}, j in {0..2g-1}.  The diagonal r_{ii} (and the cyclically
  // diagonal r_{2g,0}) equals the constant g.
  int r(int i, int j) const;
  int sigma(int j, int i) const;        // j < i <= g
  int sigma_prime(int i, int j) const;  // i < j <= g
  int d(int i, int j) const;            // 0 <= i, j <= g

  friend bool operator==(const InvariantTable&, const InvariantTable&) = default;
  friend bool operator<(const InvariantTable& a, const InvariantTable& b) {
    return a.rows_ < b.rows_;
  }

 private:
  int g_ = 0;
  std::vector<std::vector<int>> rows_;  // rows_[i-g][j] = r_{ij}
};

// Computes the full table for a mu-permissible symplectic alcove.
InvariantTable r_table(const ExtendedAlcove& a);

// Whether x -> r_table(x) is injective on Adm(mu).  g <= 4.
bool invariants_separate_strata(int g);

// {i in 0..g/2 : alcove(x)_i = tau_i and alcove(x)_{g-i} = tau_{g-i}};
// equivalently the i with support(x tau^{-1}) disjoint from {i, g-i}.
std::vector<int> superspecial_indices(const ExtAffineElement& x);

// A stratum is supersingular iff it is superspecial.
bool is_supersingular(const ExtAffineElement& x);

// max over i in {0..g/2} of 2i^2 + (g-2i)(g-2i-1)/2, together with the set
// of maximizing i.  Equals g^2/2 for even g and g(g-1)/2 for odd g.
std::pair<int, std::vector<int>> superspecial_union_dimension(int g);

// The longest element of W_{{i,g-i}} (all simple reflections except s_i and
// s_{g-i}) times tau; its length is 2i^2 + (g-2i)(g-2i-1)/2.
ExtAffineElement longest_element(int g, int i);

}  // namespace kr
