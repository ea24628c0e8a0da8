#pragma once

#include <set>

#include "kr/alcove.hpp"
#include "kr/weyl.hpp"

// Complete enumeration of the mu-admissible set Adm_I(mu) of GSp_{2g},
// which by the Kottwitz-Rapoport theorem equals the set of mu-permissible
// alcoves.  The primary enumeration is a DFS over alcove coordinates; a
// direct Bruhat lower-cone oracle is provided for small g.

namespace kr {

inline constexpr int kMaxGenus = 6;

// One Kottwitz-Rapoport stratum.  dim equals the length of the element;
// p_rank is half the number of fixed points of the finite part;
// superspecial_at lists the i in {0..g/2} with x_i = tau_i and
// x_{g-i} = tau_{g-i}.  The r-table is computed separately (see
// kr/invariants.hpp).
struct StratumRecord {
  ExtAffineElement element;
  ReducedWord word;
  ExtendedAlcove alcove;
  int dim = 0;
  int p_rank = 0;
  std::vector<int> superspecial_at;
};

// All mu-permissible symplectic alcoves for GSp_{2g}, converted to elements,
// in lexicographic order of the concatenated alcove coordinates.
// Requires 1 <= g <= kMaxGenus.
std::vector<StratumRecord> enumerate_admissible(int g);

// Direct Adm definition: union of the Bruhat lower cones of the 2^g
// translations t^{w(mu)}, by exhaustive subword evaluation.  g <= 3.
std::set<ExtAffineElement> enumerate_admissible_oracle(int g);

// (1/2) #Fix(w) for x = t^nu w.
int p_rank(const ExtAffineElement& x);

// The maximal elements of Adm(mu): translations t^{w(mu)} over the W-orbit
// of mu, each of length g(g+1)/2.
std::vector<ExtAffineElement> maximal_elements(int g);

// Number of irreducible components of the moduli space A_J for
// J = {i_0 < ... < i_r} inside {0..g}: prod_j (k_j + 1) with
// k_j = i_j - i_{j-1} and k_0 = 0.
long long component_count_A_J(int g, const std::vector<int>& J);

}  // namespace kr
