#pragma once

#include <vector>

#include "kr/qpolynomial.hpp"

// Finite crystallographic Coxeter groups given by an integer Cartan matrix,
// with a diagram automorphism ("Frobenius").  Elements are enumerated once,
// as integer matrices of the reflection representation on the root lattice,
// with lengths read off a breadth-first search of the Cayley graph.  This is
// all the Weyl-group data needed for twisted (quasi-split) flag-variety
// point counts.

namespace kr {

struct TwistedCoxeterDiagram {
  // cartan[i][j] = <alpha_j, alpha_i^v>; diagonal 2, off-diagonal <= 0.
  // Finite bonds only: cartan[i][j]*cartan[j][i] in {0,1,2,3} (Coxeter
  // labels 2,3,4,6); a product >= 4 marks an infinite bond and is rejected
  // by the enumeration.
  std::vector<std::vector<int>> cartan;
  // Diagram automorphism as a node permutation; must preserve cartan.
  std::vector<int> sigma;
  // Display labels of the nodes (defaults to 0..size-1).
  std::vector<int> labels;

  int size() const { return static_cast<int>(cartan.size()); }
  int coxeter_label(int i, int j) const;  // m(s_i, s_j) in {1,2,3,4,6}
  void validate() const;                  // throws if sigma breaks the matrix
};

// Type A_{k} path on k nodes (all bonds label 3), trivial automorphism.
TwistedCoxeterDiagram linear_diagram(int node_count);

// Weyl group S_g of the quasi-split unitary group U_g: type A_{g-1} with the
// flip s_i <-> s_{g-i} as automorphism.
TwistedCoxeterDiagram unitary_weyl_diagram(int g);

// Extended Dynkin diagram of type C~_g on nodes labeled 0..g with the
// Frobenius action i -> g-i.  (For g = 1 the single bond is infinite; the
// diagram is still valid input for subset enumeration and subdiagrams.)
TwistedCoxeterDiagram affine_c_diagram(int g);

// Full subdiagram on the given nodes (indices into diagram.labels order),
// with the induced automorphism; throws if the node set is not stable.
TwistedCoxeterDiagram subdiagram(const TwistedCoxeterDiagram& diagram,
                                 const std::vector<int>& nodes);

// The full enumeration of the group defined by a diagram.
class CoxeterGroupTable {
 public:
  explicit CoxeterGroupTable(const TwistedCoxeterDiagram& diagram,
                             std::size_t element_cap = 2'000'000);

  const TwistedCoxeterDiagram& diagram() const { return diagram_; }
  std::size_t order() const { return length_.size(); }
  int length(std::size_t index) const { return length_[index]; }
  std::size_t identity() const { return identity_; }
  std::size_t multiply_generator(std::size_t index, int gen) const;  // w * s_gen
  std::size_t sigma_image(std::size_t index) const;

  std::size_t element_of_word(const std::vector<int>& word) const;
  std::vector<int> reduced_word_of(std::size_t index) const;
  // Letters of any reduced word (word-independent).
  std::vector<int> support_of(std::size_t index) const;

 private:
  TwistedCoxeterDiagram diagram_;
  std::size_t identity_ = 0;
  std::vector<int> length_;
  std::vector<std::vector<std::size_t>> shift_;  // right multiplication table
  std::vector<std::size_t> sigma_map_;
};

// Twisted Poincare sum  sum_{w in W^sigma} q^(l(w)); with trivial sigma this
// is the classical Poincare polynomial of W, and it computes the F_q-point
// count of the flag variety of the corresponding quasi-split group.
QPolynomial twisted_flag_polynomial(const TwistedCoxeterDiagram& diagram);

// All non-empty sigma-stable node subsets, ascending as bitmasks.
std::vector<std::vector<int>> frobenius_stable_subsets(
    const TwistedCoxeterDiagram& diagram);

struct DlVarietyStats {
  int dimension = 0;
  Int component_count;
};

// Deligne-Lusztig variety X(w) in the flag variety of the quasi-split group
// with Weyl data (W, sigma), for w given as a word in the generators:
// dimension l(w), and number of irreducible components
// #(G/P_J)(F_q) = P_{W,sigma}(q) / P_{W_J,sigma}(q) for the minimal
// sigma-stable standard parabolic W_J containing w.  The division is checked
// exact.  In particular the count is 1 iff w lies in no proper sigma-stable
// standard parabolic.
DlVarietyStats dl_variety_stats(const TwistedCoxeterDiagram& diagram,
                                const std::vector<int>& word, const Int& q);

}  // namespace kr
