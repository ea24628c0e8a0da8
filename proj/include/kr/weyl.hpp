#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic in the extended affine Weyl groups of GL_n (type A~_{n-1})
// and GSp_{2g} (type C~_g), realized inside Z^n x S_n.  An element x = t^nu w
// acts on Z^n by v |-> w.v + nu, where (w.v)(k) = v(w^{-1}(k)).  The base
// alcove sits in the anti-dominant chamber; all sign conventions downstream
// (alcove coordinates, r-tables) are pinned to that choice.

namespace kr {

using Vec = std::vector<int>;

// Permutation of {0, ..., n-1} in one-line notation: img[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> img);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const;
  // Composition acting left-to-right on points: (a*b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  // Coordinate action (w.v)(k) = v(w^{-1}(k)).
  Vec apply(const Vec& v) const;

  bool is_identity() const;
  int fixed_point_count() const;
  bool commutes_with(const Permutation& other) const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

 private:
  std::vector<int> img_;
};

enum class GroupKind { general_linear, symplectic_similitude };

// Lightweight value describing which group we work in.  For GSp_{2g} the rank
// is 2g and the simple reflections are s_0, ..., s_g; mu = (1^(g), 0^(g)).
// For GL_n the simple reflections are s_0, ..., s_{n-1} and mu = (1^(r), 0^(n-r)).
struct GroupContext {
  GroupKind kind = GroupKind::general_linear;
  int rank = 0;       // n, or 2g in the symplectic case
  int weight_ones = 0;  // r = number of 1-entries of mu (g in the symplectic case)

  static GroupContext general_linear(int n, int r);
  static GroupContext symplectic(int g);

  bool symplectic_kind() const { return kind == GroupKind::symplectic_similitude; }
  int genus() const;                   // g; throws for GL contexts
  int simple_reflection_count() const;  // n for GL_n, g+1 for GSp_{2g}
  Vec mu() const;                      // (1^(r), 0^(n-r))
  Permutation theta() const;           // (1,2g)(2,2g-1)...(g,g+1); symplectic only

  friend bool operator==(const GroupContext&, const GroupContext&) = default;
};

// Element x = t^nu w of the extended affine Weyl group.
class ExtAffineElement {
 public:
  ExtAffineElement() = default;
  // Validates the symplectic constraints (w commutes with theta; the
  // coordinates of nu have constant mirror-pair sums).
  ExtAffineElement(GroupContext ctx, Vec nu, Permutation w);

  static ExtAffineElement identity(const GroupContext& ctx);
  static ExtAffineElement translation(const GroupContext& ctx, Vec nu);

  const GroupContext& context() const { return ctx_; }
  const Vec& nu() const { return nu_; }
  const Permutation& finite_part() const { return w_; }

  Vec act(const Vec& v) const;  // v |-> w.v + nu
  ExtAffineElement inverse() const;

  // Index k with x in W_a * omega^k, where omega is tau (symplectic) or the
  // length-zero lattice rotation (GL).  For GSp this is nu_1 + nu_{2g}.
  int omega_exponent() const;

  bool is_identity() const;

  friend bool operator==(const ExtAffineElement& a, const ExtAffineElement& b);
  friend bool operator<(const ExtAffineElement& a, const ExtAffineElement& b);

 private:
  GroupContext ctx_;
  Vec nu_;
  Permutation w_;
};

// Group law: (a*b)(v) = a(b(v)).  Throws on context mismatch.
ExtAffineElement compose(const ExtAffineElement& a, const ExtAffineElement& b);
ExtAffineElement operator*(const ExtAffineElement& a, const ExtAffineElement& b);

// Simple affine reflections.  Symplectic (0 <= i <= g):
//   s_i = (i,i+1)(2g+1-i,2g-i)  for 0 < i < g,   s_g = (g,g+1),
//   s_0 = t^(-1,0,...,0,1) (1,2g).
// GL_n (0 <= i <= n-1): s_i = (i,i+1) for i > 0 and s_0 = t^{-a~^v} s_{a~}.
ExtAffineElement simple_reflection(const GroupContext& ctx, int i);

// The distinguished length-0 generator tau of Omega with t^mu in W_a tau:
//   tau = t^(0^(g),1^(g)) (1,g+1)(2,g+2)...(g,2g).    Symplectic contexts only.
ExtAffineElement tau(const GroupContext& ctx);

// The length-0 generator of Omega for either kind (equals tau for GSp).
ExtAffineElement omega_generator(const GroupContext& ctx);

// Iwahori-Matsumoto length: with x = w t^lambda,
//   l(x) = sum_{a<0, w(a)>0} |<a,lambda>+1| + sum_{a<0, w(a)<0} |<a,lambda>|,
// the sum running over the finite root system (type C_g realized in 2g
// coordinates via classes {e_i-e_j} ~ {e_{2g+1-j}-e_{2g+1-i}} for GSp).
int length(const ExtAffineElement& x);

// Left descent set: the i with l(s_i x) < l(x).  O(rank) for the whole set,
// via the side-of-wall test against an interior point of the base alcove.
std::vector<int> left_descents(const ExtAffineElement& x);

struct ReducedWord {
  GroupContext ctx;
  std::vector<int> letters;  // simple-reflection indices, leftmost factor first
  int omega_exponent = 0;    // trailing Omega part as a power of the generator

  ExtAffineElement omega_part() const;
  // s_{letters[0]} * ... * s_{letters.back()} * omega^exponent.
  ExtAffineElement evaluate() const;
};

// Greedy descent decomposition; letters.size() == length(x).
ReducedWord reduced_word(const ExtAffineElement& x);

// Letters occurring in a (hence any) reduced word of the W_a part of x.
std::set<int> support(const ExtAffineElement& x);

// Extended Bruhat order: equal Omega parts, and the W_a parts compare via the
// subword property (memoized subword search over one fixed reduced word).
bool bruhat_leq(const ExtAffineElement& a, const ExtAffineElement& b);

}  // namespace kr
