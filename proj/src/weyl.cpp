#include "kr/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

namespace kr {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    require(v >= 0 && v < static_cast<int>(img_.size()) && !seen[v],
            "not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require(a.size() == b.size(), "permutation size mismatch");
  std::vector<int> img(a.size());
  for (int i = 0; i < a.size(); ++i) img[i] = a.img_[b.img_[i]];
  return Permutation(std::move(img));
}

Vec Permutation::apply(const Vec& v) const {
  Vec out(v.size());
  for (int i = 0; i < size(); ++i) out[img_[i]] = v[i];
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::fixed_point_count() const {
  int c = 0;
  for (int i = 0; i < size(); ++i) c += (img_[i] == i);
  return c;
}

bool Permutation::commutes_with(const Permutation& other) const {
  return *this * other == other * *this;
}

GroupContext GroupContext::general_linear(int n, int r) {
  require(n >= 1 && r >= 0 && r <= n, "bad GL context");
  return GroupContext{GroupKind::general_linear, n, r};
}

GroupContext GroupContext::symplectic(int g) {
  require(g >= 1, "bad symplectic context");
  return GroupContext{GroupKind::symplectic_similitude, 2 * g, g};
}

int GroupContext::genus() const {
  require(symplectic_kind(), "not a symplectic context");
  return rank / 2;
}

int GroupContext::simple_reflection_count() const {
  return symplectic_kind() ? genus() + 1 : rank;
}

Vec GroupContext::mu() const {
  Vec m(rank, 0);
  for (int i = 0; i < weight_ones; ++i) m[i] = 1;
  return m;
}

Permutation GroupContext::theta() const {
  int g = genus();
  std::vector<int> img(rank);
  for (int i = 0; i < rank; ++i) img[i] = 2 * g - 1 - i;
  return Permutation(std::move(img));
}

namespace {

bool symplectic_valid(const GroupContext& ctx, const Vec& nu,
                      const Permutation& w) {
  int n = ctx.rank;
  // w commutes with theta <=> w(2g-1-i) = 2g-1-w(i) for all i.
  for (int i = 0; i < n; ++i)
    if (w(n - 1 - i) != n - 1 - w(i)) return false;
  int c = nu[0] + nu[n - 1];
  for (int i = 1; i < n / 2; ++i)
    if (nu[i] + nu[n - 1 - i] != c) return false;
  return true;
}

}  // namespace

ExtAffineElement::ExtAffineElement(GroupContext ctx, Vec nu, Permutation w)
    : ctx_(ctx), nu_(std::move(nu)), w_(std::move(w)) {
  require(static_cast<int>(nu_.size()) == ctx_.rank && w_.size() == ctx_.rank,
          "element size mismatch");
  if (ctx_.symplectic_kind())
    require(symplectic_valid(ctx_, nu_, w_), "element not symplectic");
}

ExtAffineElement ExtAffineElement::identity(const GroupContext& ctx) {
  return ExtAffineElement(ctx, Vec(ctx.rank, 0), Permutation::identity(ctx.rank));
}

ExtAffineElement ExtAffineElement::translation(const GroupContext& ctx, Vec nu) {
  return ExtAffineElement(ctx, std::move(nu), Permutation::identity(ctx.rank));
}

Vec ExtAffineElement::act(const Vec& v) const {
  Vec out = w_.apply(v);
  for (int i = 0; i < ctx_.rank; ++i) out[i] += nu_[i];
  return out;
}

ExtAffineElement ExtAffineElement::inverse() const {
  // (t^nu w)^{-1} = t^(-w^{-1} nu) w^{-1},  (w^{-1} nu)(k) = nu(w(k)).
  Permutation winv = w_.inverse();
  Vec nui(ctx_.rank);
  for (int i = 0; i < ctx_.rank; ++i) nui[i] = -nu_[w_(i)];
  return ExtAffineElement(ctx_, std::move(nui), std::move(winv));
}

int ExtAffineElement::omega_exponent() const {
  if (ctx_.symplectic_kind()) return nu_[0] + nu_[ctx_.rank - 1];
  return std::accumulate(nu_.begin(), nu_.end(), 0);
}

bool ExtAffineElement::is_identity() const {
  return w_.is_identity() &&
         std::all_of(nu_.begin(), nu_.end(), [](int v) { return v == 0; });
}

bool operator==(const ExtAffineElement& a, const ExtAffineElement& b) {
  return a.ctx_ == b.ctx_ && a.nu_ == b.nu_ && a.w_ == b.w_;
}

bool operator<(const ExtAffineElement& a, const ExtAffineElement& b) {
  if (a.nu_ != b.nu_) return a.nu_ < b.nu_;
  return a.w_ < b.w_;
}

ExtAffineElement compose(const ExtAffineElement& a, const ExtAffineElement& b) {
  require(a.context() == b.context(), "context mismatch");
  // a(b(v)) = w_a w_b v + (w_a nu_b + nu_a).
  Permutation w = a.finite_part() * b.finite_part();
  Vec nu = a.finite_part().apply(b.nu());
  for (int i = 0; i < a.context().rank; ++i) nu[i] += a.nu()[i];
  return ExtAffineElement(a.context(), std::move(nu), std::move(w));
}

ExtAffineElement operator*(const ExtAffineElement& a, const ExtAffineElement& b) {
  return compose(a, b);
}

ExtAffineElement simple_reflection(const GroupContext& ctx, int i) {
  int n = ctx.rank;
  require(i >= 0 && i < ctx.simple_reflection_count(),
          "simple reflection index out of range");
  Vec nu(n, 0);
  if (i == 0) {
    nu[0] = -1;
    nu[n - 1] = 1;
    return ExtAffineElement(ctx, std::move(nu),
                            Permutation::transposition(n, 0, n - 1));
  }
  if (!ctx.symplectic_kind())
    return ExtAffineElement(ctx, std::move(nu),
                            Permutation::transposition(n, i - 1, i));
  int g = ctx.genus();
  if (i == g)
    return ExtAffineElement(ctx, std::move(nu),
                            Permutation::transposition(n, g - 1, g));
  Permutation w = Permutation::transposition(n, i - 1, i) *
                  Permutation::transposition(n, n - i, n - 1 - i);
  return ExtAffineElement(ctx, std::move(nu), std::move(w));
}

ExtAffineElement tau(const GroupContext& ctx) {
  require(ctx.symplectic_kind(), "tau requires a symplectic context");
  int g = ctx.genus(), n = ctx.rank;
  Vec nu(n, 0);
  for (int i = g; i < n; ++i) nu[i] = 1;
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + g) % n;
  return ExtAffineElement(ctx, std::move(nu), Permutation(std::move(img)));
}

ExtAffineElement omega_generator(const GroupContext& ctx) {
  if (ctx.symplectic_kind()) return tau(ctx);
  // t^{e_n} (1,n,n-1,...,2) has length 0 for the anti-dominant base alcove.
  int n = ctx.rank;
  Vec nu(n, 0);
  nu[n - 1] = 1;
  std::vector<int> img(n);
  img[0] = n - 1;
  for (int i = 1; i < n; ++i) img[i] = i - 1;
  return ExtAffineElement(ctx, std::move(nu), Permutation(std::move(img)));
}

int length(const ExtAffineElement& x) {
  const int n = x.context().rank;
  const Permutation& w = x.finite_part();
  // lambda = w^{-1} nu.
  Vec lam(n);
  for (int i = 0; i < n; ++i) lam[i] = x.nu()[w(i)];
  const bool sympl = x.context().symplectic_kind();
  int total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      // negative root e_i - e_j (i > j); in the symplectic case roots are
      // classes {(i,j), (n-1-j, n-1-i)}, counted once.
      if (sympl && std::pair(i, j) > std::pair(n - 1 - j, n - 1 - i)) continue;
      int pairing = lam[i] - lam[j];
      total += (w(i) < w(j)) ? std::abs(pairing + 1) : std::abs(pairing);
    }
  }
  return total;
}

std::vector<int> left_descents(const ExtAffineElement& x) {
  // l(s_i x) < l(x) iff x(p) lies beyond the i-th wall of the base alcove,
  // where p = (0,1,...,n-1)/n is interior to it.  Scaling by n keeps the
  // test integral: q = w.P + n*nu.
  const int n = x.context().rank;
  Vec P(n);
  std::iota(P.begin(), P.end(), 0);
  Vec q = x.finite_part().apply(P);
  for (int i = 0; i < n; ++i) q[i] += n * x.nu()[i];
  std::vector<int> out;
  if (q[0] - q[n - 1] < -n) out.push_back(0);
  int count = x.context().simple_reflection_count();
  for (int i = 1; i < count; ++i)
    if (q[i - 1] > q[i]) out.push_back(i);
  return out;
}

ExtAffineElement ReducedWord::omega_part() const {
  ExtAffineElement w = ExtAffineElement::identity(ctx);
  ExtAffineElement gen = omega_generator(ctx);
  if (omega_exponent < 0) gen = gen.inverse();
  for (int k = 0; k < std::abs(omega_exponent); ++k) w = w * gen;
  return w;
}

ExtAffineElement ReducedWord::evaluate() const {
  ExtAffineElement x = omega_part();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    x = simple_reflection(ctx, *it) * x;
  return x;
}

ReducedWord reduced_word(const ExtAffineElement& x) {
  ReducedWord word{x.context(), {}, x.omega_exponent()};
  ExtAffineElement u = x * word.omega_part().inverse();
  while (true) {
    std::vector<int> ds = left_descents(u);
    if (ds.empty()) break;
    word.letters.push_back(ds.front());
    u = simple_reflection(x.context(), ds.front()) * u;
  }
  if (!u.is_identity())
    throw std::invalid_argument("element does not lie in W_a * Omega^k");
  return word;
}

std::set<int> support(const ExtAffineElement& x) {
  ReducedWord w = reduced_word(x);
  return std::set<int>(w.letters.begin(), w.letters.end());
}

namespace {

struct SubwordKey {
  size_t pos;
  Vec nu;
  std::vector<int> img;
  bool operator==(const SubwordKey&) const = default;
};

struct SubwordKeyHash {
  size_t operator()(const SubwordKey& k) const {
    size_t h = k.pos;
    for (int v : k.nu) h = h * 1000003u + static_cast<size_t>(v + 64);
    for (int v : k.img) h = h * 1000003u + static_cast<size_t>(v);
    return h;
  }
};

// Subword search: can letters[pos..] contain a reduced word of u?
bool subword_search(const GroupContext& ctx, const std::vector<int>& letters,
                    size_t pos, const ExtAffineElement& u, int len_u,
                    std::unordered_map<SubwordKey, bool, SubwordKeyHash>& memo) {
  if (u.is_identity()) return true;
  if (static_cast<int>(letters.size() - pos) < len_u) return false;
  SubwordKey key{pos, u.nu(), u.finite_part().one_line()};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool ok = subword_search(ctx, letters, pos + 1, u, len_u, memo);
  if (!ok) {
    ExtAffineElement su = simple_reflection(ctx, letters[pos]) * u;
    if (length(su) < len_u)
      ok = subword_search(ctx, letters, pos + 1, su, len_u - 1, memo);
  }
  memo.emplace(std::move(key), ok);
  return ok;
}

}  // namespace

bool bruhat_leq(const ExtAffineElement& a, const ExtAffineElement& b) {
  require(a.context() == b.context(), "context mismatch");
  if (a.omega_exponent() != b.omega_exponent()) return false;
  ReducedWord wb = reduced_word(b);
  ExtAffineElement u = a * wb.omega_part().inverse();
  int lu = length(u);
  if (lu > static_cast<int>(wb.letters.size())) return false;
  std::unordered_map<SubwordKey, bool, SubwordKeyHash> memo;
  return subword_search(a.context(), wb.letters, 0, u, lu, memo);
}

}  // namespace kr
