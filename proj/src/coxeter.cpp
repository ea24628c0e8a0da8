#include "kr/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace kr {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

using Matrix = std::vector<int>;  // n x n, row-major

struct MatrixHash {
  size_t operator()(const Matrix& m) const {
    size_t h = 1469598103934665603ull;
    for (int v : m) {
      h ^= static_cast<size_t>(v + 128);
      h *= 1099511628211ull;
    }
    return h;
  }
};

Matrix identity_matrix(int n) {
  Matrix m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, int n) {
  Matrix c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

// Reflection s_i on the root lattice: alpha_j |-> alpha_j - cartan[i][j] alpha_i.
Matrix generator_matrix(const TwistedCoxeterDiagram& d, int i) {
  int n = d.size();
  Matrix m = identity_matrix(n);
  for (int j = 0; j < n; ++j) m[i * n + j] -= d.cartan[i][j];
  return m;
}

}  // namespace

int TwistedCoxeterDiagram::coxeter_label(int i, int j) const {
  if (i == j) return 1;
  switch (cartan[i][j] * cartan[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // infinite bond
  }
}

void TwistedCoxeterDiagram::validate() const {
  int n = size();
  require(static_cast<int>(sigma.size()) == n &&
              static_cast<int>(labels.size()) == n,
          "diagram field sizes disagree");
  std::vector<char> seen(n, 0);
  for (int v : sigma) {
    require(v >= 0 && v < n && !seen[v], "sigma is not a permutation");
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i) {
    require(cartan[i][i] == 2, "Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      require(i == j || cartan[i][j] <= 0, "Cartan off-diagonal must be <= 0");
      require(cartan[sigma[i]][sigma[j]] == cartan[i][j],
              "sigma does not preserve the Cartan matrix");
    }
  }
}

TwistedCoxeterDiagram linear_diagram(int node_count) {
  require(node_count >= 0, "negative node count");
  TwistedCoxeterDiagram d;
  d.cartan.assign(node_count, std::vector<int>(node_count, 0));
  for (int i = 0; i < node_count; ++i) {
    d.cartan[i][i] = 2;
    if (i + 1 < node_count) d.cartan[i][i + 1] = d.cartan[i + 1][i] = -1;
  }
  d.sigma.resize(node_count);
  std::iota(d.sigma.begin(), d.sigma.end(), 0);
  d.labels = d.sigma;
  d.validate();
  return d;
}

TwistedCoxeterDiagram unitary_weyl_diagram(int g) {
  require(g >= 1, "g must be positive");
  TwistedCoxeterDiagram d = linear_diagram(g - 1);
  for (int k = 0; k < g - 1; ++k) d.sigma[k] = g - 2 - k;
  for (int k = 0; k < g - 1; ++k) d.labels[k] = k + 1;  // node k is s_{k+1}
  d.validate();
  return d;
}

TwistedCoxeterDiagram affine_c_diagram(int g) {
  require(g >= 1, "g must be positive");
  int n = g + 1;
  TwistedCoxeterDiagram d;
  d.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) d.cartan[i][i] = 2;
  if (g == 1) {
    d.cartan[0][1] = d.cartan[1][0] = -2;  // infinite bond of A~_1
  } else {
    // End nodes 0 and g are the long simple roots.
    d.cartan[0][1] = -1;
    d.cartan[1][0] = -2;
    d.cartan[g][g - 1] = -1;
    d.cartan[g - 1][g] = -2;
    for (int i = 1; i + 1 <= g - 1; ++i)
      d.cartan[i][i + 1] = d.cartan[i + 1][i] = -1;
  }
  d.sigma.resize(n);
  for (int i = 0; i < n; ++i) d.sigma[i] = g - i;
  d.labels.resize(n);
  std::iota(d.labels.begin(), d.labels.end(), 0);
  d.validate();
  return d;
}

TwistedCoxeterDiagram subdiagram(const TwistedCoxeterDiagram& diagram,
                                 const std::vector<int>& nodes) {
  int k = static_cast<int>(nodes.size());
  std::vector<int> position(diagram.size(), -1);
  for (int a = 0; a < k; ++a) {
    require(nodes[a] >= 0 && nodes[a] < diagram.size() && position[nodes[a]] < 0,
            "bad node subset");
    position[nodes[a]] = a;
  }
  TwistedCoxeterDiagram d;
  d.cartan.assign(k, std::vector<int>(k, 0));
  d.sigma.resize(k);
  d.labels.resize(k);
  for (int a = 0; a < k; ++a) {
    d.labels[a] = diagram.labels[nodes[a]];
    int image = diagram.sigma[nodes[a]];
    require(position[image] >= 0, "node subset is not sigma-stable");
    d.sigma[a] = position[image];
    for (int b = 0; b < k; ++b) d.cartan[a][b] = diagram.cartan[nodes[a]][nodes[b]];
  }
  d.validate();
  return d;
}

CoxeterGroupTable::CoxeterGroupTable(const TwistedCoxeterDiagram& diagram,
                                     std::size_t element_cap)
    : diagram_(diagram) {
  diagram_.validate();
  int n = diagram_.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (diagram_.cartan[i][j] * diagram_.cartan[j][i] >= 4)
        throw std::invalid_argument("diagram generates an infinite group");

  std::vector<Matrix> gens;
  gens.reserve(n);
  for (int i = 0; i < n; ++i) gens.push_back(generator_matrix(diagram_, i));

  std::unordered_map<Matrix, std::size_t, MatrixHash> index;
  std::vector<Matrix> elements;
  elements.push_back(identity_matrix(n));
  index.emplace(elements[0], 0);
  length_.push_back(0);
  identity_ = 0;
  shift_.emplace_back(n, SIZE_MAX);

  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (int s = 0; s < n; ++s) {
      if (shift_[head][s] != SIZE_MAX) continue;
      Matrix next = multiply(elements[head], gens[s], n);
      auto [it, inserted] = index.emplace(next, elements.size());
      if (inserted) {
        if (elements.size() >= element_cap)
          throw std::runtime_error("Coxeter group enumeration cap exceeded");
        elements.push_back(std::move(next));
        length_.push_back(length_[head] + 1);
        shift_.emplace_back(n, SIZE_MAX);
      }
      shift_[head][s] = it->second;
      // Either direction of the Cayley edge.
      if (shift_[it->second][s] == SIZE_MAX) shift_[it->second][s] = head;
    }
  }

  // sigma acts by conjugation with the node permutation of the root basis.
  sigma_map_.resize(elements.size());
  int sz = n;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    Matrix conj(sz * sz);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j)
        conj[diagram_.sigma[i] * sz + diagram_.sigma[j]] = elements[e][i * sz + j];
    auto it = index.find(conj);
    if (it == index.end())
      throw std::logic_error("sigma image escaped the group");
    sigma_map_[e] = it->second;
  }
}

std::size_t CoxeterGroupTable::multiply_generator(std::size_t idx, int gen) const {
  return shift_[idx][gen];
}

std::size_t CoxeterGroupTable::sigma_image(std::size_t idx) const {
  return sigma_map_[idx];
}

std::size_t CoxeterGroupTable::element_of_word(const std::vector<int>& word) const {
  std::size_t w = identity_;
  for (int s : word) {
    if (s < 0 || s >= diagram_.size())
      throw std::invalid_argument("word letter out of range");
    w = shift_[w][s];
  }
  return w;
}

std::vector<int> CoxeterGroupTable::reduced_word_of(std::size_t idx) const {
  std::vector<int> word;
  while (length_[idx] > 0) {
    for (int s = 0; s < diagram_.size(); ++s) {
      std::size_t next = shift_[idx][s];
      if (length_[next] < length_[idx]) {
        word.push_back(s);
        idx = next;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> CoxeterGroupTable::support_of(std::size_t idx) const {
  std::vector<int> word = reduced_word_of(idx);
  std::sort(word.begin(), word.end());
  word.erase(std::unique(word.begin(), word.end()), word.end());
  return word;
}

QPolynomial twisted_flag_polynomial(const TwistedCoxeterDiagram& diagram) {
  CoxeterGroupTable table(diagram);
  int top = 0;
  for (std::size_t e = 0; e < table.order(); ++e)
    top = std::max(top, table.length(e));
  std::vector<Int> coeffs(top + 1, 0);
  for (std::size_t e = 0; e < table.order(); ++e)
    if (table.sigma_image(e) == e) coeffs[table.length(e)] += 1;
  return QPolynomial(std::move(coeffs));
}

std::vector<std::vector<int>> frobenius_stable_subsets(
    const TwistedCoxeterDiagram& diagram) {
  diagram.validate();
  int n = diagram.size();
  require(n <= 20, "subset scan limited to 20 nodes");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool stable = true;
    for (int i = 0; i < n && stable; ++i)
      if (mask & (1u << i)) stable = (mask >> diagram.sigma[i]) & 1u;
    if (!stable) continue;
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    out.push_back(std::move(nodes));
  }
  return out;
}

DlVarietyStats dl_variety_stats(const TwistedCoxeterDiagram& diagram,
                                const std::vector<int>& word, const Int& q) {
  CoxeterGroupTable table(diagram);
  std::size_t w = table.element_of_word(word);
  DlVarietyStats stats;
  stats.dimension = table.length(w);
  // Minimal sigma-stable standard parabolic containing w: close the support
  // under sigma (an involution in all our cases, but iterate to be safe).
  std::vector<char> in(diagram.size(), 0);
  for (int s : table.support_of(w)) in[s] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < diagram.size(); ++i)
      if (in[i] && !in[diagram.sigma[i]]) {
        in[diagram.sigma[i]] = 1;
        changed = true;
      }
  }
  std::vector<int> closure;
  for (int i = 0; i < diagram.size(); ++i)
    if (in[i]) closure.push_back(i);

  Int total = twisted_flag_polynomial(diagram)(q);
  Int parabolic = twisted_flag_polynomial(subdiagram(diagram, closure))(q);
  stats.component_count =
      exact_div(total, parabolic, "DL component count is not integral");
  return stats;
}

}  // namespace kr
