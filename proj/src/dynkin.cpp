#include "weylcomb/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "weylcomb/roots.hpp"

namespace weylcomb {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: return std::nullopt;
  }
}

std::string kind_name(DiagramKind k) {
  switch (k) {
    case DiagramKind::Finite: return "finite";
    case DiagramKind::UntwistedAffine: return "untwisted-affine";
    case DiagramKind::TwistedAffine: return "twisted-affine";
  }
  return "?";
}

NodeSet::NodeSet(std::initializer_list<int> labels) {
  for (int l : labels) insert(l);
}

NodeSet NodeSet::range(int lo, int hi) {
  NodeSet s;
  for (int l = lo; l <= hi; ++l) s.insert(l);
  return s;
}

void NodeSet::insert(int label) {
  if (label < 0 || label > 31) throw std::invalid_argument("NodeSet: label out of range");
  bits_ |= (1u << label);
}

void NodeSet::erase(int label) {
  if (label >= 0 && label <= 31) bits_ &= ~(1u << label);
}

int NodeSet::size() const {
  int n = 0;
  for (std::uint32_t b = bits_; b; b &= b - 1) ++n;
  return n;
}

std::vector<int> NodeSet::to_vector() const {
  std::vector<int> v;
  for (int l = 0; l <= 31; ++l)
    if (contains(l)) v.push_back(l);
  return v;
}

std::string NodeSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int l : to_vector()) {
    if (!first) os << ",";
    os << l;
    first = false;
  }
  os << "}";
  return os.str();
}

int DynkinDiagram::index_of(int label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label)
    throw std::invalid_argument("DynkinDiagram: no node labelled " + std::to_string(label) +
                                " in " + name());
  return static_cast<int>(it - labels.begin());
}

bool DynkinDiagram::has_node(int label) const {
  return std::binary_search(labels.begin(), labels.end(), label);
}

NodeSet DynkinDiagram::node_set() const {
  NodeSet s;
  for (int l : labels) s.insert(l);
  return s;
}

namespace {

Int gcd64(Int a, Int b) { return std::gcd(a, b); }

}  // namespace

// Propagated along edges component by component.
std::vector<Int> cartan_symmetrizer(const IntMatrix& c) {
  const int n = c.dim();
  std::vector<Int> num(n, 0), den(n, 0);
  for (int start = 0; start < n; ++start) {
    if (num[start] != 0) continue;
    num[start] = 1;
    den[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || c.at(i, j) == 0 || num[j] != 0) continue;
        // d_j / d_i = C[i][j] / C[j][i]
        Int nn = num[i] * c.at(i, j);
        Int dd = den[i] * c.at(j, i);
        if (dd < 0) { nn = -nn; dd = -dd; }
        const Int g = gcd64(std::abs(nn), dd);
        num[j] = nn / g;
        den[j] = dd / g;
        stack.push_back(j);
      }
    }
  }
  Int l = 1;
  for (int i = 0; i < n; ++i) l = l / gcd64(l, den[i]) * den[i];
  std::vector<Int> d(n);
  Int g = 0;
  for (int i = 0; i < n; ++i) {
    d[i] = num[i] * (l / den[i]);
    g = gcd64(g, d[i]);
  }
  for (int i = 0; i < n; ++i) d[i] /= g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * c.at(i, j) != d[j] * c.at(j, i))
        throw std::logic_error("symmetrizer: Cartan matrix is not symmetrizable");
  return d;
}

namespace {

struct Edge {
  int a, b;
  Int cab, cba;  // C[a][b], C[b][a]
};

std::vector<Edge> finite_edges(Family f, int n) {
  std::vector<Edge> e;
  auto chain = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) e.push_back({i, i + 1, -1, -1});
  };
  switch (f) {
    case Family::A:
      chain(1, n);
      break;
    case Family::B:
      chain(1, n - 1);
      e.push_back({n - 1, n, -1, -2});  // alpha_n short
      break;
    case Family::C:
      chain(1, n - 1);
      e.push_back({n - 1, n, -2, -1});  // alpha_n long
      break;
    case Family::D:
      chain(1, n - 2);
      e.push_back({n - 2, n - 1, -1, -1});
      e.push_back({n - 2, n, -1, -1});
      break;
    case Family::E:
      chain(1, n - 1);          // 1-2-...-(n-1)
      e.push_back({3, n, -1, -1});  // branch node above 3
      break;
    case Family::F:
      e.push_back({1, 2, -1, -1});
      e.push_back({2, 3, -1, -2});  // alpha_3, alpha_4 short
      e.push_back({3, 4, -1, -1});
      break;
    case Family::G:
      e.push_back({1, 2, -3, -1});  // alpha_1 short
      break;
  }
  return e;
}

bool valid_finite_type(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n == 6 || n == 7 || n == 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

void check_null_vector(const DynkinDiagram& g) {
  const Coeffs zero = g.cartan.apply(g.delta);
  for (Int x : zero)
    if (x != 0) throw std::logic_error("affinize: delta is not a null vector of " + g.name());
}

}  // namespace

std::vector<Int> DynkinDiagram::symmetrizer() const { return cartan_symmetrizer(cartan); }

std::string DynkinDiagram::name() const {
  const std::string base = family_name(family) + std::to_string(rank);
  switch (kind) {
    case DiagramKind::Finite:
      return base;
    case DiagramKind::UntwistedAffine:
      return family_name(family) + "~" + std::to_string(rank);
    case DiagramKind::TwistedAffine:
      if (family == Family::C) return "A(2)" + std::to_string(2 * rank - 1);
      return "D(2)" + std::to_string(rank + 1);
  }
  return base;
}

int Subdiagram::index_of(int label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label)
    throw std::invalid_argument("Subdiagram: no node labelled " + std::to_string(label));
  return static_cast<int>(it - labels.begin());
}

bool Subdiagram::operator==(const Subdiagram& o) const {
  return labels == o.labels && cartan == o.cartan;
}

DynkinDiagram build_finite(Family family, int rank) {
  if (!valid_finite_type(family, rank))
    throw std::invalid_argument("build_finite: invalid type " + family_name(family) +
                                std::to_string(rank));
  DynkinDiagram d;
  d.kind = DiagramKind::Finite;
  d.family = family;
  d.rank = rank;
  d.labels.resize(rank);
  for (int i = 0; i < rank; ++i) d.labels[i] = i + 1;
  d.cartan = IntMatrix(rank);
  for (int i = 0; i < rank; ++i) d.cartan.at(i, i) = 2;
  for (const auto& e : finite_edges(family, rank)) {
    d.cartan.at(e.a - 1, e.b - 1) = e.cab;
    d.cartan.at(e.b - 1, e.a - 1) = e.cba;
  }
  return d;
}

DynkinDiagram affinize_untwisted(const DynkinDiagram& d) {
  if (d.kind != DiagramKind::Finite)
    throw std::invalid_argument("affinize_untwisted: input must be finite");
  const Coeffs theta = highest_root(d).coeffs;
  const std::vector<Int> dv = d.symmetrizer();
  const int n = d.rank;

  // (theta, alpha_j) and (theta, theta) under the symmetrized form
  Coeffs pair(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) pair[j] += theta[i] * dv[i] * d.cartan.at(i, j);
  Int theta_norm = 0;
  for (int j = 0; j < n; ++j) theta_norm += theta[j] * pair[j];

  DynkinDiagram g;
  g.kind = DiagramKind::UntwistedAffine;
  g.family = d.family;
  g.rank = n;
  g.labels.resize(n + 1);
  for (int i = 0; i <= n; ++i) g.labels[i] = i;
  g.cartan = IntMatrix(n + 1);
  g.cartan.at(0, 0) = 2;
  for (int j = 0; j < n; ++j) {
    if ((2 * pair[j]) % theta_norm != 0 || pair[j] % dv[j] != 0)
      throw std::logic_error("affinize_untwisted: non-integral Cartan entry");
    g.cartan.at(0, j + 1) = -2 * pair[j] / theta_norm;  // <alpha_j, alpha_0^v>
    g.cartan.at(j + 1, 0) = -pair[j] / dv[j];           // <alpha_0, alpha_j^v>
    for (int i = 0; i < n; ++i) g.cartan.at(i + 1, j + 1) = d.cartan.at(i, j);
  }
  g.delta.assign(n + 1, 0);
  g.delta[0] = 1;
  for (int i = 0; i < n; ++i) g.delta[i + 1] = theta[i];
  check_null_vector(g);
  return g;
}

DynkinDiagram affinize_twisted(const DynkinDiagram& d) {
  if (d.kind != DiagramKind::Finite)
    throw std::invalid_argument("affinize_twisted: input must be finite");
  if (d.family != Family::B && d.family != Family::C)
    throw std::invalid_argument("affinize_twisted: only B and C have twisted extensions here, got " +
                                d.name());
  const int n = d.rank;
  DynkinDiagram g;
  g.kind = DiagramKind::TwistedAffine;
  g.family = d.family;
  g.rank = n;
  g.labels.resize(n + 1);
  for (int i = 0; i <= n; ++i) g.labels[i] = i;
  g.cartan = IntMatrix(n + 1);
  g.cartan.at(0, 0) = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.cartan.at(i + 1, j + 1) = d.cartan.at(i, j);
  if (d.family == Family::C) {
    // A(2)_{2n-1}: node 0 mirrors node 1 across the fork at node 2
    for (int j = 2; j <= n; ++j) {
      g.cartan.at(0, j) = d.cartan.at(0, j - 1);  // row of node 1
      g.cartan.at(j, 0) = d.cartan.at(j - 1, 0);
    }
  } else {
    // D(2)_{n+1}: double edge at the affine end, arrow toward node 0
    g.cartan.at(0, 1) = -2;
    g.cartan.at(1, 0) = -1;
  }
  const Coeffs theta_s = highest_short_root(d).coeffs;
  g.delta.assign(n + 1, 0);
  g.delta[0] = 1;
  for (int i = 0; i < n; ++i) g.delta[i + 1] = theta_s[i];
  check_null_vector(g);
  return g;
}

NodeSet cominuscule_nodes(const DynkinDiagram& d) {
  if (d.kind != DiagramKind::Finite)
    throw std::invalid_argument("cominuscule_nodes: input must be finite");
  const Coeffs theta = highest_root(d).coeffs;
  NodeSet s;
  for (int i = 0; i < d.rank; ++i)
    if (theta[i] == 1) s.insert(d.labels[i]);
  return s;
}

NodeSet minuscule_nodes(const DynkinDiagram& d) {
  if (d.kind != DiagramKind::Finite)
    throw std::invalid_argument("minuscule_nodes: input must be finite");
  DynkinDiagram dual = d;
  dual.cartan = d.cartan.transposed();
  return cominuscule_nodes(dual);
}

Subdiagram as_subdiagram(const DynkinDiagram& d) { return {d.labels, d.cartan}; }

namespace {
Subdiagram delete_from(const std::vector<int>& labels, const IntMatrix& c, int label) {
  Subdiagram s;
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (labels[i] == label) continue;
    keep.push_back(i);
    s.labels.push_back(labels[i]);
  }
  if (s.labels.size() == labels.size())
    throw std::invalid_argument("delete_node: no node labelled " + std::to_string(label));
  const int m = static_cast<int>(keep.size());
  s.cartan = IntMatrix(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s.cartan.at(i, j) = c.at(keep[i], keep[j]);
  return s;
}
}  // namespace

Subdiagram delete_node(const DynkinDiagram& d, int label) {
  return delete_from(d.labels, d.cartan, label);
}

Subdiagram delete_node(const Subdiagram& d, int label) {
  return delete_from(d.labels, d.cartan, label);
}

int NodeBijection::image_of(int label) const {
  for (const auto& [a, b] : map)
    if (a == label) return b;
  throw std::invalid_argument("NodeBijection: no source labelled " + std::to_string(label));
}

std::string NodeBijection::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, b] : map) {
    if (!first) os << " ";
    os << a << "->" << b;
    first = false;
  }
  return os.str();
}

namespace {
// Multiset of off-diagonal entry pairs in a node's row/column; isomorphic
// images must match exactly.
std::vector<std::pair<Int, Int>> node_signature(const IntMatrix& c, int i) {
  std::vector<std::pair<Int, Int>> sig;
  for (int j = 0; j < c.dim(); ++j) {
    if (j == i) continue;
    if (c.at(i, j) != 0 || c.at(j, i) != 0) sig.emplace_back(c.at(i, j), c.at(j, i));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool extend(const Subdiagram& d1, const Subdiagram& d2,
            const std::vector<std::vector<std::pair<Int, Int>>>& sig1,
            const std::vector<std::vector<std::pair<Int, Int>>>& sig2,
            const std::optional<std::pair<int, int>>& pin, int pos,
            std::vector<int>& image, std::vector<bool>& used) {
  const int n = d1.cartan.dim();
  if (pos == n) return true;
  for (int q = 0; q < n; ++q) {
    if (used[q]) continue;
    if (sig1[pos] != sig2[q]) continue;
    if (pin) {
      const bool src_pinned = d1.labels[pos] == pin->first;
      const bool dst_pinned = d2.labels[q] == pin->second;
      if (src_pinned != dst_pinned) continue;
    }
    bool ok = true;
    for (int p = 0; p < pos && ok; ++p) {
      if (d1.cartan.at(pos, p) != d2.cartan.at(q, image[p])) ok = false;
      if (d1.cartan.at(p, pos) != d2.cartan.at(image[p], q)) ok = false;
    }
    if (!ok) continue;
    image[pos] = q;
    used[q] = true;
    if (extend(d1, d2, sig1, sig2, pin, pos + 1, image, used)) return true;
    used[q] = false;
  }
  return false;
}
}  // namespace

std::optional<NodeBijection> diagram_isomorphism(const Subdiagram& d1, const Subdiagram& d2,
                                                 std::optional<std::pair<int, int>> pin) {
  const int n = d1.cartan.dim();
  if (n != d2.cartan.dim()) return std::nullopt;
  if (pin) {
    if (std::find(d1.labels.begin(), d1.labels.end(), pin->first) == d1.labels.end())
      return std::nullopt;
    if (std::find(d2.labels.begin(), d2.labels.end(), pin->second) == d2.labels.end())
      return std::nullopt;
  }
  std::vector<std::vector<std::pair<Int, Int>>> sig1(n), sig2(n);
  for (int i = 0; i < n; ++i) {
    sig1[i] = node_signature(d1.cartan, i);
    sig2[i] = node_signature(d2.cartan, i);
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  if (!extend(d1, d2, sig1, sig2, pin, 0, image, used)) return std::nullopt;
  NodeBijection b;
  for (int i = 0; i < n; ++i) b.map.emplace_back(d1.labels[i], d2.labels[image[i]]);
  std::sort(b.map.begin(), b.map.end());
  return b;
}

std::string to_dot(const DynkinDiagram& d) {
  std::ostringstream os;
  os << "digraph \"" << d.name() << "\" {\n";
  os << "  node [shape=circle];\n";
  for (int l : d.labels) os << "  n" << l << " [label=\"" << l << "\"];\n";
  const int n = d.num_nodes();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Int cij = d.cartan.at(i, j), cji = d.cartan.at(j, i);
      if (cij == 0) continue;
      const Int mult = std::max(-cij, -cji);
      if (cij == cji) {
        os << "  n" << d.labels[i] << " -> n" << d.labels[j] << " [dir=none";
        if (mult > 1) os << ", label=\"" << mult << "\"";
        os << "];\n";
      } else {
        // |C[i][j]| > |C[j][i]| means alpha_i is the shorter root
        const int longer = (-cij > -cji) ? j : i;
        const int shorter = (longer == i) ? j : i;
        os << "  n" << d.labels[longer] << " -> n" << d.labels[shorter] << " [label=\"" << mult
           << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace weylcomb
