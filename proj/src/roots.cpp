#include "weylcomb/roots.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weylcomb {

std::string root_length_name(RootLength l) {
  switch (l) {
    case RootLength::Short: return "short";
    case RootLength::Long: return "long";
    case RootLength::Imaginary: return "imaginary";
  }
  return "?";
}

std::string root_set_kind_name(RootSetKind k) {
  switch (k) {
    case RootSetKind::Positive: return "R+(g0)";
    case RootSetKind::U0: return "R(u0)";
    case RootSetKind::Um: return "R(um)";
    case RootSetKind::UmMinus: return "R(um-)";
    case RootSetKind::P0: return "R(p0)";
  }
  return "?";
}

bool RootSet::contains(const Coeffs& v) const { return find(v) != nullptr; }

const AffineRoot* RootSet::find(const Coeffs& v) const {
  AffineRoot probe{v, RootLength::Long};
  auto it = std::lower_bound(roots.begin(), roots.end(), probe);
  if (it != roots.end() && it->coeffs == v) return &*it;
  return nullptr;
}

namespace {

Int norm_of(const IntMatrix& c, const std::vector<Int>& sym, const Coeffs& v) {
  Int s = 0;
  const int n = c.dim();
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += v[i] * v[j] * sym[i] * c.at(i, j);
  }
  return s;
}

// Everything derivable from one finite Cartan matrix, cached by the matrix
// itself so transposed/dual inputs are never conflated.
struct FiniteRootData {
  std::vector<Coeffs> all_roots;  // sorted
  std::set<Coeffs> root_set;
  std::vector<Int> sym;
  Int min_norm = 0, max_norm = 0;

  bool is_root(const Coeffs& v) const { return root_set.count(v) != 0; }
  Int norm(const IntMatrix& c, const Coeffs& v) const { return norm_of(c, sym, v); }
};

// Reflection closure of the simple roots: every root is reachable from a
// simple root by simple reflections. Finite types only; capped as a guard.
std::vector<Coeffs> root_closure(const IntMatrix& c) {
  const int n = c.dim();
  std::set<Coeffs> known;
  std::vector<Coeffs> queue;
  for (int i = 0; i < n; ++i) {
    Coeffs e(n, 0);
    e[i] = 1;
    known.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coeffs v = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      Coeffs w = v;
      Int s = 0;
      for (int j = 0; j < n; ++j) s += c.at(i, j) * v[j];
      w[i] -= s;
      if (known.insert(w).second) queue.push_back(w);
    }
    if (known.size() > 2000)
      throw std::logic_error("root_closure: too many roots; input is not finite type");
  }
  return {known.begin(), known.end()};
}

const FiniteRootData& finite_root_data(const IntMatrix& cartan) {
  static std::mutex mu;
  static std::map<std::vector<Int>, std::unique_ptr<FiniteRootData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cartan.flat());
  if (it == cache.end()) {
    auto data = std::make_unique<FiniteRootData>();
    data->all_roots = root_closure(cartan);
    data->root_set.insert(data->all_roots.begin(), data->all_roots.end());
    data->sym = cartan_symmetrizer(cartan);
    bool first = true;
    for (const Coeffs& r : data->all_roots) {
      const Int nr = data->norm(cartan, r);
      if (first || nr < data->min_norm) data->min_norm = nr;
      if (first || nr > data->max_norm) data->max_norm = nr;
      first = false;
    }
    it = cache.emplace(cartan.flat(), std::move(data)).first;
  }
  return *it->second;
}

bool all_nonneg(const Coeffs& v) {
  for (Int x : v)
    if (x < 0) return false;
  return true;
}

bool all_nonpos(const Coeffs& v) {
  for (Int x : v)
    if (x > 0) return false;
  return true;
}

void require_finite(const DynkinDiagram& d, const char* op) {
  if (d.kind != DiagramKind::Finite)
    throw std::invalid_argument(std::string(op) + ": input must be a finite diagram");
}

void require_affine(const DynkinDiagram& g, const char* op) {
  if (g.kind == DiagramKind::Finite)
    throw std::invalid_argument(std::string(op) + ": input must be an affine diagram");
}

// Finite part of an affine diagram (labels 1..n).
IntMatrix finite_block(const DynkinDiagram& g) {
  const int n = g.rank;
  IntMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(i, j) = g.cartan.at(i + 1, j + 1);
  return c;
}

RootLength length_from_norm(const FiniteRootData& data, Int nr) {
  if (nr == 0) return RootLength::Imaginary;
  if (data.min_norm == data.max_norm) return RootLength::Long;  // simply laced
  return nr == data.min_norm ? RootLength::Short : RootLength::Long;
}

}  // namespace

RootSet positive_roots(const DynkinDiagram& d) {
  require_finite(d, "positive_roots");
  const FiniteRootData& data = finite_root_data(d.cartan);
  RootSet out;
  out.kind = RootSetKind::Positive;
  for (const Coeffs& r : data.all_roots)
    if (all_nonneg(r))
      out.roots.push_back({r, length_from_norm(data, data.norm(d.cartan, r))});
  return out;
}

AffineRoot highest_root(const DynkinDiagram& d) {
  require_finite(d, "highest_root");
  const RootSet pos = positive_roots(d);
  for (const AffineRoot& r : pos.roots) {
    bool dominates = true;
    for (const AffineRoot& s : pos.roots) {
      for (std::size_t i = 0; i < r.coeffs.size() && dominates; ++i)
        if (r.coeffs[i] < s.coeffs[i]) dominates = false;
      if (!dominates) break;
    }
    if (dominates) return r;
  }
  throw std::logic_error("highest_root: no dominating root (disconnected diagram?)");
}

AffineRoot highest_short_root(const DynkinDiagram& d) {
  require_finite(d, "highest_short_root");
  const RootSet pos = positive_roots(d);
  std::vector<AffineRoot> shorts;
  for (const AffineRoot& r : pos.roots)
    if (r.length == RootLength::Short) shorts.push_back(r);
  if (shorts.empty()) return highest_root(d);  // simply laced
  for (const AffineRoot& r : shorts) {
    bool dominates = true;
    for (const AffineRoot& s : shorts) {
      for (std::size_t i = 0; i < r.coeffs.size() && dominates; ++i)
        if (r.coeffs[i] < s.coeffs[i]) dominates = false;
      if (!dominates) break;
    }
    if (dominates) return r;
  }
  throw std::logic_error("highest_short_root: no dominating short root");
}

bool is_real_root(const DynkinDiagram& g, const Coeffs& v) {
  require_affine(g, "is_real_root");
  if (static_cast<int>(v.size()) != g.num_nodes())
    throw std::invalid_argument("is_real_root: coefficient vector has wrong size");
  const Int k = v[0];  // delta has a_0 = 1 for every diagram built here
  Coeffs finite(g.rank, 0);
  bool zero = true;
  for (int i = 0; i < g.rank; ++i) {
    finite[i] = v[i + 1] - k * g.delta[i + 1];
    if (finite[i] != 0) zero = false;
  }
  if (v[0] - k * g.delta[0] != 0)
    throw std::logic_error("is_real_root: delta reduction failed");
  if (zero) return false;  // 0 or an imaginary multiple of delta
  const IntMatrix fin = finite_block(g);
  const FiniteRootData& data = finite_root_data(fin);
  if (!data.is_root(finite)) return false;
  if (g.kind == DiagramKind::UntwistedAffine) return true;
  // twisted: long roots only occur with even delta shifts
  if (length_from_norm(data, data.norm(fin, finite)) == RootLength::Short) return true;
  return k % 2 == 0;
}

RootSet nilradical_roots(const DynkinDiagram& g, int m, int removed, Sign sign) {
  require_affine(g, "nilradical_roots");
  if (m < 1 || m > g.rank)
    throw std::invalid_argument("nilradical_roots: node " + std::to_string(m) +
                                " is not a finite node of " + g.name());
  if (removed != 0 && removed != m)
    throw std::invalid_argument("nilradical_roots: removed node must be 0 or m");
  if (removed == 0 && sign == Sign::Minus)
    throw std::invalid_argument("nilradical_roots: the (removed=0, minus) combination is unused");

  const int filter = (removed == 0) ? m : 0;
  const Int unit = (sign == Sign::Plus) ? 1 : -1;
  const bool twisted = g.kind == DiagramKind::TwistedAffine;
  const IntMatrix fin = finite_block(g);
  const FiniteRootData& data = finite_root_data(fin);

  RootSet out;
  out.kind = (removed == 0) ? RootSetKind::U0 : (sign == Sign::Plus ? RootSetKind::Um : RootSetKind::UmMinus);
  const int rm_idx = g.index_of(removed);
  const int f_idx = g.index_of(filter);
  for (const Coeffs& a : data.all_roots) {
    for (Int k = -2; k <= 2; ++k) {
      Coeffs v(g.num_nodes(), 0);
      v[0] = k * g.delta[0];
      for (int i = 0; i < g.rank; ++i) v[i + 1] = a[i] + k * g.delta[i + 1];
      if (v[rm_idx] != 0) continue;
      const Int f = v[f_idx];
      if (f != unit && !(twisted && f == 2 * unit)) continue;
      if (sign == Sign::Plus ? !all_nonneg(v) : !all_nonpos(v)) continue;
      if (!is_real_root(g, v)) continue;
      out.roots.push_back({v, length_from_norm(data, data.norm(fin, a))});
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  return out;
}

RootSet parabolic_roots(const DynkinDiagram& d, int m) {
  require_finite(d, "parabolic_roots");
  const int mi = d.index_of(m);
  const FiniteRootData& data = finite_root_data(d.cartan);
  RootSet out;
  out.kind = RootSetKind::P0;
  for (const Coeffs& r : data.all_roots) {
    if (all_nonneg(r) || r[mi] == 0)
      out.roots.push_back({r, length_from_norm(data, data.norm(d.cartan, r))});
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

Int coweight_pairing(const DynkinDiagram& g, const Coeffs& v, int m) {
  if (g.kind == DiagramKind::Finite) {
    if (static_cast<int>(v.size()) != g.num_nodes())
      throw std::invalid_argument("coweight_pairing: coefficient vector has wrong size");
    return v[g.index_of(m)];
  }
  const Coeffs finite = reduce_mod_delta(g, v);
  return finite[g.index_of(m) - 1];
}

Int root_norm(const DynkinDiagram& d, const Coeffs& v) {
  if (static_cast<int>(v.size()) != d.num_nodes())
    throw std::invalid_argument("root_norm: coefficient vector has wrong size");
  return norm_of(d.cartan, d.symmetrizer(), v);
}

RootLength classify_root_length(const DynkinDiagram& g, const Coeffs& v) {
  const Int nr = root_norm(g, v);
  if (nr == 0) return RootLength::Imaginary;
  const IntMatrix fin = (g.kind == DiagramKind::Finite) ? g.cartan : finite_block(g);
  const FiniteRootData& data = finite_root_data(fin);
  return length_from_norm(data, nr);
}

Coeffs embed_affine(const DynkinDiagram& g, const Coeffs& finite_v) {
  require_affine(g, "embed_affine");
  if (static_cast<int>(finite_v.size()) != g.rank)
    throw std::invalid_argument("embed_affine: coefficient vector has wrong size");
  Coeffs v(g.num_nodes(), 0);
  for (int i = 0; i < g.rank; ++i) v[i + 1] = finite_v[i];
  return v;
}

Coeffs reduce_mod_delta(const DynkinDiagram& g, const Coeffs& v) {
  require_affine(g, "reduce_mod_delta");
  if (static_cast<int>(v.size()) != g.num_nodes())
    throw std::invalid_argument("reduce_mod_delta: coefficient vector has wrong size");
  const Int k = v[0];
  Coeffs finite(g.rank, 0);
  for (int i = 0; i < g.rank; ++i) finite[i] = v[i + 1] - k * g.delta[i + 1];
  return finite;
}

std::string root_to_string(const Coeffs& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace weylcomb
