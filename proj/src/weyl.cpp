#include "weylcomb/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylcomb {

namespace {
constexpr int kMaxStrips = 1 << 20;  // runaway guard for descent stripping
}

WeylGroup::WeylGroup(DynkinDiagram g) : g_(std::move(g)) {
  const int n = g_.num_nodes();
  gens_.reserve(n);
  for (int idx = 0; idx < n; ++idx) {
    // s_i(alpha_j) = alpha_j - C[i][j] alpha_i, as a matrix on coefficient
    // vectors: row i of the identity minus row i of the Cartan matrix.
    IntMatrix m = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j) m.at(idx, j) -= g_.cartan.at(idx, j);
    gens_.push_back(std::move(m));
  }
}

WeylElement WeylGroup::identity() const {
  IntMatrix id = IntMatrix::identity(g_.num_nodes());
  return WeylElement(id, id);
}

WeylElement WeylGroup::simple_reflection(int label) const {
  const int idx = g_.index_of(label);
  return WeylElement(gens_[idx], gens_[idx]);
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  return WeylElement(a.mat_ * b.mat_, b.inv_ * a.inv_);
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  return WeylElement(w.inv_, w.mat_);
}

WeylElement WeylGroup::product_of_word(const std::vector<int>& word) const {
  WeylElement w = identity();
  for (int l : word) w = multiply(w, simple_reflection(l));
  return w;
}

Coeffs WeylGroup::act(const WeylElement& w, const Coeffs& v) const {
  return w.mat_.apply(v);
}

bool WeylGroup::is_identity(const WeylElement& w) const {
  return w.mat_ == IntMatrix::identity(g_.num_nodes());
}

bool WeylGroup::column_negative(const IntMatrix& m, int col) const {
  // the image of a simple root is a real root, hence sign-uniform and nonzero
  for (int r = 0; r < m.dim(); ++r)
    if (m.at(r, col) > 0) return false;
  return true;
}

NodeSet WeylGroup::right_descents(const WeylElement& w) const {
  NodeSet s;
  for (int idx = 0; idx < g_.num_nodes(); ++idx)
    if (column_negative(w.mat_, idx)) s.insert(g_.labels[idx]);
  return s;
}

NodeSet WeylGroup::left_descents(const WeylElement& w) const {
  NodeSet s;
  for (int idx = 0; idx < g_.num_nodes(); ++idx)
    if (column_negative(w.inv_, idx)) s.insert(g_.labels[idx]);
  return s;
}

int WeylGroup::smallest_right_descent(const WeylElement& w, NodeSet within) const {
  for (int idx = 0; idx < g_.num_nodes(); ++idx) {
    const int label = g_.labels[idx];
    if (!within.contains(label)) continue;
    if (column_negative(w.mat_, idx)) return label;
  }
  return -1;
}

int WeylGroup::length(const WeylElement& w) const {
  WeylElement cur = w;
  int len = 0;
  while (!is_identity(cur)) {
    const int i = smallest_right_descent(cur, g_.node_set());
    if (i < 0) throw std::logic_error("length: element has no descent but is not the identity");
    cur = multiply(cur, simple_reflection(i));
    if (++len > kMaxStrips) throw std::logic_error("length: descent stripping did not terminate");
  }
  return len;
}

std::vector<int> WeylGroup::reduced_word(const WeylElement& w) const {
  std::vector<int> letters;
  WeylElement cur = w;
  while (!is_identity(cur)) {
    const int i = smallest_right_descent(cur, g_.node_set());
    if (i < 0)
      throw std::logic_error("reduced_word: element has no descent but is not the identity");
    letters.push_back(i);
    cur = multiply(cur, simple_reflection(i));
    if (letters.size() > kMaxStrips)
      throw std::logic_error("reduced_word: descent stripping did not terminate");
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

NodeSet WeylGroup::support(const WeylElement& w) const {
  NodeSet s;
  for (int l : reduced_word(w)) s.insert(l);
  return s;
}

WeylElement WeylGroup::min_coset_rep(const WeylElement& w, NodeSet I) const {
  if (!I.subset_of(g_.node_set()))
    throw std::invalid_argument("min_coset_rep: I is not a subset of the node set");
  WeylElement cur = w;
  int steps = 0;
  for (;;) {
    const int i = smallest_right_descent(cur, I);
    if (i < 0) return cur;
    cur = multiply(cur, simple_reflection(i));
    if (++steps > kMaxStrips)
      throw std::logic_error("min_coset_rep: stripping did not terminate");
  }
}

bool WeylGroup::is_min_coset_rep(const WeylElement& w, NodeSet I) const {
  return smallest_right_descent(w, I) < 0;
}

WeylElement WeylGroup::longest_element(NodeSet K) const {
  if (!K.subset_of(g_.node_set()))
    throw std::invalid_argument("longest_element: K is not a subset of the node set");
  if (g_.kind != DiagramKind::Finite && K == g_.node_set())
    throw std::invalid_argument("longest_element: W_K is infinite for the full affine node set");
  // ascent climbing: below the longest element some generator of K lengthens
  WeylElement cur = identity();
  int steps = 0;
  for (;;) {
    int up = -1;
    for (int idx = 0; idx < g_.num_nodes(); ++idx) {
      const int label = g_.labels[idx];
      if (!K.contains(label)) continue;
      if (!column_negative(cur.matrix(), idx)) { up = label; break; }
    }
    if (up < 0) return cur;
    cur = multiply(cur, simple_reflection(up));
    if (++steps > kMaxStrips)
      throw std::logic_error("longest_element: ascent climbing did not terminate");
  }
}

WeylElement WeylGroup::max_parabolic_quotient_rep(NodeSet K, NodeSet I) const {
  if (!I.subset_of(K))
    throw std::invalid_argument("max_parabolic_quotient_rep: I must be contained in K");
  return min_coset_rep(longest_element(K), I);
}

NodeSet WeylGroup::coset_descents(const WeylElement& u, NodeSet I) const {
  if (!is_min_coset_rep(u, I))
    throw std::invalid_argument("coset_descents: element is not minimal in its coset mod I");
  NodeSet D;
  for (int idx = 0; idx < g_.num_nodes(); ++idx) {
    const int label = g_.labels[idx];
    if (column_negative(u.inv_, idx)) {  // l(su) < l(u)
      D.insert(label);
      continue;
    }
    const WeylElement su = multiply(simple_reflection(label), u);
    if (!is_min_coset_rep(su, I)) D.insert(label);  // su in u W_I
  }
  return D;
}

ParabolicDecomposition WeylGroup::parabolic_decomposition(const WeylElement& w, NodeSet K) const {
  const WeylElement v = min_coset_rep(w, K);
  const WeylElement u = multiply(inverse(v), w);
  if (length(v) + length(u) != length(w))
    throw std::logic_error("parabolic_decomposition: factor lengths do not add");
  if (!support(u).subset_of(K))
    throw std::logic_error("parabolic_decomposition: parabolic part escapes W_K");
  return {v, u, K};
}

bool WeylGroup::is_billey_postnikov(const WeylElement& w, NodeSet K, NodeSet I) const {
  if (!I.subset_of(K))
    throw std::invalid_argument("is_billey_postnikov: I must be contained in K");
  if (!is_min_coset_rep(w, I))
    throw std::invalid_argument("is_billey_postnikov: w is not minimal mod I");
  const ParabolicDecomposition pd = parabolic_decomposition(w, K);
  const NodeSet D = coset_descents(pd.parabolic_part, I);
  return (support(pd.quotient_part) & K).subset_of(D);
}

}  // namespace weylcomb
