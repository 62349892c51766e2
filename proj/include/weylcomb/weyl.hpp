#pragma once

#include <vector>

#include "weylcomb/dynkin.hpp"
#include "weylcomb/intmat.hpp"

namespace weylcomb {

/// An element of a (finite or affine) Weyl group, represented faithfully by
/// its action on the root lattice in the simple-root basis. The inverse
/// matrix is carried along so inversion never needs integer matrix inversion.
/// Immutable value; equality and ordering compare the action matrix only.
class WeylElement {
 public:
  WeylElement() = default;

  const IntMatrix& matrix() const { return mat_; }
  const IntMatrix& inverse_matrix() const { return inv_; }

  bool operator==(const WeylElement& o) const { return mat_ == o.mat_; }
  bool operator!=(const WeylElement& o) const { return mat_ != o.mat_; }
  bool operator<(const WeylElement& o) const { return mat_ < o.mat_; }

 private:
  friend class WeylGroup;
  WeylElement(IntMatrix m, IntMatrix i) : mat_(std::move(m)), inv_(std::move(i)) {}
  IntMatrix mat_, inv_;
};

/// w = v * u with v a minimal coset representative mod W_K and u in W_K.
struct ParabolicDecomposition {
  WeylElement quotient_part;   // v in W^K
  WeylElement parabolic_part;  // u in W_K
  NodeSet parabolic;           // K
};

/// Weyl group context over a fixed diagram. All operations are pure; elements
/// from different contexts must not be mixed.
class WeylGroup {
 public:
  explicit WeylGroup(DynkinDiagram g);

  const DynkinDiagram& diagram() const { return g_; }

  WeylElement identity() const;
  WeylElement simple_reflection(int label) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;
  /// Product s_{w[0]} s_{w[1]} ... applied left to right.
  WeylElement product_of_word(const std::vector<int>& word) const;

  /// Action on a coefficient vector over the diagram's labels.
  Coeffs act(const WeylElement& w, const Coeffs& v) const;

  bool is_identity(const WeylElement& w) const;

  /// {i : w(alpha_i) < 0} and {i : w^{-1}(alpha_i) < 0}.
  NodeSet right_descents(const WeylElement& w) const;
  NodeSet left_descents(const WeylElement& w) const;

  /// Coxeter length, computed by stripping right descents down to the
  /// identity (each strip lowers the length by exactly one).
  int length(const WeylElement& w) const;

  /// Canonical reduced word: repeatedly strip the smallest-labelled right
  /// descent; the letters, reversed, spell w as a product left to right.
  std::vector<int> reduced_word(const WeylElement& w) const;

  /// Letters appearing in a reduced word (independent of the word chosen).
  NodeSet support(const WeylElement& w) const;

  /// Shortest element of w W_I, by stripping right descents lying in I.
  WeylElement min_coset_rep(const WeylElement& w, NodeSet I) const;
  bool is_min_coset_rep(const WeylElement& w, NodeSet I) const;

  /// Longest element of W_K. K must generate a finite subgroup: any K on a
  /// finite diagram, any proper subset of an affine diagram's nodes.
  WeylElement longest_element(NodeSet K) const;

  /// Maximal element of W_K^I, i.e. min_coset_rep(longest_element(K), I).
  WeylElement max_parabolic_quotient_rep(NodeSet K, NodeSet I) const;

  /// Coset descent set D^I(u) = {s : s u <=_I u} for u minimal mod I, via the
  /// trichotomy: for u in W^I either su < u (descent), or su > u with
  /// su in W^I (not a descent), or su in u W_I (a descent).
  NodeSet coset_descents(const WeylElement& u, NodeSet I) const;

  /// v = min_coset_rep(w, K), u = v^{-1} w; fails loudly if the factor
  /// lengths do not add or u falls outside W_K.
  ParabolicDecomposition parabolic_decomposition(const WeylElement& w, NodeSet K) const;

  /// Billey-Postnikov criterion for w in W^I: supp(v) cap K inside D^I(u).
  bool is_billey_postnikov(const WeylElement& w, NodeSet K, NodeSet I) const;

 private:
  int smallest_right_descent(const WeylElement& w, NodeSet within) const;  // -1 if none
  bool column_negative(const IntMatrix& m, int col) const;

  DynkinDiagram g_;
  std::vector<IntMatrix> gens_;  // reflection matrices, by label index
};

}  // namespace weylcomb
