#include <doctest.h>

#include <stdexcept>

#include "weylcomb/dynkin.hpp"
#include "weylcomb/oracle.hpp"
#include "weylcomb/roots.hpp"
#include "weylcomb/weyl.hpp"

using namespace weylcomb;

TEST_CASE("generator relations") {
  WeylGroup A2(build_finite(Family::A, 2));
  const WeylElement s1 = A2.simple_reflection(1);
  const WeylElement s2 = A2.simple_reflection(2);
  CHECK(A2.is_identity(A2.multiply(s1, s1)));
  const WeylElement s1s2 = A2.multiply(s1, s2);
  CHECK(A2.is_identity(A2.multiply(s1s2, A2.multiply(s1s2, s1s2))));  // braid order 3

  WeylGroup B2(build_finite(Family::B, 2));
  const WeylElement t = B2.multiply(B2.simple_reflection(1), B2.simple_reflection(2));
  WeylElement t4 = B2.identity();
  for (int i = 0; i < 4; ++i) t4 = B2.multiply(t4, t);
  CHECK(B2.is_identity(t4));  // braid order 4

  WeylGroup aff(affinize_untwisted(build_finite(Family::A, 2)));
  const WeylElement s0 = aff.simple_reflection(0);
  Coeffs alpha0{1, 0, 0};
  CHECK(aff.act(s0, alpha0) == Coeffs{-1, 0, 0});
  CHECK_THROWS_AS(aff.simple_reflection(7), std::invalid_argument);
}

TEST_CASE("length by descent stripping") {
  WeylGroup A3(build_finite(Family::A, 3));
  CHECK(A3.length(A3.identity()) == 0);
  const WeylElement w0 = A3.longest_element(A3.diagram().node_set());
  CHECK(A3.length(w0) == 6);
  // BFS oracle agrees
  const EnumeratedGroup G = enumerate_group(build_finite(Family::A, 3));
  int max_len = 0;
  for (int l : G.lengths) max_len = std::max(max_len, l);
  CHECK(max_len == 6);
  CHECK(G.elements[G.index_of(w0)] == w0);

  // l(w s_i) = l(w) +- 1, every element, both signs realized somewhere
  for (int i = 0; i < G.size(); ++i)
    for (int s : {1, 2, 3}) {
      const int l = G.lengths[i];
      const int ls = A3.length(A3.multiply(G.elements[i], A3.simple_reflection(s)));
      CHECK(std::abs(ls - l) == 1);
    }
}

TEST_CASE("length equals the inversion count on finite types") {
  for (Family f : {Family::A, Family::B}) {
    const DynkinDiagram d = build_finite(f, 3);
    WeylGroup W(d);
    const RootSet pos = positive_roots(d);
    const EnumeratedGroup G = enumerate_group(d);
    for (int i = 0; i < G.size(); ++i) {
      int inv = 0;
      for (const AffineRoot& r : pos.roots) {
        const Coeffs img = W.act(G.elements[i], r.coeffs);
        bool negative = true;
        for (Int x : img)
          if (x > 0) negative = false;
        if (negative) ++inv;
      }
      CHECK(inv == W.length(G.elements[i]));
    }
  }
}

TEST_CASE("descent sets") {
  WeylGroup A2(build_finite(Family::A, 2));
  CHECK(A2.left_descents(A2.identity()).empty());
  CHECK(A2.right_descents(A2.identity()).empty());
  const WeylElement s1 = A2.simple_reflection(1);
  CHECK(A2.left_descents(s1) == NodeSet{1});
  CHECK(A2.right_descents(s1) == NodeSet{1});
  const WeylElement w0 = A2.longest_element(NodeSet{1, 2});
  CHECK(A2.left_descents(w0) == NodeSet{1, 2});
  CHECK(A2.right_descents(w0) == NodeSet{1, 2});
}

TEST_CASE("reduced words and support") {
  WeylGroup A2(build_finite(Family::A, 2));
  CHECK(A2.reduced_word(A2.identity()).empty());
  CHECK(A2.support(A2.identity()).empty());
  const WeylElement w = A2.product_of_word({1, 2, 1});
  CHECK(A2.support(w) == NodeSet{1, 2});
  CHECK(A2.length(w) == 3);
  // the canonical word reassembles the element
  CHECK(A2.product_of_word(A2.reduced_word(w)) == w);

  WeylGroup aff(affinize_untwisted(build_finite(Family::A, 3)));
  const NodeSet S0{1, 2, 3};
  const NodeSet J{1, 3};
  const WeylElement w0 = aff.max_parabolic_quotient_rep(S0, J);
  CHECK(aff.support(w0) == S0);
}

TEST_CASE("minimal coset representatives in A2") {
  WeylGroup A2(build_finite(Family::A, 2));
  const WeylElement s1 = A2.simple_reflection(1);
  const WeylElement s2 = A2.simple_reflection(2);
  const NodeSet I{2};

  // s2 s1 sends alpha_2 to a positive root, so it is already minimal
  const WeylElement s2s1 = A2.multiply(s2, s1);
  CHECK(A2.is_min_coset_rep(s2s1, I));
  CHECK(A2.min_coset_rep(s2s1, I) == s2s1);

  // the longest element strips to the unique length-2 minimal representative
  const WeylElement w0 = A2.longest_element(NodeSet{1, 2});
  const WeylElement rep = A2.min_coset_rep(w0, I);
  CHECK(A2.length(rep) == 2);
  CHECK(A2.is_min_coset_rep(rep, I));
  CHECK(rep == s2s1);

  // idempotence and membership in the same coset, over the whole group
  const EnumeratedGroup G = enumerate_group(build_finite(Family::A, 2));
  for (const WeylElement& w : G.elements) {
    const WeylElement r = A2.min_coset_rep(w, I);
    CHECK(A2.min_coset_rep(r, I) == r);
    const WeylElement z = A2.multiply(A2.inverse(r), w);
    CHECK(A2.support(z).subset_of(I));
  }
}

TEST_CASE("max parabolic quotient representatives") {
  WeylGroup A2(build_finite(Family::A, 2));
  CHECK(A2.max_parabolic_quotient_rep(NodeSet{1}, NodeSet{}) == A2.simple_reflection(1));

  // (A3, m=2): the representative has length dim Gr(2,4) = 4
  WeylGroup aff(affinize_untwisted(build_finite(Family::A, 3)));
  const NodeSet S0{1, 2, 3}, Sm{0, 1, 3}, J{1, 3};
  const WeylElement w0 = aff.max_parabolic_quotient_rep(S0, J);
  CHECK(aff.length(w0) == 4);
  const WeylElement wm = aff.max_parabolic_quotient_rep(Sm, J);
  CHECK(aff.length(wm) == 4);

  // oracle check inside the affine group: wm is the longest element of the
  // finite parabolic W_{Sm} stripped by J
  const EnumeratedGroup sub = enumerate_subgroup(aff, Sm);
  CHECK(sub.size() == 24);
  int best = -1;
  for (int i = 0; i < sub.size(); ++i) {
    if (!aff.is_min_coset_rep(sub.elements[i], J)) continue;
    if (best < 0 || sub.lengths[i] > sub.lengths[best]) best = i;
  }
  CHECK(sub.elements[best] == wm);

  CHECK_THROWS_AS(aff.longest_element(aff.diagram().node_set()), std::invalid_argument);
  CHECK_THROWS_AS(aff.max_parabolic_quotient_rep(NodeSet{1}, NodeSet{2}), std::invalid_argument);
}

TEST_CASE("coset descents follow the trichotomy") {
  WeylGroup A2(build_finite(Family::A, 2));
  CHECK(A2.coset_descents(A2.identity(), NodeSet{2}) == NodeSet{2});
  CHECK(A2.coset_descents(A2.identity(), NodeSet{}) == NodeSet{});
  CHECK_THROWS_AS(A2.coset_descents(A2.simple_reflection(2), NodeSet{2}), std::invalid_argument);

  // (A~3, m=2): D^J(w0) = S0 and D^J(y) = S0
  WeylGroup aff(affinize_untwisted(build_finite(Family::A, 3)));
  const NodeSet S0{1, 2, 3}, Sm{0, 1, 3}, J{1, 3};
  const WeylElement w0 = aff.max_parabolic_quotient_rep(S0, J);
  const WeylElement wm = aff.max_parabolic_quotient_rep(Sm, J);
  CHECK(aff.coset_descents(w0, J) == S0);
  CHECK(aff.coset_descents(wm, J) == Sm);
  const WeylElement y = aff.multiply(w0, wm);
  CHECK(aff.coset_descents(y, J) == S0);
}

TEST_CASE("parabolic decomposition and the BP criterion") {
  // (A~3, m=2): y = w0 wm decomposes as (w0, wm) and is BP w.r.t. S_m
  WeylGroup aff(affinize_untwisted(build_finite(Family::A, 3)));
  const NodeSet S0{1, 2, 3}, Sm{0, 1, 3}, J{1, 3};
  const WeylElement w0 = aff.max_parabolic_quotient_rep(S0, J);
  const WeylElement wm = aff.max_parabolic_quotient_rep(Sm, J);
  const WeylElement y = aff.multiply(w0, wm);
  const ParabolicDecomposition pd = aff.parabolic_decomposition(y, Sm);
  CHECK(pd.quotient_part == w0);
  CHECK(pd.parabolic_part == wm);
  CHECK(aff.length(y) == 8);
  CHECK(aff.is_billey_postnikov(y, Sm, J));

  // identity decomposes trivially
  const ParabolicDecomposition pe = aff.parabolic_decomposition(aff.identity(), Sm);
  CHECK(aff.is_identity(pe.quotient_part));
  CHECK(aff.is_identity(pe.parabolic_part));
  CHECK(aff.is_billey_postnikov(aff.identity(), Sm, J));

  // in A3 with I = {} and K = {1,2}, some element fails the criterion
  WeylGroup A3(build_finite(Family::A, 3));
  const EnumeratedGroup G = enumerate_group(build_finite(Family::A, 3));
  int failures = 0;
  for (const WeylElement& w : G.elements)
    if (!A3.is_billey_postnikov(w, NodeSet{1, 2}, NodeSet{})) ++failures;
  CHECK(failures > 0);

  CHECK_THROWS_AS(aff.is_billey_postnikov(aff.simple_reflection(1), Sm, J),
                  std::invalid_argument);
}

TEST_CASE("exactly one branch of the trichotomy holds for u in W^I") {
  for (Family f : {Family::A, Family::B}) {
    const DynkinDiagram d = build_finite(f, 3);
    WeylGroup W(d);
    const EnumeratedGroup G = enumerate_group(d);
    const std::vector<int> labels = d.node_set().to_vector();
    for (std::uint32_t mask = 0; mask < (1u << labels.size()); ++mask) {
      NodeSet I;
      for (std::size_t i = 0; i < labels.size(); ++i)
        if ((mask >> i) & 1u) I.insert(labels[i]);
      for (const WeylElement& u : G.elements) {
        if (!W.is_min_coset_rep(u, I)) continue;
        for (int s : labels) {
          const WeylElement su = W.multiply(W.simple_reflection(s), u);
          const bool down = W.length(su) < W.length(u);
          const bool up_outside = !down && !W.is_min_coset_rep(su, I);
          const bool up_inside = !down && W.is_min_coset_rep(su, I);
          CHECK(int(down) + int(up_outside) + int(up_inside) == 1);
          if (up_outside)  // su lands in the same coset: su = u s_j, j in I
            CHECK(W.min_coset_rep(su, I) == u);
        }
      }
    }
  }
}

TEST_CASE("inverse and products") {
  WeylGroup B3(build_finite(Family::B, 3));
  const WeylElement w = B3.product_of_word({1, 2, 3, 2, 1, 3});
  CHECK(B3.is_identity(B3.multiply(w, B3.inverse(w))));
  CHECK(B3.is_identity(B3.multiply(B3.inverse(w), w)));
  CHECK(B3.length(B3.inverse(w)) == B3.length(w));
}
