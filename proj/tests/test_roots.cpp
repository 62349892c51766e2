#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "weylcomb/dynkin.hpp"
#include "weylcomb/roots.hpp"
#include "weylcomb/weyl.hpp"

using namespace weylcomb;

namespace {

std::vector<DynkinDiagram> finite_sweep(int max_rank) {
  std::vector<DynkinDiagram> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(build_finite(Family::A, n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(build_finite(Family::B, n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(build_finite(Family::C, n));
  for (int n = 4; n <= max_rank; ++n) out.push_back(build_finite(Family::D, n));
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back(build_finite(Family::E, n));
  if (max_rank >= 4) out.push_back(build_finite(Family::F, 4));
  if (max_rank >= 2) out.push_back(build_finite(Family::G, 2));
  return out;
}

Coeffs neg(Coeffs v) {
  for (Int& x : v) x = -x;
  return v;
}

}  // namespace

TEST_CASE("positive root counts cross-checked against the longest length") {
  // the closure count must equal l(w_0), computed independently by descent
  // stripping in the Weyl engine
  for (const DynkinDiagram& d : finite_sweep(8)) {
    CAPTURE(d.name());
    const RootSet pos = positive_roots(d);
    WeylGroup W(d);
    CHECK(pos.size() == W.length(W.longest_element(d.node_set())));
  }
  CHECK(positive_roots(build_finite(Family::A, 3)).size() == 6);
  CHECK(positive_roots(build_finite(Family::C, 3)).size() == 9);
  const RootSet a1 = positive_roots(build_finite(Family::A, 1));
  REQUIRE(a1.size() == 1);
  CHECK(a1.roots[0].coeffs == Coeffs{1});
  CHECK_THROWS_AS(positive_roots(affinize_untwisted(build_finite(Family::A, 2))),
                  std::invalid_argument);
}

TEST_CASE("highest and highest short roots") {
  CHECK(highest_root(build_finite(Family::A, 3)).coeffs == Coeffs{1, 1, 1});
  CHECK(highest_root(build_finite(Family::C, 3)).coeffs == Coeffs{2, 2, 1});
  CHECK(highest_short_root(build_finite(Family::C, 3)).coeffs == Coeffs{1, 2, 1});
  CHECK(highest_short_root(build_finite(Family::B, 4)).coeffs == Coeffs{1, 1, 1, 1});
  // simply-laced input: highest short root falls back to the highest root
  CHECK(highest_short_root(build_finite(Family::D, 4)).coeffs ==
        highest_root(build_finite(Family::D, 4)).coeffs);
  CHECK(highest_root(build_finite(Family::G, 2)).coeffs == Coeffs{3, 2});
  CHECK(highest_short_root(build_finite(Family::G, 2)).coeffs == Coeffs{2, 1});
}

TEST_CASE("R+ and -R+ are closed under every simple reflection") {
  for (const DynkinDiagram& d : finite_sweep(6)) {
    CAPTURE(d.name());
    const RootSet pos = positive_roots(d);
    std::vector<Coeffs> all;
    for (const AffineRoot& r : pos.roots) {
      all.push_back(r.coeffs);
      all.push_back(neg(r.coeffs));
    }
    std::sort(all.begin(), all.end());
    WeylGroup W(d);
    for (int i : d.labels) {
      const WeylElement s = W.simple_reflection(i);
      for (const Coeffs& r : all)
        CHECK(std::binary_search(all.begin(), all.end(), W.act(s, r)));
    }
  }
}

TEST_CASE("real root membership on the untwisted affinization") {
  const DynkinDiagram g = affinize_untwisted(build_finite(Family::A, 2));
  // alpha_1 - delta = -alpha_0 - alpha_2 in the simple basis
  CHECK(is_real_root(g, Coeffs{-1, 0, -1}));
  CHECK_FALSE(is_real_root(g, g.delta));
  CHECK_FALSE(is_real_root(g, Coeffs{0, 0, 0}));
  CHECK_FALSE(is_real_root(g, Coeffs{-2, -2, -2}));
  CHECK(is_real_root(g, Coeffs{0, 1, 0}));
  CHECK(is_real_root(g, Coeffs{1, 2, 1}));  // alpha_1 + delta
  CHECK_FALSE(is_real_root(g, Coeffs{0, 2, 0}));
  CHECK_THROWS_AS(is_real_root(build_finite(Family::A, 2), Coeffs{1, 0}),
                  std::invalid_argument);
}

TEST_CASE("real root membership on twisted diagrams: long roots need even shifts") {
  const DynkinDiagram g = affinize_twisted(build_finite(Family::C, 2));
  const Coeffs long_root = embed_affine(g, highest_root(build_finite(Family::C, 2)).coeffs);
  const Coeffs short_root = embed_affine(g, highest_short_root(build_finite(Family::C, 2)).coeffs);
  auto shift = [&](Coeffs v, Int k) {
    for (int i = 0; i < g.num_nodes(); ++i) v[i] += k * g.delta[i];
    return v;
  };
  CHECK(is_real_root(g, long_root));
  CHECK_FALSE(is_real_root(g, shift(long_root, 1)));
  CHECK_FALSE(is_real_root(g, shift(long_root, -1)));
  CHECK(is_real_root(g, shift(long_root, 2)));
  CHECK(is_real_root(g, shift(long_root, -2)));
  CHECK(is_real_root(g, shift(short_root, 1)));
  CHECK(is_real_root(g, shift(short_root, -1)));
  CHECK_FALSE(is_real_root(g, g.delta));
}

TEST_CASE("nilradical root sets: examples") {
  const DynkinDiagram a2 = affinize_untwisted(build_finite(Family::A, 2));
  const RootSet u0 = nilradical_roots(a2, 1, 0, Sign::Plus);
  REQUIRE(u0.size() == 2);
  CHECK(u0.roots[0].coeffs == Coeffs{0, 1, 0});
  CHECK(u0.roots[1].coeffs == Coeffs{0, 1, 1});

  const RootSet um = nilradical_roots(a2, 1, 1, Sign::Minus);
  REQUIRE(um.size() == 2);
  CHECK(um.contains(Coeffs{-1, 0, 0}));
  CHECK(um.contains(Coeffs{-1, 0, -1}));

  const DynkinDiagram tw = affinize_twisted(build_finite(Family::C, 2));
  const RootSet u0t = nilradical_roots(tw, 1, 0, Sign::Plus);
  REQUIRE(u0t.size() == 3);
  CHECK(u0t.roots[0].coeffs == Coeffs{0, 1, 0});
  CHECK(u0t.roots[0].length == RootLength::Short);
  CHECK(u0t.roots[1].coeffs == Coeffs{0, 1, 1});
  CHECK(u0t.roots[1].length == RootLength::Short);
  CHECK(u0t.roots[2].coeffs == Coeffs{0, 2, 1});
  CHECK(u0t.roots[2].length == RootLength::Long);

  CHECK_THROWS_AS(nilradical_roots(a2, 1, 2, Sign::Plus), std::invalid_argument);
  CHECK_THROWS_AS(nilradical_roots(a2, 1, 0, Sign::Minus), std::invalid_argument);
  CHECK_THROWS_AS(nilradical_roots(a2, 0, 0, Sign::Plus), std::invalid_argument);
}

TEST_CASE("parabolic root sets") {
  const RootSet p = parabolic_roots(build_finite(Family::A, 2), 1);
  REQUIRE(p.size() == 4);
  CHECK(p.contains(Coeffs{1, 0}));
  CHECK(p.contains(Coeffs{0, 1}));
  CHECK(p.contains(Coeffs{1, 1}));
  CHECK(p.contains(Coeffs{0, -1}));

  const RootSet p1 = parabolic_roots(build_finite(Family::A, 1), 1);
  REQUIRE(p1.size() == 1);
  CHECK(p1.roots[0].coeffs == Coeffs{1});

  const RootSet pc = parabolic_roots(build_finite(Family::C, 2), 1);
  CHECK(pc.size() == 5);  // four positives plus -alpha_2
  CHECK(pc.contains(Coeffs{0, -1}));
}

TEST_CASE("coweight pairing") {
  const DynkinDiagram a2 = affinize_untwisted(build_finite(Family::A, 2));
  CHECK(coweight_pairing(a2, a2.delta, 1) == 0);
  CHECK(coweight_pairing(a2, a2.delta, 2) == 0);
  CHECK(coweight_pairing(a2, Coeffs{-1, 0, -1}, 1) == 1);  // alpha_1 - delta
  const DynkinDiagram tw = affinize_twisted(build_finite(Family::B, 3));
  CHECK(coweight_pairing(tw, tw.delta, 3) == 0);
  // theta pairs to 1 at every cominuscule node
  for (const DynkinDiagram& d : finite_sweep(8)) {
    const Coeffs theta = highest_root(d).coeffs;
    for (int m : cominuscule_nodes(d).to_vector()) CHECK(coweight_pairing(d, theta, m) == 1);
  }
}

TEST_CASE("cominuscule nodes: |R(u0)| = |R(um-)|; otherwise an a_m >= 2 witness exists") {
  for (const DynkinDiagram& d : finite_sweep(6)) {
    CAPTURE(d.name());
    const DynkinDiagram g = affinize_untwisted(d);
    const NodeSet comin = cominuscule_nodes(d);
    const RootSet pos = positive_roots(d);
    for (int m = 1; m <= d.rank; ++m) {
      if (comin.contains(m)) {
        CHECK(nilradical_roots(g, m, 0, Sign::Plus).size() ==
              nilradical_roots(g, m, m, Sign::Minus).size());
      } else {
        bool witness = false;
        for (const AffineRoot& r : pos.roots)
          if (r.coeffs[d.index_of(m)] >= 2) witness = true;
        CHECK(witness);
      }
    }
  }
}

TEST_CASE("twisted R(um-): a_0 = -1 roots are short, a_0 = -2 roots are long") {
  for (Family f : {Family::B, Family::C})
    for (int n = 2; n <= 6; ++n) {
      const DynkinDiagram d = build_finite(f, n);
      const int m = (f == Family::B) ? n : 1;
      const DynkinDiagram g = affinize_twisted(d);
      const RootSet um = nilradical_roots(g, m, m, Sign::Minus);
      CHECK(um.size() > 0);
      for (const AffineRoot& r : um.roots) {
        CAPTURE(root_to_string(r.coeffs));
        REQUIRE((r.coeffs[0] == -1 || r.coeffs[0] == -2));
        CHECK(r.length == (r.coeffs[0] == -1 ? RootLength::Short : RootLength::Long));
      }
    }
}

TEST_CASE("coweight pairing is positive on R(u0) and R(um-)") {
  auto check_case = [](const DynkinDiagram& g, int m) {
    for (const AffineRoot& r : nilradical_roots(g, m, 0, Sign::Plus).roots)
      CHECK(coweight_pairing(g, r.coeffs, m) > 0);
    for (const AffineRoot& r : nilradical_roots(g, m, m, Sign::Minus).roots)
      CHECK(coweight_pairing(g, r.coeffs, m) > 0);
  };
  for (const DynkinDiagram& d : finite_sweep(8)) {
    const DynkinDiagram g = affinize_untwisted(d);
    for (int m : cominuscule_nodes(d).to_vector()) check_case(g, m);
  }
  for (Family f : {Family::B, Family::C})
    for (int n = 2; n <= 8; ++n) {
      const DynkinDiagram d = build_finite(f, n);
      check_case(affinize_twisted(d), f == Family::B ? n : 1);
    }
}

TEST_CASE("norms and length classification") {
  const DynkinDiagram b2 = build_finite(Family::B, 2);
  CHECK(root_norm(b2, Coeffs{1, 0}) == 4);  // long
  CHECK(root_norm(b2, Coeffs{0, 1}) == 2);  // short
  CHECK(classify_root_length(b2, Coeffs{1, 2}) == RootLength::Long);
  CHECK(classify_root_length(b2, Coeffs{1, 1}) == RootLength::Short);
  const DynkinDiagram g = affinize_untwisted(b2);
  CHECK(classify_root_length(g, g.delta) == RootLength::Imaginary);
  CHECK(root_norm(g, g.delta) == 0);
}

TEST_CASE("root serialization") {
  CHECK(root_to_string(Coeffs{-1, 0, 2}) == "[-1,0,2]");
  CHECK(root_to_string(Coeffs{5}) == "[5]");
}
