#include "weylcomb/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylcomb {

std::string case_class_name(CaseClass c) {
  switch (c) {
    case CaseClass::Cominuscule: return "cominuscule";
    case CaseClass::MinusculeOnly: return "minuscule-only";
    case CaseClass::Neither: return "neither";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string CaseSpec::finite_name() const { return family_name(family) + std::to_string(rank); }

std::string CaseSpec::affine_name() const {
  DynkinDiagram d = build_finite(family, rank);
  return (affine_kind == DiagramKind::TwistedAffine ? affinize_twisted(d) : affinize_untwisted(d))
      .name();
}

CaseSpec classify_case(Family family, int rank, int m) {
  const DynkinDiagram d = build_finite(family, rank);
  if (m < 1 || m > rank)
    throw std::invalid_argument("classify_case: node " + std::to_string(m) + " is not a node of " +
                                d.name());
  CaseSpec c;
  c.family = family;
  c.rank = rank;
  c.node = m;
  const bool comin = cominuscule_nodes(d).contains(m);
  const bool minus = minuscule_nodes(d).contains(m);
  c.cls = comin ? CaseClass::Cominuscule
                : (minus ? CaseClass::MinusculeOnly : CaseClass::Neither);
  c.affine_kind = (c.cls == CaseClass::MinusculeOnly) ? DiagramKind::TwistedAffine
                                                      : DiagramKind::UntwistedAffine;
  return c;
}

namespace {

// Everything the per-case checks share. Cheap to build (worst case E7).
struct CaseContext {
  CaseSpec spec;
  DynkinDiagram finite;
  DynkinDiagram affine;
  RootSet pos;       // R+(g0), finite basis
  RootSet u0;        // affine basis, a_0 = 0
  RootSet um_minus;  // affine basis
  RootSet p0;        // finite basis
  WeylGroup W;       // affine group
  NodeSet S0, Sm, J;
  WeylElement w0, wm, y;
  Metrics metrics;
};

CaseContext build_context(const CaseSpec& c) {
  DynkinDiagram fin = build_finite(c.family, c.rank);
  DynkinDiagram aff = (c.affine_kind == DiagramKind::TwistedAffine) ? affinize_twisted(fin)
                                                                    : affinize_untwisted(fin);
  RootSet pos = positive_roots(fin);
  RootSet u0 = nilradical_roots(aff, c.node, 0, Sign::Plus);
  RootSet um = nilradical_roots(aff, c.node, c.node, Sign::Minus);
  RootSet p0 = parabolic_roots(fin, c.node);
  WeylGroup W(aff);
  CaseContext ctx{c,
                  std::move(fin),
                  std::move(aff),
                  std::move(pos),
                  std::move(u0),
                  std::move(um),
                  std::move(p0),
                  std::move(W),
                  {},
                  {},
                  {},
                  {},
                  {},
                  {},
                  {}};
  ctx.S0 = ctx.affine.node_set();
  ctx.S0.erase(0);
  ctx.Sm = ctx.affine.node_set();
  ctx.Sm.erase(c.node);
  ctx.J = ctx.S0 & ctx.Sm;
  ctx.w0 = ctx.W.max_parabolic_quotient_rep(ctx.S0, ctx.J);
  ctx.wm = ctx.W.max_parabolic_quotient_rep(ctx.Sm, ctx.J);
  ctx.y = ctx.W.multiply(ctx.w0, ctx.wm);
  const int mi = ctx.finite.index_of(c.node);
  Int dim = 0;
  for (const AffineRoot& r : ctx.pos.roots)
    if (r.coeffs[mi] >= 1) ++dim;
  ctx.metrics.dim_x = dim;
  ctx.metrics.len_w0 = ctx.W.length(ctx.w0);
  ctx.metrics.len_wm = ctx.W.length(ctx.wm);
  ctx.metrics.len_y = ctx.W.length(ctx.y);
  return ctx;
}

LemmaReport base_report(const CaseContext& ctx, const std::string& lemma) {
  LemmaReport r;
  r.c = ctx.spec;
  r.lemma = lemma;
  r.verdict = Verdict::Pass;
  r.metrics = ctx.metrics;
  return r;
}

void fail_with(LemmaReport& r, Witness w) {
  r.verdict = Verdict::Fail;
  r.witness = std::move(w);
}

Coeffs subtract(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

// First positive root whose coefficient at m is at least 2, embedded into the
// case's affine basis; exists exactly when m is not cominuscule.
std::optional<Coeffs> excess_coefficient_witness(const CaseContext& ctx) {
  const int mi = ctx.finite.index_of(ctx.spec.node);
  for (const AffineRoot& r : ctx.pos.roots)
    if (r.coeffs[mi] >= 2) return embed_affine(ctx.affine, r.coeffs);
  return std::nullopt;
}

LemmaReport check_diagram_iso_impl(const CaseContext& ctx) {
  LemmaReport r = base_report(ctx, "iso");
  const Subdiagram d1 = delete_node(ctx.affine, 0);
  const Subdiagram d2 = delete_node(ctx.affine, ctx.spec.node);
  const auto iso = diagram_isomorphism(d1, d2, std::make_pair(ctx.spec.node, 0));
  if (iso) {
    r.witness = Witness{"bijection", {}, iso->to_string()};
  } else {
    fail_with(r, {"no-bijection", {}, "exhaustive search over pinned label bijections found none"});
  }
  return r;
}

LemmaReport check_bp_impl(const CaseContext& ctx) {
  LemmaReport r = base_report(ctx, "bp");
  if (ctx.spec.cls == CaseClass::MinusculeOnly) r.note = "y = w0*wm on the twisted diagram";
  const WeylGroup& W = ctx.W;
  if (!W.is_min_coset_rep(ctx.y, ctx.J)) {
    fail_with(r, {"bp-mismatch", {}, "y is not minimal in its coset mod J"});
    return r;
  }
  if (ctx.metrics.len_y != ctx.metrics.len_w0 + ctx.metrics.len_wm) {
    fail_with(r, {"bp-mismatch", {}, "l(y) != l(w0) + l(wm)"});
    return r;
  }
  const ParabolicDecomposition pd = W.parabolic_decomposition(ctx.y, ctx.Sm);
  if (!(pd.quotient_part == ctx.w0 && pd.parabolic_part == ctx.wm)) {
    fail_with(r, {"bp-mismatch", {}, "parabolic decomposition of y w.r.t. S_m is not (w0, wm)"});
    return r;
  }
  if (!W.is_billey_postnikov(ctx.y, ctx.Sm, ctx.J)) {
    fail_with(r, {"bp-mismatch", {}, "supp(w0) cap S_m is not contained in D^J(wm)"});
    return r;
  }
  const NodeSet D = W.coset_descents(ctx.y, ctx.J);
  if (D != ctx.S0) {
    fail_with(r, {"bp-mismatch", {}, "D^J(y) = " + D.to_string() + ", expected " + ctx.S0.to_string()});
    return r;
  }
  return r;
}

LemmaReport check_phi_impl(const CaseContext& ctx) {
  LemmaReport r = base_report(ctx, "phi");
  if (ctx.spec.cls != CaseClass::Cominuscule) {
    r.verdict = Verdict::NotApplicable;
    auto w = excess_coefficient_witness(ctx);
    if (w) {
      r.witness = Witness{"excess-coefficient-root",
                          {*w},
                          "coefficient of alpha_" + std::to_string(ctx.spec.node) + " exceeds 1"};
    }
    return r;
  }
  const Coeffs& delta = ctx.affine.delta;
  // (i) alpha -> alpha - delta is a bijection R(u0) -> R(um-)
  for (const AffineRoot& a : ctx.u0.roots) {
    const Coeffs img = subtract(a.coeffs, delta);
    if (!ctx.um_minus.contains(img)) {
      fail_with(r, {"missing-bijection-image", {a.coeffs, img}, "alpha - delta escapes R(um-)"});
      return r;
    }
  }
  if (ctx.u0.size() != ctx.um_minus.size()) {
    fail_with(r, {"missing-bijection-image", {}, "R(u0) and R(um-) have different sizes"});
    return r;
  }
  // (ii) equivariance closure: adding a p0-root commutes with the shift
  for (const AffineRoot& a : ctx.u0.roots) {
    const Coeffs a_fin = reduce_mod_delta(ctx.affine, a.coeffs);
    for (const AffineRoot& b : ctx.p0.roots) {
      const Coeffs sum_fin = add(a_fin, b.coeffs);
      const bool finite_side = ctx.pos.contains(sum_fin) || [&] {
        Coeffs neg = sum_fin;
        for (Int& x : neg) x = -x;
        return ctx.pos.contains(neg);
      }();
      const Coeffs sum_aff = embed_affine(ctx.affine, sum_fin);
      const bool affine_side = is_real_root(ctx.affine, subtract(sum_aff, delta));
      if (finite_side != affine_side) {
        fail_with(r, {"equivariance-mismatch",
                      {a.coeffs, embed_affine(ctx.affine, b.coeffs)},
                      "alpha + beta is a root on exactly one side of the shift"});
        return r;
      }
      if (finite_side) {
        if (!ctx.u0.contains(sum_aff) || !ctx.um_minus.contains(subtract(sum_aff, delta))) {
          fail_with(r, {"closure-violation",
                        {a.coeffs, embed_affine(ctx.affine, b.coeffs), sum_aff},
                        "p0-addition leaves the nilradical pair"});
          return r;
        }
      }
    }
  }
  return r;
}

LemmaReport check_split_impl(const CaseContext& ctx) {
  LemmaReport r = base_report(ctx, "split");
  if (ctx.spec.cls != CaseClass::MinusculeOnly) {
    r.verdict = Verdict::NotApplicable;
    return r;
  }
  // (i) the a_0 grading of R(um-) matches the length grading and each graded
  // piece is closed under addition of R(p0)
  for (const AffineRoot& g : ctx.um_minus.roots) {
    const Int a0 = g.coeffs[0];
    if (a0 != -1 && a0 != -2) {
      fail_with(r, {"length-grading", {g.coeffs}, "a_0 coefficient outside {-1,-2}"});
      return r;
    }
    const RootLength expected = (a0 == -1) ? RootLength::Short : RootLength::Long;
    if (g.length != expected) {
      fail_with(r, {"length-grading", {g.coeffs}, "a_0 grading disagrees with root length"});
      return r;
    }
    for (const AffineRoot& b : ctx.p0.roots) {
      const Coeffs sum = add(g.coeffs, embed_affine(ctx.affine, b.coeffs));
      if (!is_real_root(ctx.affine, sum)) continue;
      const AffineRoot* in = ctx.um_minus.find(sum);
      if (in == nullptr || in->coeffs[0] != a0) {
        fail_with(r, {"closure-violation",
                      {g.coeffs, embed_affine(ctx.affine, b.coeffs), sum},
                      "p0-addition leaves the graded piece of R(um-)"});
        return r;
      }
    }
  }
  // (ii) a witness that R(u0) admits no such split: short + p0-root = long
  for (const AffineRoot& a : ctx.u0.roots) {
    if (a.length != RootLength::Short) continue;
    for (const AffineRoot& b : ctx.p0.roots) {
      const Coeffs sum = add(a.coeffs, embed_affine(ctx.affine, b.coeffs));
      const AffineRoot* in = ctx.u0.find(sum);
      if (in != nullptr && in->length == RootLength::Long) {
        r.witness = Witness{"non-split-triple",
                            {a.coeffs, embed_affine(ctx.affine, b.coeffs), sum},
                            "short root of u0 plus p0-root lands on a long root of u0"};
        r.note = "non-split certified at weight level";
        return r;
      }
    }
  }
  fail_with(r, {"no-witness", {}, "no short+p0 -> long transition found inside R(u0)"});
  return r;
}

LemmaReport check_weights_impl(const CaseContext& ctx) {
  LemmaReport r = base_report(ctx, "weights");
  if (ctx.spec.cls == CaseClass::Neither) {
    r.verdict = Verdict::NotApplicable;
    return r;
  }
  std::vector<Coeffs> from_u0, from_um;
  for (const AffineRoot& a : ctx.u0.roots) from_u0.push_back(reduce_mod_delta(ctx.affine, a.coeffs));
  for (const AffineRoot& g : ctx.um_minus.roots)
    from_um.push_back(reduce_mod_delta(ctx.affine, g.coeffs));
  std::sort(from_u0.begin(), from_u0.end());
  std::sort(from_um.begin(), from_um.end());
  if (from_u0 != from_um) {
    fail_with(r, {"weight-mismatch", {}, "mod-delta weight multisets of R(u0) and R(um-) differ"});
    return r;
  }
  for (const AffineRoot& a : ctx.u0.roots) {
    if (coweight_pairing(ctx.affine, a.coeffs, ctx.spec.node) <= 0) {
      fail_with(r, {"nonpositive-pairing", {a.coeffs}, "coweight pairing not positive on R(u0)"});
      return r;
    }
  }
  for (const AffineRoot& g : ctx.um_minus.roots) {
    if (coweight_pairing(ctx.affine, g.coeffs, ctx.spec.node) <= 0) {
      fail_with(r, {"nonpositive-pairing", {g.coeffs}, "coweight pairing not positive on R(um-)"});
      return r;
    }
  }
  return r;
}

LemmaReport dimension_report_impl(const CaseContext& ctx) {
  LemmaReport r = base_report(ctx, "dimension");
  if (ctx.spec.cls != CaseClass::Cominuscule) {
    r.verdict = Verdict::NotApplicable;
    return r;
  }
  const Int d = ctx.metrics.dim_x;
  if (ctx.u0.size() != d || ctx.metrics.len_w0 != d || ctx.metrics.len_wm != d ||
      ctx.metrics.len_y != 2 * d) {
    fail_with(r, {"dimension-mismatch",
                  {},
                  "expected l(w0) = l(wm) = |R(u0)| = " + std::to_string(d) +
                      " and l(y) = " + std::to_string(2 * d)});
  }
  return r;
}

}  // namespace

LemmaReport check_diagram_iso(const CaseSpec& c) { return check_diagram_iso_impl(build_context(c)); }
LemmaReport check_bp(const CaseSpec& c) { return check_bp_impl(build_context(c)); }
LemmaReport check_phi_bijection(const CaseSpec& c) { return check_phi_impl(build_context(c)); }
LemmaReport check_twisted_split(const CaseSpec& c) { return check_split_impl(build_context(c)); }
LemmaReport check_weight_agreement_and_attractivity(const CaseSpec& c) {
  return check_weights_impl(build_context(c));
}
LemmaReport dimension_report(const CaseSpec& c) { return dimension_report_impl(build_context(c)); }

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"iso", "bp", "phi", "split", "weights", "dimension"};
  return ids;
}

std::vector<LemmaReport> run_checks(const CaseSpec& c, const std::string& lemma) {
  const CaseContext ctx = build_context(c);
  std::vector<LemmaReport> out;
  auto want = [&](const std::string& id) { return lemma == "all" || lemma == id; };
  if (want("iso")) out.push_back(check_diagram_iso_impl(ctx));
  if (want("bp")) out.push_back(check_bp_impl(ctx));
  if (want("phi")) out.push_back(check_phi_impl(ctx));
  if (want("split")) out.push_back(check_split_impl(ctx));
  if (want("weights")) out.push_back(check_weights_impl(ctx));
  if (want("dimension")) out.push_back(dimension_report_impl(ctx));
  if (out.empty())
    throw std::invalid_argument("run_checks: unknown lemma id '" + lemma +
                                "' (expected all, iso, bp, phi, split, weights, dimension)");
  return out;
}

std::vector<CaseSpec> cominuscule_cases(int max_rank) {
  std::vector<CaseSpec> out;
  for (int n = 1; n <= max_rank; ++n)
    for (int m = 1; m <= n; ++m) out.push_back(classify_case(Family::A, n, m));
  for (int n = 2; n <= max_rank; ++n) out.push_back(classify_case(Family::B, n, 1));
  for (int n = 2; n <= max_rank; ++n) out.push_back(classify_case(Family::C, n, n));
  for (int n = 4; n <= max_rank; ++n) {
    out.push_back(classify_case(Family::D, n, 1));
    out.push_back(classify_case(Family::D, n, n - 1));
    out.push_back(classify_case(Family::D, n, n));
  }
  if (max_rank >= 6) {
    out.push_back(classify_case(Family::E, 6, 1));
    out.push_back(classify_case(Family::E, 6, 5));
  }
  if (max_rank >= 7) out.push_back(classify_case(Family::E, 7, 6));
  for (const CaseSpec& c : out)
    if (c.cls != CaseClass::Cominuscule)
      throw std::logic_error("cominuscule_cases: misclassified case");
  return out;
}

std::vector<CaseSpec> minuscule_only_cases(int max_rank) {
  std::vector<CaseSpec> out;
  for (int n = 2; n <= max_rank; ++n) out.push_back(classify_case(Family::B, n, n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(classify_case(Family::C, n, 1));
  for (const CaseSpec& c : out)
    if (c.cls != CaseClass::MinusculeOnly)
      throw std::logic_error("minuscule_only_cases: misclassified case");
  return out;
}

std::vector<CaseSpec> negative_control_cases(int max_rank) {
  const int cap = std::min(max_rank, 6);
  std::vector<CaseSpec> out;
  auto sweep_type = [&](Family f, int n) {
    for (int m = 1; m <= n; ++m) {
      const CaseSpec c = classify_case(f, n, m);
      if (c.cls == CaseClass::Neither) out.push_back(c);
    }
  };
  for (int n = 1; n <= cap; ++n) sweep_type(Family::A, n);
  for (int n = 2; n <= cap; ++n) sweep_type(Family::B, n);
  for (int n = 2; n <= cap; ++n) sweep_type(Family::C, n);
  for (int n = 4; n <= cap; ++n) sweep_type(Family::D, n);
  if (cap >= 6) sweep_type(Family::E, 6);
  if (cap >= 4) sweep_type(Family::F, 4);
  if (cap >= 2) sweep_type(Family::G, 2);
  return out;
}

std::vector<LemmaReport> sweep_case_reports(const CaseSpec& c) {
  const CaseContext ctx = build_context(c);
  std::vector<LemmaReport> out;
  switch (c.cls) {
    case CaseClass::Cominuscule:
      out.push_back(check_diagram_iso_impl(ctx));
      out.push_back(check_bp_impl(ctx));
      out.push_back(check_phi_impl(ctx));
      out.push_back(check_weights_impl(ctx));
      out.push_back(dimension_report_impl(ctx));
      break;
    case CaseClass::MinusculeOnly:
      out.push_back(check_diagram_iso_impl(ctx));
      out.push_back(check_bp_impl(ctx));
      out.push_back(check_split_impl(ctx));
      out.push_back(check_weights_impl(ctx));
      break;
    case CaseClass::Neither: {
      out.push_back(check_bp_impl(ctx));
      // control checks: pass exactly when the expected negative outcome occurs
      LemmaReport iso = check_diagram_iso_impl(ctx);
      LemmaReport iso_control = base_report(ctx, "iso_control");
      if (iso.verdict == Verdict::Fail) {
        iso_control.note = "no pinned isomorphism, as required for a non-cominuscule node";
      } else {
        fail_with(iso_control, iso.witness ? *iso.witness : Witness{"unexpected-iso", {}, ""});
        iso_control.witness->detail = "pinned isomorphism exists at a non-cominuscule node";
      }
      out.push_back(std::move(iso_control));

      LemmaReport phi = check_phi_impl(ctx);
      LemmaReport phi_control = base_report(ctx, "phi_control");
      if (phi.verdict == Verdict::NotApplicable && phi.witness.has_value()) {
        phi_control.witness = phi.witness;
        phi_control.note = "phi not applicable, witness root carries an excess coefficient";
      } else {
        fail_with(phi_control, {"unexpected-phi", {}, "phi check did not report the expected witness"});
      }
      out.push_back(std::move(phi_control));
      break;
    }
  }
  return out;
}

}  // namespace weylcomb
