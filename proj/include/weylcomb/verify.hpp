#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylcomb/dynkin.hpp"
#include "weylcomb/roots.hpp"
#include "weylcomb/weyl.hpp"

namespace weylcomb {

enum class CaseClass { Cominuscule, MinusculeOnly, Neither };
std::string case_class_name(CaseClass c);

enum class Verdict { Pass, Fail, NotApplicable };
std::string verdict_name(Verdict v);

/// One (family, rank, node) case, classified. Minuscule-only cases live on
/// the twisted affine diagram; everything else on the untwisted one.
struct CaseSpec {
  Family family = Family::A;
  int rank = 0;
  int node = 0;
  CaseClass cls = CaseClass::Neither;
  DiagramKind affine_kind = DiagramKind::UntwistedAffine;

  std::string finite_name() const;
  std::string affine_name() const;
};

/// Structured evidence attached to a verdict: the roots involved plus a
/// one-line description. Failing reports always carry one.
struct Witness {
  std::string kind;
  std::vector<Coeffs> roots;
  std::string detail;
};

struct Metrics {
  Int dim_x = 0;  // #{beta in R+(g0) : beta_m >= 1}
  int len_w0 = 0;
  int len_wm = 0;
  int len_y = 0;
};

struct LemmaReport {
  CaseSpec c;
  std::string lemma;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  std::optional<Metrics> metrics;
  std::string note;
};

/// Classify (family, rank, m); throws std::invalid_argument on bad input.
CaseSpec classify_case(Family family, int rank, int m);

/// Deleting node 0 and node m from the case's affine diagram must yield
/// isomorphic diagrams under a bijection pinning m -> 0. Pass iff one exists.
LemmaReport check_diagram_iso(const CaseSpec& c);

/// y = w0 * wm is a parabolic decomposition with respect to S_m, satisfies
/// the BP criterion, and D^J(y) = S_0.
LemmaReport check_bp(const CaseSpec& c);

/// Cominuscule only: alpha -> alpha - delta maps R(u_0) bijectively onto
/// R(u_m^-), and root addition by R(p_0) commutes with the shift on both
/// sides. Not-applicable (with an a_m >= 2 witness root) otherwise.
LemmaReport check_phi_bijection(const CaseSpec& c);

/// Minuscule-only (twisted) only: R(u_m^-) splits into its a_0 = -1 (short)
/// and a_0 = -2 (long) parts, each closed under addition of R(p_0); and a
/// witness alpha in R(u_0) short, beta in R(p_0) with alpha + beta in R(u_0)
/// long certifies that R(u_0) admits no such split.
LemmaReport check_twisted_split(const CaseSpec& c);

/// R(u_0) and R(u_m^-) reduce mod delta to the same multiset of finite
/// weights, and the pairing with the coweight dual to alpha_m is strictly
/// positive on both sets.
LemmaReport check_weight_agreement_and_attractivity(const CaseSpec& c);

/// Cominuscule only: l(w0) = l(wm) = |R(u_0)| = dim X and l(y) = 2 dim X.
LemmaReport dimension_report(const CaseSpec& c);

/// Lemma ids accepted by the CLI: iso, bp, phi, split, weights, dimension.
const std::vector<std::string>& lemma_ids();
/// Run one named check, or all six in fixed order when lemma == "all".
std::vector<LemmaReport> run_checks(const CaseSpec& c, const std::string& lemma);

/// Case universes for sweeps, ordered by (family, rank, node).
std::vector<CaseSpec> cominuscule_cases(int max_rank);
std::vector<CaseSpec> minuscule_only_cases(int max_rank);
/// Every neither-class node with rank <= min(max_rank, 6).
std::vector<CaseSpec> negative_control_cases(int max_rank);

/// Checks run by cmd_sweep for one case. Cominuscule and minuscule-only
/// cases run their applicable lemmas with plain verdicts. Negative controls
/// run bp plus two control checks (iso_control, phi_control) that pass when
/// the expected negative outcome occurs, so a healthy sweep has zero fails.
std::vector<LemmaReport> sweep_case_reports(const CaseSpec& c);

}  // namespace weylcomb
