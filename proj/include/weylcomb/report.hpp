#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weylcomb/verify.hpp"

namespace weylcomb {

inline constexpr const char* kToolVersion = "0.1.0";

struct Summary {
  int pass = 0;
  int fail = 0;
  int not_applicable = 0;
};

struct CaseReports {
  CaseSpec c;
  std::vector<LemmaReport> checks;
};

/// Machine-readable result of cmd_verify (one case) or cmd_sweep (many).
/// Output is deterministic: cases ordered by (family, rank, node), checks in
/// fixed per-case order, summary equal to the tally of the verdicts.
struct ReportDocument {
  std::string version = kToolVersion;
  std::string invocation;
  std::vector<CaseReports> cases;
  Summary summary;
};

ReportDocument make_verify_document(Family family, int rank, int node,
                                    const std::string& lemma,
                                    const std::string& invocation);
ReportDocument make_sweep_document(int max_rank, const std::string& invocation);

/// JSON schema: single-case documents emit {version, invocation, case,
/// checks, summary}; sweeps emit {version, invocation, cases:[{case,
/// checks}...], summary}. Roots serialize as "[a0,a1,...]", reduced words as
/// space-separated labels.
nlohmann::ordered_json to_json(const ReportDocument& doc);
ReportDocument document_from_json(const nlohmann::ordered_json& j);

std::string render_text(const ReportDocument& doc);

/// 0 iff the document contains no fail verdicts.
int document_exit_code(const ReportDocument& doc);

}  // namespace weylcomb
