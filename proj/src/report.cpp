#include "weylcomb/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylcomb {

namespace {

using json = nlohmann::ordered_json;

Coeffs parse_root(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("parse_root: expected bracketed vector, got " + s);
  Coeffs v;
  std::istringstream is(s.substr(1, s.size() - 2));
  std::string tok;
  while (std::getline(is, tok, ',')) v.push_back(std::stoll(tok));
  return v;
}

json case_to_json(const CaseSpec& c) {
  json j;
  j["family"] = family_name(c.family);
  j["rank"] = c.rank;
  j["node"] = c.node;
  j["class"] = case_class_name(c.cls);
  j["affine"] = c.affine_name();
  return j;
}

CaseSpec case_from_json(const json& j) {
  const auto fam = family_from_name(j.at("family").get<std::string>());
  if (!fam) throw std::invalid_argument("case_from_json: bad family");
  CaseSpec c = classify_case(*fam, j.at("rank").get<int>(), j.at("node").get<int>());
  if (case_class_name(c.cls) != j.at("class").get<std::string>())
    throw std::invalid_argument("case_from_json: class does not match the classification");
  if (c.affine_name() != j.at("affine").get<std::string>())
    throw std::invalid_argument("case_from_json: affine name does not match");
  return c;
}

json check_to_json(const LemmaReport& r) {
  json j;
  j["lemma"] = r.lemma;
  j["verdict"] = verdict_name(r.verdict);
  if (r.witness) {
    json w;
    w["kind"] = r.witness->kind;
    json roots = json::array();
    for (const Coeffs& v : r.witness->roots) roots.push_back(root_to_string(v));
    w["roots"] = roots;
    w["detail"] = r.witness->detail;
    j["witness"] = w;
  }
  if (r.metrics) {
    json m;
    m["dim_x"] = r.metrics->dim_x;
    m["len_w0"] = r.metrics->len_w0;
    m["len_wm"] = r.metrics->len_wm;
    m["len_y"] = r.metrics->len_y;
    j["metrics"] = m;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

LemmaReport check_from_json(const CaseSpec& c, const json& j) {
  LemmaReport r;
  r.c = c;
  r.lemma = j.at("lemma").get<std::string>();
  const std::string v = j.at("verdict").get<std::string>();
  if (v == "pass") r.verdict = Verdict::Pass;
  else if (v == "fail") r.verdict = Verdict::Fail;
  else if (v == "not-applicable") r.verdict = Verdict::NotApplicable;
  else throw std::invalid_argument("check_from_json: bad verdict " + v);
  if (j.contains("witness")) {
    Witness w;
    w.kind = j.at("witness").at("kind").get<std::string>();
    for (const auto& s : j.at("witness").at("roots")) w.roots.push_back(parse_root(s.get<std::string>()));
    w.detail = j.at("witness").at("detail").get<std::string>();
    r.witness = std::move(w);
  }
  if (j.contains("metrics")) {
    Metrics m;
    m.dim_x = j.at("metrics").at("dim_x").get<Int>();
    m.len_w0 = j.at("metrics").at("len_w0").get<int>();
    m.len_wm = j.at("metrics").at("len_wm").get<int>();
    m.len_y = j.at("metrics").at("len_y").get<int>();
    r.metrics = m;
  }
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  return r;
}

Summary tally(const std::vector<CaseReports>& cases) {
  Summary s;
  for (const CaseReports& cr : cases)
    for (const LemmaReport& r : cr.checks) {
      if (r.verdict == Verdict::Pass) ++s.pass;
      else if (r.verdict == Verdict::Fail) ++s.fail;
      else ++s.not_applicable;
    }
  return s;
}

bool case_order(const CaseSpec& a, const CaseSpec& b) {
  if (a.family != b.family) return a.family < b.family;
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.node < b.node;
}

}  // namespace

ReportDocument make_verify_document(Family family, int rank, int node, const std::string& lemma,
                                    const std::string& invocation) {
  ReportDocument doc;
  doc.invocation = invocation;
  CaseReports cr;
  cr.c = classify_case(family, rank, node);
  cr.checks = run_checks(cr.c, lemma);
  doc.cases.push_back(std::move(cr));
  doc.summary = tally(doc.cases);
  return doc;
}

ReportDocument make_sweep_document(int max_rank, const std::string& invocation) {
  if (max_rank < 1 || max_rank > 8)
    throw std::invalid_argument("make_sweep_document: max rank must be between 1 and 8");
  ReportDocument doc;
  doc.invocation = invocation;
  std::vector<CaseSpec> cases = cominuscule_cases(max_rank);
  for (const CaseSpec& c : minuscule_only_cases(max_rank)) cases.push_back(c);
  for (const CaseSpec& c : negative_control_cases(max_rank)) cases.push_back(c);
  std::sort(cases.begin(), cases.end(), case_order);
  for (const CaseSpec& c : cases) {
    CaseReports cr;
    cr.c = c;
    cr.checks = sweep_case_reports(c);
    doc.cases.push_back(std::move(cr));
  }
  doc.summary = tally(doc.cases);
  return doc;
}

nlohmann::ordered_json to_json(const ReportDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["invocation"] = doc.invocation;
  if (doc.cases.size() == 1) {
    j["case"] = case_to_json(doc.cases[0].c);
    json checks = json::array();
    for (const LemmaReport& r : doc.cases[0].checks) checks.push_back(check_to_json(r));
    j["checks"] = checks;
  } else {
    json cases = json::array();
    for (const CaseReports& cr : doc.cases) {
      json e;
      e["case"] = case_to_json(cr.c);
      json checks = json::array();
      for (const LemmaReport& r : cr.checks) checks.push_back(check_to_json(r));
      e["checks"] = checks;
      cases.push_back(e);
    }
    j["cases"] = cases;
  }
  json s;
  s["pass"] = doc.summary.pass;
  s["fail"] = doc.summary.fail;
  s["not-applicable"] = doc.summary.not_applicable;
  j["summary"] = s;
  return j;
}

ReportDocument document_from_json(const nlohmann::ordered_json& j) {
  ReportDocument doc;
  doc.version = j.at("version").get<std::string>();
  doc.invocation = j.at("invocation").get<std::string>();
  auto read_case = [](const json& e) {
    CaseReports cr;
    cr.c = case_from_json(e.at("case"));
    for (const auto& ck : e.at("checks")) cr.checks.push_back(check_from_json(cr.c, ck));
    return cr;
  };
  if (j.contains("case")) {
    doc.cases.push_back(read_case(j));
  } else {
    for (const auto& e : j.at("cases")) doc.cases.push_back(read_case(e));
  }
  doc.summary = tally(doc.cases);
  const auto& s = j.at("summary");
  if (doc.summary.pass != s.at("pass").get<int>() || doc.summary.fail != s.at("fail").get<int>() ||
      doc.summary.not_applicable != s.at("not-applicable").get<int>())
    throw std::invalid_argument("document_from_json: summary does not match the check tally");
  return doc;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "weylcomb " << doc.version << "\n";
  os << "invocation: " << doc.invocation << "\n";
  for (const CaseReports& cr : doc.cases) {
    os << "case " << cr.c.finite_name() << " node " << cr.c.node
       << ": class=" << case_class_name(cr.c.cls) << " affine=" << cr.c.affine_name() << "\n";
    for (const LemmaReport& r : cr.checks) {
      os << "  " << r.lemma;
      for (std::size_t i = r.lemma.size(); i < 12; ++i) os << ' ';
      os << verdict_name(r.verdict);
      if (r.metrics && (r.lemma == "bp" || r.lemma == "dimension"))
        os << "  dim_x=" << r.metrics->dim_x << " l(w0)=" << r.metrics->len_w0
           << " l(wm)=" << r.metrics->len_wm << " l(y)=" << r.metrics->len_y;
      if (r.witness && !r.witness->roots.empty()) {
        os << "  witness:";
        for (const Coeffs& v : r.witness->roots) os << " " << root_to_string(v);
      }
      if (!r.note.empty()) os << "  (" << r.note << ")";
      os << "\n";
    }
  }
  os << "summary: pass=" << doc.summary.pass << " fail=" << doc.summary.fail
     << " not-applicable=" << doc.summary.not_applicable << "\n";
  return os.str();
}

int document_exit_code(const ReportDocument& doc) { return doc.summary.fail == 0 ? 0 : 1; }

}  // namespace weylcomb
