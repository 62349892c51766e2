#include "weylcomb/cli.hpp"

#include <exception>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylcomb/report.hpp"

namespace weylcomb {

namespace {

using json = nlohmann::ordered_json;

std::string join_args(const std::vector<std::string>& args) {
  std::ostringstream os;
  for (std::size_t i = 0; i < args.size(); ++i) os << (i ? " " : "") << args[i];
  return os.str();
}

Family parse_family(const std::string& s) {
  const auto f = family_from_name(s);
  if (!f)
    throw std::invalid_argument("--family expects one of A B C D E F G, got '" + s + "'");
  return *f;
}

json classify_json(Family fam, int rank, std::optional<int> node) {
  const DynkinDiagram d = build_finite(fam, rank);
  const NodeSet comin = cominuscule_nodes(d);
  const NodeSet minus = minuscule_nodes(d);
  json j;
  j["family"] = family_name(fam);
  j["rank"] = rank;
  j["name"] = d.name();
  j["affine_untwisted"] = affinize_untwisted(d).name();
  if (fam == Family::B || fam == Family::C) j["affine_twisted"] = affinize_twisted(d).name();
  j["cominuscule"] = comin.to_vector();
  j["minuscule"] = minus.to_vector();
  json nodes = json::array();
  for (int m = 1; m <= rank; ++m) {
    if (node && *node != m) continue;
    const CaseSpec c = classify_case(fam, rank, m);
    json e;
    e["node"] = m;
    e["class"] = case_class_name(c.cls);
    e["affine"] = c.affine_name();
    nodes.push_back(e);
  }
  j["nodes"] = nodes;
  return j;
}

void classify_text(std::ostream& out, const json& j) {
  out << "family " << j["family"].get<std::string>() << " rank " << j["rank"].get<int>() << " ("
      << j["name"].get<std::string>() << ")\n";
  out << "affine untwisted: " << j["affine_untwisted"].get<std::string>() << "\n";
  if (j.contains("affine_twisted"))
    out << "affine twisted:   " << j["affine_twisted"].get<std::string>() << "\n";
  auto set_str = [](const json& arr) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < arr.size(); ++i) os << (i ? "," : "") << arr[i].get<int>();
    os << "}";
    return os.str();
  };
  out << "cominuscule: " << set_str(j["cominuscule"]) << "\n";
  out << "minuscule:   " << set_str(j["minuscule"]) << "\n";
  for (const auto& e : j["nodes"])
    out << "node " << e["node"].get<int>() << ": " << e["class"].get<std::string>() << " (affine "
        << e["affine"].get<std::string>() << ")\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynkin diagram, affine root system, and Weyl group combinatorics toolkit"};
  app.require_subcommand(1);

  std::string family_str, format = "text", lemma = "all", affine = "none";
  int rank = 0, node = -1, max_rank = 0;

  CLI::App* classify = app.add_subcommand("classify", "classify the nodes of a finite type");
  classify->add_option("--family", family_str, "family letter A..G")->required();
  classify->add_option("--rank", rank, "rank of the finite type")->required();
  classify->add_option("--node", node, "restrict to one node");
  classify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run the lemma checks on one case");
  verify->add_option("--family", family_str, "family letter A..G")->required();
  verify->add_option("--rank", rank, "rank of the finite type")->required();
  verify->add_option("--node", node, "marked node")->required();
  verify->add_option("--lemma", lemma, "all, iso, bp, phi, split, weights, or dimension")
      ->check(CLI::IsMember({"all", "iso", "bp", "phi", "split", "weights", "dimension"}));
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* sweep = app.add_subcommand("sweep", "verify every case up to a rank bound");
  sweep->add_option("--max-rank", max_rank, "largest rank to include (1..8)")
      ->required()
      ->check(CLI::Range(1, 8));
  sweep->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* dot = app.add_subcommand("dot", "emit a diagram in Graphviz format");
  dot->add_option("--family", family_str, "family letter A..G")->required();
  dot->add_option("--rank", rank, "rank of the finite type")->required();
  dot->add_option("--affine", affine, "none, untwisted, or twisted")
      ->check(CLI::IsMember({"none", "untwisted", "twisted"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage;
    const int code = app.exit(e, usage, usage);
    (code == 0 ? out : err) << usage.str();
    return code;
  }

  try {
    if (classify->parsed()) {
      const Family fam = parse_family(family_str);
      std::optional<int> only;
      if (node >= 0) only = node;
      const json j = classify_json(fam, rank, only);
      if (format == "json") out << j.dump(2) << "\n";
      else classify_text(out, j);
      return 0;
    }
    if (verify->parsed()) {
      const Family fam = parse_family(family_str);
      const ReportDocument doc =
          make_verify_document(fam, rank, node, lemma, join_args(args));
      if (format == "json") out << to_json(doc).dump(2) << "\n";
      else out << render_text(doc);
      return document_exit_code(doc);
    }
    if (sweep->parsed()) {
      const ReportDocument doc = make_sweep_document(max_rank, join_args(args));
      if (format == "json") out << to_json(doc).dump(2) << "\n";
      else out << render_text(doc);
      return document_exit_code(doc);
    }
    if (dot->parsed()) {
      const Family fam = parse_family(family_str);
      DynkinDiagram d = build_finite(fam, rank);
      if (affine == "untwisted") d = affinize_untwisted(d);
      else if (affine == "twisted") d = affinize_twisted(d);
      out << to_dot(d);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace weylcomb
