#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "weylcomb/dynkin.hpp"
#include "weylcomb/oracle.hpp"
#include "weylcomb/report.hpp"
#include "weylcomb/roots.hpp"
#include "weylcomb/verify.hpp"
#include "weylcomb/weyl.hpp"

namespace py = pybind11;
using namespace weylcomb;

namespace {

Family family_arg(const std::string& s) {
  const auto f = family_from_name(s);
  if (!f) throw py::value_error("family must be one of A B C D E F G");
  return *f;
}

std::vector<std::vector<Int>> matrix_rows(const IntMatrix& m) {
  std::vector<std::vector<Int>> rows;
  for (int i = 0; i < m.dim(); ++i) {
    std::vector<Int> row;
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

NodeSet node_set_arg(const std::vector<int>& labels) {
  NodeSet s;
  for (int l : labels) s.insert(l);
  return s;
}

py::list root_set_list(const RootSet& rs) {
  py::list out;
  for (const AffineRoot& r : rs.roots)
    out.append(py::make_tuple(r.coeffs, root_length_name(r.length)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dynkin diagram, affine root system, and Weyl group combinatorics engine";
  m.attr("__version__") = kToolVersion;

  py::class_<DynkinDiagram>(m, "DynkinDiagram")
      .def_property_readonly("name", &DynkinDiagram::name)
      .def_property_readonly("kind", [](const DynkinDiagram& d) { return kind_name(d.kind); })
      .def_property_readonly("family",
                             [](const DynkinDiagram& d) { return family_name(d.family); })
      .def_readonly("rank", &DynkinDiagram::rank)
      .def_readonly("labels", &DynkinDiagram::labels)
      .def_property_readonly("cartan",
                             [](const DynkinDiagram& d) { return matrix_rows(d.cartan); })
      .def_readonly("delta", &DynkinDiagram::delta)
      .def("__repr__", [](const DynkinDiagram& d) { return "<DynkinDiagram " + d.name() + ">"; });

  py::class_<Subdiagram>(m, "Subdiagram")
      .def_readonly("labels", &Subdiagram::labels)
      .def_property_readonly("cartan", [](const Subdiagram& d) { return matrix_rows(d.cartan); });

  m.def("build_finite",
        [](const std::string& f, int rank) { return build_finite(family_arg(f), rank); },
        py::arg("family"), py::arg("rank"));
  m.def("affinize_untwisted", &affinize_untwisted);
  m.def("affinize_twisted", &affinize_twisted);
  m.def("cominuscule_nodes",
        [](const DynkinDiagram& d) { return cominuscule_nodes(d).to_vector(); });
  m.def("minuscule_nodes", [](const DynkinDiagram& d) { return minuscule_nodes(d).to_vector(); });
  m.def("delete_node",
        [](const DynkinDiagram& d, int label) { return delete_node(d, label); });
  m.def("diagram_isomorphism",
        [](const Subdiagram& a, const Subdiagram& b,
           std::optional<std::pair<int, int>> pin) -> py::object {
          const auto iso = diagram_isomorphism(a, b, pin);
          if (!iso) return py::none();
          py::dict out;
          for (const auto& [src, dst] : iso->map) out[py::int_(src)] = dst;
          return out;
        },
        py::arg("d1"), py::arg("d2"), py::arg("pin") = std::nullopt);
  m.def("to_dot", &to_dot);

  m.def("positive_roots", [](const DynkinDiagram& d) { return root_set_list(positive_roots(d)); });
  m.def("highest_root", [](const DynkinDiagram& d) { return highest_root(d).coeffs; });
  m.def("highest_short_root",
        [](const DynkinDiagram& d) { return highest_short_root(d).coeffs; });
  m.def("is_real_root", &is_real_root, py::arg("diagram"), py::arg("coeffs"));
  m.def("nilradical_roots",
        [](const DynkinDiagram& g, int node, int removed, const std::string& sign) {
          if (sign != "+" && sign != "-") throw py::value_error("sign must be '+' or '-'");
          return root_set_list(
              nilradical_roots(g, node, removed, sign == "+" ? Sign::Plus : Sign::Minus));
        },
        py::arg("diagram"), py::arg("node"), py::arg("removed"), py::arg("sign") = "+");
  m.def("parabolic_roots",
        [](const DynkinDiagram& d, int node) { return root_set_list(parabolic_roots(d, node)); });
  m.def("coweight_pairing", &coweight_pairing, py::arg("diagram"), py::arg("coeffs"),
        py::arg("node"));

  py::class_<WeylElement>(m, "WeylElement")
      .def_property_readonly("matrix",
                             [](const WeylElement& w) { return matrix_rows(w.matrix()); })
      .def(py::self == py::self)
      .def(py::self != py::self);

  py::class_<WeylGroup>(m, "WeylGroup")
      .def(py::init<DynkinDiagram>())
      .def_property_readonly("diagram", &WeylGroup::diagram)
      .def("identity", &WeylGroup::identity)
      .def("simple_reflection", &WeylGroup::simple_reflection)
      .def("multiply", &WeylGroup::multiply)
      .def("inverse", &WeylGroup::inverse)
      .def("product_of_word", &WeylGroup::product_of_word)
      .def("act", &WeylGroup::act)
      .def("length", &WeylGroup::length)
      .def("reduced_word", &WeylGroup::reduced_word)
      .def("support", [](const WeylGroup& W, const WeylElement& w) {
        return W.support(w).to_vector();
      })
      .def("left_descents", [](const WeylGroup& W, const WeylElement& w) {
        return W.left_descents(w).to_vector();
      })
      .def("right_descents", [](const WeylGroup& W, const WeylElement& w) {
        return W.right_descents(w).to_vector();
      })
      .def("min_coset_rep",
           [](const WeylGroup& W, const WeylElement& w, const std::vector<int>& I) {
             return W.min_coset_rep(w, node_set_arg(I));
           })
      .def("longest_element",
           [](const WeylGroup& W, const std::vector<int>& K) {
             return W.longest_element(node_set_arg(K));
           })
      .def("max_parabolic_quotient_rep",
           [](const WeylGroup& W, const std::vector<int>& K, const std::vector<int>& I) {
             return W.max_parabolic_quotient_rep(node_set_arg(K), node_set_arg(I));
           })
      .def("coset_descents",
           [](const WeylGroup& W, const WeylElement& u, const std::vector<int>& I) {
             return W.coset_descents(u, node_set_arg(I)).to_vector();
           })
      .def("parabolic_decomposition",
           [](const WeylGroup& W, const WeylElement& w, const std::vector<int>& K) {
             const ParabolicDecomposition pd = W.parabolic_decomposition(w, node_set_arg(K));
             return py::make_tuple(pd.quotient_part, pd.parabolic_part);
           })
      .def("is_billey_postnikov",
           [](const WeylGroup& W, const WeylElement& w, const std::vector<int>& K,
              const std::vector<int>& I) {
             return W.is_billey_postnikov(w, node_set_arg(K), node_set_arg(I));
           });

  m.def("cross_check", [](const std::string& f, int rank) {
    const CrossCheckStats st = cross_check(build_finite(family_arg(f), rank));
    py::dict out;
    out["elements"] = st.elements;
    out["length_checks"] = st.length_checks;
    out["coset_checks"] = st.coset_checks;
    out["descent_checks"] = st.descent_checks;
    out["bp_checks"] = st.bp_checks;
    return out;
  });

  m.def("classify_case_json", [](const std::string& f, int rank, int node) {
    const CaseSpec c = classify_case(family_arg(f), rank, node);
    nlohmann::ordered_json j;
    j["family"] = family_name(c.family);
    j["rank"] = c.rank;
    j["node"] = c.node;
    j["class"] = case_class_name(c.cls);
    j["affine"] = c.affine_name();
    return j.dump();
  });
  m.def("verify_case_json",
        [](const std::string& f, int rank, int node, const std::string& lemma) {
          const ReportDocument doc = make_verify_document(
              family_arg(f), rank, node, lemma,
              "verify --family " + f + " --rank " + std::to_string(rank) + " --node " +
                  std::to_string(node) + " --lemma " + lemma);
          return to_json(doc).dump();
        },
        py::arg("family"), py::arg("rank"), py::arg("node"), py::arg("lemma") = "all");
  m.def("sweep_json", [](int max_rank) {
    const ReportDocument doc =
        make_sweep_document(max_rank, "sweep --max-rank " + std::to_string(max_rank));
    return to_json(doc).dump();
  });
}
