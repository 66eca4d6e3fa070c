#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pscirc/analysis.hpp"
#include "pscirc/consistency.hpp"
#include "pscirc/embedding.hpp"
#include "pscirc/enumerate.hpp"
#include "pscirc/geometry.hpp"
#include "pscirc/io.hpp"
#include "pscirc/matrix.hpp"

namespace py = pybind11;
using namespace pscirc;

namespace {

LabelPermutation perm_from_dict(const std::map<int, int>& mapping) {
    return LabelPermutation(mapping);
}

py::dict witness_dict(const ConsistencyWitness& w) {
    py::dict d;
    d["i"] = w.i;
    d["j"] = w.j;
    d["k"] = w.k;
    d["entry"] = w.offending_entry.to_string();
    d["side_in_row_k"] = w.side_in_row_k;
    d["side_in_row_i"] = w.side_in_row_i;
    return d;
}

CircleArrangement circles_from_list(const std::vector<std::tuple<int, double, double, double>>& cs,
                                    double eps) {
    CircleArrangement arr;
    arr.epsilon = eps;
    for (const auto& [label, cx, cy, r] : cs) arr.circles.emplace_back(label, Circle{cx, cy, r});
    std::sort(arr.circles.begin(), arr.circles.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return arr;
}

}  // namespace

PYBIND11_MODULE(_pscirc, m) {
    m.doc() = "Intersection matrices of pseudocircle arrangements: consistency, "
              "genus, sphere-embeddability, isomorphism, enumeration.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);

    py::class_<IntersectionMatrix>(m, "Matrix")
        .def_static("parse", [](const std::string& text) { return parse_matrix(text); },
                    py::arg("text"), "Parse .psm text.")
        .def_property_readonly("n", &IntersectionMatrix::n)
        .def_property_readonly("labels", &IntersectionMatrix::labels)
        .def("row",
             [](const IntersectionMatrix& a, int label) {
                 std::vector<std::string> out;
                 for (const SignedEntry& e : a.row(label)) out.push_back(e.to_string());
                 return out;
             },
             py::arg("label"))
        .def("to_psm", [](const IntersectionMatrix& a) { return serialize_matrix(a); })
        .def("__eq__", [](const IntersectionMatrix& a, const IntersectionMatrix& b) { return a == b; })
        .def("__repr__", [](const IntersectionMatrix& a) {
            return "<Matrix n=" + std::to_string(a.n()) + ">";
        });

    m.def("parse_matrix", [](const std::string& text) { return parse_matrix(text); }, py::arg("text"));
    m.def("serialize_matrix",
          [](const IntersectionMatrix& a) { return serialize_matrix(a); }, py::arg("matrix"));
    m.def("validate_text", [](const std::string& text) -> py::object {
        try {
            parse_matrix(text);
            return py::none();
        } catch (const ValidationError& e) {
            return py::str(e.what());
        }
    }, py::arg("text"), "None when valid, else the first violation as text.");

    m.def("reorient", &reorient, py::arg("matrix"), py::arg("label"));
    m.def("reorient_all", &reorient_all, py::arg("matrix"));
    m.def("mirror", &mirror, py::arg("matrix"));
    m.def("relabel",
          [](const IntersectionMatrix& a, const std::map<int, int>& mapping) {
              return relabel(a, perm_from_dict(mapping));
          },
          py::arg("matrix"), py::arg("mapping"));
    m.def("submatrix_delete", &submatrix_delete, py::arg("matrix"), py::arg("label"));
    m.def("all_submatrices", &all_submatrices, py::arg("matrix"), py::arg("m"));

    m.def("check_consistency",
          [](const IntersectionMatrix& a) -> py::object {
              auto w = check_consistency(a);
              if (!w) return py::none();
              return witness_dict(*w);
          },
          py::arg("matrix"), "None when consistent, else the first witness.");
    m.def("strictly_embeddable", &strictly_embeddable, py::arg("matrix"));
    m.def("inconsistent_triple",
          [](const IntersectionMatrix& a) -> py::object {
              auto t = inconsistent_triple(a);
              if (!t) return py::none();
              return py::cast(*t);
          },
          py::arg("matrix"));

    m.def("genus", &genus, py::arg("matrix"));
    m.def("face_count", [](const IntersectionMatrix& a) {
        return trace_faces(EmbeddedGraph(a)).size();
    }, py::arg("matrix"));
    m.def("face_walks",
          [](const IntersectionMatrix& a) {
              std::vector<std::vector<std::string>> out;
              for (const FaceWalk& w : trace_faces(EmbeddedGraph(a))) {
                  std::vector<std::string> walk;
                  for (const Dart& d : w.darts) walk.push_back(d.to_string());
                  out.push_back(std::move(walk));
              }
              return out;
          },
          py::arg("matrix"));
    m.def("is_sphere_embeddable_direct", &is_sphere_embeddable_direct, py::arg("matrix"));
    m.def("is_sphere_embeddable_via_quads",
          [](const IntersectionMatrix& a) {
              auto r = is_sphere_embeddable_via_quads(a);
              py::dict d;
              d["embeddable"] = r.embeddable;
              d["witness"] = r.witness ? py::cast(*r.witness) : py::object(py::none());
              return d;
          },
          py::arg("matrix"));
    m.def("export_graph_json", &export_graph_json, py::arg("matrix"));
    m.def("export_graph_dot", &export_graph_dot, py::arg("matrix"));

    m.def("canonical_form",
          [](const IntersectionMatrix& a) { return canonical_form(a).to_psm(); }, py::arg("matrix"),
          "Canonical form as .psm text with a '# canonical' header.");
    m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));
    m.def("iso_via_quads",
          [](const IntersectionMatrix& a, const IntersectionMatrix& b) {
              auto r = iso_via_quads(a, b);
              py::dict d;
              d["isomorphic"] = r.isomorphic;
              d["advisory"] = r.advisory;
              return d;
          },
          py::arg("a"), py::arg("b"));
    m.def("quad_profile",
          [](const IntersectionMatrix& a) {
              std::vector<std::string> out;
              for (const CanonicalForm& f : quad_profile(a).sorted_forms())
                  out.push_back(f.to_psm());
              return out;
          },
          py::arg("matrix"), "Sorted canonical forms of all 4-submatrices.");
    m.def("is_uniform_oriented_matroid", &is_uniform_oriented_matroid, py::arg("matrix"));
    m.def("classify_triple",
          [](const IntersectionMatrix& a) { return std::string(to_string(classify_triple(a))); },
          py::arg("matrix"));

    m.def("enumerate_census",
          [](int n, const std::string& filter, bool allow_long_running) {
              EnumerateOptions opts;
              opts.allow_long_running = allow_long_running;
              std::vector<py::dict> out;
              enumerate_scan(n, census_filter_from_string(filter), opts,
                             [&](const CensusEntry& e) {
                                 py::dict d;
                                 d["psm"] = serialize_matrix(e.form.to_matrix());
                                 d["genus"] = e.genus;
                                 d["consistent"] = e.consistent;
                                 d["om"] = e.om;
                                 out.push_back(std::move(d));
                             });
              return out;
          },
          py::arg("n"), py::arg("filter") = "all", py::arg("allow_long_running") = false);

    m.def("matrix_from_circles",
          [](const std::vector<std::tuple<int, double, double, double>>& circles, double eps) {
              return matrix_from_circles(circles_from_list(circles, eps));
          },
          py::arg("circles"), py::arg("eps") = 1e-9,
          "circles: list of (label, cx, cy, r); all counterclockwise.");
    m.def("random_circles",
          [](int n, std::uint64_t seed) {
              std::vector<std::tuple<int, double, double, double>> out;
              for (const auto& [label, c] : random_arrangement(n, seed).circles)
                  out.emplace_back(label, c.cx, c.cy, c.r);
              return out;
          },
          py::arg("n"), py::arg("seed"));
    m.def("parse_circles_text",
          [](const std::string& text) { return matrix_from_circles(parse_circles(text)); },
          py::arg("text"), "Parse .circ text and return its intersection matrix.");
}
