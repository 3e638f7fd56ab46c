#include "cotanhom/cellular.hpp"
#include "cotanhom/classification.hpp"
#include "cotanhom/errors.hpp"
#include "cotanhom/io.hpp"
#include "cotanhom/quiver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cotanhom;
using nlohmann::json;

namespace {

constexpr std::string_view kBuiltin = "builtin:";

// Python objects cross the boundary as JSON so the file formats and the
// Python API stay the same thing.
json to_json(const py::handle& obj) {
    return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object from_json(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

RationalMatrix matrix_of(const py::handle& rows) {
    const auto j = to_json(rows);
    if (!j.is_array()) throw InputError("matrix must be a list of rows");
    const std::size_t r = j.size();
    const std::size_t c = r == 0 ? 0 : j.at(0).size();
    return io::parse_matrix(j, r, c);
}

Representation representation_of(const py::handle& obj) {
    if (py::isinstance<py::str>(obj)) {
        auto name = obj.cast<std::string>();
        if (name.starts_with(kBuiltin)) return builtin_representation(name.substr(kBuiltin.size()));
        return io::parse_representation(io::read_json_file(name));
    }
    return io::parse_representation(to_json(obj));
}

CellComplex cell_complex_of(const py::handle& obj) {
    if (py::isinstance<py::str>(obj)) {
        auto name = obj.cast<std::string>();
        if (name.starts_with(kBuiltin)) name = name.substr(kBuiltin.size());
        return builtin_cell_complex(name);
    }
    return io::parse_cell_complex(to_json(obj));
}

std::map<int, std::size_t> dims_of(const CohomologyResult& h) { return h.dims; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact homology, graded representations and Floer-type hom complexes";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto input = py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<ReferenceError>(m, "ReferenceError", input.ptr());
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<ClassificationError>(m, "ClassificationError", base.ptr());
    py::register_exception<UnsupportedDifferentialError>(m, "UnsupportedDifferentialError", base.ptr());

    m.def("rank", [](const py::object& rows) { return rank(matrix_of(rows)); },
          "Rank of a matrix given as rows of ints or 'p/q' strings.");
    m.def("kernel_basis",
          [](const py::object& rows) { return from_json(io::to_json(transpose(kernel_basis(matrix_of(rows))))); },
          "Kernel basis vectors, one list of 'p/q' strings per vector.");

    m.def("hom_space",
          [](const std::map<int, std::size_t>& v, const std::map<int, std::size_t>& w) {
              return hom_space(GradedVectorSpace(v), GradedVectorSpace(w)).dims();
          },
          py::arg("v"), py::arg("w"));

    m.def("cohomology", [](const py::object& complex) { return dims_of(cohomology(io::parse_complex(to_json(complex)))); },
          "Cohomology dims of a cochain complex {'dims': ..., 'differential': ...}.");
    m.def("euler_characteristic",
          [](const py::object& complex) { return euler_from_cohomology(io::parse_complex(to_json(complex))); });

    m.def("homology", [](const py::object& cc) { return dims_of(homology_of(cell_complex_of(cc))); },
          py::arg("cell_complex"), "Homology dims of a builtin name or cell-complex dict.");
    m.def("classify",
          [](const py::object& cc) {
              const auto v = classify_surface(cell_complex_of(cc));
              py::dict out;
              out["genus"] = v.genus;
              out["euler"] = v.euler;
              return out;
          },
          py::arg("cell_complex"));

    m.def("validate_representation",
          [](const py::object& r) { return first_violation(representation_of(r)); },
          "None when valid, otherwise the first failed condition.");
    m.def("floer", [](const py::object& a, const py::object& b) { return dims_of(floer_cohomology(representation_of(a), representation_of(b))); },
          py::arg("v"), py::arg("w"));
    m.def("euler_of_hom", [](const py::object& a, const py::object& b) { return euler_of_hom(representation_of(a), representation_of(b)); },
          py::arg("v"), py::arg("w"));

    m.def("verify",
          [](const std::string& theorem, std::uint64_t seed, std::size_t count, std::size_t max_dim, unsigned threads) {
              SampleConfig cfg;
              cfg.seed = seed;
              cfg.count = count;
              cfg.max_total_dim = max_dim;
              cfg.check();
              TheoremReport report;
              {
                  py::gil_scoped_release release;
                  if (theorem == "sphere") report = check_sphere_theorem(cfg, threads);
                  else if (theorem == "torus") report = check_torus_theorem(cfg, threads);
                  else if (theorem == "concentrated") report = check_concentrated_lemma(cfg, threads);
                  else throw InputError("unknown theorem: " + theorem);
              }
              return from_json(io::to_json(report));
          },
          py::arg("theorem"), py::arg("seed") = 0, py::arg("count") = 100, py::arg("max_dim") = 3, py::arg("threads") = 1);
}
