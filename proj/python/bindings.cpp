#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toric/infinitesimal.hpp"
#include "toric/report.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const toric::Integer& z) { return py::int_(py::str(z.get_str())); }

py::list matrix_to_py(const toric::IntegerMatrix& m) {
    py::list rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_py(m(r, c)));
        rows.append(row);
    }
    return rows;
}

py::dict smith(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) throw toric::DomainError("empty matrix");
    const auto s = toric::smith_normal_form(toric::IntegerMatrix::from_rows(rows, rows.front().size()));
    py::list divisors;
    for (const auto& d : s.elementary_divisors()) divisors.append(to_py(d));
    py::dict out;
    out["U"] = matrix_to_py(s.U);
    out["S"] = matrix_to_py(s.S);
    out["V"] = matrix_to_py(s.V);
    out["elementary_divisors"] = divisors;
    return out;
}

std::vector<toric::LatticeVector> points(const std::vector<std::pair<toric::LatticeVector, std::int64_t>>& hs,
                                         std::size_t dim) {
    std::vector<toric::HalfSpace> h;
    for (const auto& [normal, bound] : hs) h.push_back({normal, bound});
    return toric::lattice_points(h, dim);
}

} // namespace

PYBIND11_MODULE(_toric_deform, m) {
    m.doc() = "Exact toric deformation computations";

    py::register_exception<toric::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<toric::ModelParseError>(m, "ModelParseError", PyExc_ValueError);

    py::class_<toric::Model>(m, "Model")
        .def_static("from_json", &toric::parse_model, py::arg("text"))
        .def_static("load", &toric::load_model, py::arg("path"))
        .def_static("preset", &toric::preset, py::arg("name"))
        .def_readonly("name", &toric::Model::name)
        .def_readonly("hash", &toric::Model::hash)
        .def_readonly("divisor", &toric::Model::divisor)
        .def_property_readonly("rank", [](const toric::Model& md) { return md.fan.rank(); })
        .def_property_readonly("rays", [](const toric::Model& md) { return md.fan.rays(); })
        .def_property_readonly("polynomial", [](const toric::Model& md) -> py::object {
            if (!md.polynomial) return py::none();
            return py::str(md.polynomial->to_string());
        })
        .def(
            "run",
            [](const toric::Model& md, const std::string& command, std::optional<std::size_t> root,
               std::optional<std::size_t> orientation) {
                toric::CommandOptions opts;
                opts.root = root;
                if (orientation) {
                    if (*orientation == 0 || *orientation > md.fan.ray_count())
                        throw toric::DomainError("orientation must be a 1-based ray index");
                    opts.orientation = *orientation - 1;
                }
                return toric::run_command(command, md, opts).dump();
            },
            py::arg("command"), py::arg("root") = py::none(), py::arg("orientation") = py::none())
        .def("dim_R1", [](const toric::Model& md) {
            if (!md.polynomial) throw toric::DomainError("model has no polynomial");
            return toric::dim_R1(md.fan, *md.polynomial);
        });

    m.def("preset_names", &toric::preset_names);
    m.def("preset_json", &toric::preset_json, py::arg("name"));
    m.def("smith_normal_form", &smith, py::arg("rows"));
    m.def("lattice_points", &points, py::arg("halfspaces"), py::arg("dim"),
          "Lattice points of {m : <m, normal> >= bound}, lexicographic.");
}
