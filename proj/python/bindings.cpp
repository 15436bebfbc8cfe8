#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "z2coh/borel.hpp"
#include "z2coh/bredon.hpp"
#include "z2coh/catalog.hpp"
#include "z2coh/errors.hpp"
#include "z2coh/sequences.hpp"
#include "z2coh/serialize.hpp"

namespace py = pybind11;
using namespace z2coh;

namespace {

py::int_ to_py(const Integer& v)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list torsion_list(const FgAbGroup& g)
{
    py::list out;
    for (const Integer& t : g.torsion())
        out.append(to_py(t));
    return out;
}

CellLabels fixed_labels(const Z2CwComplex& x)
{
    return labels_of(fixed_subcomplex(x).complex);
}

IntegerMatrix matrix_from(const std::vector<std::vector<long long>>& rows)
{
    IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        if (rows[i].size() != m.cols())
            throw DimensionMismatch("ragged matrix");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

}   // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Bredon and Borel Z2-equivariant cohomology of finite Z2-CW complexes";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidComplex>(m, "InvalidComplex", base);
    py::register_exception<UnknownSpace>(m, "UnknownSpace", base);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<SubcomplexNotInvariant>(m, "SubcomplexNotInvariant", base);

    py::class_<FgAbGroup>(m, "Group")
        .def(py::init([](std::size_t free_rank, const std::vector<long long>& orders) {
                 std::vector<Integer> all(free_rank, 0);
                 all.insert(all.end(), orders.begin(), orders.end());
                 return FgAbGroup::from_orders(all);
             }),
             py::arg("free_rank") = 0, py::arg("orders") = std::vector<long long>{})
        .def_static("parse", &parse_group)
        .def_property_readonly("free_rank", &FgAbGroup::free_rank)
        .def_property_readonly("torsion", &torsion_list)
        .def_property_readonly("is_trivial", &FgAbGroup::is_trivial)
        .def("order", [](const FgAbGroup& g) { return to_py(g.order()); })
        .def("__eq__", [](const FgAbGroup& a, const FgAbGroup& b) { return a == b; })
        .def("__hash__", [](const FgAbGroup& g) { return py::hash(py::str(g.to_string())); })
        .def("__str__", &FgAbGroup::to_string)
        .def("__repr__", [](const FgAbGroup& g) { return "Group('" + g.to_string() + "')"; });

    py::class_<Z2CwComplex>(m, "Complex")
        .def_property_readonly("dimension", &Z2CwComplex::dimension)
        .def("num_cells", &Z2CwComplex::num_cells, py::arg("n"))
        .def("labels", [](const Z2CwComplex& x, int n) { return x.labels(n); }, py::arg("n"))
        .def_property_readonly("is_free", &Z2CwComplex::is_free)
        .def("euler_characteristic", &Z2CwComplex::euler_characteristic)
        .def("fixed_set", [](const Z2CwComplex& x) { return fixed_subcomplex(x).complex; })
        .def("to_json", [](const Z2CwComplex& x) { return to_json(x); })
        .def("content_hash", [](const Z2CwComplex& x) { return content_hash(x); })
        .def("validate", [](const Z2CwComplex& x) { return validate(x); })
        .def("__eq__", [](const Z2CwComplex& a, const Z2CwComplex& b) { return a == b; })
        .def("__repr__", [](const Z2CwComplex& x) {
            return "<Complex dim=" + std::to_string(x.dimension()) + " cells=" + std::to_string(x.total_cells()) +
                   ">";
        });

    m.def("list_spaces", &list_names);
    m.def("build", &build, py::arg("name"));
    m.def("from_json", &from_json, py::arg("text"));
    m.def("coefficient_systems", &std_system_names);

    m.def(
        "bredon",
        [](const Z2CwComplex& x, const std::string& system, int n) {
            return bredon_cohomology(x, std_system(system), n);
        },
        py::arg("complex"), py::arg("system"), py::arg("n"));
    m.def(
        "borel",
        [](const Z2CwComplex& x, int twist, int n, bool relative_to_fixed) {
            return relative_to_fixed ? borel_cohomology(x, twist, n, fixed_labels(x)) : borel_cohomology(x, twist, n);
        },
        py::arg("complex"), py::arg("twist"), py::arg("n"), py::arg("relative_to_fixed") = false);
    m.def(
        "cellular",
        [](const Z2CwComplex& x, int n) { return cellular_cohomology(x.underlying(), n); }, py::arg("complex"),
        py::arg("n"));
    m.def(
        "group_cohomology_z2",
        [](const std::vector<std::vector<long long>>& action, int n) {
            return group_cohomology_z2(action.size(), matrix_from(action), n);
        },
        py::arg("action"), py::arg("n"));
    m.def(
        "restriction_to_fixed",
        [](const Z2CwComplex& x, int twist, int n) {
            const GroupHom h = restriction_map(x, fixed_labels(x), twist, n);
            return py::dict(py::arg("source") = h.source, py::arg("target") = h.target,
                            py::arg("kernel") = kernel(h), py::arg("cokernel") = cokernel(h),
                            py::arg("injective") = is_injective(h));
        },
        py::arg("complex"), py::arg("twist"), py::arg("n"));
    m.def(
        "check_exactness",
        [](const Z2CwComplex& x, int twist, int max_degree) {
            const ExactnessReport r = check_exactness(les_of_pair(x, fixed_labels(x), twist, max_degree));
            return py::make_tuple(r.exact, r.violations);
        },
        py::arg("complex"), py::arg("twist"), py::arg("max_degree"));
    m.def(
        "stable",
        [](const Z2CwComplex& x, int twist, int n) { return stability_check(x, twist, n).stable; },
        py::arg("complex"), py::arg("twist"), py::arg("n"));
}
