#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <memory>
#include <sstream>

#include "coverhom/builders.hpp"
#include "coverhom/bundle.hpp"
#include "coverhom/homology.hpp"
#include "coverhom/io.hpp"
#include "coverhom/racg.hpp"
#include "coverhom/snf.hpp"
#include "coverhom/subdivision.hpp"
#include "coverhom/verify.hpp"

namespace py = pybind11;
using namespace coverhom;

namespace {

using ComplexPtr = std::shared_ptr<DeltaComplex>;
using BundlePtr = std::shared_ptr<InstanceBundle>;

py::dict group_dict(const HomologyGroup& h) {
    py::dict d;
    d["rank"] = h.rank;
    py::list tors;
    for (const auto& t : h.torsion) tors.append(std::stoll(t.to_string()));
    d["torsion"] = tors;
    d["pretty"] = h.to_string();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "small covers of simplicial complexes with exact torsion verification";

    py::class_<DeltaComplex, ComplexPtr>(m, "Complex")
        .def_property_readonly("dimension", &DeltaComplex::dimension)
        .def("cell_count", &DeltaComplex::cell_count)
        .def_property_readonly("total_cells", &DeltaComplex::total_cells)
        .def_property_readonly("euler_characteristic", &DeltaComplex::euler_characteristic)
        .def_property_readonly("is_simplicial", &DeltaComplex::is_simplicial)
        .def("__repr__", [](const DeltaComplex& x) {
            std::ostringstream os;
            os << "Complex(dim=" << x.dimension() << ", cells=" << x.total_cells() << ")";
            return os.str();
        });

    m.def("cycle_graph", [](int n) { return std::make_shared<DeltaComplex>(cycle_graph(n)); });
    m.def("simplex", [](int n) { return std::make_shared<DeltaComplex>(simplex(n)); });
    m.def("simplex_boundary", [](int n) { return std::make_shared<DeltaComplex>(simplex_boundary(n)); });
    m.def("join_complexes",
          [](const ComplexPtr& a, const ComplexPtr& b) { return std::make_shared<DeltaComplex>(join(*a, *b).complex); });
    m.def("cone", [](const ComplexPtr& a) { return std::make_shared<DeltaComplex>(cone(*a).complex); });
    m.def("subdivide", [](const ComplexPtr& a) { return std::make_shared<DeltaComplex>(subdivide(*a).result()); });
    m.def("read_complex", [](const std::string& path) { return std::make_shared<DeltaComplex>(read_complex_file(path)); });
    m.def("write_complex", [](const ComplexPtr& x, const std::string& path) {
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot open " + path);
        write_complex(os, *x);
    });

    m.def(
        "homology",
        [](const ComplexPtr& x, int degree, std::uint32_t mod) {
            Coefficients c = mod ? Coefficients::mod(mod) : Coefficients::Z();
            return group_dict(homology(*x, degree, c, {false, false}));
        },
        py::arg("complex"), py::arg("degree"), py::arg("mod") = 0);

    m.def("smith_normal_form", [](const std::vector<std::vector<long long>>& rows) {
        auto r = smith_normal_form(SparseIntMatrix::from_dense(rows));
        py::list diag;
        for (const auto& d : r.diagonal) diag.append(std::stoll(d.to_string()));
        return diag;
    });

    py::class_<InstanceBundle, BundlePtr>(m, "Bundle")
        .def_readonly("n", &InstanceBundle::n)
        .def_readonly("k", &InstanceBundle::k)
        .def_readonly("provenance", &InstanceBundle::provenance)
        .def_property_readonly("cells", [](const InstanceBundle& b) { return b.L.total_cells(); })
        .def("__repr__", [](const InstanceBundle& b) {
            return "Bundle(" + b.provenance + ", cells=" + std::to_string(b.L.total_cells()) + ")";
        });

    m.def("build_twisted_bundle", [](int n) { return std::make_shared<InstanceBundle>(build_twisted_bundle(n)); });
    m.def(
        "build_moore_instance",
        [](int n, long long k, long long max_cells) {
            return std::make_shared<InstanceBundle>(build_moore_instance(n, k, max_cells));
        },
        py::arg("n"), py::arg("k"), py::arg("max_cells") = 1000000);
    m.def("read_bundle", [](const std::string& path) { return std::make_shared<InstanceBundle>(read_bundle_file(path)); });
    m.def("write_bundle", [](const BundlePtr& b, const std::string& path) { write_bundle_file(path, *b); });

    m.def(
        "verify",
        [](const BundlePtr& b, std::uint64_t seed, long long max_cells, bool deep) {
            VerifyOptions opts;
            opts.seed = seed;
            opts.max_cells = max_cells;
            opts.deep = deep;
            VerificationReport rep = verify_bundle(*b, opts);
            py::dict out;
            out["ok"] = rep.ok();
            out["instance"] = rep.instance;
            py::list checks;
            for (const auto& c : rep.checks) {
                py::dict cd;
                cd["name"] = c.name;
                cd["status"] = c.status;
                cd["detail"] = c.detail;
                py::dict vals;
                for (const auto& [key, val] : c.values) vals[py::str(key)] = val;
                cd["values"] = vals;
                checks.append(cd);
            }
            out["checks"] = checks;
            out["json"] = rep.to_json();
            return out;
        },
        py::arg("bundle"), py::arg("seed") = 0, py::arg("max_cells") = 1000000, py::arg("deep") = true);

    m.def("normal_form", [](long long n_generators, const std::vector<std::pair<long long, long long>>& edges,
                            const std::vector<long long>& word) {
        auto g = racg_from_edges(n_generators, edges);
        return normal_form(g, word);
    });

    m.attr("__version__") = "1.0.0";
}
