#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "grshull/grs.hpp"
#include "grshull/hull.hpp"
#include "grshull/lattice.hpp"
#include "grshull/quantum.hpp"
#include "grshull/sweep.hpp"

namespace py = pybind11;
using namespace grshull;

namespace {

std::string record_repr(const QuantumCodeRecord& r) {
    std::ostringstream os;
    os << "[[" << r.n << "," << r.K << "," << r.d << ";" << r.c << "]]_" << r.q;
    return os.str();
}

std::string params_repr(const CodeParams& p) {
    std::ostringstream os;
    os << "CodeParams(q=" << p.q << ", lambda=" << p.lambda << ", tau=" << p.tau
       << ", rho=" << p.rho << ", sigma=" << p.sigma << ", n=" << p.n << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact GRS code construction over GF(q^2), Hermitian hull dimension "
        "counting, and entanglement-assisted quantum code records";

    py::class_<Lattice>(m, "Lattice",
                        "Pairs (e1, e2) with 0 <= e1 < e2, e1 + e2 = a (mod b) "
                        "and e1 = e2 (mod c)")
        .def(py::init<long long, long long, long long>(), py::arg("a"),
             py::arg("b"), py::arg("c"))
        .def_readwrite("a", &Lattice::a)
        .def_readwrite("b", &Lattice::b)
        .def_readwrite("c", &Lattice::c);

    py::class_<FirstPoint>(m, "FirstPoint")
        .def_readonly("d1", &FirstPoint::d1)
        .def_readonly("d2", &FirstPoint::d2)
        .def_readonly("t", &FirstPoint::t)
        .def_readonly("eps", &FirstPoint::eps)
        .def("__repr__", [](const FirstPoint& f) {
            std::ostringstream os;
            os << "FirstPoint(d1=" << f.d1 << ", d2=" << f.d2 << ", t=" << f.t
               << ", eps=" << f.eps << ")";
            return os.str();
        });

    m.def("first_point", &first_point, py::arg("lattice"),
          "Colexicographically minimal lattice point, or None if empty");
    m.def("count_below",
          py::overload_cast<const Lattice&, long long>(&count_below),
          py::arg("lattice"), py::arg("k"),
          "Number of lattice points with e2 < k, by the closed form");
    m.def("count_below_bruteforce", &count_below_bruteforce, py::arg("lattice"),
          py::arg("k"), "Same count by direct enumeration");

    py::class_<CodeParams>(m, "CodeParams")
        .def_readonly("q", &CodeParams::q)
        .def_readonly("lambda_", &CodeParams::lambda)
        .def_readonly("tau", &CodeParams::tau)
        .def_readonly("rho", &CodeParams::rho)
        .def_readonly("sigma", &CodeParams::sigma)
        .def_readonly("kappa1", &CodeParams::kappa1)
        .def_readonly("kappa2", &CodeParams::kappa2)
        .def_readonly("kappa", &CodeParams::kappa)
        .def_readonly("n", &CodeParams::n)
        .def_readonly("pi", &CodeParams::pi)
        .def_readonly("L", &CodeParams::L)
        .def("__repr__", &params_repr);

    m.def("validate_params", &validate_params, py::arg("q"), py::arg("lambda_"),
          py::arg("tau"), py::arg("rho"), py::arg("sigma"),
          "Check the divisibility and size constraints and derive n, pi, L");

    py::enum_<Exactness>(m, "Exactness")
        .value("EXACT", Exactness::Exact)
        .value("UPPER_BOUND", Exactness::UpperBound);

    py::enum_<MdsStatus>(m, "MdsStatus")
        .value("EAQMDS", MdsStatus::Eaqmds)
        .value("NOT_MDS", MdsStatus::NotMds)
        .value("UNKNOWN", MdsStatus::Unknown);

    py::enum_<SingletonResult>(m, "SingletonResult")
        .value("TIGHT", SingletonResult::Tight)
        .value("SLACK", SingletonResult::Slack)
        .value("VIOLATED", SingletonResult::Violated);

    py::class_<HullDimension>(m, "HullDimension")
        .def_readonly("hull_dim", &HullDimension::hull_dim)
        .def_readonly("c", &HullDimension::c)
        .def_readonly("exactness", &HullDimension::exactness);

    py::class_<HullComputation>(m, "HullComputation")
        .def_readonly("k", &HullComputation::k)
        .def_readonly("count_t", &HullComputation::count_t)
        .def_readonly("count_p", &HullComputation::count_p)
        .def_readonly("failure_count", &HullComputation::failure_count)
        .def_readonly("exactness", &HullComputation::exactness)
        .def_property_readonly("c", &HullComputation::c)
        .def_property_readonly("hull_dim", &HullComputation::hull_dim);

    m.def("compute_hull", &compute_hull, py::arg("params"), py::arg("k"),
          "Lattice counts behind the hull dimension of the length-k code");
    m.def("hull_dim_formula", &hull_dim_formula, py::arg("params"), py::arg("k"),
          "Hull dimension and entanglement count by lattice counting");
    m.def("hull_dimension_oracle", &hull_dimension_oracle, py::arg("params"),
          py::arg("k"),
          "(hull_dim, c) from the rank of the Hermitian Gram matrix");
    m.def("count_F", &count_F, py::arg("params"), py::arg("k"),
          "Number of failure pairs with both exponents below k");
    m.def("failure_points_bruteforce", &failure_points_bruteforce,
          py::arg("params"), py::arg("k"),
          "All failure pairs below k by scanning the congruences");
    m.def("exactness_condition", &exactness_condition, py::arg("params"),
          py::arg("k"),
          "Whether the counted c is certified to equal the Gram rank");

    py::class_<QuantumCodeRecord>(m, "QuantumCodeRecord")
        .def_readonly("q", &QuantumCodeRecord::q)
        .def_readonly("n", &QuantumCodeRecord::n)
        .def_readonly("K", &QuantumCodeRecord::K)
        .def_readonly("d", &QuantumCodeRecord::d)
        .def_readonly("c", &QuantumCodeRecord::c)
        .def_readonly("exactness", &QuantumCodeRecord::exactness)
        .def_readonly("mds", &QuantumCodeRecord::mds)
        .def("__repr__", &record_repr);

    py::class_<SingletonCheck>(m, "SingletonCheck")
        .def_readonly("margin_entanglement", &SingletonCheck::margin_entanglement)
        .def_readonly("margin_length", &SingletonCheck::margin_length)
        .def_readonly("high_rate_applies", &SingletonCheck::high_rate_applies)
        .def_readonly("margin_high_rate", &SingletonCheck::margin_high_rate)
        .def_readonly("result", &SingletonCheck::result);

    m.def("eaqecc_params", &eaqecc_params, py::arg("params"), py::arg("k"),
          py::arg("c"), "Quantum record [[n, n-2k+c, k+1; c]] for a given c");
    m.def("make_record", &make_record, py::arg("params"), py::arg("k"),
          "Quantum record with c taken from the hull computation");
    m.def("singleton_check", &singleton_check, py::arg("record"),
          "Margins of the quantum Singleton bounds");
    m.def("propagate", &propagate, py::arg("record"), py::arg("i"), py::arg("s"),
          "Derived record [[n, n-k-i-s, k+i+1; k+i-s]] from a source record");

    py::class_<TableRow>(m, "TableRow")
        .def_readonly("k", &TableRow::k)
        .def_readonly("record", &TableRow::record)
        .def_readonly("hull", &TableRow::hull);

    m.def("table_rows", &table_rows, py::arg("params"), py::arg("k_lo"),
          py::arg("k_hi"), "One record per dimension in the range");
    m.def("rows_to_csv", &rows_to_csv, py::arg("rows"),
          "CSV text with the header k,n,K,d,c,exact,eaqmds");
    m.def("admissible_families", &admissible_families, py::arg("q"),
          py::arg("exact_sigma_only") = true,
          "Every admissible (lambda, tau, rho, sigma) for this q");
}
