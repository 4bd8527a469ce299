#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "necklace/equations.hpp"
#include "necklace/gluing.hpp"
#include "necklace/hurwitz.hpp"
#include "necklace/jacobian.hpp"
#include "necklace/tower.hpp"
#include "necklace/weierstrass.hpp"

namespace py = pybind11;
using namespace necklace;

namespace {

Polynomial f_quartic(double t) {
    return Polynomial({Complex(0.0), Complex(0.0), Complex(0.0),
                       Complex(4.0 * t), Complex(1.0)});
}

Polynomial g_quartic(double t) {
    Complex alpha =
        std::pow(27.0, 0.25) * std::exp(Complex(0.0, M_PI / 4.0));
    return Polynomial({Complex(0.0), Complex(0.0), 4.0 * t * t * alpha * alpha,
                       4.0 * t * alpha, Complex(1.0)});
}

}  // namespace

PYBIND11_MODULE(_necklace, m) {
    m.doc() = "Core bindings for the necklace toolkit";

    m.def(
        "central_residual",
        [](int mm) {
            return full_residual(ParameterVector::central(mm)).max_norm();
        },
        py::arg("m"),
        "Max norm of the full residual at the central parameter vector.");

    m.def(
        "growth_vector",
        [](int mm) { return growth_vector(central_configuration(mm)); },
        py::arg("m"),
        "Logarithmic growths of the glued limit at the central value.");

    m.def(
        "limit_graph_height",
        [](int mm, bool plus_side, std::complex<double> z) {
            GluingConfiguration cfg = central_configuration(mm);
            double u = limit_graph(
                cfg, plus_side ? GraphSide::Plus : GraphSide::Minus, z);
            return plus_side ? u : -u;
        },
        py::arg("m"), py::arg("plus_side"), py::arg("z"),
        "Geometric height of the limit graph sheet at z.");

    m.def(
        "jacobian_summary",
        [](int mm) {
            JacobianResult J = jacobian_at_central(mm);
            py::dict out;
            out["rank"] = J.rank;
            out["kernel_dimension"] = J.kernel_dimension;
            out["surjective"] = J.surjective;
            py::list blocks;
            for (const BlockReport& b : J.blocks) {
                py::dict d;
                d["name"] = b.block_name;
                d["verdict"] = b.verdict;
                d["smallest_singular_value"] = b.smallest_singular_value;
                blocks.append(d);
            }
            out["blocks"] = blocks;
            return out;
        },
        py::arg("m"),
        "Rank/kernel/block certificates of the central Jacobian.");

    m.def(
        "validate_schedule",
        [](const std::vector<int>& ms) {
            Schedule s;
            s.m = ms;
            ScheduleReport r = validate_schedule(s);
            return py::make_tuple(r.valid, r.violation_index, r.reason);
        },
        py::arg("schedule"),
        "(valid, violation_index, reason) for an opening-number schedule.");

    m.def(
        "minimal_growths",
        [](int N) {
            AsymptoticsReport a = asymptotics(Schedule::minimal(N), N);
            std::vector<double> out;
            for (const Rational& c : a.c_n_of_S_n)
                out.push_back(c.convert_to<double>());
            return out;
        },
        py::arg("N"),
        "c_n(S_n) for n = 2..N under the minimal schedule m_n = 2n - 1.");

    m.def(
        "quartic_pair_comparison",
        [](double t) {
            Polynomial f = f_quartic(t), g = g_quartic(t);
            return py::make_tuple(same_branching_values(f, g, 1e-10),
                                  isomorphic_profiles(f, g));
        },
        py::arg("t"),
        "(same_branching_values, isomorphic_profiles) for the quartic pair.");

    m.def(
        "dimension_audit",
        [](int genus, int ends) {
            DimensionAudit d = dimension_audit(genus, ends);
            return py::make_tuple(d.parameters, d.equations,
                                  d.expected_kernel);
        },
        py::arg("genus"), py::arg("ends"),
        "(parameters, equations, expected_kernel) bookkeeping.");
}
