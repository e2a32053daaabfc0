#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <numbers>
#include <vector>

#include "spincat/errors.hpp"
#include "spincat/verify.hpp"

namespace py = pybind11;
using namespace spincat;

namespace {

py::object xi_to_py(const XiValue& v) {
    switch (v.kind()) {
        case XiValue::Kind::Finite: return py::float_(v.value());
        case XiValue::Kind::Infinite:
            return py::float_(std::numeric_limits<double>::infinity());
        default: return py::none();
    }
}

UnitVector vec_from_tuple(const std::array<double, 3>& v) {
    return UnitVector::normalized(v[0], v[1], v[2]);
}

py::tuple vec_to_tuple(const UnitVector& v) { return py::make_tuple(v.x, v.y, v.z); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Superpositions of spin coherent states: coherence and squeezing numerics";
    m.attr("__version__") = SPINCAT_VERSION;

    py::register_exception<DegenerateSuperpositionError>(m, "DegenerateSuperpositionError",
                                                         PyExc_ValueError);
    py::register_exception<NoCrossingError>(m, "NoCrossingError", PyExc_RuntimeError);

    py::class_<SpinSpace>(m, "SpinSpace")
        .def(py::init<int>(), py::arg("twice_j"))
        .def_property_readonly("twice_j", &SpinSpace::twice_j)
        .def_property_readonly("dimension", &SpinSpace::dimension)
        .def_property_readonly("j", &SpinSpace::j)
        .def("__repr__", [](const SpinSpace& s) {
            return "SpinSpace(twice_j=" + std::to_string(s.twice_j()) + ")";
        });

    py::class_<SpinState>(m, "SpinState")
        .def(py::init<const SpinSpace&, std::vector<Complex>>(), py::arg("space"),
             py::arg("amplitudes"))
        .def_property_readonly("space", &SpinState::space)
        .def_property_readonly("dimension", &SpinState::dimension)
        .def("amplitudes",
             [](const SpinState& s) {
                 return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
             })
        .def("amplitude", &SpinState::amplitude, py::arg("n"));

    py::class_<SscsParams>(m, "SscsParams")
        .def(py::init([](int twice_j, Complex eta, double theta) {
                 return SscsParams{twice_j, eta, theta};
             }),
             py::arg("twice_j"), py::arg("eta"), py::arg("theta"))
        .def_readwrite("twice_j", &SscsParams::twice_j)
        .def_readwrite("eta", &SscsParams::eta)
        .def_readwrite("theta", &SscsParams::theta);

    py::class_<MomentSet>(m, "MomentSet")
        .def_readonly("n1", &MomentSet::n1)
        .def_readonly("n2", &MomentSet::n2)
        .def_readonly("n3", &MomentSet::n3)
        .def_readonly("n4", &MomentSet::n4)
        .def_readonly("jminus", &MomentSet::jminus)
        .def_readonly("jminus2", &MomentSet::jminus2)
        .def_readonly("jx", &MomentSet::jx)
        .def_readonly("jy", &MomentSet::jy)
        .def_readonly("jz", &MomentSet::jz)
        .def_readonly("jx2", &MomentSet::jx2)
        .def_readonly("jy2", &MomentSet::jy2)
        .def_readonly("jz2", &MomentSet::jz2);

    m.def("number_state", &number_state, py::arg("space"), py::arg("n"));
    m.def("scs", &scs, py::arg("space"), py::arg("eta"));
    m.def("sscs", &sscs, py::arg("space"), py::arg("params"));
    m.def(
        "sscs",
        [](const SscsParams& p) { return sscs(SpinSpace(p.twice_j), p); },
        py::arg("params"));
    m.def("xi_param", &xi_param, py::arg("eta"));
    m.def("scs_overlap_minus", &scs_overlap_minus, py::arg("space"), py::arg("eta"));
    m.def("sscs_cross_overlap", &sscs_cross_overlap, py::arg("params"));
    m.def("one_axis_twist", &one_axis_twist, py::arg("state"), py::arg("chi_t"));
    m.def("global_phase_fidelity", &global_phase_fidelity, py::arg("s1"), py::arg("s2"));
    m.def("inner", &inner, py::arg("s1"), py::arg("s2"));

    m.def("generating_function", &generating_function, py::arg("params"), py::arg("lambda_"));
    m.def("factorial_moment", &factorial_moment, py::arg("params"), py::arg("k"));
    m.def("n_moments", [](const SscsParams& p) {
        const NMoments nm = n_moments(p);
        return py::make_tuple(nm.n1, nm.n2, nm.n3, nm.n4);
    });
    m.def("g2", &g2, py::arg("params"));
    m.def("g2_number_state", &g2_number_state, py::arg("twice_j"), py::arg("n"));
    m.def("gtilde", &gtilde, py::arg("params"), py::arg("lambda_"));
    m.def("jminus_expect", &jminus_expect, py::arg("params"));
    m.def("jminus2_expect", &jminus2_expect, py::arg("params"));
    m.def("cartesian_moments", &cartesian_moments, py::arg("params"));
    m.def("j1_even_xi", [](double eta_abs) {
        const J1XiPair pair = j1_even_xi(eta_abs);
        return py::make_tuple(pair.x ? py::object(py::float_(*pair.x)) : py::none(), pair.y);
    });

    m.def("complete_triad", [](const std::array<double, 3>& n1) {
        const auto [n2, n3] = complete_triad(vec_from_tuple(n1));
        return py::make_tuple(vec_to_tuple(n2), vec_to_tuple(n3));
    });
    m.def("xi_squared_oracle", [](const SpinState& state, const std::array<double, 3>& n1) {
        const SqueezingReport report = xi_squared_oracle(state, vec_from_tuple(n1));
        py::dict out;
        out["xi2"] = xi_to_py(report.xi2);
        out["mean_spin"] =
            py::make_tuple(report.mean_spin[0], report.mean_spin[1], report.mean_spin[2]);
        out["degenerate"] = report.degenerate;
        return out;
    });
    m.def("xi_xyz_closedform", [](const SscsParams& p) {
        const XiTriple t = xi_xyz_closedform(p);
        return py::make_tuple(xi_to_py(t.x), xi_to_py(t.y), xi_to_py(t.z));
    });
    m.def("find_critical_eta", &find_critical_eta, py::arg("twice_j"),
          py::arg("theta") = std::numbers::pi);
    m.def("odd_scs_peak_xi_y2", &odd_scs_peak_xi_y2, py::arg("twice_j"), py::arg("eta_c"));
    m.def("mean_spin_direction", [](const SpinState& state) -> py::object {
        const auto dir = mean_spin_direction(state);
        if (!dir) return py::none();
        return vec_to_tuple(*dir);
    });

    m.def("expectation_jx",
          [](const SpinState& s) { return expectation(s, op_jx(s.space())).real(); });
    m.def("expectation_jy",
          [](const SpinState& s) { return expectation(s, op_jy(s.space())).real(); });
    m.def("expectation_jz",
          [](const SpinState& s) { return expectation(s, op_jz(s.space())).real(); });

    m.def(
        "run_verification",
        [](const std::string& preset, double rtol) {
            VerifyOptions options;
            options.preset = parse_grid_preset(preset);
            options.rtol = rtol;
            const VerifyReport report = run_verification(options);
            py::dict out;
            out["pass"] = report.pass;
            out["points"] = report.points;
            py::list rows;
            for (const auto& q : report.quantities) {
                py::dict row;
                row["name"] = q.name;
                row["max_abs_dev"] = q.max_abs_dev;
                row["max_rel_dev"] = q.max_rel_dev;
                row["samples"] = q.samples;
                row["failures"] = q.failures;
                rows.append(row);
            }
            out["quantities"] = rows;
            return out;
        },
        py::arg("preset") = "default", py::arg("rtol") = 1e-9);
}
