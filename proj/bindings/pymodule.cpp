// Python bindings for the core operations: group construction, signals,
// Riesz analysis, dual generators and the dihedral sampling pipeline.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rieszrep/io.hpp"
#include "rieszrep/oracle.hpp"

namespace py = pybind11;
using namespace rieszrep;

namespace {

Rational rational_from_py(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj)) return Rational(obj.cast<std::int64_t>());
    if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
    if (py::isinstance<py::tuple>(obj)) {
        auto t = obj.cast<py::tuple>();
        return Rational(t[0].cast<std::int64_t>(), t[1].cast<std::int64_t>());
    }
    // fractions.Fraction and friends
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
        return Rational(obj.attr("numerator").cast<std::int64_t>(),
                        obj.attr("denominator").cast<std::int64_t>());
    throw py::type_error("expected an int, 'p/q' string, (num, den) tuple or Fraction");
}

Scalar scalar_from_py(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj) || py::isinstance<py::str>(obj) ||
        py::isinstance<py::tuple>(obj) ||
        (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")))
        return Scalar(rational_from_py(obj));
    if (py::isinstance<py::float_>(obj)) return Scalar(obj.cast<double>());
    return Scalar(obj.cast<cplx>());
}

py::object scalar_to_py(const Scalar& s) {
    if (s.is_exact() && s.exact().is_real()) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(s.exact().re.num(), s.exact().re.den());
    }
    if (s.value().imag() == 0.0) return py::float_(s.value().real());
    return py::cast(s.value());
}

py::dict json_to_py(const io::json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

// pybind11 holders cannot be shared_ptr<const T>; the Group is immutable, so
// shedding const at the binding boundary is harmless.
std::shared_ptr<Group> unconst(GroupPtr g) { return std::const_pointer_cast<Group>(std::move(g)); }

GammaSignal signal_from_dict(const GroupPtr& group, const py::dict& phases) {
    GammaSignal f(group);
    for (const auto& [key, entries] : phases) {
        int h = key.cast<int>();
        for (const auto& item : entries.cast<py::dict>()) {
            NVec n;
            if (py::isinstance<py::int_>(item.first))
                n.push_back(item.first.cast<std::int64_t>());
            else
                n = item.first.cast<NVec>();
            f.set({n, h}, scalar_from_py(item.second));
        }
    }
    return f;
}

py::dict signal_to_dict(const GammaSignal& f) {
    py::dict phases;
    for (int h = 0; h < f.kappa(); ++h) {
        py::dict entries;
        f.phase(h).for_each([&](const NVec& n, const Scalar& v) {
            py::object key;
            if (n.size() == 1) {
                key = py::cast(n[0]);
            } else {
                py::tuple t(n.size());
                for (std::size_t i = 0; i < n.size(); ++i) t[i] = py::cast(n[i]);
                key = std::move(t);
            }
            entries[key] = scalar_to_py(v);
        });
        phases[py::cast(h)] = entries;
    }
    return phases;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Riesz bases of left-translate systems on semidirect product groups";

    py::class_<Group, std::shared_ptr<Group>>(m, "Group")
        .def_property_readonly("kappa", &Group::kappa)
        .def_property_readonly("dimension", &Group::dimension)
        .def("multiply",
             [](const Group& g, std::pair<NVec, int> x, std::pair<NVec, int> y) {
                 GammaElement r = g.multiply({x.first, x.second}, {y.first, y.second});
                 return std::make_pair(r.n, r.h);
             })
        .def("inverse",
             [](const Group& g, std::pair<NVec, int> x) {
                 GammaElement r = g.inverse({x.first, x.second});
                 return std::make_pair(r.n, r.h);
             })
        .def("elements", [](const Group& g) {
            std::vector<std::pair<NVec, int>> out;
            for (const auto& el : g.enumerate()) out.emplace_back(el.n, el.h);
            return out;
        });

    m.def(
        "dihedral_infinite", [] { return unconst(Group::dihedral_infinite()); },
        "The infinite dihedral group: Z with the sign flip");
    m.def(
        "dihedral_finite", [](std::int64_t mm) { return unconst(Group::dihedral_finite(mm)); },
        py::arg("m"), "Z_m with the sign flip");
    m.def(
        "semidirect",
        [](const std::variant<std::vector<std::int64_t>, int>& n,
           const std::vector<std::vector<int>>& table,
           const std::vector<std::vector<std::vector<std::int64_t>>>& matrices) {
            AbelianGroupSpec spec = std::holds_alternative<int>(n)
                                        ? AbelianGroupSpec::lattice(std::get<int>(n))
                                        : AbelianGroupSpec::finite(
                                              std::get<std::vector<std::int64_t>>(n));
            ActionSpec sigma;
            for (const auto& mat : matrices) {
                IntMatrix im;
                im.dim = spec.dimension();
                for (const auto& row : mat)
                    for (auto v : row) im.data.push_back(v);
                sigma.matrices.push_back(std::move(im));
            }
            return unconst(
                Group::semidirect(std::move(spec), FiniteGroupTable(table), std::move(sigma)));
        },
        py::arg("n"), py::arg("h_table"), py::arg("sigma"),
        "Build N x| H from invariant factors (list) or a lattice rank (int), "
        "an H multiplication table and one integer matrix per H element");

    py::class_<GammaSignal>(m, "Signal")
        .def(py::init([](const std::shared_ptr<Group>& g, const py::dict& phases) {
                 return signal_from_dict(g, phases);
             }),
             py::arg("group"), py::arg("phases"),
             "phases: {h: {n: value}} with exact values as int/Fraction/'p/q'")
        .def_property_readonly("group",
                               [](const GammaSignal& f) { return unconst(f.group()); })
        .def_property_readonly("is_exact", &GammaSignal::is_exact)
        .def("norm", &GammaSignal::norm)
        .def("phases", &signal_to_dict)
        .def("__len__", &GammaSignal::support_size);

    m.def(
        "delta", [](const std::shared_ptr<Group>& g) { return GammaSignal::delta(g); },
        py::arg("group"), "Unit mass at the identity");

    m.def(
        "convolve", [](const GammaSignal& a, const GammaSignal& f) { return convolve(a, f); },
        "Group convolution a * f (synthesis with coefficients a)");
    m.def(
        "correlate", [](const GammaSignal& a, const GammaSignal& f) { return correlate(a, f); },
        "gamma -> <a, L_gamma f> (analysis)");
    m.def(
        "left_translate",
        [](std::pair<NVec, int> gamma, const GammaSignal& f) {
            return left_translate({gamma.first, gamma.second}, f);
        },
        "L_gamma f");
    m.def("involution", [](const GammaSignal& f) { return involution(f); });

    m.def(
        "analyze",
        [](const GammaSignal& f, std::int64_t grid, int max_refine, double det_floor,
           double atol) {
            Tolerances tol;
            tol.grid = grid;
            tol.max_refine = max_refine;
            tol.det_floor = det_floor;
            tol.atol = atol;
            return json_to_py(io::report_to_json(riesz_analyze(f, tol)));
        },
        py::arg("signal"), py::arg("grid") = 1024, py::arg("max_refine") = 6,
        py::arg("det_floor") = 1e-10, py::arg("atol") = 1e-9,
        "Bessel/Riesz/ONB verdicts with optimal-bound estimates, as a dict");

    m.def(
        "dual",
        [](const GammaSignal& f, std::int64_t grid) {
            Tolerances tol;
            tol.grid = grid;
            DualResult d = dual_generator(f, tol);
            py::dict out;
            out["signal"] = d.generator;
            out["exact"] = d.exact;
            out["tail_energy"] = d.tail_energy;
            return out;
        },
        py::arg("signal"), py::arg("grid") = 1024,
        "Dual Riesz generator; exact coefficients when the Laurent route applies");

    m.def(
        "dual_exact",
        [](const GammaSignal& f) -> py::object {
            auto g = dual_exact_laurent(f);
            if (!g) return py::none();
            return py::cast(*g);
        },
        "Finitely supported dual via the exact Laurent route, or None");

    m.def(
        "onb_check",
        [](const GammaSignal& f, std::int64_t grid, double atol) {
            Tolerances tol;
            tol.atol = atol;
            FrequencyGrid g = f.group()->N().is_finite()
                                  ? FrequencyGrid::finite(f.group())
                                  : FrequencyGrid::lattice(f.group()->dimension(), grid);
            return onb_check(TransferMatrix::from_signal(f, g), &f, tol);
        },
        py::arg("signal"), py::arg("grid") = 1024, py::arg("atol") = 1e-9);

    m.def(
        "inverse_filter", [](const GammaSignal& f) { return inverse_filter(f); },
        "Convolution inverse h with f * h = delta");

    m.def(
        "biorthogonality_check",
        [](const GammaSignal& f, const GammaSignal& g, std::int64_t window, double atol) {
            BiorthResult r = biorthogonality_check(f, g, window, atol);
            py::dict out;
            out["pass"] = r.pass;
            out["worst_error"] = r.worst_error;
            out["worst_gamma"] = std::make_pair(r.worst_gamma.n, r.worst_gamma.h);
            return out;
        },
        py::arg("f"), py::arg("g"), py::arg("window") = 8, py::arg("atol") = 1e-10);

    py::class_<Generator>(m, "Generator")
        .def("__call__", [](const Generator& g, double t) { return g.eval1(t); })
        .def_property_readonly("support", [](const Generator& g) {
            return std::make_pair(g.support().lo, g.support().hi);
        });

    m.def(
        "piecewise_generator",
        [](const std::vector<std::tuple<py::object, py::object, std::vector<py::object>>>&
               pieces) {
            std::vector<PiecewisePolynomial::Piece> ps;
            for (const auto& [lo, hi, coeffs] : pieces) {
                PiecewisePolynomial::Piece piece;
                piece.lo = rational_from_py(lo);
                piece.hi = rational_from_py(hi);
                for (const auto& c : coeffs) piece.coeffs.push_back(rational_from_py(c));
                ps.push_back(std::move(piece));
            }
            return Generator::piecewise(PiecewisePolynomial(std::move(ps)));
        },
        py::arg("pieces"), "pieces: [(lo, hi, [c0, c1, ...])] with rational entries");

    m.def("demo_spline_generator", &demo_spline_generator,
          "The built-in degree-6 compactly supported spline on [0, 2]");

    m.def(
        "pointwise_sample_signal",
        [](const Generator& phi, const py::object& p) {
            return pointwise_sample_signal(CrystalGroupSpec::dihedral_infinite(), phi,
                                           {rational_from_py(p)});
        },
        py::arg("phi"), py::arg("p"),
        "f_p(eta) = conj([U(eta) phi](p)) over the infinite dihedral group");

    m.def(
        "average_sample_signal",
        [](const Generator& phi, const Generator& psi, int order, bool exact) {
            return average_sample_signal(CrystalGroupSpec::dihedral_infinite(), phi, psi,
                                         {order, exact});
        },
        py::arg("phi"), py::arg("psi"), py::arg("order") = 16, py::arg("allow_exact") = true,
        "f_psi(eta) = conj(<phi, U(eta^{-1}) psi>) over the infinite dihedral group");

    m.def(
        "rkhs_bound",
        [](const Generator& phi, const std::vector<double>& ts) {
            std::vector<std::vector<double>> probes;
            probes.reserve(ts.size());
            for (double t : ts) probes.push_back({t});
            return rkhs_bound(CrystalGroupSpec::dihedral_infinite(), phi, probes);
        },
        py::arg("phi"), py::arg("ts"),
        "max over the probes of the squared orbit sum (dihedral group)");

    m.def(
        "spline_case",
        [](const py::object& p, const py::object& phi) {
            Generator gen = phi.is_none() ? demo_spline_generator() : phi.cast<Generator>();
            SplineSamplingCase sc = dinf_spline_case(rational_from_py(p), gen);
            py::dict out = json_to_py(io::spline_case_to_json(sc));
            if (sc.dual) out["dual_signal"] = sc.dual->generator;
            return out;
        },
        py::arg("p"), py::arg("phi") = py::none(),
        "Full dihedral spline sampling pipeline; returns the report dict");

    m.def(
        "sample_and_reconstruct",
        [](const py::object& p, const py::dict& coefficients, const std::vector<double>& ts) {
            Generator phi = demo_spline_generator();
            SplineSamplingCase sc = dinf_spline_case(rational_from_py(p), phi);
            if (!sc.interpolator) throw std::runtime_error("infeasible sampling case");
            CrystalGroupSpec crystal = sc.interpolator->crystal();
            GammaSignal a = signal_from_dict(crystal.group(), coefficients);
            OrbitFunction f(crystal, phi, a);
            SampleMap samples = take_pointwise_samples(f, {rational_from_py(p)}, 24);
            py::list recon, truth;
            for (double t : ts) {
                recon.append(reconstruct(crystal, samples, *sc.interpolator, {t}));
                truth.append(f.eval1(t));
            }
            py::dict out;
            out["reconstructed"] = recon;
            out["reference"] = truth;
            return out;
        },
        py::arg("p"), py::arg("coefficients"), py::arg("ts"),
        "Sample a coefficient expansion at n +- p and reconstruct on ts");

    auto oracle_mod = m.def_submodule("oracle", "independent brute-force checks");
    oracle_mod.def("brute_convolve", &oracle::brute_convolve);
    oracle_mod.def("synthesis_spectrum", &oracle::synthesis_spectrum);
    oracle_mod.def("synthesis_norm", &oracle::synthesis_norm);
    oracle_mod.def("brute_dual", &oracle::brute_dual);
    oracle_mod.def("frame_probe", &oracle::frame_probe, py::arg("f"), py::arg("trials"),
                   py::arg("seed"), py::arg("window") = 8);
    oracle_mod.def("truncated_spectrum", &oracle::truncated_spectrum, py::arg("f"),
                   py::arg("window"));

    m.def("max_abs_diff", &max_abs_diff);

    m.attr("__version__") = "0.1.0";
}
