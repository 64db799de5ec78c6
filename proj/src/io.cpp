#include "rieszrep/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rieszrep::io {

namespace {

json rational_to_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("expected a rational object {num, den}: " + j.dump());
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

} // namespace

json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) {
        const GaussianRational& q = s.exact();
        json out{{"re", rational_to_json(q.re)}};
        if (!q.im.is_zero()) out["im"] = rational_to_json(q.im);
        return out;
    }
    json out{{"re", s.value().real()}};
    if (s.value().imag() != 0.0) out["im"] = s.value().imag();
    return out;
}

Scalar scalar_from_json(const json& j) {
    if (j.is_number()) return Scalar(j.get<double>());
    const json& re = j.at("re");
    bool exact_re = re.is_object() || re.is_number_integer();
    if (!j.contains("im")) {
        if (exact_re) return Scalar(rational_from_json(re));
        return Scalar(re.get<double>());
    }
    const json& im = j.at("im");
    bool exact_im = im.is_object() || im.is_number_integer();
    if (exact_re && exact_im)
        return Scalar(GaussianRational{rational_from_json(re), rational_from_json(im)});
    double re_d = re.is_object() ? rational_from_json(re).to_double() : re.get<double>();
    double im_d = im.is_object() ? rational_from_json(im).to_double() : im.get<double>();
    return Scalar(cplx{re_d, im_d});
}

json group_to_json(const Group& g) {
    json n;
    if (g.N().is_finite()) {
        n["kind"] = "finite";
        n["factors"] = g.N().factors;
    } else {
        n["kind"] = "lattice";
        n["rank"] = g.N().rank;
    }

    std::vector<std::vector<int>> table(static_cast<std::size_t>(g.kappa()),
                                        std::vector<int>(static_cast<std::size_t>(g.kappa())));
    for (int a = 0; a < g.kappa(); ++a)
        for (int b = 0; b < g.kappa(); ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g.H().mul(a, b);

    json mats = json::array();
    for (int h = 0; h < g.kappa(); ++h) {
        const IntMatrix& m = g.sigma().of(h);
        json rows = json::array();
        for (int r = 0; r < m.dim; ++r) {
            json row = json::array();
            for (int c = 0; c < m.dim; ++c) row.push_back(m.at(r, c));
            rows.push_back(row);
        }
        mats.push_back(rows);
    }

    return json{{"N", n}, {"H", {{"table", table}}}, {"sigma", {{"matrices", mats}}}};
}

GroupPtr group_from_json(const json& j) {
    const json& n = j.at("N");
    std::string kind = n.at("kind").get<std::string>();
    if (kind != "finite" && kind != "lattice")
        throw std::invalid_argument("group field N.kind must be 'finite' or 'lattice', got '" +
                                    kind + "'");
    AbelianGroupSpec spec = kind == "finite"
                                ? AbelianGroupSpec::finite(n.at("factors").get<std::vector<std::int64_t>>())
                                : AbelianGroupSpec::lattice(n.at("rank").get<int>());

    auto table = j.at("H").at("table").get<std::vector<std::vector<int>>>();
    FiniteGroupTable h(table);

    ActionSpec sigma;
    for (const auto& mat : j.at("sigma").at("matrices")) {
        IntMatrix m;
        m.dim = spec.dimension();
        for (const auto& row : mat)
            for (const auto& v : row) m.data.push_back(v.get<std::int64_t>());
        if (m.data.size() != static_cast<std::size_t>(m.dim) * static_cast<std::size_t>(m.dim))
            throw std::invalid_argument("sigma matrix has wrong shape");
        sigma.matrices.push_back(std::move(m));
    }
    return Group::semidirect(std::move(spec), std::move(h), std::move(sigma));
}

json signal_to_json(const GammaSignal& f) {
    json phases = json::object();
    for (int h = 0; h < f.kappa(); ++h) {
        json entries = json::array();
        f.phase(h).for_each([&](const NVec& n, const Scalar& v) {
            json e = scalar_to_json(v);
            e["n"] = n;
            entries.push_back(std::move(e));
        });
        phases[std::to_string(h)] = std::move(entries);
    }
    return json{{"group", group_to_json(*f.group())}, {"phases", phases}};
}

GammaSignal signal_from_json(const json& j) {
    GroupPtr g = group_from_json(j.at("group"));
    GammaSignal f(g);
    for (const auto& [key, entries] : j.at("phases").items()) {
        int h = std::stoi(key);
        if (h < 0 || h >= g->kappa())
            throw std::invalid_argument("phase index " + key + " out of range");
        for (const auto& e : entries) {
            NVec n = e.at("n").get<NVec>();
            f.set({n, h}, scalar_from_json(e));
        }
    }
    return f;
}

json generator_to_json(const Generator& g) {
    if (const PiecewisePolynomial* poly = g.as_piecewise()) {
        json pieces = json::array();
        for (const auto& piece : poly->pieces()) {
            json coeffs = json::array();
            for (const auto& c : piece.coeffs) coeffs.push_back(rational_to_json(c));
            pieces.push_back(json{{"interval", {rational_to_json(piece.lo), rational_to_json(piece.hi)}},
                                  {"coefficients", coeffs}});
        }
        return json{{"kind", "piecewise_poly"}, {"dim", 1}, {"pieces", pieces}};
    }
    const SupportBox& box = g.support();
    return json{{"kind", "tabulated"},
                {"dim", g.dim()},
                {"box", {{"lo", box.lo}, {"hi", box.hi}}},
                {"shape", *g.tabulated_shape()},
                {"values", *g.tabulated_values()}};
}

Generator generator_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "piecewise_poly") {
        std::vector<PiecewisePolynomial::Piece> pieces;
        for (const auto& pj : j.at("pieces")) {
            PiecewisePolynomial::Piece piece;
            piece.lo = rational_from_json(pj.at("interval").at(0));
            piece.hi = rational_from_json(pj.at("interval").at(1));
            for (const auto& c : pj.at("coefficients")) piece.coeffs.push_back(rational_from_json(c));
            pieces.push_back(std::move(piece));
        }
        return Generator::piecewise(PiecewisePolynomial(std::move(pieces)));
    }
    if (kind == "tabulated") {
        SupportBox box{j.at("box").at("lo").get<std::vector<double>>(),
                       j.at("box").at("hi").get<std::vector<double>>()};
        return Generator::tabulated(std::move(box), j.at("shape").get<std::vector<std::size_t>>(),
                                    j.at("values").get<std::vector<double>>());
    }
    throw std::invalid_argument("unknown generator kind: " + kind);
}

json report_to_json(const AnalysisReport& r) {
    json history = json::array();
    for (const auto& level : r.history)
        history.push_back(json{{"points_per_dim", level.points_per_dim},
                               {"A_eig", level.A_eig},
                               {"B_eig", level.B_eig},
                               {"det_inf", level.det_inf}});
    return json{{"A_eig", r.A_eig},
                {"B_eig", r.B_eig},
                {"A_sing", r.A_sing},
                {"B_sing", r.B_sing},
                {"det_inf", r.det_inf},
                {"cstar_norm", r.cstar_norm},
                {"unitarity_deviation", r.unitarity_deviation},
                {"verdicts", {{"bessel", r.bessel}, {"riesz", r.riesz}, {"onb", r.onb}}},
                {"grid",
                 {{"exact", r.grid_exact},
                  {"unresolved", r.unresolved},
                  {"final_points_per_dim", r.final_points_per_dim},
                  {"history", history}}},
                {"estimate_note", r.estimate_note}};
}

json dual_result_to_json(const DualResult& d) {
    return json{{"signal", signal_to_json(d.generator)},
                {"exact", d.exact},
                {"tail_energy", d.tail_energy},
                {"kept_coefficients", d.kept},
                {"worst_abs_det", d.worst_det}};
}

json spline_case_to_json(const SplineSamplingCase& sc) {
    json out{{"p", rational_to_json(sc.p)},
             {"phi_values",
              {{"phi_p", scalar_to_json(Scalar(sc.phi_p))},
               {"phi_p_plus_1", scalar_to_json(Scalar(sc.phi_p1))},
               {"phi_1_minus_p", scalar_to_json(Scalar(sc.phi_1mp))},
               {"phi_2_minus_p", scalar_to_json(Scalar(sc.phi_2mp))}}},
             {"C", scalar_to_json(sc.C)},
             {"D", scalar_to_json(sc.D)},
             {"C_float", sc.C.value().real()},
             {"D_float", sc.D.value().real()},
             {"feasible", sc.feasible},
             {"compact_dual", sc.compact_dual},
             {"det_consistency_error", sc.det_consistency_error},
             {"analysis", report_to_json(sc.analysis)},
             {"closed_form_bounds", {{"A_eig", sc.closed_A_eig}, {"B_eig", sc.closed_B_eig}}},
             {"condition",
              {{"eig_ratio_sqrt", sc.cond_eig_sqrt},
               {"sing_ratio_sqrt", sc.cond_sing_sqrt},
               {"sqrt_B_sing", sc.sqrt_B_sing},
               {"scalings_disagree", sc.condition_scalings_disagree},
               {"note", "the eigenvalue-scaled, singular-scaled and sqrt(B_sing) condition "
                        "numbers do not coincide; all three are reported"}}}};
    if (sc.dual) out["dual"] = dual_result_to_json(*sc.dual);
    if (sc.interpolator) {
        json terms = json::array();
        for (const auto& [gamma, w] : sc.interpolator->terms()) {
            json t = scalar_to_json(w);
            t["n"] = gamma.n;
            t["h"] = gamma.h;
            terms.push_back(std::move(t));
        }
        SupportBox box = sc.interpolator->support();
        out["interpolator"] = json{{"terms", terms}, {"support", {box.lo[0], box.hi[0]}}};
    }
    return out;
}

std::string samples_to_csv(const SampleMap& samples, int dim) {
    std::ostringstream os;
    os.precision(17);
    os << "n,h,value\n";
    for (const auto& [gamma, value] : samples) {
        for (int i = 0; i < dim; ++i) {
            if (i > 0) os << ';';
            os << gamma.n[static_cast<std::size_t>(i)];
        }
        os << ',' << gamma.h << ',' << value.value().real() << '\n';
    }
    return os.str();
}

SampleMap samples_from_csv(const std::string& text, int dim) {
    SampleMap out;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("n,", 0) == 0) continue; // header
        }
        std::istringstream ls(line);
        std::string ncell, hcell, vcell;
        if (!std::getline(ls, ncell, ',') || !std::getline(ls, hcell, ',') ||
            !std::getline(ls, vcell))
            throw std::invalid_argument("malformed CSV sample row: " + line);
        NVec n;
        std::istringstream ns(ncell);
        std::string part;
        while (std::getline(ns, part, ';')) n.push_back(std::stoll(part));
        if (static_cast<int>(n.size()) != dim)
            throw std::invalid_argument("CSV sample row has wrong dimension: " + line);
        out[{n, std::stoi(hcell)}] = Scalar(std::stod(vcell));
    }
    return out;
}

json crystal_to_json(const CrystalGroupSpec& crystal) {
    json mats = json::array();
    for (int h = 0; h < crystal.group()->kappa(); ++h) mats.push_back(crystal.orthogonal(h));
    return json{{"dim", crystal.dim()}, {"M", crystal.lattice_matrix()}, {"H", mats}};
}

CrystalGroupSpec crystal_from_json(const json& j) {
    return CrystalGroupSpec(j.at("dim").get<int>(), j.at("M").get<std::vector<double>>(),
                            j.at("H").get<std::vector<std::vector<double>>>());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

} // namespace rieszrep::io
