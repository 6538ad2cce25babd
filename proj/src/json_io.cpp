#include "zs/json_io.hpp"

#include <fstream>
#include <sstream>

namespace zs {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error(Errc::bad_input, "complex value must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::string complex_to_csv(cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0.0 ? "-" : "+") << std::abs(z.imag()) << "j";
    return os.str();
}

json potential_to_json(const Potential& p) {
    json j;
    if (p.is_constant()) {
        j["representation"] = "constant";
        j["a"] = complex_to_json(p.constant_a());
        j["k"] = p.constant_k();
    } else {
        j["representation"] = "fourier";
        j["K"] = p.max_freq();
        json c1 = json::array(), c2 = json::array();
        for (const auto& c : p.coeffs1()) c1.push_back(complex_to_json(c));
        for (const auto& c : p.coeffs2()) c2.push_back(complex_to_json(c));
        j["coeffs1"] = std::move(c1);
        j["coeffs2"] = std::move(c2);
        j["symmetry"] = p.symmetry() == Symmetry::focusing ? "focusing" : "general";
    }
    return j;
}

Potential potential_from_json(const json& j) {
    const std::string rep = j.at("representation").get<std::string>();
    if (rep == "constant")
        return Potential::constant(complex_from_json(j.at("a")), j.at("k").get<int>());
    if (rep != "fourier") throw Error(Errc::bad_input, "unknown representation: " + rep);
    int K = j.at("K").get<int>();
    std::vector<cplx> c1, c2;
    for (const auto& e : j.at("coeffs1")) c1.push_back(complex_from_json(e));
    for (const auto& e : j.at("coeffs2")) c2.push_back(complex_from_json(e));
    Symmetry sym = j.at("symmetry").get<std::string>() == "focusing" ? Symmetry::focusing
                                                                     : Symmetry::general;
    Potential p = Potential::fourier(K, std::move(c1), std::move(c2), sym);
    if (sym == Symmetry::focusing && p.focusing_defect() > 1e-9)
        throw Error(Errc::bad_input, "potential marked focusing violates phi2 = -conj(phi1)");
    return p;
}

json layout_to_json(const LayoutReport& layout) {
    json checks = json::array();
    for (const auto& c : layout.checks) {
        json jc;
        jc["disk"] = c.is_ball ? json("B_" + std::to_string(c.n))
                               : json("D_" + std::to_string(c.n));
        jc["kind"] = to_string(c.kind);
        jc["expected"] = c.expected;
        jc["got"] = c.got;
        jc["pass"] = c.pass;
        if (!c.error.empty()) jc["error"] = c.error;
        checks.push_back(jc);
    }
    return json{{"R", layout.R},
                {"n_scan", layout.n_scan},
                {"pass", layout.pass},
                {"winding_rejections", layout.stats.rejections},
                {"checks", checks}};
}

json report_to_json(const SpectrumReport& report) {
    json records = json::array();
    for (const auto& r : report.records) {
        json jr;
        jr["value"] = complex_to_json(r.value);
        jr["m_alg"] = r.m_alg;
        jr["m_geom"] = r.m_geom;
        jr["parity"] = to_string(r.parity);
        jr["is_real"] = r.is_real;
        if (r.partner) jr["partner"] = *r.partner;
        else jr["partner"] = nullptr;
        jr["disk"] = r.in_ball ? json("ball") : json(r.disk_n);
        jr["residual"] = r.residual;
        records.push_back(jr);
    }
    json verdicts{{"standard", report.verdicts.standard},
                  {"r_simple", report.verdicts.r_simple},
                  {"dirichlet_simple", report.verdicts.dirichlet_simple}};
    return json{{"R", report.R},
                {"n_scan", report.n_scan},
                {"records", records},
                {"verdicts", verdicts},
                {"standard_reasons", report.standard_reasons},
                {"layout", layout_to_json(report.layout)}};
}

SpectrumReport report_from_json(const json& j) {
    SpectrumReport report;
    report.R = j.at("R").get<int>();
    report.n_scan = j.at("n_scan").get<int>();
    for (const auto& jr : j.at("records")) {
        EigenvalueRecord r;
        r.value = complex_from_json(jr.at("value"));
        r.m_alg = jr.at("m_alg").get<int>();
        r.m_geom = jr.at("m_geom").get<int>();
        std::string parity = jr.at("parity").get<std::string>();
        r.parity = parity == "proper" ? Parity::proper
                   : parity == "anti" ? Parity::anti
                                      : Parity::dirichlet;
        r.is_real = jr.at("is_real").get<bool>();
        if (!jr.at("partner").is_null()) r.partner = jr.at("partner").get<int>();
        if (jr.at("disk").is_string()) {
            r.in_ball = true;
        } else {
            r.disk_n = jr.at("disk").get<int>();
        }
        r.residual = jr.value("residual", 0.0);
        report.records.push_back(r);
    }
    const auto& v = j.at("verdicts");
    report.verdicts.standard = v.at("standard").get<bool>();
    report.verdicts.r_simple = v.at("r_simple").get<bool>();
    report.verdicts.dirichlet_simple = v.at("dirichlet_simple").get<bool>();
    for (const auto& s : j.at("standard_reasons")) report.standard_reasons.push_back(s);
    const auto& jl = j.at("layout");
    report.layout.R = jl.at("R").get<int>();
    report.layout.n_scan = jl.at("n_scan").get<int>();
    report.layout.pass = jl.at("pass").get<bool>();
    report.layout.stats.rejections = jl.at("winding_rejections").get<int>();
    return report;
}

json gradient_to_json(const GradientField& g) {
    json c1 = json::array(), c2 = json::array();
    for (const auto& z : g.comp1) c1.push_back(complex_to_json(z));
    for (const auto& z : g.comp2) c2.push_back(complex_to_json(z));
    return json{{"grid_n", g.grid_n}, {"comp1", std::move(c1)}, {"comp2", std::move(c2)}};
}

GradientField gradient_from_json(const json& j) {
    GradientField g;
    g.grid_n = j.at("grid_n").get<int>();
    for (const auto& e : j.at("comp1")) g.comp1.push_back(complex_from_json(e));
    for (const auto& e : j.at("comp2")) g.comp2.push_back(complex_from_json(e));
    if (g.comp1.size() != size_t(g.grid_n) + 1 || g.comp2.size() != size_t(g.grid_n) + 1)
        throw Error(Errc::bad_input, "gradient field arrays must have grid_n + 1 entries");
    return g;
}

json qpoly_to_json(const CharPolynomial& q, int R, SpectrumKind which, cplx discriminant,
                   double indicator) {
    json coeffs = json::array();
    for (const auto& c : q.coeffs) coeffs.push_back(complex_to_json(c));
    return json{{"R", R},
                {"which", to_string(which)},
                {"degree", q.degree},
                {"coeffs", std::move(coeffs)},
                {"discriminant", complex_to_json(discriminant)},
                {"indicator", indicator}};
}

json path_to_json(const std::vector<PathSample>& path) {
    json samples = json::array();
    for (const auto& s : path) {
        json js;
        js["t"] = s.t;
        js["potential"] = potential_to_json(s.potential);
        js["M_D"] = s.M_D;
        js["M_p"] = s.M_p;
        js["R"] = s.R;
        js["standard"] = s.standard;
        if (!s.valid) js["error"] = s.error;
        samples.push_back(js);
    }
    return json{{"samples", samples}};
}

std::string path_to_csv(const std::vector<PathSample>& path) {
    std::ostringstream os;
    os.precision(17);
    os << "t,M_D,M_p,standard,R\n";
    for (const auto& s : path)
        os << s.t << "," << s.M_D << "," << s.M_p << "," << (s.standard ? "true" : "false") << ","
           << s.R << "\n";
    return os.str();
}

Potential load_potential(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error(Errc::bad_input, "cannot open potential file: " + file);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(Errc::bad_input, std::string("malformed JSON in ") + file + ": " + e.what());
    }
    return potential_from_json(j);
}

void save_json(const json& j, const std::string& file) {
    std::ofstream out(file);
    if (!out) throw Error(Errc::bad_input, "cannot write to " + file);
    out << j.dump(2) << "\n";
}

void save_text(const std::string& text, const std::string& file) {
    std::ofstream out(file);
    if (!out) throw Error(Errc::bad_input, "cannot write to " + file);
    out << text;
}

} // namespace zs
