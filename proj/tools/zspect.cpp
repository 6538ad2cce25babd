// Command-line front end: spectrum classification, gradient validation,
// discriminant evaluation, oracle comparison and path deformation.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include "zs/json_io.hpp"
#include "zs/oracle.hpp"

using namespace zs;

namespace {

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::bad_input: return 1;
        case Errc::layout_failure:
        case Errc::no_valid_r: return 2;
        case Errc::boundary_root:
        case Errc::non_integer_winding:
        case Errc::cluster_ambiguity:
        case Errc::step_underflow:
        case Errc::exhausted: return 3;
        default: return 4;
    }
}

cplx parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw Error(Errc::bad_input, "expected complex value as re,im: " + s);
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

struct ToleranceFlags {
    double winding = -1.0, residual = -1.0, geometric = -1.0, reality = -1.0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--tol-winding", winding, "winding acceptance window");
        cmd->add_option("--tol-residual", residual, "relative root residual tolerance");
        cmd->add_option("--tol-geometric", geometric, "geometric multiplicity tolerance");
        cmd->add_option("--tol-reality", reality, "reality tolerance for eigenvalues");
    }
    Config apply() const {
        Config cfg;
        if (winding > 0.0) cfg.winding_window = winding;
        if (residual > 0.0) cfg.residual_rel = residual;
        if (geometric > 0.0) cfg.geometric_tol = geometric;
        if (reality > 0.0) cfg.reality_tol = reality;
        return cfg;
    }
};

std::string report_csv(const SpectrumReport& report) {
    std::ostringstream os;
    os << "value,m_alg,m_geom,parity,is_real,partner\n";
    for (const auto& r : report.records) {
        os << complex_to_csv(r.value) << "," << r.m_alg << "," << r.m_geom << ","
           << to_string(r.parity) << "," << (r.is_real ? "true" : "false") << ",";
        if (r.partner) os << *r.partner;
        os << "\n";
    }
    return os.str();
}

int cmd_spectrum(const std::string& pot_file, int R, int n_scan, const std::string& out,
                 const std::string& format, const Config& cfg) {
    Potential p = load_potential(pot_file);
    if (R < 0) R = select_R(p, n_scan, cfg);
    SpectrumReport report = full_spectrum(p, R, n_scan, cfg);
    if (format == "csv") save_text(report_csv(report), out);
    else save_json(report_to_json(report), out);
    return 0;
}

int cmd_gradcheck(const std::string& pot_file, cplx lambda, const std::string& which,
                  std::uint64_t seed, const std::string& out, const Config& cfg) {
    Potential p = load_potential(pot_file);
    const int directions = 8;
    const double s = 1e-5;
    const double threshold = 1e-4;
    int band = std::max(1, p.max_freq());

    struct Entry {
        std::string name;
        GradientField grad;
        std::function<cplx(const Potential&)> eval;
    };
    std::vector<Entry> entries;
    if (which == "delta") {
        entries.push_back({"delta", grad_delta(p, lambda, cfg), [lambda, &cfg](const Potential& q) {
                               return evaluate_char(q, lambda, CharKind::delta, cfg).value;
                           }});
    } else if (which == "chiD") {
        entries.push_back({"chi_D", grad_chi_D(p, lambda, cfg), [lambda, &cfg](const Potential& q) {
                               return evaluate_char(q, lambda, CharKind::chi_D, cfg).value;
                           }});
    } else if (which == "floquet") {
        auto grads = grad_floquet_entries(p, lambda, cfg);
        const char* names[4] = {"m1", "m2", "m3", "m4"};
        for (int e = 0; e < 4; ++e) {
            int idx = e;
            entries.push_back({names[e], grads[size_t(e)], [lambda, idx, &cfg](const Potential& q) {
                                   TransferOptions opt;
                                   opt.with_dlambda = false;
                                   Mat2c m = fundamental_matrix(q, lambda, opt, cfg).endpoint;
                                   switch (idx) {
                                       case 0: return m.m1;
                                       case 1: return m.m2;
                                       case 2: return m.m3;
                                       default: return m.m4;
                                   }
                               }});
        }
    } else {
        throw Error(Errc::bad_input, "gradcheck: --which must be delta, chiD or floquet");
    }

    json rows = json::array();
    bool all_ok = true;
    std::mt19937_64 rng(seed);
    for (int d = 0; d < directions; ++d) {
        Potential h = Potential::random_focusing(band, 1.0, rng());
        for (const auto& entry : entries) {
            FDCheck chk = fd_check_pairing(entry.grad, entry.eval, p, h, s);
            all_ok = all_ok && chk.rel_err < threshold;
            rows.push_back(json{{"direction", d},
                                {"functional", entry.name},
                                {"analytic", complex_to_json(chk.analytic)},
                                {"fd", complex_to_json(chk.fd)},
                                {"rel_err", chk.rel_err}});
        }
    }
    save_json(json{{"lambda", complex_to_json(lambda)},
                   {"which", which},
                   {"threshold", threshold},
                   {"pass", all_ok},
                   {"rows", rows}},
              out);
    return all_ok ? 0 : 3;
}

int cmd_discriminant(const std::string& pot_file, int R, const std::string& which,
                     const std::string& out, const Config& cfg) {
    Potential p = load_potential(pot_file);
    SpectrumKind kind =
        which == "dirichlet" ? SpectrumKind::dirichlet : SpectrumKind::periodic;
    if (R < 0) R = select_R(p, 6, cfg);
    CharPolynomial q = build_qpoly(p, R, kind, cfg);
    cplx disc = sylvester_discriminant(q);
    double indicator = multiple_root_indicator(p, R, kind, cfg);
    json j = qpoly_to_json(q, R, kind, disc, indicator);
    if (kind == SpectrumKind::dirichlet) {
        DirichletSignals sig = dirichlet_signals(p, R, cfg);
        j["mu_indicator"] = sig.mu_indicator;
        j["qdr_indicator"] = sig.qdr_indicator;
        j["min_mu_imag"] = sig.min_mu_imag;
    }
    save_json(j, out);
    return 0;
}

int cmd_oracle_compare(const std::string& pot_file, int n_scan, const std::string& out,
                       const Config& cfg) {
    Potential p = load_potential(pot_file);
    if (!p.is_constant())
        throw Error(Errc::bad_input, "oracle-compare: potential must use the constant representation");
    cplx a = p.constant_a();
    int k = p.constant_k();

    int R = select_R(p, n_scan, cfg);
    SpectrumReport report = full_spectrum(p, R, n_scan, cfg);
    OracleSpectrum oracle = shifted_spectrum(a, k, n_scan + std::abs(k) + 2);

    const double tol = 1e-6;
    json rows = json::array();
    bool all_ok = true;
    for (const auto& rec : report.records) {
        json row;
        row["numeric"] = complex_to_json(rec.value);
        row["parity"] = to_string(rec.parity);
        row["m_alg"] = rec.m_alg;
        row["m_geom"] = rec.m_geom;
        bool matched = false;
        if (rec.parity == Parity::dirichlet) {
            for (const auto& od : oracle.dirichlet) {
                if (std::abs(od.value - rec.value) < tol) {
                    matched = true;
                    row["oracle"] = complex_to_json(od.value);
                    row["oracle_n"] = od.n;
                    row["value_diff"] = std::abs(od.value - rec.value);
                    row["m_alg_match"] = od.m_alg == rec.m_alg;
                    all_ok = all_ok && od.m_alg == rec.m_alg;
                    break;
                }
            }
        } else {
            for (const auto& op : oracle.periodic) {
                if (std::abs(op.value - rec.value) < tol && op.parity == rec.parity) {
                    matched = true;
                    row["oracle"] = complex_to_json(op.value);
                    row["oracle_n"] = op.n;
                    row["value_diff"] = std::abs(op.value - rec.value);
                    row["m_alg_match"] = op.m_alg == rec.m_alg;
                    row["m_geom_match"] = op.m_geom == rec.m_geom;
                    all_ok = all_ok && op.m_alg == rec.m_alg && op.m_geom == rec.m_geom;
                    break;
                }
            }
        }
        row["matched"] = matched;
        all_ok = all_ok && matched;
        rows.push_back(row);
    }
    save_json(json{{"a", complex_to_json(a)},
                   {"k", k},
                   {"R", R},
                   {"n_scan", n_scan},
                   {"pass", all_ok},
                   {"records", rows}},
              out);
    return all_ok ? 0 : 3;
}

int cmd_deform(const std::string& pot_file, const std::string& target_file, int samples,
               double magnitude, std::uint64_t seed, int max_tries, const std::string& out,
               const std::string& out_path, const Config& cfg) {
    Potential zeta = load_potential(pot_file);
    Potential xi = load_potential(target_file);
    auto path = straight_path(zeta, xi, samples, cfg);
    PerturbResult res = perturb_path(path, magnitude, seed, max_tries, cfg);
    save_text(path_to_csv(res.path), out);
    if (!out_path.empty()) {
        json j = path_to_json(res.path);
        j["tries"] = res.tries;
        j["reached_simple"] = res.reached_simple;
        j["improved"] = res.improved;
        j["exhausted"] = res.exhausted;
        save_json(j, out_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic and Dirichlet spectra of Zakharov-Shabat operators on the circle"};
    app.require_subcommand(1);

    std::string pot_file, target_file, out = "out.json", out_path, format = "json";
    std::string which = "periodic", lambda_str = "0,0";
    int R = -1, n_scan = 6, samples = 33, max_tries = 64;
    double magnitude = 0.05;
    std::uint64_t seed = 1;
    ToleranceFlags tols;

    auto* spectrum = app.add_subcommand("spectrum", "classify the spectrum of a potential");
    spectrum->add_option("--potential", pot_file, "potential JSON file")->required();
    spectrum->add_option("--R", R, "counting-ball index (default: auto via select_R)");
    spectrum->add_option("--n-scan", n_scan, "largest |n| scanned");
    spectrum->add_option("--out", out, "output file");
    spectrum->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    tols.add_to(spectrum);

    auto* gradcheck = app.add_subcommand("gradcheck", "finite-difference gradient validation");
    gradcheck->add_option("--potential", pot_file, "potential JSON file")->required();
    gradcheck->add_option("--lambda", lambda_str, "evaluation point re,im")->required();
    gradcheck->add_option("--which", which, "delta|chiD|floquet")->required();
    gradcheck->add_option("--seed", seed, "direction seed");
    gradcheck->add_option("--out", out, "output file");
    tols.add_to(gradcheck);

    auto* discr = app.add_subcommand("discriminant", "Q-polynomial and Sylvester discriminant");
    discr->add_option("--potential", pot_file, "potential JSON file")->required();
    discr->add_option("--R", R, "counting-ball index (default: auto)");
    discr->add_option("--which", which, "periodic|dirichlet")
        ->check(CLI::IsMember({"periodic", "dirichlet"}));
    discr->add_option("--out", out, "output file");
    tols.add_to(discr);

    auto* oc = app.add_subcommand("oracle-compare", "diff numeric spectrum against the closed form");
    oc->add_option("--potential", pot_file, "constant-potential JSON file")->required();
    oc->add_option("--n-scan", n_scan, "largest |n| scanned");
    oc->add_option("--out", out, "output file");
    tols.add_to(oc);

    auto* deform = app.add_subcommand("deform", "deform a straight potential path toward simplicity");
    deform->add_option("--potential", pot_file, "start potential JSON file")->required();
    deform->add_option("--target", target_file, "end potential JSON file")->required();
    deform->add_option("--samples", samples, "path samples");
    deform->add_option("--magnitude", magnitude, "perturbation L2 size");
    deform->add_option("--seed", seed, "perturbation seed");
    deform->add_option("--max-tries", max_tries, "resampling budget");
    deform->add_option("--out", out, "per-sample CSV output");
    deform->add_option("--out-path", out_path, "deformed-path JSON output");
    tols.add_to(deform);

    CLI11_PARSE(app, argc, argv);

    try {
        Config cfg = tols.apply();
        if (spectrum->parsed()) return cmd_spectrum(pot_file, R, n_scan, out, format, cfg);
        if (gradcheck->parsed())
            return cmd_gradcheck(pot_file, parse_complex(lambda_str), which, seed, out, cfg);
        if (discr->parsed()) return cmd_discriminant(pot_file, R, which, out, cfg);
        if (oc->parsed()) return cmd_oracle_compare(pot_file, n_scan, out, cfg);
        if (deform->parsed())
            return cmd_deform(pot_file, target_file, samples, magnitude, seed, max_tries, out,
                              out_path, cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
