#include "zs/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zs/transfer.hpp"

namespace zs {

const char* to_string(Parity p) {
    switch (p) {
        case Parity::proper: return "proper";
        case Parity::anti: return "anti";
        case Parity::dirichlet: return "dirichlet";
    }
    return "?";
}

namespace {

int geometric_from_matrix(const Mat2c& floquet, Parity parity, const Config& cfg) {
    cplx xi = parity == Parity::proper ? 1.0 : -1.0;
    Mat2c dev = floquet - xi * Mat2c::identity();
    return dev.max_abs() < cfg.geometric_tol ? 2 : 1;
}

} // namespace

int geometric_multiplicity(const Potential& p, cplx lambda, Parity parity, const Config& cfg) {
    if (parity == Parity::dirichlet)
        throw Error(Errc::bad_input, "geometric_multiplicity: periodic parities only");
    TransferOptions opt;
    opt.with_dlambda = false;
    TransferResult tr = fundamental_matrix(p, lambda, opt, cfg);
    cplx delta = tr.endpoint.trace();
    cplx xi = parity == Parity::proper ? 2.0 : -2.0;
    if (std::abs(delta - xi) > cfg.eigenvalue_tol) {
        std::ostringstream os;
        os << "lambda = (" << lambda.real() << "," << lambda.imag()
           << ") is not a periodic eigenvalue of the requested parity: |Delta -+ 2| = "
           << std::abs(delta - xi);
        throw Error(Errc::not_an_eigenvalue, os.str());
    }
    return geometric_from_matrix(tr.endpoint, parity, cfg);
}

SpectrumReport full_spectrum(const Potential& p, int R, int n_scan, const Config& cfg) {
    SpectrumReport report;
    report.R = R;
    report.n_scan = n_scan;
    report.focusing = (p.symmetry() == Symmetry::focusing);

    report.layout = localize_spectrum(p, R, n_scan, cfg);
    if (!report.layout.pass) {
        std::ostringstream os;
        os << "counting layout failed at R = " << R << ":";
        for (const auto& c : report.layout.checks)
            if (!c.pass) {
                os << " [" << (c.is_ball ? "B_" : "D_") << (c.is_ball ? c.n : c.n) << " "
                   << to_string(c.kind) << " expected " << c.expected << " got " << c.got;
                if (!c.error.empty()) os << " (" << c.error << ")";
                os << "]";
            }
        throw LayoutError(report.layout, os.str());
    }

    auto scan_disk = [&](const Disk& disk, int n, bool in_ball) {
        ContourCache cache(p, disk, cfg);
        for (CharKind kind : {CharKind::chi_p_plus, CharKind::chi_p_minus, CharKind::chi_D}) {
            auto clusters = detail::roots_in_disk_cached(p, cache, kind, cfg, &report.layout.stats);
            for (const auto& rc : clusters) {
                EigenvalueRecord rec;
                rec.value = rc.value;
                rec.m_alg = rc.multiplicity;
                rec.residual = rc.residual;
                rec.in_ball = in_ball;
                rec.disk_n = n;
                rec.is_real = std::abs(rc.value.imag()) < cfg.reality_tol * (1.0 + std::abs(rc.value));
                if (kind == CharKind::chi_D) {
                    rec.parity = Parity::dirichlet;
                    rec.m_geom = 1;
                } else {
                    rec.parity = kind == CharKind::chi_p_plus ? Parity::proper : Parity::anti;
                    TransferOptions opt;
                    opt.with_dlambda = false;
                    TransferResult tr = fundamental_matrix(p, rec.value, opt, cfg);
                    rec.m_geom = geometric_from_matrix(tr.endpoint, rec.parity, cfg);
                }
                report.records.push_back(rec);
            }
        }
    };

    scan_disk(counting_ball(R), R, true);
    for (int n = R + 1; n <= n_scan; ++n) {
        scan_disk(counting_disk(n), n, false);
        scan_disk(counting_disk(-n), -n, false);
    }

    std::sort(report.records.begin(), report.records.end(),
              [](const EigenvalueRecord& a, const EigenvalueRecord& b) {
                  if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
                  return a.value.imag() < b.value.imag();
              });

    // Conjugate pairing for focusing potentials (periodic records only; the
    // Dirichlet spectrum carries no conjugation symmetry).
    if (report.focusing) {
        for (size_t i = 0; i < report.records.size(); ++i) {
            auto& ri = report.records[i];
            if (ri.parity == Parity::dirichlet || ri.is_real || ri.partner) continue;
            for (size_t j = 0; j < report.records.size(); ++j) {
                if (j == i) continue;
                const auto& rj = report.records[j];
                if (rj.parity != ri.parity || rj.partner) continue;
                if (std::abs(rj.value - std::conj(ri.value)) < cfg.pairing_tol &&
                    rj.m_alg == ri.m_alg && rj.m_geom == ri.m_geom) {
                    ri.partner = int(j);
                    report.records[j].partner = int(i);
                    break;
                }
            }
        }
    }

    StandardVerdict sv = is_standard(report, cfg);
    report.verdicts.standard = sv.standard;
    report.standard_reasons = std::move(sv.reasons);
    report.verdicts.r_simple = is_r_simple(report);
    report.verdicts.dirichlet_simple = dirichlet_simple(report);
    return report;
}

StandardVerdict is_standard(const SpectrumReport& report, const Config& cfg) {
    (void)cfg;
    StandardVerdict v;
    v.standard = true;
    for (const auto& rec : report.records) {
        if (rec.parity == Parity::dirichlet) continue;
        std::ostringstream os;
        if (rec.is_real && rec.m_alg != 2) {
            os << "real periodic eigenvalue (" << rec.value.real() << "," << rec.value.imag()
               << ") has m_alg = " << rec.m_alg << ", expected 2";
            v.reasons.push_back(os.str());
            v.standard = false;
        } else if (!rec.is_real && rec.m_alg != 1) {
            os << "non-real periodic eigenvalue (" << rec.value.real() << "," << rec.value.imag()
               << ") has m_alg = " << rec.m_alg << ", expected 1";
            v.reasons.push_back(os.str());
            v.standard = false;
        }
    }
    return v;
}

bool is_r_simple(const SpectrumReport& report) {
    for (const auto& rec : report.records)
        if (rec.in_ball && rec.parity != Parity::dirichlet && rec.m_alg != 1) return false;
    return true;
}

bool dirichlet_simple(const SpectrumReport& report) {
    for (const auto& rec : report.records)
        if (rec.parity == Parity::dirichlet && rec.m_alg != 1) return false;
    return true;
}

} // namespace zs
