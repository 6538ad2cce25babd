#include "zs/gradients.hpp"

#include <algorithm>
#include <cmath>

#include "zs/rootfinder.hpp"
#include "zs/transfer.hpp"

namespace zs {

GradientField GradientField::zeros(int grid_n) {
    GradientField f;
    f.grid_n = grid_n;
    f.comp1.assign(size_t(grid_n) + 1, cplx(0.0));
    f.comp2.assign(size_t(grid_n) + 1, cplx(0.0));
    return f;
}

GradientField& GradientField::operator+=(const GradientField& o) {
    if (grid_n != o.grid_n) throw Error(Errc::grid_mismatch, "GradientField: grid mismatch");
    for (size_t j = 0; j < comp1.size(); ++j) {
        comp1[j] += o.comp1[j];
        comp2[j] += o.comp2[j];
    }
    return *this;
}

GradientField& GradientField::operator*=(cplx s) {
    for (size_t j = 0; j < comp1.size(); ++j) {
        comp1[j] *= s;
        comp2[j] *= s;
    }
    return *this;
}

GradientField star(const GradientField& f, const GradientField& g) {
    if (f.grid_n != g.grid_n) throw Error(Errc::grid_mismatch, "star: grid mismatch");
    GradientField out = GradientField::zeros(f.grid_n);
    for (size_t j = 0; j < out.comp1.size(); ++j) {
        out.comp1[j] = f.comp2[j] * g.comp2[j];
        out.comp2[j] = f.comp1[j] * g.comp1[j];
    }
    return out;
}

GradientField hat(const GradientField& f) {
    GradientField out = GradientField::zeros(f.grid_n);
    for (size_t j = 0; j < out.comp1.size(); ++j) {
        out.comp1[j] = -std::conj(f.comp2[j]);
        out.comp2[j] = -std::conj(f.comp1[j]);
    }
    return out;
}

GradientField breve(const GradientField& f) {
    GradientField out = GradientField::zeros(f.grid_n);
    for (size_t j = 0; j < out.comp1.size(); ++j) {
        out.comp1[j] = -std::conj(f.comp2[j]);
        out.comp2[j] = std::conj(f.comp1[j]);
    }
    return out;
}

namespace {

template <typename Combine>
cplx trapezoid(const GradientField& f, const GradientField& g, Combine&& combine) {
    if (f.grid_n != g.grid_n) throw Error(Errc::grid_mismatch, "pairing: grid mismatch");
    const size_t n = f.comp1.size();
    cplx acc(0.0);
    for (size_t j = 0; j < n; ++j) {
        double w = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
        acc += w * combine(f, g, j);
    }
    return acc / double(f.grid_n);
}

} // namespace

cplx pair_r(const GradientField& f, const GradientField& h) {
    return trapezoid(f, h, [](const GradientField& a, const GradientField& b, size_t j) {
        return a.comp1[j] * b.comp1[j] + a.comp2[j] * b.comp2[j];
    });
}

cplx inner_l2(const GradientField& f, const GradientField& g) {
    return trapezoid(f, g, [](const GradientField& a, const GradientField& b, size_t j) {
        return a.comp1[j] * std::conj(b.comp1[j]) + a.comp2[j] * std::conj(b.comp2[j]);
    });
}

GradientField sample_potential(const Potential& p, int grid_n) {
    GradientField f = GradientField::zeros(grid_n);
    for (int j = 0; j <= grid_n; ++j) {
        auto [p1, p2] = p.evaluate(double(j) / grid_n);
        f.comp1[size_t(j)] = p1;
        f.comp2[size_t(j)] = p2;
    }
    return f;
}

namespace {

struct PathColumns {
    GradientField M1; // (m1(x), m3(x))
    GradientField M2; // (m2(x), m4(x))
    Mat2c endpoint;
    Mat2c dlambda;
};

PathColumns path_columns(const Potential& p, cplx lambda, const Config& cfg, bool with_dlambda) {
    TransferOptions opt;
    opt.with_path = true;
    opt.with_dlambda = with_dlambda;
    TransferResult tr = fundamental_matrix(p, lambda, opt, cfg);
    PathColumns pc;
    pc.endpoint = tr.endpoint;
    pc.dlambda = tr.dlambda;
    pc.M1 = GradientField::zeros(tr.path_grid);
    pc.M2 = GradientField::zeros(tr.path_grid);
    for (size_t j = 0; j < tr.path.size(); ++j) {
        pc.M1.comp1[j] = tr.path[j].m1;
        pc.M1.comp2[j] = tr.path[j].m3;
        pc.M2.comp1[j] = tr.path[j].m2;
        pc.M2.comp2[j] = tr.path[j].m4;
    }
    return pc;
}

// i dM^ entries from the path columns and the endpoint entries:
//   i dm^1 = -m^1 M1*M2 + m^2 M1*M1       i dm^2 = -m^1 M2*M2 + m^2 M1*M2
//   i dm^3 = -m^3 M1*M2 + m^4 M1*M1       i dm^4 = -m^3 M2*M2 + m^4 M1*M2
std::array<GradientField, 4> entry_gradients(const PathColumns& pc) {
    const cplx mi(0.0, -1.0); // multiply by -i to undo the left factor i
    GradientField s11 = star(pc.M1, pc.M1);
    GradientField s12 = star(pc.M1, pc.M2);
    GradientField s22 = star(pc.M2, pc.M2);
    const Mat2c& e = pc.endpoint;

    auto mk = [&](cplx c_a, const GradientField& A, cplx c_b, const GradientField& B) {
        GradientField g = GradientField::zeros(pc.M1.grid_n);
        for (size_t j = 0; j < g.comp1.size(); ++j) {
            g.comp1[j] = mi * (c_a * A.comp1[j] + c_b * B.comp1[j]);
            g.comp2[j] = mi * (c_a * A.comp2[j] + c_b * B.comp2[j]);
        }
        return g;
    };
    return {mk(-e.m1, s12, e.m2, s11), mk(-e.m1, s22, e.m2, s12),
            mk(-e.m3, s12, e.m4, s11), mk(-e.m3, s22, e.m4, s12)};
}

GradientField chiD_gradient(const PathColumns& pc) {
    GradientField s11 = star(pc.M1, pc.M1);
    GradientField s12 = star(pc.M1, pc.M2);
    GradientField s22 = star(pc.M2, pc.M2);
    const Mat2c& e = pc.endpoint;
    cplx c11 = 0.5 * (e.m2 - e.m4);
    cplx c22 = 0.5 * (e.m3 - e.m1);
    cplx c12 = 0.5 * (e.m2 + e.m3 - e.m1 - e.m4);
    GradientField g = GradientField::zeros(pc.M1.grid_n);
    for (size_t j = 0; j < g.comp1.size(); ++j) {
        g.comp1[j] = c11 * s11.comp1[j] + c22 * s22.comp1[j] + c12 * s12.comp1[j];
        g.comp2[j] = c11 * s11.comp2[j] + c22 * s22.comp2[j] + c12 * s12.comp2[j];
    }
    return g;
}

} // namespace

GradientField grad_delta(const Potential& p, cplx lambda, const Config& cfg) {
    PathColumns pc = path_columns(p, lambda, cfg, false);
    const Mat2c& e = pc.endpoint;
    const double a2 = std::abs(e.m2), a3 = std::abs(e.m3);
    if (a2 < cfg.geometric_tol && a3 < cfg.geometric_tol)
        throw Error(Errc::geometric_multiplicity_two,
                    "grad_delta: Floquet matrix is +-Id, both off-diagonal entries vanish");

    cplx delta = e.trace();
    cplx xi = delta.real() >= 0.0 ? 1.0 : -1.0;

    GradientField f = GradientField::zeros(pc.M1.grid_n);
    cplx factor;
    if (a2 >= a3) {
        cplx zeta = (xi - e.m1) / e.m2;
        for (size_t j = 0; j < f.comp1.size(); ++j) {
            f.comp1[j] = pc.M1.comp1[j] + zeta * pc.M2.comp1[j];
            f.comp2[j] = pc.M1.comp2[j] + zeta * pc.M2.comp2[j];
        }
        factor = cplx(0.0, -1.0) * e.m2; // dDelta = -i m^2 f*f
    } else {
        cplx zeta = (xi - e.m4) / e.m3;
        for (size_t j = 0; j < f.comp1.size(); ++j) {
            f.comp1[j] = zeta * pc.M1.comp1[j] + pc.M2.comp1[j];
            f.comp2[j] = zeta * pc.M1.comp2[j] + pc.M2.comp2[j];
        }
        factor = cplx(0.0, 1.0) * e.m3; // dDelta = i m^3 f*f
    }
    GradientField g = star(f, f);
    g *= factor;
    return g;
}

std::array<GradientField, 4> grad_floquet_entries(const Potential& p, cplx lambda,
                                                  const Config& cfg) {
    return entry_gradients(path_columns(p, lambda, cfg, false));
}

GradientField grad_chi_D(const Potential& p, cplx lambda, const Config& cfg) {
    return chiD_gradient(path_columns(p, lambda, cfg, false));
}

AveragedResult averaged_functional(const Potential& p, const Disk& disk, CharKind kind,
                                   AvgIntegrand integrand, int q, cplx lambda0,
                                   const Config& cfg) {
    if (integrand == AvgIntegrand::power && q < 0)
        throw Error(Errc::bad_input, "averaged_functional: q must be >= 0");

    // Settle the node count with the cheap winding pass first.
    ContourCache cache(p, disk, cfg);
    WindingStats stats;
    const int m = detail::count_zeros_cached(cache, kind, cfg, &stats);
    const int nodes = cache.nodes();
    const auto& lambdas = cache.lambdas();
    const auto values = cache.kind_values(kind);

    AveragedResult out;
    out.roots = m;
    out.gradient = GradientField::zeros(cfg.path_grid);

    // Value from the contour form; gradient with the (dchi)^. term moved onto
    // F by an exact integration by parts around the closed contour:
    //   dF_chi = (1/2 pi i) \oint (chi' dF - F' dchi) / chi dlambda.
    const bool need_dF = integrand == AvgIntegrand::m2hat;
    const bool need_grad =
        need_dF || (integrand == AvgIntegrand::power && q >= 1);

    for (int j = 0; j < nodes; ++j) {
        const cplx lam = lambdas[size_t(j)];
        const cplx w = lam - disk.center; // r e^{i theta}
        const CharValue& cv = values[size_t(j)];
        const cplx quad = w / double(nodes); // dlambda/(2 pi i) per node

        cplx F(1.0), Fdot(0.0);
        if (integrand == AvgIntegrand::power) {
            cplx base = lam - lambda0;
            cplx pw(1.0);
            for (int t = 0; t < q - 1; ++t) pw *= base;
            Fdot = double(q) * pw;
            F = q == 0 ? cplx(1.0) : pw * base;
        }

        if (!need_grad) {
            out.value += F * (cv.dvalue / cv.value) * quad;
            continue;
        }

        PathColumns pc = path_columns(p, lam, cfg, need_dF);
        if (integrand == AvgIntegrand::m2hat) {
            F = pc.endpoint.m2;
            Fdot = pc.dlambda.m2;
        }
        out.value += F * (cv.dvalue / cv.value) * quad;

        auto entries = entry_gradients(pc);
        GradientField dchi;
        switch (kind) {
            case CharKind::delta:
            case CharKind::chi_p_plus:
            case CharKind::chi_p_minus:
                dchi = entries[0];
                dchi += entries[3];
                break;
            case CharKind::chi_p:
                dchi = entries[0];
                dchi += entries[3];
                dchi *= 2.0 * pc.endpoint.trace();
                break;
            case CharKind::chi_D:
                dchi = chiD_gradient(pc);
                break;
        }

        GradientField term = dchi;
        term *= -(Fdot / cv.value) * quad;
        if (need_dF) {
            GradientField dF = entries[1]; // d m^2
            dF *= (cv.dvalue / cv.value) * quad;
            term += dF;
        }
        out.gradient += term;
    }
    return out;
}

Dependence linear_independence(const GradientField& f, const Config& cfg) {
    double norm_f = std::sqrt(std::abs(inner_l2(f, f)));
    if (norm_f == 0.0) throw Error(Errc::zero_input, "linear_independence: zero input");

    GradientField fh = hat(f);
    GradientField gp = GradientField::zeros(f.grid_n);
    GradientField gm = GradientField::zeros(f.grid_n);
    const cplx half(0.5), half_over_i(0.0, -0.5);
    for (size_t j = 0; j < gp.comp1.size(); ++j) {
        gp.comp1[j] = half * (f.comp1[j] + fh.comp1[j]);
        gp.comp2[j] = half * (f.comp2[j] + fh.comp2[j]);
        gm.comp1[j] = half_over_i * (f.comp1[j] - fh.comp1[j]);
        gm.comp2[j] = half_over_i * (f.comp2[j] - fh.comp2[j]);
    }
    double a = inner_l2(gp, gp).real();
    double c = inner_l2(gm, gm).real();
    double b = inner_l2(gp, gm).real();
    double det = a * c - b * b;
    return det <= cfg.gram_tol * a * c ? Dependence::dependent : Dependence::independent;
}

FDCheck fd_check_pairing(const GradientField& grad,
                         const std::function<cplx(const Potential&)>& F, const Potential& p,
                         const Potential& h, double s) {
    FDCheck out;
    out.analytic = pair_r(grad, sample_potential(h, grad.grid_n));
    Potential plus = Potential::lin_comb(1.0, p, s, h);
    Potential minus = Potential::lin_comb(1.0, p, -s, h);
    out.fd = (F(plus) - F(minus)) / (2.0 * s);
    double scale = std::max(std::abs(out.analytic), std::abs(out.fd));
    out.rel_err = scale > 0.0 ? std::abs(out.analytic - out.fd) / scale : 0.0;
    return out;
}

} // namespace zs
