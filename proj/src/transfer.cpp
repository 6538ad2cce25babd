#include "zs/transfer.hpp"

#include <cmath>
#include <sstream>

namespace zs {

namespace {

// Right-hand side A(x, lambda) of M' = A M, read off L(phi) M = lambda M:
//   A = [[-i lambda, i phi1], [-i phi2, i lambda]].
struct Coeff {
    cplx a11, a12, a21, a22;
};

inline Coeff coeff_at(cplx lambda, const std::pair<cplx, cplx>& phi) {
    const cplx I(0.0, 1.0);
    return {-I * lambda, I * phi.first, -I * phi.second, I * lambda};
}

inline Mat2c apply(const Coeff& A, const Mat2c& M) {
    return {A.a11 * M.m1 + A.a12 * M.m3, A.a11 * M.m2 + A.a12 * M.m4,
            A.a21 * M.m1 + A.a22 * M.m3, A.a21 * M.m2 + A.a22 * M.m4};
}

// dA/dlambda = diag(-i, i)
inline Mat2c apply_dA(const Mat2c& M) {
    const cplx I(0.0, 1.0);
    return {-I * M.m1, -I * M.m2, I * M.m3, I * M.m4};
}

struct State {
    Mat2c M;
    Mat2c N; // dM/dlambda
};

inline State rhs(const Coeff& A, const State& s, bool with_dlambda) {
    State d;
    d.M = apply(A, s.M);
    if (with_dlambda) d.N = apply(A, s.N) + apply_dA(s.M);
    return d;
}

inline State axpy(const State& s, double h, const State& k, bool with_dlambda) {
    State r;
    r.M = s.M + cplx(h) * k.M;
    if (with_dlambda) r.N = s.N + cplx(h) * k.N;
    return r;
}

} // namespace

TransferResult fundamental_matrix(const Potential& p, cplx lambda, const TransferOptions& opt,
                                  const Config& cfg) {
    if (!(opt.x_end > 0.0) || opt.x_end > 2.0)
        throw Error(Errc::bad_input, "fundamental_matrix: x_end must lie in (0, 2]");

    const double span = std::abs(lambda) + p.sup_norm_bound();
    long n = std::max<long>(cfg.rk_min_steps,
                            long(cfg.rk_steps_per_unit) * long(std::ceil(span)));
    n = long(std::ceil(n * opt.x_end));
    if (opt.with_path) {
        long g = cfg.path_grid;
        n = ((n + g - 1) / g) * g;
    }
    if (n > cfg.rk_max_steps) {
        std::ostringstream os;
        os << "fundamental_matrix: step budget exceeded at lambda = (" << lambda.real() << ", "
           << lambda.imag() << "), |lambda| + sup|phi| = " << span;
        throw Error(Errc::step_underflow, os.str());
    }

    const double h = opt.x_end / double(n);
    const bool wdl = opt.with_dlambda;

    // phi sampled once at step ends and midpoints
    std::vector<std::pair<cplx, cplx>> phi(size_t(2 * n + 1));
    for (long j = 0; j <= 2 * n; ++j) phi[size_t(j)] = p.evaluate(0.5 * h * double(j));

    TransferResult out;
    out.steps = n;
    long record_every = 0;
    if (opt.with_path) {
        out.path_grid = cfg.path_grid;
        out.path.reserve(size_t(cfg.path_grid) + 1);
        record_every = n / cfg.path_grid;
    }

    State s;
    s.M = Mat2c::identity();
    s.N = Mat2c::zero();

    auto track_det = [&out](const Mat2c& M) {
        double err = std::abs(M.det() - cplx(1.0));
        double scale = std::max(1.0, M.max_abs() * M.max_abs());
        out.max_det_err = std::max(out.max_det_err, err);
        out.max_det_err_scaled = std::max(out.max_det_err_scaled, err / scale);
    };

    for (long j = 0; j < n; ++j) {
        if (record_every && j % record_every == 0) out.path.push_back(s.M);

        const Coeff A0 = coeff_at(lambda, phi[size_t(2 * j)]);
        const Coeff Ah = coeff_at(lambda, phi[size_t(2 * j + 1)]);
        const Coeff A1 = coeff_at(lambda, phi[size_t(2 * j + 2)]);

        State k1 = rhs(A0, s, wdl);
        State k2 = rhs(Ah, axpy(s, 0.5 * h, k1, wdl), wdl);
        State k3 = rhs(Ah, axpy(s, 0.5 * h, k2, wdl), wdl);
        State k4 = rhs(A1, axpy(s, h, k3, wdl), wdl);

        s.M += cplx(h / 6.0) * (k1.M + cplx(2.0) * (k2.M + k3.M) + k4.M);
        if (wdl) s.N += cplx(h / 6.0) * (k1.N + cplx(2.0) * (k2.N + k3.N) + k4.N);

        track_det(s.M);
    }
    if (record_every) out.path.push_back(s.M);

    out.endpoint = s.M;
    out.dlambda = s.N;
    return out;
}

Mat2c constant_closed_form(cplx a, cplx lambda, double x) {
    const cplx I(0.0, 1.0);
    cplx kappa = std::sqrt(lambda * lambda + std::norm(a));
    cplx z = kappa * x;
    cplx c = std::cos(z);
    cplx s; // sin(kappa x) / kappa
    if (std::abs(z) < 1e-4) {
        cplx z2 = z * z;
        s = x * (1.0 - z2 / 6.0 * (1.0 - z2 / 20.0));
    } else {
        s = std::sin(z) / kappa;
    }
    return {c - I * lambda * s, I * a * s, I * std::conj(a) * s, c + I * lambda * s};
}

} // namespace zs
