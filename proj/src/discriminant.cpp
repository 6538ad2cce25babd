#include "zs/discriminant.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "zs/rootfinder.hpp"

namespace zs {

const char* to_string(SpectrumKind k) {
    return k == SpectrumKind::periodic ? "periodic" : "dirichlet";
}

cplx CharPolynomial::eval(cplx lambda) const {
    cplx acc(0.0);
    for (int j = degree; j >= 0; --j) acc = acc * lambda + coeffs[size_t(j)];
    return acc;
}

CharPolynomial CharPolynomial::derivative() const {
    CharPolynomial d;
    d.degree = degree > 0 ? degree - 1 : 0;
    d.coeffs.assign(size_t(d.degree) + 1, cplx(0.0));
    for (int j = 1; j <= degree; ++j) d.coeffs[size_t(j - 1)] = double(j) * coeffs[size_t(j)];
    return d;
}

namespace {

// Newton's identities: monic coefficients (ascending) from scaled power sums.
std::vector<cplx> coeffs_from_power_sums(const std::vector<cplx>& sigma, int m) {
    std::vector<cplx> e(size_t(m) + 1, cplx(0.0));
    e[0] = 1.0;
    for (int k = 1; k <= m; ++k) {
        cplx acc(0.0);
        double sign = 1.0;
        for (int i = 1; i <= k; ++i) {
            acc += sign * e[size_t(k - i)] * sigma[size_t(i)];
            sign = -sign;
        }
        e[size_t(k)] = acc / double(k);
    }
    std::vector<cplx> a(size_t(m) + 1);
    a[size_t(m)] = 1.0;
    for (int k = 1; k <= m; ++k) a[size_t(m - k)] = (k % 2 ? -e[size_t(k)] : e[size_t(k)]);
    return a;
}

std::vector<cplx> convolve(const std::vector<cplx>& u, const std::vector<cplx>& v) {
    std::vector<cplx> w(u.size() + v.size() - 1, cplx(0.0));
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
    return w;
}

} // namespace

CharPolynomial build_qpoly(const Potential& p, int R, SpectrumKind which, const Config& cfg) {
    if (R < 0) throw Error(Errc::bad_input, "build_qpoly: R must be >= 0");
    const Disk ball = counting_ball(R);
    const bool dirichlet = which == SpectrumKind::dirichlet;
    const CharKind kind = dirichlet ? CharKind::chi_D : CharKind::chi_p;
    const int expected = dirichlet ? 2 * R + 1 : 4 * R + 2;

    ContourCache cache(p, ball, cfg);
    WindingStats stats;
    std::vector<cplx> sigma =
        zs::detail::power_sums_cached(cache, kind, expected, cfg, &stats, /*scaled=*/true);
    const int m = int(std::lround(sigma[0].real()));
    if (m != expected)
        throw Error(Errc::layout_failure, std::string("build_qpoly: B_R holds ") +
                                              std::to_string(m) + " roots of " + to_string(kind) +
                                              ", expected " + std::to_string(expected));

    std::vector<cplx> scaled = coeffs_from_power_sums(sigma, m);
    // undo the unit-disk scaling: a_j -> a_j * r^{m - j}
    std::vector<cplx> coeffs(size_t(m) + 1);
    double rpow = 1.0;
    for (int j = m; j >= 0; --j) {
        coeffs[size_t(j)] = scaled[size_t(j)] * rpow;
        rpow *= ball.radius;
    }

    if (dirichlet) {
        // Q_{D,R} = prod (mu_k - lambda)(conj mu_k - lambda) = P(lambda) Pbar(lambda)
        std::vector<cplx> conj_coeffs(coeffs.size());
        for (size_t j = 0; j < coeffs.size(); ++j) conj_coeffs[j] = std::conj(coeffs[j]);
        coeffs = convolve(coeffs, conj_coeffs);
    }

    CharPolynomial q;
    q.degree = int(coeffs.size()) - 1;
    q.coeffs = std::move(coeffs);
    return q;
}

cplx sylvester_discriminant(const CharPolynomial& q) {
    const int d = q.degree;
    if (d < 2) throw Error(Errc::bad_input, "sylvester_discriminant: degree must be >= 2");
    if (std::abs(q.coeffs[size_t(d)] - cplx(1.0)) > 1e-12)
        throw Error(Errc::bad_input, "sylvester_discriminant: polynomial must be monic");

    CharPolynomial dq = q.derivative();
    const int n = 2 * d - 1;
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(n, n);
    // d-1 rows of Q coefficients, d rows of Q' coefficients, descending order
    for (int i = 0; i < d - 1; ++i)
        for (int j = 0; j <= d; ++j) S(i, i + j) = q.coeffs[size_t(d - j)];
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= d - 1; ++j) S(d - 1 + i, i + j) = dq.coeffs[size_t(d - 1 - j)];
    return S.fullPivLu().determinant();
}

double scaled_indicator(const CharPolynomial& q) {
    double amax = 0.0;
    for (const auto& c : q.coeffs) amax = std::max(amax, std::abs(c));
    double scale = std::pow(amax, 2 * q.degree - 2);
    return std::abs(sylvester_discriminant(q)) / scale;
}

double multiple_root_indicator(const Potential& p, int R, SpectrumKind which, const Config& cfg) {
    if (which == SpectrumKind::periodic) return scaled_indicator(build_qpoly(p, R, which, cfg));
    return dirichlet_signals(p, R, cfg).mu_indicator;
}

DirichletSignals dirichlet_signals(const Potential& p, int R, const Config& cfg) {
    DirichletSignals out;
    CharPolynomial qdr = build_qpoly(p, R, SpectrumKind::dirichlet, cfg);
    out.qdr_indicator = scaled_indicator(qdr);

    // mu-only polynomial for the genuine collision signal
    const Disk ball = counting_ball(R);
    WindingStats stats;
    ContourCache cache(p, ball, cfg);
    std::vector<cplx> sigma =
        zs::detail::power_sums_cached(cache, CharKind::chi_D, 2 * R + 1, cfg, &stats, true);
    const int m = int(std::lround(sigma[0].real()));
    if (m != 2 * R + 1)
        throw Error(Errc::layout_failure, "dirichlet_signals: unexpected root count in B_R");
    std::vector<cplx> scaled = coeffs_from_power_sums(sigma, m);
    CharPolynomial pmu;
    pmu.degree = m;
    pmu.coeffs.assign(size_t(m) + 1, cplx(0.0));
    double rpow = 1.0;
    for (int j = m; j >= 0; --j) {
        pmu.coeffs[size_t(j)] = scaled[size_t(j)] * rpow;
        rpow *= ball.radius;
    }
    out.mu_indicator = m >= 2 ? scaled_indicator(pmu) : 1.0;

    // roots of pmu give the realness diagnostic
    double min_imag = std::numeric_limits<double>::infinity();
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(m, m);
    if (m >= 2) {
        for (int i = 1; i < m; ++i) C(i, i - 1) = 1.0;
        for (int i = 0; i < m; ++i) C(i, m - 1) = -pmu.coeffs[size_t(i)];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
        for (int i = 0; i < m; ++i) min_imag = std::min(min_imag, std::abs(es.eigenvalues()(i).imag()));
    } else {
        min_imag = std::abs((-pmu.coeffs[0]).imag());
    }
    out.min_mu_imag = min_imag;
    return out;
}

} // namespace zs
