#include "zs/potential.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace zs {

Potential Potential::constant(cplx a, int k) {
    Potential p;
    p.rep_ = Rep::constant;
    p.sym_ = Symmetry::focusing;
    p.a_ = a;
    p.k_ = k;
    return p;
}

Potential Potential::fourier(int K, std::vector<cplx> coeffs1, std::vector<cplx> coeffs2,
                             Symmetry sym) {
    if (K < 0 || coeffs1.size() != size_t(2 * K + 1) || coeffs2.size() != size_t(2 * K + 1))
        throw Error(Errc::bad_input, "fourier potential: coefficient arrays must have length 2K+1");
    Potential p;
    p.rep_ = Rep::fourier;
    p.sym_ = sym;
    p.K_ = K;
    p.c1_ = std::move(coeffs1);
    p.c2_ = std::move(coeffs2);
    return p;
}

Potential Potential::make_focusing(const std::map<int, cplx>& coeffs1) {
    int K = 0;
    for (const auto& [n, c] : coeffs1) K = std::max(K, std::abs(n));
    std::vector<cplx> c1(2 * K + 1, cplx(0.0)), c2(2 * K + 1, cplx(0.0));
    for (const auto& [n, c] : coeffs1) c1[n + K] = c;
    for (int n = -K; n <= K; ++n) c2[n + K] = -std::conj(c1[-n + K]);
    return fourier(K, std::move(c1), std::move(c2), Symmetry::focusing);
}

Potential Potential::random_focusing(int K, double l2_norm, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::map<int, cplx> c1;
    double sum2 = 0.0;
    for (int n = -K; n <= K; ++n) {
        cplx c(gauss(rng), gauss(rng));
        c1[n] = c;
        sum2 += std::norm(c);
    }
    // ||phi||^2 = 2 sum |c1[n]|^2 for focusing potentials
    double scale = l2_norm / std::sqrt(2.0 * sum2);
    for (auto& [n, c] : c1) c *= scale;
    return make_focusing(c1);
}

cplx Potential::coeff1(int n) const {
    if (rep_ == Rep::constant) return n == k_ ? a_ : cplx(0.0);
    return std::abs(n) <= K_ ? c1_[n + K_] : cplx(0.0);
}

cplx Potential::coeff2(int n) const {
    if (rep_ == Rep::constant) return n == -k_ ? -std::conj(a_) : cplx(0.0);
    return std::abs(n) <= K_ ? c2_[n + K_] : cplx(0.0);
}

std::pair<cplx, cplx> Potential::evaluate(double x) const {
    if (rep_ == Rep::constant) {
        cplx phase = std::exp(cplx(0.0, 2.0 * kPi * k_ * x));
        return {a_ * phase, -std::conj(a_) / phase};
    }
    cplx p1(0.0), p2(0.0);
    for (int n = -K_; n <= K_; ++n) {
        cplx e = std::exp(cplx(0.0, 2.0 * kPi * n * x));
        p1 += c1_[n + K_] * e;
        p2 += c2_[n + K_] * e;
    }
    return {p1, p2};
}

double Potential::sobolev_norm(int N) const {
    if (N < 0) throw Error(Errc::bad_input, "sobolev_norm: N must be >= 0");
    double sum = 0.0;
    if (rep_ == Rep::constant) {
        double w = std::pow(1.0 + std::pow(2.0 * kPi * k_, 2), N);
        sum = 2.0 * w * std::norm(a_);
    } else {
        for (int n = -K_; n <= K_; ++n) {
            double w = std::pow(1.0 + std::pow(2.0 * kPi * n, 2), N);
            sum += w * std::norm(c1_[n + K_]);
            // phi2 coefficient at index n pairs with frequency n as well
            sum += w * std::norm(c2_[n + K_]);
        }
    }
    return std::sqrt(sum);
}

Potential Potential::gauge_shift(int k) const {
    if (rep_ == Rep::constant) return constant(a_, k_ + k);
    int K = K_ + std::abs(k);
    std::vector<cplx> c1(2 * K + 1, cplx(0.0)), c2(2 * K + 1, cplx(0.0));
    for (int n = -K_; n <= K_; ++n) {
        c1[n + k + K] = c1_[n + K_];
        c2[n - k + K] = c2_[n + K_];
    }
    return fourier(K, std::move(c1), std::move(c2), sym_);
}

std::pair<double, double> Potential::trace_invariants(int quad_grid) const {
    if (sym_ != Symmetry::focusing)
        throw Error(Errc::bad_input, "trace_invariants: potential must be focusing");
    double j1 = 0.0, deriv2 = 0.0;
    if (rep_ == Rep::constant) {
        j1 = std::norm(a_);
        deriv2 = std::pow(2.0 * kPi * k_, 2) * std::norm(a_);
    } else {
        for (int n = -K_; n <= K_; ++n) {
            j1 += std::norm(c1_[n + K_]);
            deriv2 += std::pow(2.0 * kPi * n, 2) * std::norm(c1_[n + K_]);
        }
    }
    // quartic term by the rectangle rule; exact once the grid resolves 4K
    double quart = 0.0;
    for (int j = 0; j < quad_grid; ++j) {
        auto [p1, p2] = evaluate(double(j) / quad_grid);
        (void)p2;
        double m2 = std::norm(p1);
        quart += m2 * m2;
    }
    return {j1, deriv2 - quart / quad_grid};
}

Potential Potential::to_fourier(int K) const {
    if (rep_ == Rep::fourier) {
        if (K < 0 || K == K_) return *this;
        if (K < K_) {
            for (int n = -K_; n <= K_; ++n)
                if (std::abs(n) > K && (c1_[n + K_] != cplx(0.0) || c2_[n + K_] != cplx(0.0)))
                    throw Error(Errc::bad_input, "to_fourier: truncation would drop data");
        }
        std::vector<cplx> c1(2 * K + 1, cplx(0.0)), c2(2 * K + 1, cplx(0.0));
        for (int n = -std::min(K, K_); n <= std::min(K, K_); ++n) {
            c1[n + K] = c1_[n + K_];
            c2[n + K] = c2_[n + K_];
        }
        return fourier(K, std::move(c1), std::move(c2), sym_);
    }
    int Kc = std::max(std::abs(k_), K < 0 ? 0 : K);
    std::vector<cplx> c1(2 * Kc + 1, cplx(0.0)), c2(2 * Kc + 1, cplx(0.0));
    c1[k_ + Kc] = a_;
    c2[-k_ + Kc] = -std::conj(a_);
    return fourier(Kc, std::move(c1), std::move(c2), Symmetry::focusing);
}

Potential Potential::lin_comb(cplx alpha, const Potential& p, cplx beta, const Potential& q) {
    int K = std::max(p.max_freq(), q.max_freq());
    Potential pf = p.to_fourier(K), qf = q.to_fourier(K);
    std::vector<cplx> c1(2 * K + 1), c2(2 * K + 1);
    for (int i = 0; i <= 2 * K; ++i) {
        c1[i] = alpha * pf.c1_[i] + beta * qf.c1_[i];
        c2[i] = alpha * pf.c2_[i] + beta * qf.c2_[i];
    }
    Symmetry sym = (p.sym_ == Symmetry::focusing && q.sym_ == Symmetry::focusing &&
                    alpha.imag() == 0.0 && beta.imag() == 0.0)
                       ? Symmetry::focusing
                       : Symmetry::general;
    return fourier(K, std::move(c1), std::move(c2), sym);
}

double Potential::sup_norm_bound() const {
    if (rep_ == Rep::constant) return std::abs(a_);
    double s1 = 0.0, s2 = 0.0;
    for (int n = -K_; n <= K_; ++n) {
        s1 += std::abs(c1_[n + K_]);
        s2 += std::abs(c2_[n + K_]);
    }
    return std::max(s1, s2);
}

double Potential::focusing_defect(int grid) const {
    double worst = 0.0;
    for (int j = 0; j < grid; ++j) {
        auto [p1, p2] = evaluate(double(j) / grid);
        worst = std::max(worst, std::abs(p2 + std::conj(p1)));
    }
    return worst;
}

bool Potential::operator==(const Potential& o) const {
    if (rep_ != o.rep_ || sym_ != o.sym_) return false;
    if (rep_ == Rep::constant) return a_ == o.a_ && k_ == o.k_;
    return K_ == o.K_ && c1_ == o.c1_ && c2_ == o.c2_;
}

} // namespace zs
