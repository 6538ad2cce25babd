#include "zs/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace zs {

namespace {

// |a| = n_a pi detection; the resonance collapses the n = +-n_a pair onto 0.
int resonance_index(double mod_a) {
    double q = mod_a / kPi;
    int n = int(std::lround(q));
    if (n >= 1 && std::abs(q - double(n)) < 1e-12 * (1.0 + q)) return n;
    return 0;
}

// sgn(n) sqrt(n^2 pi^2 - |a|^2), imaginary branch below the resonance
cplx kappa_branch_value(int n, double mod_a) {
    double t = double(n) * kPi;
    double d = t * t - mod_a * mod_a;
    double s = n > 0 ? 1.0 : -1.0;
    if (d >= 0.0) return cplx(s * std::sqrt(d), 0.0);
    return cplx(0.0, s * std::sqrt(-d));
}

Parity parity_of(int n) { return n % 2 == 0 ? Parity::proper : Parity::anti; }

} // namespace

std::vector<OraclePeriodic> constant_periodic(cplx a, int n_range) {
    if (n_range < 0) throw Error(Errc::bad_input, "constant_periodic: n_range must be >= 0");
    const double mod_a = std::abs(a);
    std::vector<OraclePeriodic> out;

    if (mod_a == 0.0) {
        for (int n = -n_range; n <= n_range; ++n)
            out.push_back({cplx(n * kPi, 0.0), 2, 2, n, parity_of(n)});
        return out;
    }

    out.push_back({cplx(0.0, mod_a), 1, 1, 0, Parity::proper});
    out.push_back({cplx(0.0, -mod_a), 1, 1, 0, Parity::proper});

    const int n_res = resonance_index(mod_a);
    for (int n = 1; n <= n_range; ++n) {
        if (n == n_res) {
            // kappa has a double zero in lambda at 0 for each of +-n_a
            out.push_back({cplx(0.0, 0.0), 4, 2, n, parity_of(n)});
            continue;
        }
        out.push_back({kappa_branch_value(n, mod_a), 2, 2, n, parity_of(n)});
        out.push_back({kappa_branch_value(-n, mod_a), 2, 2, -n, parity_of(n)});
    }
    std::sort(out.begin(), out.end(), [](const OraclePeriodic& x, const OraclePeriodic& y) {
        if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });
    return out;
}

std::vector<OracleDirichlet> constant_dirichlet(cplx a, int n_range) {
    if (n_range < 0) throw Error(Errc::bad_input, "constant_dirichlet: n_range must be >= 0");
    const double mod_a = std::abs(a);
    const int n_res = resonance_index(mod_a);
    std::vector<OracleDirichlet> out;

    auto add = [&out](cplx value, int mult, int n) {
        for (auto& rec : out) {
            if (std::abs(rec.value - value) < 1e-12 * (1.0 + std::abs(value))) {
                rec.m_alg += mult;
                if (rec.n == 0) rec.n = n;
                return;
            }
        }
        out.push_back({value, mult, n});
    };

    for (int n = 1; n <= n_range; ++n) {
        if (n == n_res) {
            add(cplx(0.0, 0.0), 2, n);
            continue;
        }
        if (mod_a > 0.0) {
            add(kappa_branch_value(n, mod_a), 1, n);
            add(kappa_branch_value(-n, mod_a), 1, -n);
        } else {
            add(cplx(n * kPi, 0.0), 1, n);
            add(cplx(-n * kPi, 0.0), 1, -n);
        }
    }
    add(cplx(0.0, a.imag()), 1, 0);

    std::sort(out.begin(), out.end(), [](const OracleDirichlet& x, const OracleDirichlet& y) {
        if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });
    return out;
}

OracleSpectrum shifted_spectrum(cplx a, int k, int n_range) {
    OracleSpectrum spec;
    spec.a = a;
    spec.k = k;
    spec.periodic = constant_periodic(a, n_range);
    spec.dirichlet = constant_dirichlet(a, n_range);
    const cplx shift(-k * kPi, 0.0);
    const bool flip = (k % 2 != 0);
    for (auto& rec : spec.periodic) {
        rec.value += shift;
        if (flip && rec.parity != Parity::dirichlet)
            rec.parity = rec.parity == Parity::proper ? Parity::anti : Parity::proper;
    }
    for (auto& rec : spec.dirichlet) rec.value += shift;
    return spec;
}

int oracle_select_R(cplx a, int k, int n_scan) {
    const int n_big = n_scan + std::abs(k) + 4;
    OracleSpectrum spec = shifted_spectrum(a, k, n_big);
    const double margin = 1e-9;

    auto count_in = [margin](const auto& records, cplx center, double radius) {
        int total = 0;
        for (const auto& rec : records) {
            double d = std::abs(rec.value - center);
            if (d < radius - margin) total += rec.m_alg;
            else if (d <= radius + margin) return -1; // on the boundary
        }
        return total;
    };

    for (int R = 0; R <= n_scan; ++R) {
        bool ok = true;
        for (int n = R + 1; n <= n_scan && ok; ++n) {
            for (int sign : {+1, -1}) {
                cplx c(sign * n * kPi, 0.0);
                ok = ok && count_in(spec.periodic, c, kPi / 4.0) == 2 &&
                     count_in(spec.dirichlet, c, kPi / 4.0) == 1;
            }
        }
        if (!ok) continue;
        double rad = R * kPi + kPi / 4.0;
        if (count_in(spec.periodic, cplx(0.0), rad) == 4 * R + 2 &&
            count_in(spec.dirichlet, cplx(0.0), rad) == 2 * R + 1)
            return R;
    }
    return -1;
}

} // namespace zs
