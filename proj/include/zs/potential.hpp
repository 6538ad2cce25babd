#ifndef ZS_POTENTIAL_HPP
#define ZS_POTENTIAL_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "zs/types.hpp"

namespace zs {

enum class Symmetry { focusing, general };

// A potential phi = (phi1, phi2) on the circle, stored either as a truncated
// Fourier series (coefficients of e^{2 pi i n x}, n = -K..K) or as the
// one-parameter family phi_{a,k}(x) = (a e^{2 pi i k x}, -conj(a) e^{-2 pi i k x}).
// Immutable after construction.
class Potential {
public:
    enum class Rep { fourier, constant };

    Potential() = default;

    static Potential constant(cplx a, int k = 0);
    static Potential fourier(int K, std::vector<cplx> coeffs1, std::vector<cplx> coeffs2,
                             Symmetry sym);
    // Builds the focusing potential with the given phi1 coefficients,
    // phi2 determined by phi2 = -conj(phi1).
    static Potential make_focusing(const std::map<int, cplx>& coeffs1);
    static Potential zero() { return constant(0.0, 0); }

    // Seeded band-limited focusing potential with L2 norm equal to `l2_norm`.
    static Potential random_focusing(int K, double l2_norm, std::uint64_t seed);

    Rep rep() const { return rep_; }
    Symmetry symmetry() const { return sym_; }
    bool is_constant() const { return rep_ == Rep::constant; }
    cplx constant_a() const { return a_; }
    int constant_k() const { return k_; }
    int max_freq() const { return rep_ == Rep::constant ? std::abs(k_) : K_; }
    const std::vector<cplx>& coeffs1() const { return c1_; }
    const std::vector<cplx>& coeffs2() const { return c2_; }
    cplx coeff1(int n) const;
    cplx coeff2(int n) const;

    std::pair<cplx, cplx> evaluate(double x) const;

    // Fourier-weighted H^N norm over both components; N = 0 is the L2 norm.
    double sobolev_norm(int N) const;

    // (phi1 e^{2 pi i k x}, phi2 e^{-2 pi i k x})
    Potential gauge_shift(int k) const;

    // J1 = int |phi1|^2, J2 = int (|dx phi1|^2 - |phi1|^4). Requires focusing.
    std::pair<double, double> trace_invariants(int quad_grid = 2048) const;

    // Conversion and arithmetic (used for perturbations and path sampling).
    Potential to_fourier(int K = -1) const;
    static Potential lin_comb(cplx alpha, const Potential& p, cplx beta, const Potential& q);

    double sup_norm_bound() const;

    // max_x |phi2(x) + conj(phi1(x))| on a sample grid
    double focusing_defect(int grid = 256) const;

    bool operator==(const Potential& o) const;

private:
    Rep rep_ = Rep::constant;
    Symmetry sym_ = Symmetry::focusing;
    cplx a_{0.0};
    int k_ = 0;
    int K_ = 0;
    std::vector<cplx> c1_, c2_;
};

} // namespace zs

#endif
