#ifndef ZS_DISCRIMINANT_HPP
#define ZS_DISCRIMINANT_HPP

#include <vector>

#include "zs/config.hpp"
#include "zs/potential.hpp"
#include "zs/types.hpp"

namespace zs {

enum class SpectrumKind { periodic, dirichlet };

const char* to_string(SpectrumKind k);

// Monic polynomial, coefficients ascending (coeffs[degree] = 1). For focusing
// potentials the periodic polynomial Q_{p,R} and the Dirichlet polynomial
// Q_{D,R} both have real coefficients.
struct CharPolynomial {
    int degree = 0;
    std::vector<cplx> coeffs;

    cplx eval(cplx lambda) const;
    CharPolynomial derivative() const;
};

// Q_{p,R}: the monic degree-(4R+2) polynomial with the periodic eigenvalues in
// B_R as roots, from power sums on the contour |lambda| = pi (R + 1/4) via
// Newton's identities. For the Dirichlet kind, the 2R+1 Dirichlet roots are
// augmented with their conjugates, Q_{D,R} = prod (mu_k - lambda)(conj(mu_k) - lambda).
CharPolynomial build_qpoly(const Potential& p, int R, SpectrumKind which,
                           const Config& cfg = default_config());

// Determinant of the banded Sylvester matrix of (Q, Q'). Satisfies
// det = (-1)^{d(d-1)/2} prod_{i<j} (r_i - r_j)^2 for monic Q of degree d.
cplx sylvester_discriminant(const CharPolynomial& q);

// |discriminant| / (max_j |a_j|)^{2 deg - 2}
double scaled_indicator(const CharPolynomial& q);

// Scale-free multiple-eigenvalue signal. For the periodic kind this is the
// indicator of Q_{p,R}; for the Dirichlet kind it is the indicator of
// prod (lambda - mu_k) alone (the genuine mu-collision signal), since the
// conjugate augmentation of Q_{D,R} vanishes for every real Dirichlet
// eigenvalue regardless of collisions.
double multiple_root_indicator(const Potential& p, int R, SpectrumKind which,
                               const Config& cfg = default_config());

struct DirichletSignals {
    double mu_indicator = 0.0;   // collision among the mu_k themselves
    double qdr_indicator = 0.0;  // indicator of the full Q_{D,R} (conflated)
    double min_mu_imag = 0.0;    // min_k |Im mu_k|; ~0 explains a vanishing qdr signal
};

DirichletSignals dirichlet_signals(const Potential& p, int R,
                                   const Config& cfg = default_config());

} // namespace zs

#endif
