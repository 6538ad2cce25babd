#ifndef ZS_GRADIENTS_HPP
#define ZS_GRADIENTS_HPP

#include <array>
#include <functional>
#include <vector>

#include "zs/characteristic.hpp"
#include "zs/config.hpp"
#include "zs/potential.hpp"

namespace zs {

// A discretized element of L^2_c on [0,1]: components sampled at
// x_j = j / grid_n, j = 0..grid_n. All pairings use the trapezoid rule on
// this grid.
struct GradientField {
    int grid_n = 0;
    std::vector<cplx> comp1, comp2;

    static GradientField zeros(int grid_n);
    GradientField& operator+=(const GradientField& o);
    GradientField& operator*=(cplx s);
};

// (f1,f2) * (g1,g2) = (f2 g2, f1 g1), pointwise
GradientField star(const GradientField& f, const GradientField& g);
// f^ = -(conj f2, conj f1)
GradientField hat(const GradientField& f);
// f~ = (-conj f2, conj f1); I f = f~ is an anti-involution
GradientField breve(const GradientField& f);

// Bilinear pairing <f, h>_r = int_0^1 (f1 h1 + f2 h2) dx (no conjugation).
cplx pair_r(const GradientField& f, const GradientField& h);

// Hermitian L^2 product int (f1 conj(g1) + f2 conj(g2)) dx.
cplx inner_l2(const GradientField& f, const GradientField& g);

// phi sampled on the gradient grid.
GradientField sample_potential(const Potential& p, int grid_n);

// d(Delta) as an element of L^2_c at a periodic eigenvalue of geometric
// multiplicity one, via the normalized Floquet eigenfunction. Throws
// Errc::geometric_multiplicity_two when both off-diagonal entries vanish.
GradientField grad_delta(const Potential& p, cplx lambda, const Config& cfg = default_config());

// L^2-gradients of the four Floquet-matrix entries (any lambda).
std::array<GradientField, 4> grad_floquet_entries(const Potential& p, cplx lambda,
                                                  const Config& cfg = default_config());

// Gradient of the Dirichlet characteristic function (any lambda).
GradientField grad_chi_D(const Potential& p, cplx lambda, const Config& cfg = default_config());

enum class AvgIntegrand {
    power,  // F(lambda) = (lambda - lambda0)^q  -> the E_q functionals
    m2hat,  // F = m^2(1, lambda, phi)           -> the H functional
    one,    // F = 1                             -> the root count
};

struct AveragedResult {
    cplx value{0.0};
    GradientField gradient;
    int roots = 0;
};

// F_chi(phi) = sum_j F(z_j(phi), phi) over the roots z_j of chi in the disk,
// evaluated with the contour form, together with its L^2-gradient.
AveragedResult averaged_functional(const Potential& p, const Disk& disk, CharKind kind,
                                   AvgIntegrand integrand, int q = 1, cplx lambda0 = 0.0,
                                   const Config& cfg = default_config());

enum class Dependence { independent, dependent };

// Are the real/imaginary parts of h -> <f, h>_r R-linearly independent on
// iL^2_r? Decided by the Gram determinant of (f + f^)/2 and (f - f^)/(2i).
Dependence linear_independence(const GradientField& f, const Config& cfg = default_config());

struct FDCheck {
    cplx analytic{0.0};
    cplx fd{0.0};
    double rel_err = 0.0;
};

// Central finite-difference validation of <grad, h>_r against
// (F(p + s h) - F(p - s h)) / 2s.
FDCheck fd_check_pairing(const GradientField& grad,
                         const std::function<cplx(const Potential&)>& F, const Potential& p,
                         const Potential& h, double s);

} // namespace zs

#endif
