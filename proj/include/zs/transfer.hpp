#ifndef ZS_TRANSFER_HPP
#define ZS_TRANSFER_HPP

#include <vector>

#include "zs/config.hpp"
#include "zs/potential.hpp"
#include "zs/types.hpp"

namespace zs {

struct TransferOptions {
    bool with_dlambda = true;
    bool with_path = false;
    // Integrate the pair (M, dM/dlambda) on [0, x_end]; x_end = 1 gives the
    // Floquet matrix. Only x_end in (0, 2] is supported.
    double x_end = 1.0;
};

struct TransferResult {
    Mat2c endpoint;             // M(x_end, lambda)
    Mat2c dlambda;              // dM/dlambda(x_end, lambda), zero if not requested
    std::vector<Mat2c> path;    // M at x_j = j * x_end / path_grid, j = 0..path_grid
    int path_grid = 0;
    double max_det_err = 0.0;          // max_j |det M(x_j) - 1|, all integration steps
    double max_det_err_scaled = 0.0;   // same, divided by max(1, ||M||_max^2)
    long steps = 0;
};

// Fundamental solution of L(phi) M = lambda M, M(0) = Id, by fixed-step RK4
// with the variational system for dM/dlambda integrated jointly.
TransferResult fundamental_matrix(const Potential& p, cplx lambda,
                                  const TransferOptions& opt = {},
                                  const Config& cfg = default_config());

// Closed form of M(x, lambda, phi_a) for the constant potential (a, -conj a),
// kappa = sqrt(lambda^2 + |a|^2), with the series branch of sin(kappa x)/kappa
// near kappa = 0.
Mat2c constant_closed_form(cplx a, cplx lambda, double x);

} // namespace zs

#endif
