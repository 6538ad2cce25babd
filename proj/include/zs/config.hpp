#ifndef ZS_CONFIG_HPP
#define ZS_CONFIG_HPP

namespace zs {

// Runtime tolerances and grid sizes. Defaults match the values the test
// suite is calibrated against; the CLI can override individual entries.
struct Config {
    // ODE integration
    int rk_min_steps = 256;
    int rk_steps_per_unit = 96;   // steps per unit of |lambda| + sup|phi|
    long rk_max_steps = 4000000;  // beyond this we refuse to integrate
    int path_grid = 1024;         // x-samples for stored fundamental-matrix paths

    // Contour quadrature
    int contour_start_nodes = 256;
    int contour_max_nodes = 4096;
    double winding_window = 0.2;     // accepted distance of s0 from an integer
    double clearance_rel = 1e-8;     // min|chi| on contour relative to max|chi|

    // Root refinement and clustering
    double residual_rel = 1e-7;      // |chi(root)| relative to contour scale
    double cluster_radius_rel = 1e-5;  // times (1 + |disk center|)
    double cluster_separation = 10.0;  // clusters must be this many radii apart
    int max_disk_roots = 64;

    // Classification
    double geometric_tol = 1e-6;     // ||M^ -+ Id||_max threshold for m_g = 2
    double reality_tol = 1e-7;       // |Im lambda| < tol * (1 + |lambda|)
    double pairing_tol = 1e-7;       // conjugate-pair matching
    double eigenvalue_tol = 1e-5;    // precondition |chi_p^pm(lambda)| check
    double dirichlet_match_tol = 1e-6;  // periodic <-> Dirichlet coincidence

    // Gradients
    double gram_tol = 1e-10;         // Gram-determinant dependence threshold

    // Quadrature grid for potential functionals (|phi|^4 term)
    int quad_grid = 2048;

    // Path simulator
    int path_samples = 33;
    int path_n_scan = 4;
};

inline const Config& default_config() {
    static const Config cfg{};
    return cfg;
}

} // namespace zs

#endif
