#ifndef ZS_ROOTFINDER_HPP
#define ZS_ROOTFINDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "zs/characteristic.hpp"
#include "zs/config.hpp"
#include "zs/potential.hpp"

namespace zs {

struct RootCluster {
    cplx value{0.0};
    int multiplicity = 1;
    double residual = 0.0; // |chi(value)|
};

struct WindingStats {
    int rejections = 0;   // adaptive quadrature failed to settle on an integer
    int adaptations = 0;  // node-count doublings performed
};

// Number of roots inside the disk by the argument principle. The pre-rounding
// winding value must land within cfg.winding_window of an integer on two
// consecutive node counts.
int count_zeros(const Potential& p, const Disk& disk, CharKind kind,
                const Config& cfg = default_config(), WindingStats* stats = nullptr);

// s_n = (1/2 pi i) \oint lambda^n chi'/chi dlambda for n = 0..n_max.
std::vector<cplx> power_sums(const Potential& p, const Disk& disk, CharKind kind, int n_max,
                             const Config& cfg = default_config(), WindingStats* stats = nullptr);

// All roots in the disk, clustered into multiple roots: Newton's identities on
// contour power sums give a monic polynomial, its roots are Newton-refined and
// clustered; cluster multiplicities sum to the winding count.
std::vector<RootCluster> roots_in_disk(const Potential& p, const Disk& disk, CharKind kind,
                                       const Config& cfg = default_config(),
                                       WindingStats* stats = nullptr);

struct DiskCheck {
    int n = 0;             // disk index; meaningful when !is_ball
    bool is_ball = false;  // B_R instead of D_n
    CharKind kind = CharKind::chi_p;
    int expected = 0;
    int got = -1;
    bool pass = false;
    std::string error;     // non-empty if the count failed to evaluate
};

struct LayoutReport {
    int R = 0;
    int n_scan = 0;
    std::vector<DiskCheck> checks;
    bool pass = false;
    WindingStats stats;
};

// Checks the counting layout: 2 periodic and 1 Dirichlet root in each D_n with
// R < |n| <= n_scan, and 4R+2 / 2R+1 in B_R. Per-disk errors are recorded
// without aborting the scan.
LayoutReport localize_spectrum(const Potential& p, int R, int n_scan,
                               const Config& cfg = default_config());

// Smallest R in [0, n_scan] whose layout passes; throws Errc::no_valid_r.
int select_R(const Potential& p, int n_scan, const Config& cfg = default_config());

namespace detail {

// Shared-contour variants used by the classify module to avoid re-integrating
// the same contours for different characteristic kinds.
int count_zeros_cached(ContourCache& cache, CharKind kind, const Config& cfg,
                       WindingStats* stats);
std::vector<cplx> power_sums_cached(ContourCache& cache, CharKind kind, int n_max,
                                    const Config& cfg, WindingStats* stats, bool scaled);
std::vector<RootCluster> roots_in_disk_cached(const Potential& p, ContourCache& cache,
                                              CharKind kind, const Config& cfg,
                                              WindingStats* stats);

} // namespace detail

} // namespace zs

#endif
