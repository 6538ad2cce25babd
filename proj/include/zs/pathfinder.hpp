#ifndef ZS_PATHFINDER_HPP
#define ZS_PATHFINDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zs/classify.hpp"
#include "zs/config.hpp"
#include "zs/potential.hpp"

namespace zs {

// One evaluated point of a potential path. M_D is the largest Dirichlet
// multiplicity among periodic eigenvalues in B_R of geometric multiplicity
// two (0 if there are none); M_p the largest algebraic multiplicity among
// periodic eigenvalues in B_R.
struct PathSample {
    double t = 0.0;
    Potential potential;
    SpectrumReport report;
    int M_D = 0;
    int M_p = 1;
    int R = 0;
    bool standard = false;
    bool valid = true;    // false if classification failed; error holds the cause
    std::string error;
};

// Evaluates one potential: select_R, full report and the degeneracy metrics.
PathSample evaluate_sample(double t, const Potential& p, const Config& cfg = default_config());

// Uniform samples of the straight line t -> (1-t) zeta + t xi.
std::vector<PathSample> straight_path(const Potential& zeta, const Potential& xi, int samples,
                                      const Config& cfg = default_config());

// (max M_D, max M_p) over the samples.
std::pair<int, int> path_metrics(const std::vector<PathSample>& path);
// Same, endpoints excluded; the deformation below can only influence these.
std::pair<int, int> interior_metrics(const std::vector<PathSample>& path);

struct PerturbResult {
    std::vector<PathSample> path;
    int tries = 0;
    bool reached_simple = false; // interior metrics hit (0, 1)
    bool improved = false;
    bool exhausted = false;      // max_tries spent without reaching (0, 1)
};

// Deforms the interior of the path by random focusing perturbations shaped by
// the bump sin^2(pi t); endpoints are never touched. Candidate deformations
// are accepted when the interior metrics (M_D, M_p) improve lexicographically;
// the loop stops once every interior sample is simple. Deterministic in seed.
PerturbResult perturb_path(const std::vector<PathSample>& path, double magnitude,
                           std::uint64_t seed, int max_tries,
                           const Config& cfg = default_config());

} // namespace zs

#endif
