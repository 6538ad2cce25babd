#ifndef ZS_CLASSIFY_HPP
#define ZS_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "zs/config.hpp"
#include "zs/potential.hpp"
#include "zs/rootfinder.hpp"

namespace zs {

enum class Parity { proper, anti, dirichlet };

const char* to_string(Parity p);

struct EigenvalueRecord {
    cplx value{0.0};
    int m_alg = 1;
    int m_geom = 1;              // 1 for Dirichlet records by construction
    Parity parity = Parity::proper;
    bool is_real = false;
    std::optional<int> partner;  // index of the conjugate record (non-real only)
    int disk_n = 0;              // D_n index; ignored when in_ball
    bool in_ball = false;
    double residual = 0.0;
};

struct Verdicts {
    bool standard = false;
    bool r_simple = false;
    bool dirichlet_simple = false;
};

struct SpectrumReport {
    int R = 0;
    int n_scan = 0;
    std::vector<EigenvalueRecord> records;
    LayoutReport layout;
    Verdicts verdicts;
    std::vector<std::string> standard_reasons; // per-record justification for !standard
    bool focusing = false;
};

class LayoutError : public Error {
public:
    LayoutError(LayoutReport report, const std::string& what)
        : Error(Errc::layout_failure, what), report(std::move(report)) {}
    LayoutReport report;
};

// 2 iff the Floquet matrix at lambda equals +-Id (sign by parity) within the
// geometric tolerance. Requires lambda to be a periodic eigenvalue.
int geometric_multiplicity(const Potential& p, cplx lambda, Parity parity,
                           const Config& cfg = default_config());

// Full classification over B_R and the disks D_n with R < |n| <= n_scan:
// roots of chi_p^+, chi_p^-, chi_D with multiplicities, geometric
// multiplicities, conjugate pairing (focusing inputs) and verdicts.
// Throws LayoutError when the counting layout fails at R.
SpectrumReport full_spectrum(const Potential& p, int R, int n_scan,
                             const Config& cfg = default_config());

struct StandardVerdict {
    bool standard = false;
    std::vector<std::string> reasons;
};

// Real periodic records must have m_alg = 2, non-real ones m_alg = 1.
StandardVerdict is_standard(const SpectrumReport& report, const Config& cfg = default_config());

// All periodic records inside B_R simple.
bool is_r_simple(const SpectrumReport& report);

// All Dirichlet records scanned simple.
bool dirichlet_simple(const SpectrumReport& report);

} // namespace zs

#endif
