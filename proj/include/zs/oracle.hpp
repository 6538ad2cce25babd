#ifndef ZS_ORACLE_HPP
#define ZS_ORACLE_HPP

#include <vector>

#include "zs/classify.hpp"
#include "zs/types.hpp"

namespace zs {

// Closed-form spectra of the constant potentials phi_{a,k}: ground truth for
// the numerical pipeline. Eigenvalues are indexed by the integer n solving
// kappa(lambda) = n pi rather than lexicographically.

struct OraclePeriodic {
    cplx value{0.0};
    int m_alg = 1;
    int m_geom = 1;
    int n = 0;
    Parity parity = Parity::proper;
};

struct OracleDirichlet {
    cplx value{0.0};
    int m_alg = 1;
    int n = 0; // 0 marks the root of the linear factor lambda - i Im(a)
};

struct OracleSpectrum {
    cplx a{0.0};
    int k = 0;
    std::vector<OraclePeriodic> periodic;
    std::vector<OracleDirichlet> dirichlet;
};

// Periodic eigenvalues of L(phi_a) with |n| <= n_range. Records with equal
// values are merged, their multiplicities added (|a| on the resonance |a| = n pi
// produces the multiplicity-four record at 0).
std::vector<OraclePeriodic> constant_periodic(cplx a, int n_range);

// Dirichlet eigenvalues of L(phi_a) with |n| <= n_range, including the
// mu_0 = i Im(a) collision logic.
std::vector<OracleDirichlet> constant_dirichlet(cplx a, int n_range);

// Spectra of the gauged potential phi_{a,k}: every value shifted by -k pi,
// multiplicities unchanged, periodic parity flipped for odd k.
OracleSpectrum shifted_spectrum(cplx a, int k, int n_range);

// Minimal R for which the counting layout of phi_{a,k} holds, evaluated from
// the closed forms. Returns -1 if none within [0, n_scan].
int oracle_select_R(cplx a, int k, int n_scan);

} // namespace zs

#endif
