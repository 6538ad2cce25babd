#ifndef ZS_CHARACTERISTIC_HPP
#define ZS_CHARACTERISTIC_HPP

#include <string>
#include <vector>

#include "zs/config.hpp"
#include "zs/potential.hpp"
#include "zs/transfer.hpp"
#include "zs/types.hpp"

namespace zs {

// Characteristic functions of L(phi):
//   delta        the discriminant Delta = m^1 + m^4
//   chi_p        Delta^2 - 4            (periodic + anti-periodic)
//   chi_p_plus   Delta - 2              (periodic in the proper sense)
//   chi_p_minus  Delta + 2              (anti-periodic)
//   chi_D        (m^4 + m^3 - m^2 - m^1) / 2i   (Dirichlet)
enum class CharKind { delta, chi_p, chi_p_plus, chi_p_minus, chi_D };

const char* to_string(CharKind k);
CharKind char_kind_from_string(const std::string& s);

struct CharValue {
    cplx value{0.0};
    cplx dvalue{0.0}; // lambda-derivative
};

// Derives the requested characteristic value from an already-computed
// Floquet matrix (endpoint + lambda-derivative).
CharValue char_from_transfer(const TransferResult& tr, CharKind kind);

CharValue evaluate_char(const Potential& p, cplx lambda, CharKind kind,
                        const Config& cfg = default_config());

struct Disk {
    cplx center{0.0};
    double radius = 0.0;
};

// D_n = {|lambda - n pi| < pi/4}
inline Disk counting_disk(int n) { return {cplx(n * kPi, 0.0), kPi / 4.0}; }
// B_R = {|lambda| < R pi + pi/4}
inline Disk counting_ball(int R) { return {cplx(0.0, 0.0), R * kPi + kPi / 4.0}; }

struct ContourSamples {
    Disk disk;
    int nodes = 0;
    std::vector<cplx> lambda;
    std::vector<CharValue> values;
    double min_abs = 0.0;
    double max_abs = 0.0;
    int worst_node = -1; // node closest to the clearance threshold
    bool clear = false;  // min_abs > clearance_rel * max_abs
};

// Equally spaced samples of (value, dvalue) on the positively oriented circle.
ContourSamples char_on_contour(const Potential& p, const Disk& disk, int nodes, CharKind kind,
                               const Config& cfg = default_config());

// One pass of transfer solves shared by every kind: Delta and chi_D samples
// (with derivatives) on the contour. Doubling `ensure` refines in place,
// reusing previously computed nodes.
class ContourCache {
public:
    ContourCache(const Potential& p, const Disk& disk, const Config& cfg);

    void ensure(int nodes);
    int nodes() const { return int(lambda_.size()); }
    const Disk& disk() const { return disk_; }
    const std::vector<cplx>& lambdas() const { return lambda_; }
    // Per-node values of the requested kind.
    std::vector<CharValue> kind_values(CharKind kind) const;

private:
    const Potential& p_;
    Disk disk_;
    const Config& cfg_;
    std::vector<cplx> lambda_;
    std::vector<CharValue> delta_, chiD_;
};

} // namespace zs

#endif
