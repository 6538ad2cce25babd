#ifndef ZS_TYPES_HPP
#define ZS_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace zs {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// 2x2 complex matrix with the entry layout [[m1, m2], [m3, m4]].
struct Mat2c {
    cplx m1{0.0}, m2{0.0}, m3{0.0}, m4{0.0};

    static Mat2c identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2c zero() { return {}; }

    cplx trace() const { return m1 + m4; }
    cplx det() const { return m1 * m4 - m2 * m3; }

    double max_abs() const {
        return std::max(std::max(std::abs(m1), std::abs(m2)),
                        std::max(std::abs(m3), std::abs(m4)));
    }

    Mat2c operator+(const Mat2c& o) const { return {m1 + o.m1, m2 + o.m2, m3 + o.m3, m4 + o.m4}; }
    Mat2c operator-(const Mat2c& o) const { return {m1 - o.m1, m2 - o.m2, m3 - o.m3, m4 - o.m4}; }
    Mat2c operator*(const Mat2c& o) const {
        return {m1 * o.m1 + m2 * o.m3, m1 * o.m2 + m2 * o.m4,
                m3 * o.m1 + m4 * o.m3, m3 * o.m2 + m4 * o.m4};
    }
    Mat2c operator*(cplx s) const { return {s * m1, s * m2, s * m3, s * m4}; }
    Mat2c& operator+=(const Mat2c& o) {
        m1 += o.m1; m2 += o.m2; m3 += o.m3; m4 += o.m4;
        return *this;
    }
};

inline Mat2c operator*(cplx s, const Mat2c& m) { return m * s; }

enum class Errc {
    bad_input,
    step_underflow,
    boundary_root,
    non_integer_winding,
    cluster_ambiguity,
    no_valid_r,
    layout_failure,
    not_an_eigenvalue,
    geometric_multiplicity_two,
    grid_mismatch,
    zero_input,
    exhausted,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace zs

#endif
