#ifndef BGRACE_NUMERIC_HPP
#define BGRACE_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bgrace {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

inline bool is_finite(double x) { return std::isfinite(x); }

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(cplx z, const char* what) {
    if (!is_finite(z))
        throw std::invalid_argument(std::string(what) + ": non-finite value");
}

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(what) + ": non-finite value");
}

// Reduce an angle to (-pi, pi]; ties at -pi map to +pi.
inline double reduce_angle(double a) {
    a = std::remainder(a, 2.0 * pi);
    if (a <= -pi) a = pi;
    return a;
}

// Reduce an angle to (-pi/2, pi/2] modulo pi (axis directions).
inline double reduce_axis_angle(double a) {
    a = std::remainder(a, pi);
    if (a <= -pi / 2.0) a += pi;
    if (a > pi / 2.0) a -= pi;
    return a;
}

inline double sqr(double x) { return x * x; }

inline cplx sqr_c(cplx z) { return z * z; }

// 2D cross product of the vectors u and v viewed as real pairs.
inline double cross(cplx u, cplx v) {
    return u.real() * v.imag() - u.imag() * v.real();
}

}  // namespace bgrace

#endif  // BGRACE_NUMERIC_HPP
