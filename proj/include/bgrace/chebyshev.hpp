#ifndef BGRACE_CHEBYSHEV_HPP
#define BGRACE_CHEBYSHEV_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bgrace/numeric.hpp"

namespace bgrace {

// Chebyshev polynomial of the first kind, T_n, by the three-term recurrence
// T_0 = 1, T_1 = z, T_{k+1} = 2 z T_k - T_{k-1}. The recurrence is branch-free
// and stable for every complex argument, which is why it is the
// implementation; the radical closed form below serves as a cross-check.
inline cplx cheb_t(int n, cplx z) {
    if (n < 0) throw std::invalid_argument("cheb_t: negative degree");
    if (n == 0) return cplx(1.0);
    if (n == 1) return z;
    cplx prev(1.0), cur = z;
    for (int k = 1; k < n; ++k) {
        const cplx next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Chebyshev polynomial of the second kind, U_n (U_0 = 1, U_1 = 2z).
inline cplx cheb_u(int n, cplx z) {
    if (n < 0) throw std::invalid_argument("cheb_u: negative degree");
    if (n == 0) return cplx(1.0);
    if (n == 1) return 2.0 * z;
    cplx prev(1.0), cur = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        const cplx next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Closed form (1/2)((z + sqrt(z^2-1))^n + (z - sqrt(z^2-1))^n). The two
// summands swap under the other branch of the square root, so the sum does
// not depend on the branch chosen.
inline cplx cheb_t_closed(int n, cplx z) {
    if (n < 0) throw std::invalid_argument("cheb_t_closed: negative degree");
    const cplx w = std::sqrt(z * z - 1.0);
    return 0.5 * (std::pow(z + w, n) + std::pow(z - w, n));
}

// The n-1 roots of U_{n-1}: cos(k pi / n), k = 1..n-1, in decreasing order.
inline std::vector<double> u_roots(int n) {
    if (n < 2) throw std::invalid_argument("u_roots: empty root set for n < 2");
    std::vector<double> r(n - 1);
    for (int k = 1; k < n; ++k) r[k - 1] = std::cos(k * pi / n);
    return r;
}

// Coefficients of T_n in ascending order, built by the coefficient-level
// recurrence. Integer-valued; exact in doubles through n ~ 40.
inline std::vector<double> cheb_t_coefficients(int n) {
    if (n < 0) throw std::invalid_argument("cheb_t_coefficients: negative degree");
    std::vector<double> prev{1.0};
    if (n == 0) return prev;
    std::vector<double> cur{0.0, 1.0};
    for (int k = 1; k < n; ++k) {
        std::vector<double> next(k + 2, 0.0);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = 2.0 * cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline std::vector<double> cheb_u_coefficients(int n) {
    if (n < 0) throw std::invalid_argument("cheb_u_coefficients: negative degree");
    std::vector<double> prev{1.0};
    if (n == 0) return prev;
    std::vector<double> cur{0.0, 2.0};
    for (int k = 1; k < n; ++k) {
        std::vector<double> next(k + 2, 0.0);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = 2.0 * cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// |T_n'(z) - n U_{n-1}(z)|, with T_n' evaluated from the differentiated
// coefficient form of T_n.
inline double derivative_identity_residual(int n, cplx z) {
    if (n < 1) throw std::invalid_argument("derivative_identity_residual: n >= 1 required");
    const std::vector<double> tc = cheb_t_coefficients(n);
    cplx dt(0.0);
    for (std::size_t k = tc.size() - 1; k >= 1; --k) dt = dt * z + double(k) * tc[k];
    return std::abs(dt - double(n) * cheb_u(n - 1, z));
}

// Normalized confocal trace: the curve (a/c) cos(theta + t) + i (b/c) sin(theta + t)
// with (a/c)^2 - (b/c)^2 = 1, i.e. an ellipse with foci +-1.
struct ellipse_trace_params {
    double a_over_c;
    double b_over_c;
    double theta = 0.0;

    ellipse_trace_params(double a_c, double b_c, double th = 0.0)
        : a_over_c(a_c), b_over_c(b_c), theta(th) {
        if (!(a_over_c > 1.0) || !(b_over_c > 0.0))
            throw std::invalid_argument("ellipse_trace_params: need a/c > 1 and b/c > 0");
        const double defect = a_over_c * a_over_c - b_over_c * b_over_c - 1.0;
        if (std::abs(defect) > 1e-12 * std::max(1.0, a_over_c * a_over_c))
            throw std::invalid_argument("ellipse_trace_params: (a/c)^2 - (b/c)^2 != 1");
    }

    static ellipse_trace_params from_confocal(double s, double theta = 0.0) {
        if (!(s > 0.0)) throw std::invalid_argument("ellipse_trace_params: s > 0 required");
        return ellipse_trace_params(std::cosh(s), std::sinh(s), theta);
    }

    cplx point_at(double t) const {
        return cplx(a_over_c * std::cos(theta + t), b_over_c * std::sin(theta + t));
    }
};

// T_n along the normalized confocal trace, by the closed form
//   (1/2) rho^n e^{in(theta+t)} + (1/2) rho^{-n} e^{-in(theta+t)},
// where rho = (a+b)/c > 1. Exactly 2pi/n-periodic in t by construction.
// When n log(rho) exceeds 300 the tiny summand is dropped and the large one
// is assembled in log-magnitude/phase form.
inline cplx cheb_on_ellipse(int n, const ellipse_trace_params& params, double t) {
    if (n < 0) throw std::invalid_argument("cheb_on_ellipse: negative degree");
    const double rho = params.a_over_c + params.b_over_c;
    const double u = params.theta + t;
    const double log_big = n * std::log(rho);
    if (log_big > 300.0) {
        const double mag = std::exp(log_big);
        return 0.5 * mag * cplx(std::cos(n * u), std::sin(n * u));
    }
    const double big = std::pow(rho, n);
    const cplx e_pos(std::cos(n * u), std::sin(n * u));
    return 0.5 * big * e_pos + 0.5 / big * std::conj(e_pos);
}

// Residual of sqrt(z^2 - 1) = +-(b cos t + i a sin t) on the normalized
// ellipse z = a cos t + i b sin t, minimized over the sign (the square-root
// branch is not pinned down).
inline double connection_identity_residual(double a, double b, double t) {
    if (!(a > b) || !(b > 0.0) ||
        std::abs(a * a - b * b - 1.0) > 1e-9 * std::max(1.0, a * a))
        throw std::invalid_argument("connection_identity: not on normalized confocal ellipse");
    const cplx z(a * std::cos(t), b * std::sin(t));
    const cplx lhs = std::sqrt(z * z - 1.0);
    const cplx rhs(b * std::cos(t), a * std::sin(t));
    return std::min(std::abs(lhs - rhs), std::abs(lhs + rhs));
}

}  // namespace bgrace

#endif  // BGRACE_CHEBYSHEV_HPP
