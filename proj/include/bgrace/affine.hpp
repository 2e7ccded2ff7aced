#ifndef BGRACE_AFFINE_HPP
#define BGRACE_AFFINE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bgrace/numeric.hpp"

namespace bgrace {

// z |-> alpha + beta z: rotation, uniform scaling and translation.
struct conformal_similarity {
    cplx alpha;  // translation
    cplx beta;   // rotation-scale, nonzero

    conformal_similarity(cplx a, cplx b) : alpha(a), beta(b) {
        require_finite(a, "similarity alpha");
        require_finite(b, "similarity beta");
        if (b == cplx(0.0))
            throw std::invalid_argument("conformal_similarity: beta = 0 is not a similarity");
    }

    static conformal_similarity identity() { return {cplx(0.0), cplx(1.0)}; }

    cplx operator()(cplx z) const { return alpha + beta * z; }
};

// z |-> alpha z + beta conj(z) + gamma, with alpha and beta both nonzero.
// Unlike a similarity it can scale the real and imaginary parts
// independently; it is invertible iff |alpha| != |beta|.
struct affine_map {
    cplx alpha;
    cplx beta;
    cplx gamma;

    affine_map(cplx a, cplx b, cplx g) : alpha(a), beta(b), gamma(g) {
        require_finite(a, "affine alpha");
        require_finite(b, "affine beta");
        require_finite(g, "affine gamma");
        if (a == cplx(0.0) || b == cplx(0.0))
            throw std::invalid_argument("affine_map: alpha and beta must both be nonzero");
    }

    cplx operator()(cplx z) const { return alpha * z + beta * std::conj(z) + gamma; }
};

// Parameters of the three-factor form rotation -> pure-affine -> similarity:
//   R(z) = e^{i theta} z
//   A(z) = (a+b)/(2c) z + (a-b)/(2c) conj(z)
//   S(z) = c e^{i phi} z + gamma
// with c = sqrt(a^2 - b^2). b < 0 encodes an orientation-reversing map
// (|beta| > |alpha|).
struct affine_decomposition {
    double a;
    double b;
    double c;
    double theta;
    double phi;
    cplx gamma;
};

namespace detail {
inline bool nearly_rank_deficient(cplx alpha, cplx beta) {
    return std::abs(std::abs(alpha) - std::abs(beta)) <=
           1e-12 * (std::abs(alpha) + std::abs(beta));
}
}  // namespace detail

// Split an invertible affine map into the three-factor form. phi is
// canonicalized into (-pi/2, pi/2] (the (phi, theta) pair is only determined
// up to a simultaneous shift by pi), theta into (-pi, pi].
inline affine_decomposition decompose(const affine_map& m) {
    if (detail::nearly_rank_deficient(m.alpha, m.beta))
        throw std::domain_error("decompose: degenerate (rank-1) affine map, not decomposable");
    const double ma = std::abs(m.alpha);
    const double mb = std::abs(m.beta);
    const double a = ma + mb;
    const double b = ma - mb;
    double phi = 0.5 * (std::arg(m.alpha) + std::arg(m.beta));
    double theta = 0.5 * (std::arg(m.alpha) - std::arg(m.beta));
    if (phi > pi / 2.0) {
        phi -= pi;
        theta -= pi;
    } else if (phi <= -pi / 2.0) {
        phi += pi;
        theta += pi;
    }
    theta = reduce_angle(theta);
    return {a, b, std::sqrt(a * a - b * b), theta, phi, m.gamma};
}

// Collapse the three factors back into a single map:
//   alpha = (a+b)/2 e^{i(phi+theta)},  beta = (a-b)/2 e^{i(phi-theta)}.
inline affine_map recompose(const affine_decomposition& d) {
    if (!(d.a > std::abs(d.b)) || !(std::abs(d.b) > 0.0))
        throw std::invalid_argument("recompose: need a > |b| > 0");
    const cplx alpha = 0.5 * (d.a + d.b) * std::polar(1.0, d.phi + d.theta);
    const cplx beta = 0.5 * (d.a - d.b) * std::polar(1.0, d.phi - d.theta);
    return affine_map(alpha, beta, d.gamma);
}

// Inverse map w |-> (conj(alpha)(w - gamma) - beta conj(w - gamma)) / (|alpha|^2 - |beta|^2).
inline affine_map invert(const affine_map& m) {
    if (detail::nearly_rank_deficient(m.alpha, m.beta))
        throw std::domain_error("invert: |alpha| = |beta| is not invertible");
    const double det = std::norm(m.alpha) - std::norm(m.beta);
    const cplx alpha = std::conj(m.alpha) / det;
    const cplx beta = -m.beta / det;
    const cplx gamma = -(std::conj(m.alpha) * m.gamma - m.beta * std::conj(m.gamma)) / det;
    return affine_map(alpha, beta, gamma);
}

// Images of the rotated n-th roots of unity e^{i(theta + 2k pi/n)} under the
// pure-affine factor: (a/c) cos(theta + 2k pi/n) + i (b/c) sin(theta + 2k pi/n),
// k = 1..n. These are the vertices of an affinely regular n-gon inscribed in
// the normalized confocal ellipse.
inline std::vector<cplx> rotated_root_images(int n, double theta, double a_over_c,
                                             double b_over_c) {
    if (n < 3) throw std::invalid_argument("rotated_root_images: need a polygon (n >= 3)");
    if (!(a_over_c > 1.0) || !(b_over_c > 0.0) ||
        std::abs(a_over_c * a_over_c - b_over_c * b_over_c - 1.0) >
            1e-12 * std::max(1.0, a_over_c * a_over_c))
        throw std::invalid_argument("rotated_root_images: (a/c)^2 - (b/c)^2 = 1 required");
    std::vector<cplx> pts(n);
    for (int k = 1; k <= n; ++k) {
        const double t = theta + 2.0 * pi * k / n;
        pts[k - 1] = cplx(a_over_c * std::cos(t), b_over_c * std::sin(t));
    }
    return pts;
}

}  // namespace bgrace

#endif  // BGRACE_AFFINE_HPP
