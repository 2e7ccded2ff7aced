#ifndef BGRACE_REGULARITY_HPP
#define BGRACE_REGULARITY_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgrace/affine.hpp"
#include "bgrace/chebyshev.hpp"
#include "bgrace/ellipse.hpp"
#include "bgrace/matching.hpp"
#include "bgrace/numeric.hpp"
#include "bgrace/polynomial.hpp"
#include "bgrace/root_finding.hpp"

namespace bgrace {

struct polygon {
    std::vector<cplx> vertices;

    int size() const { return static_cast<int>(vertices.size()); }

    // Max pairwise vertex distance; the instance scale every relative
    // tolerance refers to.
    double scale() const {
        double s = 0.0;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                s = std::max(s, std::abs(vertices[i] - vertices[j]));
        return s;
    }
};

// Strictly convex and counterclockwise, up to rounding slack. Flat or
// clockwise vertex sequences fail.
inline bool is_convex_ccw(const polygon& p) {
    const int n = p.size();
    if (n < 3) return false;
    const double tol = 1e-12 * sqr(p.scale());
    double max_cross = 0.0;
    for (int k = 0; k < n; ++k) {
        const cplx a = p.vertices[(k + 1) % n] - p.vertices[k];
        const cplx b = p.vertices[(k + 2) % n] - p.vertices[(k + 1) % n];
        if (a == cplx(0.0)) return false;
        const double c = cross(a, b);
        if (c < -tol) return false;
        max_cross = std::max(max_cross, c);
    }
    return max_cross > tol;
}

inline polygon midpoints(const polygon& p) {
    if (p.size() < 3) throw std::invalid_argument("midpoints: need n >= 3 vertices");
    polygon out;
    out.vertices.resize(p.vertices.size());
    for (std::size_t k = 0; k < p.vertices.size(); ++k)
        out.vertices[k] = 0.5 * (p.vertices[k] + p.vertices[(k + 1) % p.vertices.size()]);
    return out;
}

// Roots ordered counterclockwise by angle about their centroid; equal angles
// broken by radius. Convexity is NOT implied and must be checked separately.
inline polygon polygon_from_points(std::span<const cplx> pts) {
    polygon p;
    p.vertices.assign(pts.begin(), pts.end());
    const cplx centroid =
        std::accumulate(p.vertices.begin(), p.vertices.end(), cplx(0.0)) / double(p.size());
    std::sort(p.vertices.begin(), p.vertices.end(), [centroid](cplx a, cplx b) {
        const double aa = std::arg(a - centroid), ab = std::arg(b - centroid);
        if (aa != ab) return aa < ab;
        return std::abs(a - centroid) < std::abs(b - centroid);
    });
    return p;
}

// Witness that a polygon is the affine image of the regular n-gon: vertices
// fit gamma + alpha w^k + beta w^{-k} with w = e^{2 pi i / n}. The residual
// is the RMS vertex deviation from that model, which by Parseval equals the
// energy in the Fourier modes outside {0, 1, n-1}.
struct regularity_fit {
    cplx alpha{0.0};
    cplx beta{0.0};
    cplx gamma{0.0};
    int n = 0;
    double residual = 0.0;
    bool accepted = false;
    bool beta_zero = false;  // similarity image of the regular n-gon
    std::string rejection;
};

namespace detail {
// below this (relative) the fit is treated as an exact similarity image
inline constexpr double polygon_beta_zero_rel = 1e-9;
// below this (relative) |alpha| ~ |beta| collapses the image onto a line
inline constexpr double collinear_rel = 1e-9;
}  // namespace detail

inline regularity_fit detect_affinely_regular(const polygon& p, double tol) {
    const int n = p.size();
    if (n < 3) throw std::invalid_argument("detect_affinely_regular: need n >= 3");
    if (!is_convex_ccw(p))
        throw std::invalid_argument("detect_affinely_regular: convex polygon required");
    const double scale = p.scale();

    regularity_fit fit;
    fit.n = n;
    double off_energy = 0.0;
    for (int m = 0; m < n; ++m) {
        cplx cm(0.0);
        for (int k = 0; k < n; ++k)
            cm += p.vertices[k] * std::polar(1.0, -2.0 * pi * ((m * k) % n) / n);
        cm /= double(n);
        if (m == 0)
            fit.gamma = cm;
        else if (m == 1)
            fit.alpha = cm;
        else if (m == n - 1)
            fit.beta = cm;
        else
            off_energy += std::norm(cm);
    }
    fit.residual = std::sqrt(off_energy);
    fit.beta_zero = std::abs(fit.beta) <= detail::polygon_beta_zero_rel * scale;

    if (fit.residual > tol * scale) {
        fit.rejection = "residual above tolerance";
        return fit;
    }
    if (!fit.beta_zero &&
        std::abs(std::abs(fit.alpha) - std::abs(fit.beta)) <= detail::collinear_rel * scale) {
        fit.rejection = "degenerate (collinear) image";
        return fit;
    }
    fit.accepted = true;
    return fit;
}

// The inscribed ellipse through the side midpoints: the image of the circle
// of radius cos(pi/n) under z |-> alpha z + beta conj(z) + gamma.
inline ellipse inscribed_midpoint_ellipse(const regularity_fit& fit) {
    if (!fit.accepted)
        throw std::invalid_argument("inscribed_midpoint_ellipse: fit was not accepted");
    const double rho = std::cos(pi / fit.n);
    const double ma = std::abs(fit.alpha);
    const double mb = std::abs(fit.beta);
    const double rot = fit.beta_zero ? 0.0 : 0.5 * (std::arg(fit.alpha) + std::arg(fit.beta));
    return ellipse(fit.gamma, rho * (ma + mb), rho * std::abs(ma - mb), rot);
}

// Closed-form foci gamma +- 2 cos(pi/n) sqrt(alpha beta); an independent
// route to the same pair as inscribed_midpoint_ellipse(fit).foci().
inline std::pair<cplx, cplx> inscribed_ellipse_foci(const regularity_fit& fit) {
    const cplx off = 2.0 * std::cos(pi / fit.n) * std::sqrt(fit.alpha * fit.beta);
    return {fit.gamma + off, fit.gamma - off};
}

// Fit of n-1 points to the form alpha + beta cos(k pi / n), k = 1..n-1.
struct critical_form {
    cplx alpha{0.0};
    cplx beta{0.0};
    int n = 0;
    double residual = 0.0;  // RMS deviation from the matched form
    double spread = 0.0;    // max pairwise distance of the input points
    bool accepted = false;
    bool beta_zero = false;  // coincident points: the circle case
    std::string rejection;
};

// Least-squares fit: the principal axis of the point cloud fixes the
// candidate ordering (two orientations), then (alpha, beta) solve the linear
// problem exactly; the better orientation wins. Coincidence (the beta = 0
// circle case) is judged against scale_hint, because a multiple critical
// point recovered in floating point spreads into a cluster far wider than
// machine epsilon.
inline critical_form fit_critical_form(std::span<const cplx> points, int n, double tol,
                                       double scale_hint = 0.0, double beta_floor = 1e-4) {
    if (n < 3) throw std::invalid_argument("fit_critical_form: need n >= 3");
    if (static_cast<int>(points.size()) != n - 1)
        throw std::invalid_argument("fit_critical_form: expected n-1 points");

    critical_form out;
    out.n = n;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            out.spread = std::max(out.spread, std::abs(points[i] - points[j]));
    const double scale_ref = scale_hint > 0.0 ? scale_hint : out.spread;

    const cplx centroid =
        std::accumulate(points.begin(), points.end(), cplx(0.0)) / double(points.size());
    if (out.spread == 0.0) {
        out.alpha = centroid;
        out.beta_zero = true;
        out.rejection = "beta=0 (circle case)";
        return out;
    }

    // principal axis from the complex second moment
    cplx mu2(0.0);
    for (const cplx& p : points) mu2 += sqr_c(p - centroid);
    const cplx dir = (std::abs(mu2) == 0.0) ? cplx(1.0) : std::polar(1.0, 0.5 * std::arg(mu2));

    std::vector<int> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return std::real(std::conj(dir) * (points[i] - centroid)) >
               std::real(std::conj(dir) * (points[j] - centroid));
    });

    const std::vector<double> targets = u_roots(n);  // cos(k pi/n), decreasing
    double csq = 0.0;
    for (double c : targets) csq += c * c;

    double best_res = std::numeric_limits<double>::infinity();
    cplx best_beta(0.0);
    for (int orient = 0; orient < 2; ++orient) {
        cplx num(0.0);
        for (std::size_t k = 0; k < targets.size(); ++k) {
            const int idx = orient == 0 ? order[k] : order[targets.size() - 1 - k];
            num += targets[k] * points[idx];
        }
        const cplx beta = num / csq;  // alpha = centroid since sum(targets) = 0
        double ss = 0.0;
        for (std::size_t k = 0; k < targets.size(); ++k) {
            const int idx = orient == 0 ? order[k] : order[targets.size() - 1 - k];
            ss += std::norm(points[idx] - centroid - beta * targets[k]);
        }
        const double res = std::sqrt(ss / double(targets.size()));
        if (res < best_res) {
            best_res = res;
            best_beta = beta;
        }
    }

    out.alpha = centroid;
    out.beta = best_beta;
    out.residual = best_res;
    if (std::abs(out.beta) <= beta_floor * scale_ref) {
        out.beta_zero = true;
        out.rejection = "beta=0 (circle case)";
        return out;
    }
    if (out.residual > tol * out.spread) {
        out.rejection = "residual above tolerance";
        return out;
    }
    out.accepted = true;
    return out;
}

// --- verification ---------------------------------------------------------

struct verify_tolerances {
    double regular = 1e-6;     // polygon Fourier residual, relative to scale
    double critical = 1e-6;    // critical-form residual, relative to spread
    double focus = 1e-7;       // focus pair distance, relative to scale
    double tangency = 1e-7;    // normalized tangency discriminant
    double midpoint = 1e-9;    // midpoint boundary distance, relative to scale
    double beta_floor = 1e-4;  // circle-case threshold, relative to scale
    root_solver_config roots;
};

enum class verdict_class {
    pass,                      // hypothesis satisfied, every clause verified
    fail,                      // hypothesis satisfied but a clause exceeded tolerance
    hypothesis_not_satisfied,  // critical points not of the required form
};

struct verification_report {
    verdict_class vclass = verdict_class::hypothesis_not_satisfied;
    std::string diagnostic;
    int degree = 0;
    double scale = 0.0;
    std::vector<cplx> roots;
    std::vector<cplx> critical_pts;
    polygon poly;
    std::optional<critical_form> critical;
    std::optional<regularity_fit> regularity;
    std::optional<ellipse> inellipse;
    double midpoint_residual = 0.0;
    std::vector<double> tangency_residuals;
    double focus_error = 0.0;
    std::pair<cplx, cplx> form_foci{cplx(0.0), cplx(0.0)};

    bool verdict() const { return vclass == verdict_class::pass; }
};

// Full pipeline for the polygon theorem: critical-form fit, regularity of the
// root polygon, midpoint inellipse, per-side tangency, and the focus
// identity foci = alpha +- beta cos(pi/n).
inline verification_report verify_bocher_grace(const complex_polynomial& p,
                                               const verify_tolerances& tol = {}) {
    const int n = p.degree();
    if (n < 3) throw std::invalid_argument("verify_bocher_grace: degree >= 3 required");

    verification_report rep;
    rep.degree = n;
    rep.roots = find_roots(p, tol.roots);
    rep.critical_pts = critical_points(p, tol.roots);
    for (std::size_t i = 0; i + 1 < rep.roots.size(); ++i)
        if (rep.roots[i] == rep.roots[i + 1]) {
            rep.diagnostic = "repeated roots (degenerate polygon)";
            return rep;
        }
    polygon poly = polygon_from_points(rep.roots);
    rep.poly = poly;
    rep.scale = poly.scale();

    // stage 1: hypothesis
    rep.critical =
        fit_critical_form(rep.critical_pts, n, tol.critical, rep.scale, tol.beta_floor);
    if (rep.critical->beta_zero) {
        rep.diagnostic = "beta=0 (circle case)";
        return rep;
    }
    if (!rep.critical->accepted) {
        rep.diagnostic = "critical points not of the form alpha + beta cos(k pi/n)";
        return rep;
    }

    // stage 2: the roots must form a convex, affinely regular polygon
    if (!is_convex_ccw(poly)) {
        rep.diagnostic = "roots do not form a convex polygon";
        return rep;
    }
    rep.regularity = detect_affinely_regular(poly, tol.regular);
    if (rep.regularity->beta_zero) {
        rep.diagnostic = "beta=0 (circle case)";
        return rep;
    }
    if (!rep.regularity->accepted) {
        rep.vclass = verdict_class::fail;
        rep.diagnostic = "root polygon is not affinely regular: " + rep.regularity->rejection;
        return rep;
    }

    // stages 3-5: inellipse, midpoint interpolation, tangency, foci
    rep.inellipse = inscribed_midpoint_ellipse(*rep.regularity);
    const polygon mids = midpoints(poly);
    for (const cplx& m : mids.vertices)
        rep.midpoint_residual = std::max(rep.midpoint_residual, rep.inellipse->boundary_distance(m));

    bool tangency_ok = true;
    for (int k = 0; k < poly.size(); ++k) {
        const tangency_result t = segment_tangency(
            *rep.inellipse, poly.vertices[k], poly.vertices[(k + 1) % poly.size()], tol.tangency);
        rep.tangency_residuals.push_back(std::abs(t.discriminant));
        if (!t.tangent_within_segment(0.01)) tangency_ok = false;
    }

    const auto [f1, f2] = rep.inellipse->foci();
    const double ext = std::cos(pi / n);
    rep.form_foci = {rep.critical->alpha + rep.critical->beta * ext,
                     rep.critical->alpha - rep.critical->beta * ext};
    rep.focus_error = unordered_pair_distance(f1, f2, rep.form_foci.first, rep.form_foci.second);

    if (!tangency_ok)
        rep.diagnostic = "a side is not tangent to the inscribed ellipse at its midpoint";
    else if (rep.midpoint_residual > tol.midpoint * rep.scale)
        rep.diagnostic = "inscribed ellipse misses a side midpoint";
    else if (rep.focus_error > tol.focus * rep.scale)
        rep.diagnostic = "foci do not match the extreme critical points";
    else {
        rep.vclass = verdict_class::pass;
        return rep;
    }
    rep.vclass = verdict_class::fail;
    return rep;
}

// --- synthesis -------------------------------------------------------------

// Roots of (scale/n) T_n(z) + offset, pushed through the similarity S. The
// construction inverts the Joukowski map: T_n(z) = v has the n solutions
// (zeta_k + 1/zeta_k)/2 with zeta_k the n-th roots of v + sqrt(v^2 - 1).
// Levels on (or within guard distance of) the real segment [-1, 1] are
// rejected: there the root ellipse collapses.
inline std::vector<cplx> synthesize_roots(int n, cplx scale, cplx offset,
                                          const conformal_similarity& s) {
    if (n < 3) throw std::invalid_argument("synthesize: need a polygon (n >= 3)");
    if (scale == cplx(0.0)) throw std::invalid_argument("synthesize: scale must be nonzero");
    const cplx level = -double(n) * offset / scale;
    if (detail::distance_to_focal_segment(level) <= 1e-6)
        throw std::domain_error("synthesize: degenerate level set (roots collinear or collapsing)");
    cplx big = level + std::sqrt(level * level - 1.0);
    if (std::abs(big) < 1.0) big = level - std::sqrt(level * level - 1.0);
    const double r = std::pow(std::abs(big), 1.0 / n);
    const double psi = std::arg(big) / n;
    std::vector<cplx> roots(n);
    for (int k = 0; k < n; ++k) {
        const cplx zeta = std::polar(r, psi + 2.0 * pi * k / n);
        roots[k] = s(0.5 * (zeta + 1.0 / zeta));
    }
    return roots;
}

inline complex_polynomial synthesize(int n, cplx scale, cplx offset,
                                     const conformal_similarity& s) {
    const std::vector<cplx> roots = synthesize_roots(n, scale, offset, s);
    return complex_polynomial::from_roots(roots);
}

// --- characterization ------------------------------------------------------

struct characterization_result {
    bool regular_side = false;   // midpoint inellipse exists (affinely regular)
    bool critical_side = false;  // critical points take the Chebyshev form
    bool degenerate_circle = false;
    regularity_fit regularity;
    critical_form critical;

    bool consistent() const { return regular_side == critical_side; }
};

// Both directions of the characterization, computed independently. The
// similarity image of a regular n-gon (beta = 0 on both sides: inscribed
// circle, coincident critical points) counts as satisfying both sides; it is
// flagged so callers can treat it as the degenerate boundary case.
inline characterization_result verify_characterization(const polygon& p, double tol_regular,
                                                       double tol_critical) {
    characterization_result out;
    out.regularity = detect_affinely_regular(p, tol_regular);
    out.regular_side = out.regularity.accepted || out.regularity.beta_zero;

    const complex_polynomial poly = complex_polynomial::from_roots(p.vertices);
    const std::vector<cplx> cp = critical_points(poly);
    out.critical = fit_critical_form(cp, p.size(), tol_critical, p.scale());
    out.critical_side = out.critical.accepted || out.critical.beta_zero;

    out.degenerate_circle = out.regularity.beta_zero || out.critical.beta_zero;
    return out;
}

}  // namespace bgrace

#endif  // BGRACE_REGULARITY_HPP
