#ifndef BGRACE_ROOT_FINDING_HPP
#define BGRACE_ROOT_FINDING_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bgrace/numeric.hpp"
#include "bgrace/polynomial.hpp"

namespace bgrace {

// All solver tolerances live here so callers (and the CLI) can override them
// in one place.
struct root_solver_config {
    double tol_root = 1e-10;    // relative step-size convergence threshold
    double tol_cluster = 1e-7;  // relative radius for multiplicity clustering
    int max_iterations = 200;
};

namespace detail {

// Upper bound on root magnitudes (Cauchy bound).
inline double cauchy_bound(const std::vector<cplx>& c) {
    double lead = std::abs(c.back());
    double m = 0.0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k]));
    return 1.0 + m / lead;
}

inline void solve_linear(const std::vector<cplx>& c, std::vector<cplx>& out) {
    out.push_back(-c[0] / c[1]);
}

// Numerically stable quadratic formula (citardauq for the small root).
inline void solve_quadratic(const std::vector<cplx>& c, std::vector<cplx>& out) {
    const cplx a = c[2], b = c[1], c0 = c[0];
    cplx d = std::sqrt(b * b - 4.0 * a * c0);
    if (std::real(std::conj(b) * d) < 0.0) d = -d;
    const cplx q = -0.5 * (b + d);
    if (q == cplx(0.0)) {
        out.push_back(cplx(0.0));
        out.push_back(cplx(0.0));
        return;
    }
    out.push_back(q / a);
    out.push_back(c0 / q);
}

// Aberth-Ehrlich simultaneous iteration. Initial guesses sit on a circle
// sized by the Cauchy bound, with deterministic angular and radial jitter so
// symmetric root configurations cannot trap the iteration.
inline void solve_aberth(const complex_polynomial& p, const root_solver_config& cfg,
                         std::vector<cplx>& out) {
    const int n = p.degree();
    const double bound = cauchy_bound(p.coefficients());
    const double eps = std::numeric_limits<double>::epsilon();

    std::vector<cplx> z(n);
    for (int j = 0; j < n; ++j) {
        const double jitter = double((std::uint64_t(j) * 2654435761u) % 1024u) / 1024.0;
        const double r = bound * (0.55 + 0.25 * jitter);
        const double ang = 2.0 * pi * j / n + 0.39996;
        z[j] = cplx(r * std::cos(ang), r * std::sin(ang));
    }

    std::vector<bool> done(n, false);
    for (int it = 0; it < cfg.max_iterations; ++it) {
        bool all_done = true;
        for (int j = 0; j < n; ++j) {
            if (done[j]) continue;
            auto [pv, dpv] = p.evaluate_with_derivative(z[j]);
            if (std::abs(pv) <= 4.0 * eps * p.magnitude_at(z[j])) {
                done[j] = true;
                continue;
            }
            if (dpv == cplx(0.0)) {
                z[j] += cplx(1e-8, 1e-8) * std::max(1.0, std::abs(z[j]));
                all_done = false;
                continue;
            }
            const cplx newton = pv / dpv;
            cplx repel(0.0);
            bool collision = false;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                const cplx diff = z[j] - z[k];
                if (std::abs(diff) < eps * bound) {
                    collision = true;
                    break;
                }
                repel += 1.0 / diff;
            }
            if (collision) {
                z[j] += cplx(1e-8, -1e-8) * std::max(1.0, std::abs(z[j]));
                all_done = false;
                continue;
            }
            const cplx denom = 1.0 - newton * repel;
            const cplx step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
            z[j] -= step;
            if (std::abs(step) <= cfg.tol_root * std::max(std::abs(z[j]), 1e-3 * bound))
                done[j] = true;
            else
                all_done = false;
        }
        if (all_done) break;
    }

    // Newton polishing; keep the iterate with the smallest residual.
    for (int j = 0; j < n; ++j) {
        cplx best = z[j];
        double best_res = std::abs(p.evaluate(best));
        cplx cur = best;
        for (int step = 0; step < 3; ++step) {
            auto [pv, dpv] = p.evaluate_with_derivative(cur);
            if (dpv == cplx(0.0)) break;
            cur -= pv / dpv;
            const double res = std::abs(p.evaluate(cur));
            if (res < best_res) {
                best_res = res;
                best = cur;
            }
        }
        z[j] = best;
    }
    out.insert(out.end(), z.begin(), z.end());
}

// Single-linkage clustering; each cluster is reported as its centroid
// repeated with the cluster's multiplicity. The centroid of a multiple-root
// cluster is far more accurate than its members.
inline std::vector<cplx> cluster_roots(std::vector<cplx> roots, double radius) {
    const std::size_t n = roots.size();
    std::vector<int> group(n, -1);
    int ngroups = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (group[i] >= 0) continue;
        group[i] = ngroups;
        // grow the cluster transitively
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t a = 0; a < n; ++a) {
                if (group[a] != ngroups) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    if (group[b] >= 0) continue;
                    if (std::abs(roots[a] - roots[b]) < radius) {
                        group[b] = ngroups;
                        grew = true;
                    }
                }
            }
        }
        ++ngroups;
    }
    std::vector<cplx> out;
    out.reserve(n);
    for (int g = 0; g < ngroups; ++g) {
        cplx sum(0.0);
        int count = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (group[i] == g) {
                sum += roots[i];
                ++count;
            }
        const cplx centroid = sum / double(count);
        for (int i = 0; i < count; ++i) out.push_back(centroid);
    }
    return out;
}

}  // namespace detail

// All degree-many roots of p, counted with multiplicity. Exact zero roots are
// deflated first; the rest come from Aberth-Ehrlich iteration with Newton
// polishing, then multiplicity clustering. Output is sorted by (re, im) so
// repeated calls are reproducible.
inline std::vector<cplx> find_roots(const complex_polynomial& p,
                                    const root_solver_config& cfg = {}) {
    if (p.is_zero()) throw std::domain_error("find_roots: identically zero polynomial");
    if (p.degree() == 0) throw std::domain_error("find_roots: no roots of a nonzero constant");

    std::vector<cplx> coeffs = p.coefficients();
    std::vector<cplx> roots;
    while (coeffs.size() > 1 && coeffs.front() == cplx(0.0)) {
        roots.push_back(cplx(0.0));
        coeffs.erase(coeffs.begin());
    }

    if (coeffs.size() == 2) {
        detail::solve_linear(coeffs, roots);
    } else if (coeffs.size() == 3) {
        detail::solve_quadratic(coeffs, roots);
    } else if (coeffs.size() > 3) {
        detail::solve_aberth(complex_polynomial(coeffs), cfg, roots);
    }

    const double bound = detail::cauchy_bound(p.coefficients());
    roots = detail::cluster_roots(std::move(roots), cfg.tol_cluster * std::max(1.0, bound));
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

inline std::vector<cplx> critical_points(const complex_polynomial& p,
                                         const root_solver_config& cfg = {}) {
    if (p.degree() < 2) throw std::domain_error("critical_points: degree < 2 has no critical points");
    return find_roots(p.derivative(), cfg);
}

}  // namespace bgrace

#endif  // BGRACE_ROOT_FINDING_HPP
