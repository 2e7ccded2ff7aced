#ifndef BGRACE_ELLIPSE_HPP
#define BGRACE_ELLIPSE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <variant>

#include "bgrace/affine.hpp"
#include "bgrace/numeric.hpp"

namespace bgrace {

// Axis-aligned-in-its-own-frame ellipse: center, semi-axes and the rotation
// of the major axis. Canonical form: semi_major >= semi_minor >= 0, rotation
// in (-pi/2, pi/2], circles get rotation 0.
class ellipse {
public:
    ellipse(cplx center, double semi_major, double semi_minor, double rotation)
        : center_(center), semi_major_(semi_major), semi_minor_(semi_minor) {
        require_finite(center, "ellipse center");
        require_finite(semi_major, "semi_major");
        require_finite(semi_minor, "semi_minor");
        require_finite(rotation, "rotation");
        if (semi_minor_ < 0.0 || semi_major_ <= 0.0)
            throw std::invalid_argument("ellipse: need semi_major > 0 and semi_minor >= 0");
        if (semi_minor_ > semi_major_) {
            std::swap(semi_major_, semi_minor_);
            rotation += pi / 2.0;
        }
        rotation_ = (semi_major_ == semi_minor_) ? 0.0 : reduce_axis_angle(rotation);
    }

    cplx center() const { return center_; }
    double semi_major() const { return semi_major_; }
    double semi_minor() const { return semi_minor_; }
    double rotation() const { return rotation_; }
    bool is_circle() const { return semi_major_ - semi_minor_ <= 1e-14 * semi_major_; }

    double focal_half_distance() const {
        return std::sqrt(std::max(0.0, semi_major_ * semi_major_ - semi_minor_ * semi_minor_));
    }

    double eccentricity() const { return focal_half_distance() / semi_major_; }

    // Unordered pair center +- f e^{i rotation}; a coincident pair for circles.
    std::pair<cplx, cplx> foci() const {
        const cplx off = focal_half_distance() * std::polar(1.0, rotation_);
        return {center_ + off, center_ - off};
    }

    cplx point_at(double t) const {
        return center_ + std::polar(1.0, rotation_) *
                             cplx(semi_major_ * std::cos(t), semi_minor_ * std::sin(t));
    }

    // Canonical quadratic form (x'/a)^2 + (y'/b)^2 in the axis frame;
    // equals 1 exactly on the boundary. Requires a proper ellipse.
    double quadratic_form(cplx z) const {
        const cplx w = axis_frame(z);
        return sqr(w.real() / semi_major_) + sqr(w.imag() / semi_minor_);
    }

    // First-order distance from z to the boundary: |Q - 1| / |grad Q|.
    double boundary_distance(cplx z) const {
        const cplx w = axis_frame(z);
        const double q = sqr(w.real() / semi_major_) + sqr(w.imag() / semi_minor_);
        const double g = 2.0 * std::hypot(w.real() / sqr(semi_major_), w.imag() / sqr(semi_minor_));
        if (g < 1e-300) return std::abs(q - 1.0) * semi_major_;
        return std::abs(q - 1.0) / g;
    }

private:
    cplx axis_frame(cplx z) const {
        if (semi_minor_ <= 0.0)
            throw std::domain_error("ellipse: degenerate (zero minor axis)");
        return std::polar(1.0, -rotation_) * (z - center_);
    }

    cplx center_;
    double semi_major_;
    double semi_minor_;
    double rotation_;
};

// Member of the confocal family cosh(s) cos(t) + i sinh(s) sin(t): foci +-1,
// eccentricity sech(s).
inline ellipse confocal_member(double s) {
    if (!(s > 0.0))
        throw std::invalid_argument("confocal_member: s <= 0 is the degenerate segment [-1,1]");
    return ellipse(cplx(0.0), std::cosh(s), std::sinh(s), 0.0);
}

namespace detail {
// Distance from z to the real segment [-1, 1].
inline double distance_to_focal_segment(cplx z) {
    const double x = std::clamp(z.real(), -1.0, 1.0);
    return std::abs(z - cplx(x, 0.0));
}
}  // namespace detail

// The unique s > 0 whose family member passes through z, from the focal-sum
// identity |z-1| + |z+1| = 2 cosh s.
inline double confocal_through_point(cplx z) {
    require_finite(z, "confocal_through_point");
    if (detail::distance_to_focal_segment(z) < 1e-9)
        throw std::domain_error("confocal_through_point: degenerate confocal coordinate");
    const double half_sum = 0.5 * (std::abs(z - cplx(1.0)) + std::abs(z + cplx(1.0)));
    return std::acosh(std::max(1.0, half_sum));
}

inline bool contains_point(const ellipse& e, cplx z, double tol) {
    return std::abs(e.quadratic_form(z) - 1.0) <= tol;
}

enum class tangency_kind { tangent, secant, disjoint };

struct tangency_result {
    tangency_kind kind;
    cplx tangent_at{0.0};  // meaningful only when tangent
    double u = 0.0;        // segment parameter of the tangent point
    double discriminant = 0.0;  // normalized: invariant under similarities

    bool tangent_within_segment(double slack) const {
        return kind == tangency_kind::tangent && u >= -slack && u <= 1.0 + slack;
    }
};

// Substitute the segment p + u (q - p) into the quadratic form and classify
// by the discriminant of the resulting real quadratic in u. The discriminant
// is normalized by the leading coefficient squared, which makes the
// classification invariant under conformal similarities applied to the whole
// configuration.
inline tangency_result segment_tangency(const ellipse& e, cplx p, cplx q, double tol) {
    if (p == q) throw std::invalid_argument("segment_tangency: segment endpoints coincide");
    const cplx rot = std::polar(1.0, -e.rotation());
    const cplx w0 = rot * (p - e.center());
    const cplx w1 = rot * (q - p);
    if (e.semi_minor() <= 0.0)
        throw std::domain_error("segment_tangency: degenerate ellipse");
    const double ia = 1.0 / sqr(e.semi_major());
    const double ib = 1.0 / sqr(e.semi_minor());
    const double A = sqr(w1.real()) * ia + sqr(w1.imag()) * ib;
    const double B = 2.0 * (w0.real() * w1.real() * ia + w0.imag() * w1.imag() * ib);
    const double C = sqr(w0.real()) * ia + sqr(w0.imag()) * ib - 1.0;
    const double disc = (B * B - 4.0 * A * C) / (A * A);

    tangency_result out;
    out.discriminant = disc;
    out.u = -B / (2.0 * A);
    if (std::abs(disc) <= tol)
        out.kind = tangency_kind::tangent;
    else
        out.kind = disc > 0.0 ? tangency_kind::secant : tangency_kind::disjoint;
    out.tangent_at = p + out.u * (q - p);
    return out;
}

// Image of the unit circle under an affine map: semi-axes |alpha| +- |beta|
// around gamma, major axis along (arg alpha + arg beta)/2. The foci are
// gamma +- 2 sqrt(alpha beta).
inline ellipse unit_circle_image(const affine_map& m) {
    if (detail::nearly_rank_deficient(m.alpha, m.beta))
        throw std::domain_error("unit_circle_image: image is a segment, not an ellipse");
    const double ma = std::abs(m.alpha);
    const double mb = std::abs(m.beta);
    return ellipse(m.gamma, ma + mb, std::abs(ma - mb),
                   0.5 * (std::arg(m.alpha) + std::arg(m.beta)));
}

// Either a proper affine map or, for circles, a conformal similarity
// (an affine map with beta = 0 would violate its own invariant).
using circle_mapping = std::variant<affine_map, conformal_similarity>;

inline cplx apply_circle_mapping(const circle_mapping& m, cplx z) {
    return std::visit([z](const auto& f) { return f(z); }, m);
}

// A map sending the ellipse onto the unit circle, built by inverting the
// canonical circle -> ellipse map.
inline circle_mapping map_to_unit_circle(const ellipse& e) {
    if (e.semi_minor() <= 0.0)
        throw std::domain_error("map_to_unit_circle: degenerate ellipse");
    if (e.is_circle()) {
        const double r = e.semi_major();
        return conformal_similarity(-e.center() / r, cplx(1.0 / r));
    }
    const cplx dir = std::polar(1.0, e.rotation());
    const affine_map forward(0.5 * (e.semi_major() + e.semi_minor()) * dir,
                             0.5 * (e.semi_major() - e.semi_minor()) * dir, e.center());
    return invert(forward);
}

// Similarity image of an ellipse: axes scale by |beta|, the axis direction
// rotates by arg(beta). Eccentricity is preserved.
inline ellipse transformed(const conformal_similarity& s, const ellipse& e) {
    const double scale = std::abs(s.beta);
    return ellipse(s(e.center()), scale * e.semi_major(), scale * e.semi_minor(),
                   e.rotation() + std::arg(s.beta));
}

}  // namespace bgrace

#endif  // BGRACE_ELLIPSE_HPP
