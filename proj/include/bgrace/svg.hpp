#ifndef BGRACE_SVG_HPP
#define BGRACE_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "bgrace/chebyshev.hpp"
#include "bgrace/ellipse.hpp"
#include "bgrace/regularity.hpp"

namespace bgrace {

struct svg_options {
    bool polyline_ellipse = false;  // 64-segment polyline instead of <ellipse>
    int family_n = 0;               // draw rotated root images on family figures
    double family_theta = 0.35;
};

namespace detail {

// Fixed-width formatting keeps output byte-identical across runs.
inline std::string fmt(double x) {
    char buf[64];
    if (x == 0.0) x = 0.0;  // normalize -0
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

struct svg_builder {
    std::string body;
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;

    // math plane -> screen plane: y flips
    void grow(cplx z) {
        min_x = std::min(min_x, z.real());
        max_x = std::max(max_x, z.real());
        min_y = std::min(min_y, -z.imag());
        max_y = std::max(max_y, -z.imag());
    }

    void grow_ellipse(const ellipse& e) {
        const double a = e.semi_major(), b = e.semi_minor(), r = e.rotation();
        const double ex = std::sqrt(sqr(a * std::cos(r)) + sqr(b * std::sin(r)));
        const double ey = std::sqrt(sqr(a * std::sin(r)) + sqr(b * std::cos(r)));
        grow(e.center() + cplx(ex, ey));
        grow(e.center() - cplx(ex, ey));
    }

    void open_group(const std::string& id) { body += "  <g id=\"" + id + "\">\n"; }
    void close_group() { body += "  </g>\n"; }

    void polygon_path(const std::vector<cplx>& pts, const std::string& stroke, double width) {
        body += "    <polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body += " ";
            body += fmt(pts[i].real()) + "," + fmt(-pts[i].imag());
        }
        body += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
    }

    void dot(cplx z, double radius, const std::string& fill) {
        body += "    <circle cx=\"" + fmt(z.real()) + "\" cy=\"" + fmt(-z.imag()) + "\" r=\"" +
                fmt(radius) + "\" fill=\"" + fill + "\"/>\n";
    }

    void ellipse_element(const ellipse& e, const std::string& stroke, double width,
                         bool polyline) {
        if (polyline) {
            body += "    <polyline points=\"";
            for (int k = 0; k <= 64; ++k) {
                const cplx z = e.point_at(2.0 * pi * k / 64);
                if (k) body += " ";
                body += fmt(z.real()) + "," + fmt(-z.imag());
            }
            body += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) +
                    "\"/>\n";
            return;
        }
        const double cx = e.center().real(), cy = -e.center().imag();
        const double deg = -e.rotation() * 180.0 / pi;
        body += "    <ellipse cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" rx=\"" +
                fmt(e.semi_major()) + "\" ry=\"" + fmt(e.semi_minor()) + "\" transform=\"rotate(" +
                fmt(deg) + " " + fmt(cx) + " " + fmt(cy) + ")\" fill=\"none\" stroke=\"" + stroke +
                "\" stroke-width=\"" + fmt(width) + "\"/>\n";
    }

    std::string finish() const {
        const double w = max_x - min_x, h = max_y - min_y;
        const double margin = 0.1 * std::max({w, h, 1e-9});
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(min_x - margin) + " " +
               fmt(min_y - margin) + " " + fmt(w + 2 * margin) + " " + fmt(h + 2 * margin) +
               "\">\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

}  // namespace detail

// Figure for one verified instance, layered in a fixed order: polygon,
// midpoints, inscribed ellipse, critical points, foci.
inline std::string render_verification_figure(const verification_report& rep,
                                              const svg_options& opt = {}) {
    detail::svg_builder b;
    for (const cplx& v : rep.poly.vertices) b.grow(v);
    for (const cplx& c : rep.critical_pts) b.grow(c);
    if (rep.inellipse) b.grow_ellipse(*rep.inellipse);
    const double span = std::max(b.max_x - b.min_x, b.max_y - b.min_y);
    const double lw = 0.008 * span, mr = 0.014 * span;

    b.open_group("polygon");
    if (rep.poly.size() >= 3) b.polygon_path(rep.poly.vertices, "#1f77b4", lw);
    b.close_group();

    b.open_group("midpoints");
    if (rep.poly.size() >= 3)
        for (const cplx& m : midpoints(rep.poly).vertices) b.dot(m, mr, "#ff7f0e");
    b.close_group();

    b.open_group("ellipse");
    if (rep.inellipse) b.ellipse_element(*rep.inellipse, "#2ca02c", lw, opt.polyline_ellipse);
    b.close_group();

    b.open_group("critical-points");
    for (const cplx& c : rep.critical_pts) b.dot(c, mr, "#d62728");
    b.close_group();

    b.open_group("foci");
    if (rep.inellipse) {
        const auto [f1, f2] = rep.inellipse->foci();
        b.dot(f1, 0.8 * mr, "#9467bd");
        b.dot(f2, 0.8 * mr, "#9467bd");
    }
    b.close_group();

    return b.finish();
}

// Confocal family figure: ellipses with foci +-1, optionally the affine
// images of rotated roots of unity on the outermost member, and the roots of
// U_{n-1} on the real axis.
inline std::string render_family_figure(const std::vector<double>& s_values,
                                        const svg_options& opt = {}) {
    detail::svg_builder b;
    std::vector<ellipse> members;
    for (double s : s_values) {
        members.push_back(confocal_member(s));
        b.grow_ellipse(members.back());
    }
    b.grow(cplx(1.2, 0.0));
    b.grow(cplx(-1.2, 0.0));
    const double span = std::max(b.max_x - b.min_x, b.max_y - b.min_y);
    const double lw = 0.006 * span, mr = 0.012 * span;

    b.open_group("family");
    for (const ellipse& e : members) b.ellipse_element(e, "#1f77b4", lw, opt.polyline_ellipse);
    b.close_group();

    b.open_group("foci");
    b.dot(cplx(1.0, 0.0), mr, "#9467bd");
    b.dot(cplx(-1.0, 0.0), mr, "#9467bd");
    b.close_group();

    b.open_group("points");
    if (opt.family_n >= 3 && !s_values.empty()) {
        const double s = *std::max_element(s_values.begin(), s_values.end());
        for (const cplx& z :
             rotated_root_images(opt.family_n, opt.family_theta, std::cosh(s), std::sinh(s)))
            b.dot(z, mr, "#d62728");
    }
    b.close_group();

    b.open_group("u-roots");
    if (opt.family_n >= 2)
        for (double x : u_roots(opt.family_n)) b.dot(cplx(x, 0.0), 0.8 * mr, "#2ca02c");
    b.close_group();

    return b.finish();
}

}  // namespace bgrace

#endif  // BGRACE_SVG_HPP
