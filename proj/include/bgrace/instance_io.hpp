#ifndef BGRACE_INSTANCE_IO_HPP
#define BGRACE_INSTANCE_IO_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bgrace/polynomial.hpp"
#include "bgrace/regularity.hpp"
#include "bgrace/version.hpp"

namespace bgrace {

using json = nlohmann::json;

// Raised for malformed or inconsistent instance documents; the CLI maps it
// to exit code 3.
struct document_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class instance_kind { polynomial_coeffs, roots, polygon };

inline std::string to_string(instance_kind k) {
    switch (k) {
        case instance_kind::polynomial_coeffs: return "polynomial-coeffs";
        case instance_kind::roots: return "roots";
        case instance_kind::polygon: return "polygon";
    }
    return "?";
}

// One problem instance: a polynomial by ascending coefficients, a root
// multiset, or an ordered polygon. Complex numbers travel as [re, im].
struct instance_document {
    instance_kind kind = instance_kind::roots;
    std::vector<cplx> data;
    std::optional<int> n;
    std::map<std::string, std::string> meta;
};

namespace detail {

inline cplx parse_complex_entry(const json& j, std::size_t index) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw document_error("data[" + std::to_string(index) + "]: expected [re, im]");
    const cplx z(j[0].get<double>(), j[1].get<double>());
    if (!is_finite(z))
        throw document_error("data[" + std::to_string(index) + "]: non-finite component");
    return z;
}

inline json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace detail

inline instance_document parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw document_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw document_error("top level must be an object");

    instance_document doc;
    if (!j.contains("kind") || !j["kind"].is_string())
        throw document_error("missing string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "polynomial-coeffs")
        doc.kind = instance_kind::polynomial_coeffs;
    else if (kind == "roots")
        doc.kind = instance_kind::roots;
    else if (kind == "polygon")
        doc.kind = instance_kind::polygon;
    else
        throw document_error("kind '" + kind + "' is not one of polynomial-coeffs|roots|polygon");

    if (!j.contains("data") || !j["data"].is_array() || j["data"].empty())
        throw document_error("missing nonempty array field 'data'");
    for (std::size_t i = 0; i < j["data"].size(); ++i)
        doc.data.push_back(detail::parse_complex_entry(j["data"][i], i));

    if (j.contains("n")) {
        if (!j["n"].is_number_integer()) throw document_error("'n' must be an integer");
        doc.n = j["n"].get<int>();
    }
    if (j.contains("meta")) {
        if (!j["meta"].is_object()) throw document_error("'meta' must be a string map");
        for (const auto& [k, v] : j["meta"].items()) {
            if (!v.is_string()) throw document_error("meta['" + k + "'] must be a string");
            doc.meta[k] = v.get<std::string>();
        }
    }
    if (doc.kind == instance_kind::polynomial_coeffs) {
        if (j.contains("coefficient_order") &&
            j["coefficient_order"].get<std::string>() != "ascending")
            throw document_error("only ascending coefficient_order is supported");
        if (doc.n && *doc.n != static_cast<int>(doc.data.size()) - 1)
            throw document_error("'n' does not match the coefficient count (degree + 1 entries)");
    } else {
        if (doc.n && *doc.n != static_cast<int>(doc.data.size()))
            throw document_error("'n' does not match the number of points");
        if (doc.kind == instance_kind::polygon && doc.data.size() < 3)
            throw document_error("a polygon needs at least 3 vertices");
    }
    return doc;
}

// Deterministic emission (keys sorted, fixed layout): parse -> emit is a
// fixed point on emitted documents.
inline std::string emit_instance(const instance_document& doc) {
    json j;
    j["schema"] = "bgrace-instance/1";
    j["kind"] = to_string(doc.kind);
    if (doc.kind == instance_kind::polynomial_coeffs) j["coefficient_order"] = "ascending";
    j["data"] = json::array();
    for (const cplx& z : doc.data) j["data"].push_back(detail::complex_to_json(z));
    if (doc.n) j["n"] = *doc.n;
    if (!doc.meta.empty()) j["meta"] = doc.meta;
    return j.dump(2) + "\n";
}

inline complex_polynomial to_polynomial(const instance_document& doc) {
    if (doc.kind == instance_kind::polynomial_coeffs) {
        const complex_polynomial p{std::vector<cplx>(doc.data)};
        if (p.is_zero()) throw document_error("coefficients describe the zero polynomial");
        return p;
    }
    return complex_polynomial::from_roots(doc.data);
}

// The polygon view of a document. Polygon documents keep their vertex order
// (a convex clockwise sequence is reversed to counterclockwise); root and
// coefficient documents get the canonical counterclockwise ordering.
inline polygon to_polygon(const instance_document& doc) {
    if (doc.kind == instance_kind::polygon) {
        polygon p{doc.data};
        if (!is_convex_ccw(p)) {
            polygon rev{std::vector<cplx>(doc.data.rbegin(), doc.data.rend())};
            if (is_convex_ccw(rev)) return rev;
        }
        return p;
    }
    if (doc.kind == instance_kind::roots) return polygon_from_points(doc.data);
    return polygon_from_points(find_roots(to_polynomial(doc)));
}

// --- reports ---------------------------------------------------------------

inline const char* to_string(verdict_class v) {
    switch (v) {
        case verdict_class::pass: return "pass";
        case verdict_class::fail: return "fail";
        case verdict_class::hypothesis_not_satisfied: return "hypothesis-not-satisfied";
    }
    return "?";
}

inline json to_json(const regularity_fit& f) {
    return json{{"accepted", f.accepted},
                {"beta_zero", f.beta_zero},
                {"alpha", detail::complex_to_json(f.alpha)},
                {"beta", detail::complex_to_json(f.beta)},
                {"gamma", detail::complex_to_json(f.gamma)},
                {"n", f.n},
                {"residual", f.residual},
                {"rejection", f.rejection}};
}

inline json to_json(const critical_form& f) {
    return json{{"accepted", f.accepted},
                {"beta_zero", f.beta_zero},
                {"alpha", detail::complex_to_json(f.alpha)},
                {"beta", detail::complex_to_json(f.beta)},
                {"n", f.n},
                {"residual", f.residual},
                {"spread", f.spread},
                {"rejection", f.rejection}};
}

inline json to_json(const ellipse& e) {
    const auto [f1, f2] = e.foci();
    return json{{"center", detail::complex_to_json(e.center())},
                {"semi_major", e.semi_major()},
                {"semi_minor", e.semi_minor()},
                {"rotation", e.rotation()},
                {"eccentricity", e.eccentricity()},
                {"foci", json::array({detail::complex_to_json(f1), detail::complex_to_json(f2)})}};
}

inline json report_to_json(const verification_report& rep, const verify_tolerances& tol,
                           double duration_seconds) {
    json j;
    j["schema"] = "bgrace-report/1";
    j["tool_version"] = version_string;
    j["verdict"] = rep.verdict();
    j["verdict_class"] = to_string(rep.vclass);
    j["diagnostic"] = rep.diagnostic;
    j["degree"] = rep.degree;
    j["scale"] = rep.scale;
    j["duration_seconds"] = duration_seconds;
    j["tolerances"] = json{{"regular", tol.regular},     {"critical", tol.critical},
                           {"focus", tol.focus},         {"tangency", tol.tangency},
                           {"midpoint", tol.midpoint},   {"beta_floor", tol.beta_floor},
                           {"tol_root", tol.roots.tol_root}};
    j["roots"] = json::array();
    for (const cplx& r : rep.roots) j["roots"].push_back(detail::complex_to_json(r));
    j["critical_points"] = json::array();
    for (const cplx& r : rep.critical_pts) j["critical_points"].push_back(detail::complex_to_json(r));
    if (rep.critical) j["critical_form"] = to_json(*rep.critical);
    if (rep.regularity) j["regularity"] = to_json(*rep.regularity);
    if (rep.inellipse) {
        j["ellipse"] = to_json(*rep.inellipse);
        j["midpoint_residual"] = rep.midpoint_residual;
        j["tangency_residuals"] = rep.tangency_residuals;
        j["focus_error"] = rep.focus_error;
        j["form_foci"] = json::array({detail::complex_to_json(rep.form_foci.first),
                                      detail::complex_to_json(rep.form_foci.second)});
    }
    return j;
}

inline std::string report_to_text(const verification_report& rep) {
    std::ostringstream os;
    os.precision(12);
    os << "verdict: " << to_string(rep.vclass);
    if (!rep.diagnostic.empty()) os << " (" << rep.diagnostic << ")";
    os << "\ndegree: " << rep.degree << "  scale: " << rep.scale << "\n";
    if (rep.critical) {
        os << "critical form: alpha=" << rep.critical->alpha << " beta=" << rep.critical->beta
           << " residual=" << rep.critical->residual << "\n";
    }
    if (rep.regularity) {
        os << "regularity: alpha=" << rep.regularity->alpha << " beta=" << rep.regularity->beta
           << " gamma=" << rep.regularity->gamma << " residual=" << rep.regularity->residual
           << "\n";
    }
    if (rep.inellipse) {
        const auto [f1, f2] = rep.inellipse->foci();
        os << "inscribed ellipse: center=" << rep.inellipse->center()
           << " axes=(" << rep.inellipse->semi_major() << ", " << rep.inellipse->semi_minor()
           << ") rotation=" << rep.inellipse->rotation() << "\n"
           << "foci: " << f1 << ", " << f2 << "\n"
           << "midpoint residual: " << rep.midpoint_residual << "\n"
           << "max tangency discriminant: "
           << (rep.tangency_residuals.empty()
                   ? 0.0
                   : *std::max_element(rep.tangency_residuals.begin(), rep.tangency_residuals.end()))
           << "\nfocus error: " << rep.focus_error << "\n";
    }
    return os.str();
}

}  // namespace bgrace

#endif  // BGRACE_INSTANCE_IO_HPP
