#ifndef BGRACE_CLI_HPP
#define BGRACE_CLI_HPP

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bgrace/instance_io.hpp"
#include "bgrace/regularity.hpp"
#include "bgrace/svg.hpp"
#include "bgrace/version.hpp"

namespace bgrace::cli {

// Exit codes: 0 pass, 1 theorem-verdict fail, 2 hypothesis not satisfied,
// 3 input/usage error.
enum exit_code { exit_pass = 0, exit_fail = 1, exit_hypothesis = 2, exit_input = 3 };

namespace detail {

inline cplx parse_complex_flag(const std::string& s) {
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return cplx(std::stod(s), 0.0);
        return cplx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    } catch (const std::exception&) {
        throw document_error("cannot parse complex number '" + s + "' (expected re or re,im)");
    }
}

inline std::string read_input(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw document_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline int write_output(const std::string& path, const std::string& content, std::ostream& out,
                        std::ostream& err) {
    if (path.empty() || path == "-") {
        out << content;
        return exit_pass;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot write to '" << path << "'\n";
        return exit_input;
    }
    f << content;
    if (!f.good()) {
        err << "error: short write to '" << path << "'\n";
        return exit_input;
    }
    return exit_pass;
}

struct verify_flags {
    std::string input = "-";
    std::string output;
    std::string format = "json";
    verify_tolerances tol;
};

inline void add_tolerance_flags(CLI::App* cmd, verify_tolerances& tol) {
    cmd->add_option("--tol-regular", tol.regular, "regularity residual tolerance (relative)");
    cmd->add_option("--tol-critical", tol.critical, "critical-form residual tolerance (relative)");
    cmd->add_option("--tol-focus", tol.focus, "focus-error tolerance (relative)");
    cmd->add_option("--tol-tangency", tol.tangency, "tangency discriminant tolerance");
    cmd->add_option("--tol-midpoint", tol.midpoint, "midpoint residual tolerance (relative)");
    cmd->add_option("--tol-root", tol.roots.tol_root, "root-finder convergence tolerance");
}

inline int exit_for(const verification_report& rep) {
    switch (rep.vclass) {
        case verdict_class::pass: return exit_pass;
        case verdict_class::fail: return exit_fail;
        case verdict_class::hypothesis_not_satisfied: return exit_hypothesis;
    }
    return exit_input;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polygon inellipse toolkit: critical points, affinely regular polygons and "
                 "their midpoint inellipses"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    // verify
    detail::verify_flags vf;
    auto* verify = app.add_subcommand("verify",
                                      "check that the inscribed midpoint ellipse of the root "
                                      "polygon has the extreme critical points as foci");
    verify->add_option("input", vf.input, "instance document path or '-' for stdin");
    verify->add_option("-o,--output", vf.output, "write the report here instead of stdout");
    verify->add_option("--format", vf.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    detail::add_tolerance_flags(verify, vf.tol);

    // synthesize
    struct {
        int n = 0;
        std::string scale, offset, sim_alpha, sim_beta;
        std::uint64_t seed = 12345;
        std::string output;
    } sf;
    auto* synth = app.add_subcommand(
        "synthesize", "construct a root system whose critical points are alpha + beta cos(k pi/n)");
    synth->add_option("--n", sf.n, "polygon size (>= 3)")->required();
    synth->add_option("--scale", sf.scale, "leading coefficient scale, re[,im]");
    synth->add_option("--offset", sf.offset, "constant offset, re[,im]");
    synth->add_option("--sim-alpha", sf.sim_alpha, "similarity translation, re[,im]");
    synth->add_option("--sim-beta", sf.sim_beta, "similarity rotation-scale, re[,im]");
    synth->add_option("--seed", sf.seed, "seed for any parameter left unspecified");
    synth->add_option("-o,--output", sf.output, "write the instance document here");

    // detect
    struct {
        std::string input = "-", output, format = "json";
        double tol = 1e-6;
    } df;
    auto* detect = app.add_subcommand("detect", "test a polygon for affine regularity");
    detect->add_option("input", df.input, "instance document path or '-'");
    detect->add_option("-o,--output", df.output, "output path");
    detect->add_option("--format", df.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    detect->add_option("--tol-regular", df.tol, "regularity residual tolerance (relative)");

    // inellipse
    struct {
        std::string input = "-", output, format = "json";
        double tol = 1e-6;
    } ef;
    auto* inell = app.add_subcommand("inellipse",
                                     "construct the inscribed ellipse through the side midpoints");
    inell->add_option("input", ef.input, "instance document path or '-'");
    inell->add_option("-o,--output", ef.output, "output path");
    inell->add_option("--format", ef.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    inell->add_option("--tol-regular", ef.tol, "regularity residual tolerance (relative)");

    // cheb-lemma
    struct {
        int n = 0;
        double s = 1.0;
        int grid = 100;
    } cf;
    auto* cheb = app.add_subcommand("cheb-lemma",
                                    "check the 2pi/n periodicity of T_n on a confocal ellipse");
    cheb->add_option("--n", cf.n, "Chebyshev degree (>= 1)")->required();
    cheb->add_option("--s", cf.s, "confocal parameter (> 0)");
    cheb->add_option("--grid", cf.grid, "number of sample points");

    // plot
    struct {
        std::string input, output, family;
        int n = 0;
        double theta = 0.35;
        bool polyline = false;
        verify_tolerances tol;
    } pf;
    auto* plot = app.add_subcommand("plot", "emit an SVG figure");
    plot->add_option("input", pf.input, "instance document path or '-'");
    plot->add_option("-o,--output", pf.output, "SVG output path")->required();
    plot->add_option("--family", pf.family, "comma-separated confocal parameters s1,s2,...");
    plot->add_option("--n", pf.n, "polygon size for the family figure");
    plot->add_option("--theta", pf.theta, "rotation for the family figure root images");
    plot->add_flag("--polyline-ellipse", pf.polyline, "draw ellipses as 64-segment polylines");
    detail::add_tolerance_flags(plot, pf.tol);

    std::vector<const char*> argv;
    argv.push_back("bgrace");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForVersion&) {
        out << version_string << "\n";
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    try {
        if (verify->parsed()) {
            const instance_document doc = parse_instance(detail::read_input(vf.input));
            const complex_polynomial p = to_polynomial(doc);
            const auto t0 = std::chrono::steady_clock::now();
            const verification_report rep = verify_bocher_grace(p, vf.tol);
            const double secs = std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0).count();
            std::string body = vf.format == "text"
                                   ? report_to_text(rep)
                                   : report_to_json(rep, vf.tol, secs).dump(2) + "\n";
            const int werr = detail::write_output(vf.output, body, out, err);
            if (werr != exit_pass) return werr;
            if (!rep.diagnostic.empty()) err << rep.diagnostic << "\n";
            return detail::exit_for(rep);
        }

        if (synth->parsed()) {
            if (sf.n < 3) {
                err << "error: need a polygon (n >= 3)\n";
                return exit_input;
            }
            std::mt19937_64 rng(sf.seed);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            const cplx scale = sf.scale.empty() ? cplx(double(sf.n))
                                                : detail::parse_complex_flag(sf.scale);
            cplx offset;
            if (sf.offset.empty()) {
                // pick a level comfortably off the degenerate segment
                const double s0 = 0.25 + 0.75 * unit(rng);
                const double psi = 2.0 * pi * unit(rng);
                const cplx big = std::exp(cplx(sf.n * s0, sf.n * psi));
                offset = -(big + 1.0 / big) * 0.5 * scale / double(sf.n);
            } else {
                offset = detail::parse_complex_flag(sf.offset);
            }
            const cplx sim_a = sf.sim_alpha.empty()
                                   ? cplx(unit(rng) - 0.5, unit(rng) - 0.5)
                                   : detail::parse_complex_flag(sf.sim_alpha);
            const cplx sim_b = sf.sim_beta.empty()
                                   ? std::polar(0.6 + 0.8 * unit(rng), 2.0 * pi * unit(rng))
                                   : detail::parse_complex_flag(sf.sim_beta);
            const std::vector<cplx> roots =
                synthesize_roots(sf.n, scale, offset, conformal_similarity(sim_a, sim_b));
            instance_document doc;
            doc.kind = instance_kind::roots;
            doc.data = roots;
            doc.n = sf.n;
            doc.meta["source"] = "synthesize";
            doc.meta["seed"] = std::to_string(sf.seed);
            return detail::write_output(sf.output, emit_instance(doc), out, err);
        }

        if (detect->parsed()) {
            const instance_document doc = parse_instance(detail::read_input(df.input));
            const polygon p = to_polygon(doc);
            const regularity_fit fit = detect_affinely_regular(p, df.tol);
            std::string body;
            if (df.format == "text") {
                std::ostringstream ss;
                ss.precision(12);
                ss << (fit.accepted ? "affinely regular" : "not affinely regular");
                if (fit.beta_zero) ss << " (beta=0: similarity image of the regular polygon)";
                if (!fit.rejection.empty()) ss << " (" << fit.rejection << ")";
                ss << "\nresidual: " << fit.residual << "  scale: " << p.scale() << "\n";
                body = ss.str();
            } else {
                body = to_json(fit).dump(2) + "\n";
            }
            const int werr = detail::write_output(df.output, body, out, err);
            if (werr != exit_pass) return werr;
            return fit.accepted ? exit_pass : exit_fail;
        }

        if (inell->parsed()) {
            const instance_document doc = parse_instance(detail::read_input(ef.input));
            const polygon p = to_polygon(doc);
            const regularity_fit fit = detect_affinely_regular(p, ef.tol);
            if (!fit.accepted) {
                err << "no midpoint inellipse: " << fit.rejection << "\n";
                return exit_hypothesis;
            }
            const ellipse e = inscribed_midpoint_ellipse(fit);
            std::string body;
            if (ef.format == "text") {
                std::ostringstream ss;
                ss.precision(12);
                const auto [f1, f2] = e.foci();
                ss << "center: " << e.center() << "\naxes: (" << e.semi_major() << ", "
                   << e.semi_minor() << ")\nrotation: " << e.rotation() << "\nfoci: " << f1
                   << ", " << f2 << "\n";
                body = ss.str();
            } else {
                body = to_json(e).dump(2) + "\n";
            }
            const int werr = detail::write_output(ef.output, body, out, err);
            if (werr != exit_pass) return werr;
            return exit_pass;
        }

        if (cheb->parsed()) {
            if (cf.n < 1 || !(cf.s > 0.0) || cf.grid < 1) {
                err << "error: need n >= 1, s > 0 and grid >= 1\n";
                return exit_input;
            }
            const ellipse_trace_params params = ellipse_trace_params::from_confocal(cf.s);
            double periodicity = 0.0, closed_vs_direct = 0.0;
            for (int k = 0; k < cf.grid; ++k) {
                const double t = 2.0 * pi * k / cf.grid;
                const cplx direct = cheb_t(cf.n, params.point_at(t));
                const cplx shifted = cheb_t(cf.n, params.point_at(t + 2.0 * pi / cf.n));
                const double ref = std::max(1.0, std::abs(direct));
                periodicity = std::max(periodicity, std::abs(direct - shifted) / ref);
                closed_vs_direct = std::max(
                    closed_vs_direct, std::abs(cheb_on_ellipse(cf.n, params, t) - direct) / ref);
            }
            out.precision(6);
            out << "max periodicity residual:     " << periodicity << "\n"
                << "closed form vs direct T_n:    " << closed_vs_direct << "\n";
            return (periodicity <= 1e-9 && closed_vs_direct <= 1e-9) ? exit_pass : exit_fail;
        }

        if (plot->parsed()) {
            svg_options opt;
            opt.polyline_ellipse = pf.polyline;
            std::string body;
            if (!pf.family.empty()) {
                std::vector<double> ss;
                std::stringstream stream(pf.family);
                std::string tok;
                while (std::getline(stream, tok, ',')) ss.push_back(std::stod(tok));
                opt.family_n = pf.n;
                opt.family_theta = pf.theta;
                body = render_family_figure(ss, opt);
            } else {
                const instance_document doc = parse_instance(detail::read_input(pf.input));
                const verification_report rep = verify_bocher_grace(to_polynomial(doc), pf.tol);
                body = render_verification_figure(rep, opt);
            }
            return detail::write_output(pf.output, body, out, err);
        }
    } catch (const document_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}

inline int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace bgrace::cli

#endif  // BGRACE_CLI_HPP
