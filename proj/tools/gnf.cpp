// gnf: evaluate catalogued R-matrices and twists, run verification suites,
// and tabulate inter-family limits.
//
// Subcommands
//   emit    print one evaluated matrix as JSON (or flattened CSV)
//   check   run a verification suite, one NDJSON report per line + summary
//   limits  tabulate a convergence limit as CSV
//
// Exit codes: 0 success, 1 failed checks, 2 usage or parameter errors.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gnf/gnf.hpp>

namespace {

using gnf::Complex;
using gnf::Mat;
using json = nlohmann::json;

// ----------------------------------------------------------------- helpers

[[nodiscard]] std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Parse "1.5", "2,3" (re,im) or "1+2i" / "-0.5i" forms.
[[nodiscard]] std::optional<Complex> parse_complex(const std::string& text) {
    const auto to_double = [](const std::string& s) -> std::optional<double> {
        if (s.empty()) return std::nullopt;
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size()) return std::nullopt;
        return v;
    };
    const auto comma = text.find(',');
    if (comma != std::string::npos) {
        const auto re = to_double(text.substr(0, comma));
        const auto im = to_double(text.substr(comma + 1));
        if (!re || !im) return std::nullopt;
        return Complex(*re, *im);
    }
    if (!text.empty() && (text.back() == 'i' || text.back() == 'I')) {
        const std::string body = text.substr(0, text.size() - 1);
        // split at the sign of the imaginary part (skip a leading sign and
        // exponent signs)
        for (std::size_t k = body.size(); k-- > 1;) {
            const char c = body[k];
            if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                const auto re = to_double(body.substr(0, k));
                std::string ims = body.substr(k);
                if (ims == "+" || ims == "-") ims += "1";
                const auto im = to_double(ims);
                if (!re || !im) return std::nullopt;
                return Complex(*re, *im);
            }
        }
        const std::string ims = body.empty() ? "1" : (body == "-" ? "-1" : body);
        const auto im = to_double(ims);
        if (!im) return std::nullopt;
        return Complex(0.0, *im);
    }
    const auto re = to_double(text);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
}

[[noreturn]] void fail_structured(const std::string& type, const std::string& message) {
    json err;
    err["error"] = {{"type", type}, {"message", message}};
    std::printf("%s\n", err.dump().c_str());
    std::exit(2);
}

[[nodiscard]] Complex require_complex(const std::string& text, const std::string& flag) {
    const auto v = parse_complex(text);
    if (!v) fail_structured("usage", "cannot parse complex value '" + text + "' for " + flag);
    return *v;
}

// ----------------------------------------------------------------- emit

struct EmitArgs {
    std::string family;
    int N = 2;
    bool n_set = false;
    std::string branch;   // baxterised branch
    std::string variant;  // elliptic diagonal variant
    std::string u, z;     // spectral (additive / multiplicative)
    std::string q, r, p;  // deformation parameters
    std::vector<std::string> w, x, s;  // dynamical coordinates by chart
    bool normalized = false;
    std::string format = "json";
};

void append_coord_params(json& params, const char* key,
                         const std::vector<Complex>& coords) {
    json arr = json::array();
    for (const Complex& c : coords)
        arr.push_back(json::array({c.real(), c.imag()}));
    params[key] = arr;
}

int cmd_emit(const EmitArgs& a) {
    std::map<std::string, std::string> opts;
    if (a.n_set) opts["N"] = std::to_string(a.N);
    if (!a.branch.empty()) opts["a"] = a.branch;
    if (!a.variant.empty()) opts["variant"] = a.variant;

    gnf::catalog::RMatrixFamily fam = gnf::catalog::make_family(a.family, opts);

    gnf::catalog::EvalPoint pt;
    pt.normalized = a.normalized;
    if (!a.u.empty() && !a.z.empty())
        fail_structured("usage", "give either --u or --z, not both");
    if (!a.u.empty()) pt.spectral = require_complex(a.u, "--u");
    if (!a.z.empty()) pt.spectral = require_complex(a.z, "--z");
    if (!a.q.empty()) pt.params["q"] = require_complex(a.q, "--q");
    if (!a.r.empty()) pt.params["r"] = require_complex(a.r, "--r");
    if (!a.p.empty()) pt.params["p"] = require_complex(a.p, "--p");

    if (fam.dyn_rank > 0) {
        const char* key = nullptr;
        const std::vector<std::string>* src = nullptr;
        switch (*fam.dyn_chart) {
            case gnf::gt::Chart::W_COORDS: key = "w"; src = &a.w; break;
            case gnf::gt::Chart::X_COORDS: key = "x"; src = &a.x; break;
            case gnf::gt::Chart::S_COORDS: key = "s"; src = &a.s; break;
        }
        if (static_cast<int>(src->size()) != fam.dyn_rank)
            fail_structured("usage", "family '" + fam.name + "' needs exactly " +
                                         std::to_string(fam.dyn_rank) + " --" + key +
                                         " coordinates");
        std::vector<Complex> coords;
        coords.reserve(src->size());
        for (const std::string& t : *src)
            coords.push_back(require_complex(t, std::string("--") + key));
        pt.dyn = gnf::gt::DynParams{coords, *fam.dyn_chart};
    }

    const Mat R = fam(pt);

    json params;
    if (a.n_set) params["N"] = a.N;
    if (!a.branch.empty()) params["a"] = a.branch;
    if (!a.variant.empty()) params["variant"] = a.variant;
    if (pt.spectral) {
        const char* key = fam.spectral == gnf::catalog::Spectral::MULT ? "z" : "u";
        params[key] = json::array({pt.spectral->real(), pt.spectral->imag()});
    }
    for (const auto& [k, v] : pt.params)
        params[k] = json::array({v.real(), v.imag()});
    if (pt.dyn) {
        const char* key = pt.dyn->chart == gnf::gt::Chart::W_COORDS   ? "w"
                          : pt.dyn->chart == gnf::gt::Chart::X_COORDS ? "x"
                                                                      : "s";
        append_coord_params(params, key, pt.dyn->coords);
    }
    params["normalized"] = a.normalized;

    if (a.format == "csv") {
        std::printf("row,col,re,im\n");
        for (Eigen::Index i = 0; i < R.rows(); ++i)
            for (Eigen::Index j = 0; j < R.cols(); ++j)
                std::printf("%lld,%lld,%s,%s\n", static_cast<long long>(i),
                            static_cast<long long>(j), fmt17(R(i, j).real()).c_str(),
                            fmt17(R(i, j).imag()).c_str());
        return 0;
    }
    if (a.format != "json")
        fail_structured("usage", "unknown --format '" + a.format + "' (json or csv)");

    // hand-formatted entries: %.17g keeps doubles bit-identical on re-parse
    std::string entries = "[";
    for (Eigen::Index i = 0; i < R.rows(); ++i)
        for (Eigen::Index j = 0; j < R.cols(); ++j) {
            if (i != 0 || j != 0) entries += ",";
            entries += "[" + fmt17(R(i, j).real()) + "," + fmt17(R(i, j).imag()) + "]";
        }
    entries += "]";

    json head;
    head["family"] = fam.name;
    head["params"] = params;
    head["dim"] = static_cast<int>(R.rows());
    head["graded"] = fam.graded_output;
    std::string out = head.dump();
    out.insert(out.size() - 1, ",\"entries\":" + entries);
    std::printf("%s\n", out.c_str());
    return 0;
}

// ----------------------------------------------------------------- check

int cmd_check(const std::string& suite, std::uint64_t seed, int samples, bool ci) {
    gnf::verify::SuiteConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.ci = ci;
    if (const char* env = std::getenv("GNF_TOL_OVERRIDE")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) cfg.tol_override = v;
    }

    const auto reports = gnf::verify::run_suite(suite, cfg);
    int failed = 0;
    for (const auto& rep : reports) {
        json line;
        line["identity"] = rep.identity;
        line["family"] = rep.family;
        line["params"] = rep.params;
        line["residual"] = rep.residual;
        line["tol"] = rep.tol;
        line["pass"] = rep.pass;
        line["runtime_ms"] = rep.runtime_ms;
        std::printf("%s\n", line.dump().c_str());
        if (!rep.pass) ++failed;
    }
    json summary;
    summary["suite"] = suite;
    summary["reports"] = reports.size();
    summary["failed"] = failed;
    summary["pass"] = failed == 0;
    summary["seed"] = seed;
    summary["samples"] = samples;
    std::printf("%s\n", summary.dump().c_str());
    return failed == 0 ? 0 : 1;
}

// ----------------------------------------------------------------- limits

int cmd_limits(const std::string& which, const std::vector<double>& grid, int N) {
    if (grid.empty()) fail_structured("usage", "limits: --grid must not be empty");
    for (const double v : grid)
        if (!(v > 0.0) || !std::isfinite(v))
            fail_structured("usage", "limits: grid values must be positive");
    gnf::verify::LimitOutcome outcome;
    if (which == "p0") {
        std::vector<Complex> w = {Complex(1.3, 0.4), Complex(0.52, -0.33),
                                  Complex(3.1, 0.7)};
        w.resize(static_cast<std::size_t>(N));
        outcome = gnf::verify::limit_p_to_0(N, Complex(0.45, 0.08), w,
                                            Complex(0.37, 0.21), grid, 1e-3);
    } else if (which == "scaling") {
        std::vector<Complex> x = {Complex(0.9, 0.2), Complex(8.3, -0.4),
                                  Complex(16.1, 0.3)};
        x.resize(static_cast<std::size_t>(N));
        outcome = gnf::verify::limit_scaling(N, Complex(0.7, 0.15), x, grid, 1e-3);
    } else {
        fail_structured("usage", "limits: --which must be p0 or scaling");
    }
    std::printf("parameter,max_entry_gap,decay_ratio\n");
    for (const auto& row : outcome.rows) {
        if (std::isnan(row.ratio))
            std::printf("%s,%s,\n", fmt17(row.param).c_str(), fmt17(row.gap).c_str());
        else
            std::printf("%s,%s,%s\n", fmt17(row.param).c_str(), fmt17(row.gap).c_str(),
                        fmt17(row.ratio).c_str());
    }
    return outcome.report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evaluated R-matrices and Drinfel'd twists: emit, check, limits"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a TOML-style config file");

    // ---- emit
    EmitArgs ea;
    CLI::App* emit = app.add_subcommand("emit", "evaluate one catalogued matrix");
    emit->add_option("--family", ea.family, "family name")->required();
    emit->add_option("--N", ea.N, "rank for sl_N families")->check(CLI::Range(2, 12));
    emit->add_option("--a", ea.branch, "Baxterisation branch: -q or q3");
    emit->add_option("--variant", ea.variant, "elliptic diagonal variant: standard or gauged");
    emit->add_option("--u", ea.u, "additive spectral parameter (re / re,im / a+bi)");
    emit->add_option("--z", ea.z, "multiplicative spectral parameter");
    emit->add_option("--q", ea.q, "deformation parameter q");
    emit->add_option("--r", ea.r, "shift scale r");
    emit->add_option("--p", ea.p, "elliptic nome p");
    emit->add_option("--w", ea.w, "multiplicative dynamical coordinates (repeat per coordinate)");
    emit->add_option("--x", ea.x, "additive dynamical coordinates (repeat per coordinate)");
    emit->add_option("--s", ea.s, "shifted additive dynamical coordinates (repeat per coordinate)");
    emit->add_flag("--normalized", ea.normalized, "drop the scalar normalization factor");
    emit->add_option("--format", ea.format, "json (default) or csv");

    // ---- check
    std::string suite = "all";
    std::uint64_t seed = 1;
    int samples = 20;
    bool ci = false;
    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("--suite", suite, "suite name or 'all'");
    check->add_option("--seed", seed, "sampler seed");
    check->add_option("--samples", samples, "sampling effort per identity")
        ->check(CLI::Range(1, 10000));
    check->add_flag("--ci", ci, "CI mode: GNF_TOL_OVERRIDE may only tighten");

    // ---- limits
    std::string which;
    std::vector<double> grid;
    int limN = 2;
    CLI::App* limits = app.add_subcommand("limits", "tabulate a convergence limit");
    limits->add_option("--which", which, "p0 or scaling")->required();
    limits->add_option("--grid", grid, "limit parameter values (decreasing)")
        ->delimiter(',')
        ->expected(0, 64);
    limits->add_option("--N", limN, "rank")->check(CLI::Range(2, 3));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fflush(stdout);
        json err;
        err["error"] = {{"type", "usage"}, {"message", e.what()}};
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 2;
    }

    try {
        if (emit->parsed()) {
            ea.n_set = emit->count("--N") > 0;
            return cmd_emit(ea);
        }
        if (check->parsed()) return cmd_check(suite, seed, samples, ci);
        if (limits->parsed()) {
            if (grid.empty()) {
                if (limits->count("--grid") > 0)
                    fail_structured("usage", "limits: --grid must not be empty");
                grid = which == "scaling"
                           ? std::vector<double>{1e-1, 1e-2, 1e-3, 1e-4}
                           : std::vector<double>{1e-2, 1e-3, 1e-4};
            }
            return cmd_limits(which, grid, limN);
        }
    } catch (const gnf::singular_parameter_error& e) {
        fail_structured("singular_parameter", e.what());
    } catch (const gnf::convergence_error& e) {
        fail_structured("convergence", e.what());
    } catch (const std::invalid_argument& e) {
        fail_structured("usage", e.what());
    } catch (const std::domain_error& e) {
        fail_structured("domain", e.what());
    } catch (const std::exception& e) {
        fail_structured("internal", e.what());
    }
    return 2;
}
