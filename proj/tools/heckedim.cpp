#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckedim/acceptance.hpp"
#include "heckedim/kernel_dim.hpp"
#include "heckedim/matrix_doc.hpp"
#include "heckedim/verify.hpp"

namespace {

using heckedim::CheckResult;
using heckedim::Rational;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Rational parse_positive_rational(const std::string& text, const std::string& flag) {
    auto r = Rational::parse(text);
    if (!r || r->sign() <= 0)
        throw std::runtime_error(flag + " must be a positive rational like 1/2, got '" + text + "'");
    return *r;
}

json rational_json(const Rational& r) {
    return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

json region_json(const heckedim::Region& r) {
    return json{{"prod", heckedim::cmp_str(r.prod)}, {"pair", heckedim::cmp_str(r.pair)}};
}

std::string region_text(const heckedim::Region& r) {
    auto rel = [](heckedim::Cmp c) {
        switch (c) {
            case heckedim::Cmp::lt: return "<";
            case heckedim::Cmp::eq: return "=";
            default: return ">";
        }
    };
    return std::string("qs*qt ") + rel(r.prod) + " 1, qs " + rel(r.pair) + " qt";
}

json cert_json(const heckedim::Cert& c) { return json::array({c.alpha, c.beta, c.gamma}); }

json checks_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const CheckResult& c : checks)
        arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return arr;
}

int print_checks(const std::vector<CheckResult>& checks, bool as_json, const char* mode,
                 const std::string& config) {
    bool all_pass = true;
    for (const CheckResult& c : checks) all_pass = all_pass && c.pass;
    if (as_json) {
        json doc{{"mode", mode},
                 {"input_digest", heckedim::text_digest(config)},
                 {"result", checks_json(checks)},
                 {"pass", all_pass}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const CheckResult& c : checks)
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail
                      << ")\n";
        std::cout << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    }
    return all_pass ? kExitOk : kExitCheckFailure;
}

int run_dim(const std::string& input_path, const std::string& qs_text,
            const std::string& qt_text, bool as_json) {
    const std::string text = read_input(input_path);
    const heckedim::MatrixDocument doc = heckedim::parse_matrix(text);
    const heckedim::Params p(parse_positive_rational(qs_text, "--qs"),
                             parse_positive_rational(qt_text, "--qt"));
    const heckedim::HeckeMatrix m = heckedim::eval_document(doc, &p);
    const heckedim::DimResult r = heckedim::dim_ker(m, p);
    if (as_json) {
        json out{{"mode", "dim"},
                 {"input_digest", heckedim::text_digest(text)},
                 {"params", json{{"qs", p.qs().str()}, {"qt", p.qt().str()}}},
                 {"result",
                  json{{"a", r.abc.a},
                       {"b", r.abc.b},
                       {"c", r.abc.c},
                       {"dim", rational_json(r.dim)},
                       {"cert", cert_json(r.cert)},
                       {"region", region_json(r.region)}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "matrix: " << m.rows() << "x" << m.cols() << " over basis "
                  << heckedim::basis_str(doc.basis) << "\n";
        std::cout << "params: qs = " << p.qs() << ", qt = " << p.qt() << "  ("
                  << region_text(r.region) << ")\n";
        std::cout << "counts: a = " << r.abc.a << ", b = " << r.abc.b << ", c = " << r.abc.c
                  << "\n";
        std::cout << "dim ker = " << r.dim << "\n";
        std::cout << "certificate: dim = " << r.cert.alpha << " + " << r.cert.beta
                  << "/(1+qs) + " << r.cert.gamma << "/(1+qt)\n";
    }
    return kExitOk;
}

int run_piecewise(const std::string& input_path, bool as_json) {
    const std::string text = read_input(input_path);
    const heckedim::MatrixDocument doc = heckedim::parse_matrix(text);
    if (doc.basis != heckedim::HBasis::group)
        throw std::runtime_error("piecewise mode requires a group-basis matrix");
    const heckedim::HeckeMatrix m = heckedim::eval_document(doc, nullptr);
    const heckedim::PiecewiseDim pw = heckedim::dim_piecewise(m);
    if (as_json) {
        json cells = json::array();
        for (const heckedim::PiecewiseCell& cell : pw.cells) {
            json samples = json::array();
            for (const heckedim::Params& p : cell.samples)
                samples.push_back(json{{"qs", p.qs().str()}, {"qt", p.qt().str()}});
            cells.push_back(json{{"region", region_json(cell.region)},
                                 {"a", cell.abc.a},
                                 {"b", cell.abc.b},
                                 {"c", cell.abc.c},
                                 {"cert", cert_json(cell.cert)},
                                 {"samples", samples}});
        }
        json out{{"mode", "piecewise"},
                 {"input_digest", heckedim::text_digest(text)},
                 {"result", cells}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "matrix: " << m.rows() << "x" << m.cols() << " over basis group\n";
        for (const heckedim::PiecewiseCell& cell : pw.cells) {
            std::cout << region_text(cell.region) << ":  a = " << cell.abc.a
                      << ", b = " << cell.abc.b << ", c = " << cell.abc.c << ",  dim = "
                      << cell.cert.alpha << " + " << cell.cert.beta << "/(1+qs) + "
                      << cell.cert.gamma << "/(1+qt)"
                      << "  [sample qs = " << cell.samples.front().qs()
                      << ", qt = " << cell.samples.front().qt() << "]\n";
        }
        std::cout << "continuity across the break curves: exact\n";
    }
    return kExitOk;
}

std::vector<heckedim::Params> parse_grid(const std::string& spec) {
    // "qs,qt;qs,qt;..." with rationals as p/q
    std::vector<heckedim::Params> out;
    std::stringstream ss(spec);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        if (pair.empty()) continue;
        const auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("--grid expects 'qs,qt;qs,qt;...', got '" + pair + "'");
        out.emplace_back(parse_positive_rational(pair.substr(0, comma), "--grid qs"),
                         parse_positive_rational(pair.substr(comma + 1), "--grid qt"));
    }
    if (out.empty()) throw std::runtime_error("--grid contained no parameter points");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact kernel dimensions over the Hecke algebra of the infinite dihedral group"};
    app.require_subcommand(1);

    std::string input_path = "-";
    std::string qs_text, qt_text, grid_text;
    bool as_json = false;
    std::int64_t depth = 12;
    std::uint64_t seed = 0;

    auto* dim = app.add_subcommand("dim", "kernel dimension at fixed parameters");
    dim->add_option("input", input_path, "matrix file ('-' for stdin)");
    dim->add_option("--qs", qs_text, "q_s as a rational p/q")->required();
    dim->add_option("--qt", qt_text, "q_t as a rational p/q")->required();
    dim->add_flag("--json", as_json, "JSON output");

    auto* pw = app.add_subcommand("piecewise", "region-by-region closed forms");
    pw->add_option("input", input_path, "matrix file ('-' for stdin)");
    pw->add_flag("--json", as_json, "JSON output");

    auto* verify = app.add_subcommand("verify", "spectral verification report");
    verify->add_option("--depth", depth, "truncation depth (default 12)");
    verify->add_option("--grid", grid_text, "parameter grid 'qs,qt;qs,qt;...'");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_flag("--json", as_json, "JSON output");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--seed", seed, "seed for randomized inputs");
    selftest->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // help/version requests exit clean; anything else is an input error
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand(dim)) return run_dim(input_path, qs_text, qt_text, as_json);
        if (app.got_subcommand(pw)) return run_piecewise(input_path, as_json);
        if (app.got_subcommand(verify)) {
            heckedim::VerifyOptions opts;
            opts.depth = depth;
            opts.seed = seed;
            if (!grid_text.empty()) opts.grid = parse_grid(grid_text);
            const std::string config = "verify depth=" + std::to_string(depth) +
                                       " seed=" + std::to_string(seed) + " grid=" +
                                       (grid_text.empty() ? "default" : grid_text);
            return print_checks(heckedim::run_verification(opts), as_json, "verify", config);
        }
        return print_checks(heckedim::run_acceptance(seed), as_json, "selftest",
                            "selftest seed=" + std::to_string(seed));
    } catch (const heckedim::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const heckedim::EvalError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
