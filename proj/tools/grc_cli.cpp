// Command-line front end: builds the code families, emits generator
// matrices, geometry tables and weight distributions, and runs the
// verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 desk-scale guard exceeded.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grc/io.hpp"

namespace {

using nlohmann::json;

struct Config {
    std::string family = "grassmann";
    int l = 2;
    int m = 4;
    long q = 0;
    long p = 0;
    int e = 1;
    std::string format = "text";
    std::string out;
    std::vector<std::string> suites;
    int trials = 50;
};

std::pair<long, int> split_prime_power(long q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    for (long p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        long v = q;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (v != 1) throw std::invalid_argument("q is not a prime power");
        return {p, e};
    }
    return {q, 1};  // q prime
}

grc::Fq make_field(Config& cfg) {
    if (cfg.q > 0) {
        auto [p, e] = split_prime_power(cfg.q);
        cfg.p = p;
        cfg.e = e;
    }
    if (cfg.p <= 0) throw std::invalid_argument("provide --q or --p/--e");
    grc::Fq f(cfg.p, cfg.e);
    cfg.q = f.size();
    return f;
}

grc::LinearCode build_code(const grc::Grassmannian& g, const std::string& family) {
    if (family == "grassmann") return grc::grassmann_code(g);
    if (family == "affine") return grc::affine_grassmann_code(g);
    if (family == "schubert") return grc::schubert_code(g);
    throw std::invalid_argument("unknown family: " + family);
}

std::ostream& open_out(const Config& cfg, std::ofstream& file) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out);
    if (!file) throw std::runtime_error("cannot open output file: " + cfg.out);
    return file;
}

json report_json(const grc::Report& rep) {
    json arr = json::array();
    for (const grc::CheckResult& c : rep)
        arr.push_back({{"check", c.id},
                       {"params", c.params},
                       {"predicted", c.predicted},
                       {"observed", c.observed},
                       {"status", c.pass ? "PASS" : "FAIL"}});
    return arr;
}

int run_params(Config& cfg) {
    grc::Fq f = make_field(cfg);
    grc::Grassmannian g(f, cfg.l, cfg.m);
    grc::LinearCode code = build_code(g, cfg.family);
    const int d = grc::min_distance(code);
    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.format == "json") {
        os << json({{"family", cfg.family},
                    {"l", cfg.l},
                    {"m", cfg.m},
                    {"q", cfg.q},
                    {"n", code.length()},
                    {"k", code.dim()},
                    {"d", d}})
                  .dump()
           << "\n";
    } else if (cfg.format == "csv") {
        os << "family,l,m,q,n,k,d\n"
           << cfg.family << "," << cfg.l << "," << cfg.m << "," << cfg.q << "," << code.length()
           << "," << code.dim() << "," << d << "\n";
    } else {
        os << "n=" << code.length() << " k=" << code.dim() << " d=" << d << "\n";
    }
    return 0;
}

int run_genmat(Config& cfg) {
    grc::Fq f = make_field(cfg);
    grc::Grassmannian g(f, cfg.l, cfg.m);
    grc::LinearCode code = build_code(g, cfg.family);
    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.format == "json") {
        json rows = json::array();
        for (int i = 0; i < code.dim(); ++i) {
            json row = json::array();
            for (int j = 0; j < code.length(); ++j) row.push_back(code.genmat.at(i, j).to_string());
            rows.push_back(row);
        }
        os << json({{"family", cfg.family},
                    {"l", cfg.l},
                    {"m", cfg.m},
                    {"q", cfg.q},
                    {"columns", code.col_labels},
                    {"rows", rows}})
                  .dump()
           << "\n";
    } else {
        grc::write_genmat_csv(os, code);
    }
    return 0;
}

int run_geometry(Config& cfg) {
    grc::Fq f = make_field(cfg);
    grc::Grassmannian g(f, cfg.l, cfg.m);
    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.format == "json") {
        json pts = json::array();
        for (int i = 0; i < g.num_points(); ++i)
            pts.push_back({{"index", i},
                           {"stratum", g.stratum_of(i)},
                           {"basis", g.point(i).to_string()},
                           {"plucker", g.plucker_of(i).to_string()}});
        os << json({{"l", cfg.l}, {"m", cfg.m}, {"q", cfg.q}, {"points", pts}}).dump() << "\n";
    } else {
        grc::write_geometry_csv(os, g);
    }
    return 0;
}

int run_weights(Config& cfg) {
    grc::Fq f = make_field(cfg);
    grc::Grassmannian g(f, cfg.l, cfg.m);
    grc::LinearCode code = build_code(g, cfg.family);
    const auto hist = grc::weight_distribution(code);
    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& [w, c] : hist) arr.push_back({{"weight", w}, {"count", c}});
        os << json({{"family", cfg.family}, {"l", cfg.l}, {"m", cfg.m}, {"q", cfg.q},
                    {"distribution", arr}})
                  .dump()
           << "\n";
    } else {
        grc::write_weights_csv(os, hist);
    }
    return 0;
}

int run_verify(Config& cfg) {
    grc::Fq f = make_field(cfg);
    std::set<std::string> wanted(cfg.suites.begin(), cfg.suites.end());
    if (wanted.empty() || wanted.count("all")) {
        wanted = {"hodge", "kernel", "maxlin", "strata", "chow",
                  "orders", "paut", "macwilliams", "schubert"};
    }
    const std::set<std::string> known{"hodge", "kernel", "maxlin", "strata", "chow",
                                      "orders", "paut", "macwilliams", "schubert"};
    for (const std::string& s : wanted)
        if (!known.count(s)) throw std::invalid_argument("unknown suite: " + s);

    grc::Report rep;
    auto append = [&rep](const grc::Report& r) { rep.insert(rep.end(), r.begin(), r.end()); };

    if (wanted.count("kernel")) append(grc::kernel_checks(f, cfg.l, cfg.m));
    if (wanted.count("hodge")) append(grc::hodge_checks(f, cfg.l, cfg.m));

    const bool needs_geometry = wanted.count("maxlin") || wanted.count("strata") ||
                                wanted.count("chow") || wanted.count("orders") ||
                                wanted.count("paut") || wanted.count("macwilliams") ||
                                wanted.count("schubert");
    if (needs_geometry) {
        grc::Grassmannian g(f, cfg.l, cfg.m);
        if (wanted.count("maxlin")) append(grc::maxlin_checks(g));
        if (wanted.count("strata")) append(grc::strata_checks(g));
        if (wanted.count("chow")) append(grc::chow_checks(g));
        if (wanted.count("orders")) append(grc::orders_checks(g));
        if (wanted.count("paut")) append(grc::paut_checks(g));
        if (wanted.count("schubert")) append(grc::schubert_checks(g));
        if (wanted.count("macwilliams"))
            append(grc::macwilliams_checks(build_code(g, cfg.family), cfg.trials));
    }

    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.format == "json")
        os << report_json(rep).dump() << "\n";
    else
        grc::write_report_csv(os, rep);
    return grc::report_passed(rep) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grassmann, affine Grassmann and Schubert-divisor codes over F_q"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&cfg](CLI::App* sub, bool with_family) {
        sub->add_option("--l", cfg.l, "subspace dimension l");
        sub->add_option("--m", cfg.m, "ambient dimension m");
        sub->add_option("--q", cfg.q, "field size (prime power)");
        sub->add_option("--p", cfg.p, "field characteristic");
        sub->add_option("--e", cfg.e, "field extension degree");
        sub->add_option("--format", cfg.format, "text | csv | json");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        if (with_family) sub->add_option("--family", cfg.family, "grassmann | affine | schubert");
    };

    CLI::App* params = app.add_subcommand("params", "code parameters [n, k, d]");
    add_common(params, true);
    CLI::App* genmat = app.add_subcommand("genmat", "emit the generator matrix");
    add_common(genmat, true);
    CLI::App* geometry = app.add_subcommand("geometry", "emit the point table");
    add_common(geometry, false);
    CLI::App* weights = app.add_subcommand("weights", "emit the weight distribution");
    add_common(weights, true);
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, true);
    verify->add_option("--suite", cfg.suites,
                       "hodge|kernel|maxlin|strata|chow|orders|paut|macwilliams|schubert|all");
    verify->add_option("--trials", cfg.trials, "equivalence trials per direction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*params) return run_params(cfg);
        if (*genmat) return run_genmat(cfg);
        if (*geometry) return run_geometry(cfg);
        if (*weights) return run_weights(cfg);
        if (*verify) return run_verify(cfg);
    } catch (const grc::guard_error& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
