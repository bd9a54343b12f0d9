// SPDX-License-Identifier: Apache-2.0
#include "csr/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csr/errors.hpp"
#include "csr/moments.hpp"
#include "csr/pattern.hpp"
#include "csr/sim.hpp"
#include "csr/spacings.hpp"
#include "csr/stat.hpp"

namespace csr {

namespace {

using nlohmann::json;

Window parse_window(const std::string& spec) {
    // syntax: x0:x1,y0:y1
    double v[4];
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw DomainError("window must be x0:x1,y0:y1");
    auto parse_range = [](const std::string& part, double& lo, double& hi) {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw DomainError("window must be x0:x1,y0:y1");
        std::size_t used = 0;
        lo = std::stod(part.substr(0, colon), &used);
        if (used != colon) throw DomainError("bad window bound in \"" + part + "\"");
        const std::string rest = part.substr(colon + 1);
        hi = std::stod(rest, &used);
        if (used != rest.size())
            throw DomainError("bad window bound in \"" + part + "\"");
    };
    parse_range(spec.substr(0, comma), v[0], v[1]);
    parse_range(spec.substr(comma + 1), v[2], v[3]);
    Window w{v[0], v[1], v[2], v[3]};
    validate(w);
    return w;
}

PointPattern read_pattern(const std::string& path, const Window& window) {
    std::ifstream file(path);
    if (!file) throw DomainError("cannot open input file \"" + path + "\"");
    return load_pattern(file, window);
}

json to_json(const MomentSet& m) {
    return json{{"mu", m.mu},
                {"eta", m.eta},
                {"c", m.c},
                {"sigma2", m.sigma2},
                {"method", std::string(to_string(m.method))},
                {"err", m.err},
                {"degenerate", m.degenerate}};
}

json to_json(const TestResult& r) {
    json j{{"statistic", r.statistic},
           {"n", r.n},
           {"z", r.z},
           {"p_asymptotic", r.p_asymptotic},
           {"g", r.g_name},
           {"moments", to_json(r.moments)},
           {"warnings", r.warnings}};
    if (r.p_monte_carlo)
        j["p_monte_carlo"] = *r.p_monte_carlo;
    else
        j["p_monte_carlo"] = nullptr;
    return j;
}

struct Cli {
    // shared
    std::string input;
    std::string window_spec = "0:1,0:1";
    std::string g_name = "square";
    std::string sided = "two";
    int nodes = 128;
    std::int64_t mc_samples = 0;
    std::uint64_t seed = 0;
    Index B = 0;
    Index n = 0;
    Index reps = 0;
    std::string n_grid = "32,128,512";
    double level = 0.05;
    // generator options
    std::string kind = "gradient";
    Index m = 1;
    Index parents = 10;
    double offspring_mean = 5.0;
    double radius = 0.1;
    double inhibition = 0.05;
    double beta = 2.0;
};

std::vector<Index> parse_index_list(const std::string& spec) {
    std::vector<Index> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::size_t used = 0;
        const long long v = std::stoll(token, &used);
        if (used != token.size() || v < 1)
            throw DomainError("bad entry \"" + token + "\" in list");
        out.push_back(static_cast<Index>(v));
    }
    if (out.empty()) throw DomainError("empty list");
    return out;
}

Sided parse_sided(const std::string& s) {
    if (s == "two") return Sided::two;
    if (s == "upper") return Sided::upper;
    if (s == "lower") return Sided::lower;
    throw DomainError("sided must be two, upper or lower");
}

int run_test(const Cli& cli, std::ostream& out) {
    const GFunction g = builtin(cli.g_name);
    const PointPattern pattern = read_pattern(cli.input, parse_window(cli.window_spec));
    const MomentSet moments = compute_moments(g, cli.nodes);
    TestResult result =
        asymptotic_test(pattern, g, moments, parse_sided(cli.sided));
    if (cli.B > 0)
        result.p_monte_carlo = mc_pvalue(pattern, g, moments, cli.B, cli.seed);
    out << to_json(result).dump(2) << "\n";
    return 0;
}

int run_moments(const Cli& cli, std::ostream& out) {
    const GFunction g = builtin(cli.g_name);
    const MomentSet m = cli.mc_samples > 0
                            ? mc_oracle(g, cli.mc_samples, cli.seed)
                            : compute_moments(g, cli.nodes);
    out << to_json(m).dump(2) << "\n";
    return 0;
}

int run_simulate(const Cli& cli, std::ostream& out) {
    const GFunction g = builtin(cli.g_name);
    const MomentSet moments = compute_moments(g, cli.nodes);
    const NormalityReport report =
        normality_diagnostic(g, moments, cli.n, cli.reps, cli.seed);
    out << json{{"n", report.n},
                {"reps", report.reps},
                {"g", report.g_name},
                {"mean_z", report.mean_z},
                {"var_z", report.var_z},
                {"ks_distance", report.ks_distance},
                {"seed", report.seed}}
               .dump(2)
        << "\n";
    return 0;
}

int run_remainder(const Cli& cli, std::ostream& out) {
    const GFunction g = builtin(cli.g_name);
    const MomentSet moments = compute_moments(g, cli.nodes);
    const auto values = remainder_diagnostic(g, moments, parse_index_list(cli.n_grid),
                                             cli.reps, cli.seed);
    json rows = json::array();
    for (const auto& [n, v] : values)
        rows.push_back(json{{"n", n}, {"mean_r2_over_n3", v}});
    out << json{{"g", g.name}, {"reps", cli.reps}, {"seed", cli.seed}, {"values", rows}}
               .dump(2)
        << "\n";
    return 0;
}

int run_power(const Cli& cli, std::ostream& out) {
    const GFunction g = builtin(cli.g_name);
    const MomentSet moments = compute_moments(g, cli.nodes);
    GeneratorSpec spec;
    spec.kind = generator_kind_from(cli.kind);
    spec.m = cli.m;
    spec.parent_count = cli.parents;
    spec.offspring_mean = cli.offspring_mean;
    spec.radius = cli.radius;
    spec.inhibition_distance = cli.inhibition;
    spec.beta = cli.beta;
    const double power = power_estimate(spec, g, moments, cli.level, cli.reps,
                                        cli.B, cli.seed);
    out << json{{"kind", std::string(to_string(spec.kind))},
                {"g", g.name},
                {"m", spec.m},
                {"level", cli.level},
                {"reps", cli.reps},
                {"B", cli.B},
                {"seed", cli.seed},
                {"power", power}}
               .dump(2)
        << "\n";
    return 0;
}

int run_spacings(const Cli& cli, std::ostream& out) {
    const PointPattern pattern = read_pattern(cli.input, parse_window(cli.window_spec));
    const SpacingsGrid grid = compute_grid(rescale_to_unit(pattern));
    std::string buffer = "i,j,a_ij\n";
    char line[96];
    for (Index i = 0; i < grid.n; ++i) {
        for (Index j = 0; j < grid.n; ++j) {
            std::snprintf(line, sizeof line, "%lld,%lld,%.17g\n",
                          static_cast<long long>(i + 1),
                          static_cast<long long>(j + 1), grid.area(i, j));
            buffer += line;
        }
    }
    out << buffer;
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"two-dimensional spacings tests for complete spatial randomness"};
    app.require_subcommand(1);
    Cli cli;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--g", cli.g_name, "kernel name");
        sub->add_option("--nodes", cli.nodes, "quadrature refinement target")
            ->check(CLI::Range(16, 1 << 20));
        sub->add_option("--seed", cli.seed, "RNG seed");
    };

    CLI::App* test = app.add_subcommand("test", "CSR test on a point pattern");
    test->add_option("--input", cli.input, "CSV file of x,y points")->required();
    test->add_option("--window", cli.window_spec, "window x0:x1,y0:y1");
    test->add_option("--sided", cli.sided, "two|upper|lower");
    test->add_option("--mc", cli.B, "Monte Carlo replicates (adds p_monte_carlo)")
        ->check(CLI::Range(static_cast<Index>(99), static_cast<Index>(1) << 30));
    add_common(test);

    CLI::App* moments = app.add_subcommand("moments", "limiting moments of a kernel");
    moments->add_option("--mc-samples", cli.mc_samples, "Monte Carlo oracle samples")
        ->check(CLI::Range(static_cast<std::int64_t>(10000),
                           static_cast<std::int64_t>(1) << 40));
    add_common(moments);

    CLI::App* simulate = app.add_subcommand("simulate", "null normality diagnostic");
    simulate->add_option("--n", cli.n, "spacings count per axis")
        ->required()
        ->check(CLI::Range(static_cast<Index>(2), static_cast<Index>(1) << 30));
    simulate->add_option("--reps", cli.reps, "replicates")
        ->required()
        ->check(CLI::Range(static_cast<Index>(200), static_cast<Index>(1) << 30));
    add_common(simulate);

    CLI::App* remainder =
        app.add_subcommand("diagnose-remainder", "remainder decay diagnostic");
    remainder->add_option("--n-grid", cli.n_grid, "ascending comma list of n");
    remainder->add_option("--reps", cli.reps, "replicates per n")
        ->required()
        ->check(CLI::Range(static_cast<Index>(200), static_cast<Index>(1) << 30));
    add_common(remainder);

    CLI::App* power = app.add_subcommand("power", "power study against an alternative");
    power->add_option("--kind", cli.kind, "uniform|matern_cluster|ssi|gradient");
    power->add_option("--m", cli.m, "points per pattern")->required();
    power->add_option("--level", cli.level, "test level");
    power->add_option("--reps", cli.reps, "generated patterns")->required();
    power->add_option("--B", cli.B, "Monte Carlo replicates per pattern")
        ->required()
        ->check(CLI::Range(static_cast<Index>(99), static_cast<Index>(1) << 30));
    power->add_option("--parents", cli.parents, "matern_cluster parent count");
    power->add_option("--offspring-mean", cli.offspring_mean,
                      "matern_cluster offspring mean");
    power->add_option("--radius", cli.radius, "matern_cluster disk radius");
    power->add_option("--inhibition", cli.inhibition, "ssi inhibition distance");
    power->add_option("--beta", cli.beta, "gradient exponent");
    add_common(power);

    CLI::App* spacings = app.add_subcommand("spacings", "dump the n x n area grid");
    spacings->add_option("--input", cli.input, "CSV file of x,y points")->required();
    spacings->add_option("--window", cli.window_spec, "window x0:x1,y0:y1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (test->parsed()) return run_test(cli, out);
        if (moments->parsed()) return run_moments(cli, out);
        if (simulate->parsed()) return run_simulate(cli, out);
        if (remainder->parsed()) return run_remainder(cli, out);
        if (power->parsed()) return run_power(cli, out);
        if (spacings->parsed()) return run_spacings(cli, out);
    } catch (const Error& e) {
        err << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace csr
