// Command-line front end: every subcommand prints one deterministic report
// (json or csv) on stdout. Exit codes: 0 success, 2 usage error, 3 resource
// or precision error.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ventropy/bounds.hpp"
#include "ventropy/entropy_oracle.hpp"
#include "ventropy/errors.hpp"
#include "ventropy/lattice.hpp"
#include "ventropy/multiplier.hpp"
#include "ventropy/product.hpp"
#include "ventropy/radix.hpp"
#include "ventropy/vilenkin.hpp"

using json = nlohmann::json;
using namespace ventropy;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double parse_exponent(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF")
        return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw input_error("bad exponent '" + text + "'");
    }
    if (used != text.size() || !(v >= 1.0))
        throw input_error("exponent must be a number >= 1 or 'inf': " + text);
    return v;
}

NormMode parse_mode(const std::string& text) {
    if (text == "euclid") return NormMode::Euclid;
    if (text == "max") return NormMode::Max;
    throw input_error("norm mode must be 'euclid' or 'max': " + text);
}

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw input_error(std::string("bad value in environment variable ") + name);
    }
}

struct Output {
    std::string command;
    bool csv = false;
    json config = json::object();
    std::vector<std::string> columns;
    std::vector<json> rows;  // each row: array aligned with columns

    void emit() const {
        if (!csv) {
            json doc;
            doc["command"] = command;
            doc["config"] = config;
            json jrows = json::array();
            for (const auto& r : rows) {
                json obj = json::object();
                for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = r[c];
                jrows.push_back(obj);
            }
            doc["rows"] = jrows;
            std::cout << doc.dump(2) << "\n";
            return;
        }
        std::cout << "# command=" << command << "\n";
        for (const auto& [key, value] : config.items())
            std::cout << "# " << key << "=" << (value.is_string() ? value.get<std::string>()
                                                                  : value.dump())
                      << "\n";
        // full precision always; a second human-rounded column for real values
        std::vector<bool> is_float(columns.size(), false);
        for (std::size_t c = 0; c < columns.size(); ++c)
            is_float[c] = !rows.empty() && rows.front()[c].is_number_float();
        for (std::size_t c = 0; c < columns.size(); ++c) {
            std::cout << (c ? "," : "") << columns[c];
            if (is_float[c]) std::cout << "," << columns[c] << "_rounded";
        }
        std::cout << "\n";
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                const auto& v = r[c];
                std::cout << (c ? "," : "");
                if (is_float[c]) {
                    std::cout << fmt17(v.get<double>()) << "," << fmt6(v.get<double>());
                } else if (v.is_string()) {
                    std::cout << v.get<std::string>();
                } else {
                    std::cout << v.dump();
                }
            }
            std::cout << "\n";
        }
    }
};

struct CommonOpts {
    std::string format = "json";
    unsigned workers = 1;
    std::optional<std::uint64_t> seed;
    std::uint64_t grid_budget = 0;
    std::uint64_t scan_budget = 0;
    std::uint64_t work_budget = 0;

    void attach(CLI::App* cmd, bool stochastic) {
        cmd->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--workers", workers, "internal parallelism (output-invariant)");
        auto* s = cmd->add_option("--seed", seed, "random stream seed");
        if (stochastic) s->required();
        grid_budget = env_budget("VENTROPY_GRID_BUDGET", kDefaultGridBudget);
        scan_budget = env_budget("VENTROPY_SCAN_BUDGET", kDefaultLevelScanBudget);
        work_budget = env_budget("VENTROPY_WORK_BUDGET", kDefaultLatticeWork);
    }

    Output output(const std::string& command) const {
        Output out;
        out.command = command;
        out.csv = format == "csv";
        out.config["workers"] = workers;
        if (seed) out.config["seed"] = *seed;
        out.config["grid_budget"] = grid_budget;
        out.config["scan_budget"] = scan_budget;
        out.config["work_budget"] = work_budget;
        return out;
    }
};

ProductSpec resolve_factors(const std::string& factors, unsigned d) {
    if (!factors.empty()) return ProductSpec::parse(factors);
    return ProductSpec::walsh(d);
}

int run(int argc, char** argv) {
    CLI::App app{"Vilenkin systems, multiplier operators and entropy-number bound "
                 "expressions"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    // --- vilenkin-table ------------------------------------------------
    auto* table_cmd = app.add_subcommand("vilenkin-table", "ordering table of Z_n / Z~_n");
    std::string table_radix = "2";
    std::uint64_t table_count = 16;
    std::string table_ordering = "z";
    CommonOpts table_opts;
    table_cmd->add_option("--radix", table_radix, "radix pattern, e.g. 3 or 2,3")->required();
    table_cmd->add_option("--count", table_count, "number of rows")->required();
    table_cmd->add_option("--ordering", table_ordering, "z or ztilde (affects nothing but "
                          "the highlighted column order)")
        ->check(CLI::IsMember({"z", "ztilde"}));
    table_opts.attach(table_cmd, false);

    // --- classify -------------------------------------------------------
    auto* classify_cmd = app.add_subcommand("classify", "digits, group inverse and K/L/M class");
    std::string classify_radix = "2";
    std::uint64_t classify_n = 0;
    CommonOpts classify_opts;
    classify_cmd->add_option("--radix", classify_radix)->required();
    classify_cmd->add_option("--n", classify_n)->required();
    classify_opts.attach(classify_cmd, false);

    // --- lattice ---------------------------------------------------------
    auto* lattice_cmd = app.add_subcommand("lattice", "layer counts and envelope constants");
    unsigned lattice_d = 2;
    std::string lattice_mode = "euclid";
    std::uint64_t lattice_lmax = 20;
    CommonOpts lattice_opts;
    lattice_cmd->add_option("--d", lattice_d)->required();
    lattice_cmd->add_option("--mode", lattice_mode)->check(CLI::IsMember({"euclid", "max"}));
    lattice_cmd->add_option("--lmax", lattice_lmax)->required();
    lattice_opts.attach(lattice_cmd, false);

    // --- project -----------------------------------------------------------
    auto* project_cmd = app.add_subcommand(
        "project", "spherical partial sum filter on a coefficient JSON from stdin");
    double project_r = 0;
    std::string project_mode = "euclid";
    project_cmd->add_option("--R", project_r)->required();
    project_cmd->add_option("--mode", project_mode)->check(CLI::IsMember({"euclid", "max"}));

    // --- levy --------------------------------------------------------------
    auto* levy_cmd = app.add_subcommand("levy", "Monte-Carlo Levy mean of a window norm");
    std::string levy_factors;
    unsigned levy_d = 1;
    std::int64_t levy_m1 = -1, levy_m2 = 3;
    std::string levy_mode = "max", levy_p = "2";
    std::uint64_t levy_samples = 100000;
    CommonOpts levy_opts;
    levy_cmd->add_option("--factors", levy_factors, "';'-separated: v:<pattern>, v~:<pattern>, trig");
    levy_cmd->add_option("--d", levy_d, "dimension (Walsh factors) when --factors is absent");
    levy_cmd->add_option("--m1", levy_m1, "window lower layer (exclusive)");
    levy_cmd->add_option("--m2", levy_m2, "window upper layer (inclusive)")->required();
    levy_cmd->add_option("--mode", levy_mode)->check(CLI::IsMember({"euclid", "max"}));
    levy_cmd->add_option("--p", levy_p, "norm exponent or inf");
    levy_cmd->add_option("--samples", levy_samples);
    levy_opts.attach(levy_cmd, true);

    // --- bounds -------------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "bound-envelope expressions");
    std::string bounds_verb;
    std::string bounds_multiplier = "finite:gamma=1,xi=0";
    std::string bounds_norm = "euclid";
    std::uint64_t bounds_k = 10;
    std::string bounds_p = "2", bounds_q = "2";
    unsigned bounds_d = 1;
    double bounds_eps = 0.5, bounds_r = 1.0, bounds_gamma = 1.0;
    std::string bounds_volume = "surrogate";
    std::uint64_t bounds_samples = 100000;
    std::string bounds_factors;
    std::int64_t bounds_m1 = -1, bounds_m2 = 3;
    CommonOpts bounds_opts;
    bounds_cmd->add_option("verb", bounds_verb, "lower | upper | chi | constants | levy")
        ->required()
        ->check(CLI::IsMember({"lower", "upper", "chi", "constants", "levy"}));
    bounds_cmd->add_option("--multiplier", bounds_multiplier,
                           "finite:gamma=G,xi=X or exp:gamma=G,r=R");
    bounds_cmd->add_option("--norm", bounds_norm)->check(CLI::IsMember({"euclid", "max"}));
    bounds_cmd->add_option("--k", bounds_k);
    bounds_cmd->add_option("--p", bounds_p);
    bounds_cmd->add_option("--q", bounds_q);
    bounds_cmd->add_option("--d", bounds_d);
    bounds_cmd->add_option("--eps", bounds_eps);
    bounds_cmd->add_option("--r", bounds_r, "exponential rate (constants verb)");
    bounds_cmd->add_option("--gamma", bounds_gamma, "decay coefficient (constants verb)");
    bounds_cmd->add_option("--volume-mode", bounds_volume)
        ->check(CLI::IsMember({"surrogate", "mc"}));
    bounds_cmd->add_option("--samples", bounds_samples);
    bounds_cmd->add_option("--factors", bounds_factors);
    bounds_cmd->add_option("--m1", bounds_m1);
    bounds_cmd->add_option("--m2", bounds_m2);
    bounds_opts.attach(bounds_cmd, false);

    // --- entropy --------------------------------------------------------------
    auto* entropy_cmd = app.add_subcommand("entropy", "covering/volumetric bracket for a "
                                           "diagonal section");
    std::string entropy_diag = "1";
    std::string entropy_p = "2", entropy_q = "2";
    int entropy_k = 3;
    std::uint64_t entropy_budget = 20000;
    CommonOpts entropy_opts;
    entropy_cmd->add_option("--diag", entropy_diag, "comma-separated diagonal values")
        ->required();
    entropy_cmd->add_option("--p", entropy_p);
    entropy_cmd->add_option("--q", entropy_q);
    entropy_cmd->add_option("--k", entropy_k)->required();
    entropy_cmd->add_option("--budget", entropy_budget);
    entropy_opts.attach(entropy_cmd, true);

    // --- urysohn ---------------------------------------------------------------
    auto* urysohn_cmd = app.add_subcommand("urysohn", "volume-radius vs support-average check");
    std::string urysohn_body = "euclid";
    int urysohn_n = 2;
    std::uint64_t urysohn_samples = 100000;
    CommonOpts urysohn_opts;
    urysohn_cmd->add_option("--body", urysohn_body)
        ->check(CLI::IsMember({"euclid", "sup", "one"}));
    urysohn_cmd->add_option("--n", urysohn_n)->required();
    urysohn_cmd->add_option("--samples", urysohn_samples);
    urysohn_opts.attach(urysohn_cmd, true);

    // --- keps ---------------------------------------------------------------------
    auto* keps_cmd = app.add_subcommand("keps", "summability-class membership evidence");
    std::string keps_multiplier = "finite:gamma=1.5,xi=0";
    std::string keps_norm = "euclid";
    double keps_eps = 0.4, keps_p = 2.0;
    unsigned keps_d = 1;
    std::uint64_t keps_nmin = 2, keps_nmax = 64, keps_step = 1;
    CommonOpts keps_opts;
    keps_cmd->add_option("--multiplier", keps_multiplier)->required();
    keps_cmd->add_option("--norm", keps_norm)->check(CLI::IsMember({"euclid", "max"}));
    keps_cmd->add_option("--eps", keps_eps)->required();
    keps_cmd->add_option("--p", keps_p);
    keps_cmd->add_option("--d", keps_d);
    keps_cmd->add_option("--nmin", keps_nmin);
    keps_cmd->add_option("--nmax", keps_nmax);
    keps_cmd->add_option("--step", keps_step);
    keps_opts.attach(keps_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic on stderr
        return 2;
    }

    if (table_cmd->parsed()) {
        const auto radix = RadixSequence::parse(table_radix);
        Output out = table_opts.output("vilenkin-table");
        out.config["radix"] = table_radix;
        out.config["count"] = table_count;
        out.config["ordering"] = table_ordering;
        out.columns = {"n", "digits", "ominus", "class", "z", "ztilde"};
        for (std::uint64_t n = 0; n < table_count; ++n) {
            const TableRow row = table_row(n, radix);
            std::string digits;
            for (std::size_t i = 0; i < row.digits.entries.size(); ++i)
                digits += (i ? "." : "") + std::to_string(row.digits.entries[i]);
            out.rows.push_back(json::array({row.n, digits, row.ominus_n,
                                            std::string(1, parity_label(row.cls)),
                                            row.z.to_string(), row.ztilde.to_string()}));
        }
        out.emit();
        return 0;
    }

    if (classify_cmd->parsed()) {
        const auto radix = RadixSequence::parse(classify_radix);
        Output out = classify_opts.output("classify");
        out.config["radix"] = classify_radix;
        out.config["n"] = classify_n;
        out.columns = {"n", "digits", "ominus", "class", "methods_agree"};
        const TableRow row = table_row(classify_n, radix);
        std::string digits;
        for (std::size_t i = 0; i < row.digits.entries.size(); ++i)
            digits += (i ? "." : "") + std::to_string(row.digits.entries[i]);
        const bool agree = classify(classify_n, radix, ClassifyMethod::Direct) ==
                           classify(classify_n, radix, ClassifyMethod::FastRule);
        out.rows.push_back(json::array({row.n, digits, row.ominus_n,
                                        std::string(1, parity_label(row.cls)), agree}));
        out.emit();
        return 0;
    }

    if (lattice_cmd->parsed()) {
        const NormMode mode = parse_mode(lattice_mode);
        Output out = lattice_opts.output("lattice");
        out.config["d"] = lattice_d;
        out.config["mode"] = lattice_mode;
        out.config["lmax"] = lattice_lmax;
        const LayerCounts table = layer_table(lattice_d, mode, lattice_lmax,
                                              lattice_opts.work_budget);
        if (lattice_d >= 2) {
            const PropositionReport rep = proposition_check(lattice_d, mode, lattice_lmax,
                                                            lattice_opts.work_budget);
            out.config["theta"] = rep.theta;
            out.config["E"] = rep.E;
            out.config["F"] = rep.F;
            out.config["c_prime"] = rep.c_prime;
            out.config["c_dim"] = rep.c_dim;
            out.config["lower_dim_ok"] = rep.lower_dim_ok;
            out.config["envelope_ok"] = rep.ok;
            out.config["ratio_min"] = rep.ratio_min;
            out.config["ratio_max"] = rep.ratio_max;
        }
        out.columns = {"l", "count_A", "layer_dim", "dim_T"};
        for (const auto& row : table.rows)
            out.rows.push_back(json::array({row.l, row.count_A, row.layer_dim, row.count_A}));
        out.emit();
        return 0;
    }

    if (project_cmd->parsed()) {
        std::string text((std::istreambuf_iterator<char>(std::cin)),
                         std::istreambuf_iterator<char>());
        const auto f = CoefficientVector::from_json(text);
        std::cout << spherical_partial_sum(f, project_r, parse_mode(project_mode)).to_json()
                  << "\n";
        return 0;
    }

    const auto levy_report = [&](const CommonOpts& opts, Output out, const std::string& factors,
                                 unsigned d, std::int64_t m1, std::int64_t m2,
                                 const std::string& mode_text, const std::string& p_text,
                                 std::uint64_t samples) {
        const ProductSpec spec = resolve_factors(factors, d);
        const LayerWindow window(m1, m2, parse_mode(mode_text));
        const double p = parse_exponent(p_text);
        const auto est = levy_mean_estimate(window, spec, p, samples, *opts.seed,
                                            opts.workers, opts.grid_budget);
        out.config["factors"] = spec.to_string();
        out.config["m1"] = m1;
        out.config["m2"] = m2;
        out.config["mode"] = mode_text;
        out.config["p"] = p_text;
        out.config["samples"] = samples;
        out.columns = {"n", "estimate", "mean_sq", "stderr_mean_sq", "stderr_estimate"};
        out.rows.push_back(json::array(
            {est.n, est.estimate, est.mean_sq, est.stderr_mean_sq, est.stderr_estimate}));
        out.emit();
    };

    if (levy_cmd->parsed()) {
        levy_report(levy_opts, levy_opts.output("levy"), levy_factors, levy_d, levy_m1,
                    levy_m2, levy_mode, levy_p, levy_samples);
        return 0;
    }

    if (bounds_cmd->parsed()) {
        const NormMode mode = parse_mode(bounds_norm);
        Output out = bounds_opts.output("bounds " + bounds_verb);
        if (bounds_verb == "constants") {
            const auto c = constants(bounds_d, bounds_r, bounds_gamma);
            out.config["d"] = bounds_d;
            out.config["r"] = bounds_r;
            out.config["gamma"] = bounds_gamma;
            out.columns = {"c_euclid", "c_max"};
            out.rows.push_back(json::array({c.c, c.c_star}));
            out.emit();
            return 0;
        }
        if (bounds_verb == "levy") {
            if (!bounds_opts.seed) throw input_error("bounds levy requires --seed");
            levy_report(bounds_opts, out, bounds_factors, bounds_d, bounds_m1, bounds_m2,
                        bounds_norm, bounds_p, bounds_samples);
            return 0;
        }
        const auto spec = MultiplierSpec::parse(bounds_multiplier, mode);
        out.config["multiplier"] = bounds_multiplier;
        out.config["norm"] = bounds_norm;
        out.config["d"] = bounds_d;
        out.config["k"] = bounds_k;
        out.config["constants_normalized"] = true;
        if (bounds_verb == "lower") {
            const double p = parse_exponent(bounds_p), q = parse_exponent(bounds_q);
            const auto rep = lower_bound_expr(spec, bounds_k, p, q, bounds_d,
                                              bounds_opts.work_budget);
            out.config["p"] = bounds_p;
            out.config["q"] = bounds_q;
            out.columns = {"value", "n_opt", "dim_n", "product_term", "sigma", "lambda_n_opt",
                           "v_factor"};
            out.rows.push_back(json::array({rep.value, rep.n_opt, rep.dim_n, rep.product_term,
                                            rep.sigma, rep.lambda_n_opt, rep.v_factor}));
        } else if (bounds_verb == "chi") {
            const double q = parse_exponent(bounds_q);
            const VolumeMode vm = bounds_volume == "mc" ? VolumeMode::MonteCarlo
                                                        : VolumeMode::Surrogate;
            if (vm == VolumeMode::MonteCarlo && !bounds_opts.seed)
                throw input_error("chi with --volume-mode mc requires --seed");
            std::optional<ProductSpec> mc_spec;
            if (vm == VolumeMode::MonteCarlo)
                mc_spec = resolve_factors(bounds_factors, bounds_d);
            const auto rep =
                chi_k(spec, bounds_k, q, bounds_d, vm, mc_spec, bounds_samples,
                      bounds_opts.seed.value_or(1), bounds_opts.work_budget);
            out.config["q"] = bounds_q;
            out.config["volume_mode"] = bounds_volume;
            out.columns = {"value", "n_opt", "dim_n"};
            out.rows.push_back(json::array({rep.value, rep.n_opt, rep.dim_n}));
        } else {  // upper
            const double p = parse_exponent(bounds_p), q = parse_exponent(bounds_q);
            const auto rep = upper_bound_expr(spec, bounds_k, p, q, bounds_d, bounds_eps,
                                              bounds_opts.work_budget,
                                              bounds_opts.scan_budget);
            out.config["p"] = bounds_p;
            out.config["q"] = bounds_q;
            out.config["eps"] = bounds_eps;
            std::string m_split;
            for (std::size_t i = 0; i < rep.m.size(); ++i)
                m_split += (i ? "." : "") + std::to_string(rep.m[i]);
            out.columns = {"value", "index", "chi", "N", "lambda_N", "b", "dim_n", "theta12",
                           "M", "m_split", "sum_m", "eta", "head_term", "tail_sum"};
            out.rows.push_back(json::array({rep.value, rep.index, rep.chi, rep.N, rep.lambda_N,
                                            rep.b, rep.dim_n, rep.theta12, rep.M, m_split,
                                            rep.sum_m, rep.eta, rep.head_term, rep.tail_sum}));
        }
        out.emit();
        return 0;
    }

    if (entropy_cmd->parsed()) {
        std::vector<double> diag;
        std::stringstream ss(entropy_diag);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                diag.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw input_error("bad diagonal entry '" + item + "'");
            }
        }
        Output out = entropy_opts.output("entropy");
        out.config["diag"] = entropy_diag;
        out.config["p"] = entropy_p;
        out.config["q"] = entropy_q;
        out.config["k"] = entropy_k;
        out.config["budget"] = entropy_budget;
        const auto br = entropy_estimate(diag, parse_exponent(entropy_p),
                                         parse_exponent(entropy_q), entropy_k, entropy_budget,
                                         *entropy_opts.seed);
        out.columns = {"lower", "upper", "net_size", "pack_size", "cloud_size",
                       "lattice_step", "degenerate", "volume_ratio", "volume_ratio_stderr"};
        out.rows.push_back(json::array({br.lower, br.upper, br.probe.net_size,
                                        br.probe.pack_size, br.probe.cloud_size,
                                        br.probe.lattice_step, br.degenerate, br.volume_ratio,
                                        br.volume_ratio_stderr}));
        out.emit();
        return 0;
    }

    if (urysohn_cmd->parsed()) {
        Output out = urysohn_opts.output("urysohn");
        out.config["body"] = urysohn_body;
        out.config["n"] = urysohn_n;
        out.config["samples"] = urysohn_samples;
        const BodySpec body = urysohn_body == "euclid" ? BodySpec::euclid(urysohn_n)
                              : urysohn_body == "sup" ? BodySpec::sup(urysohn_n)
                                                      : BodySpec::one(urysohn_n);
        const auto rep = urysohn_check(body, urysohn_samples, *urysohn_opts.seed);
        out.columns = {"lhs", "lhs_stderr", "rhs", "rhs_stderr", "holds", "advisory",
                       "volume_product"};
        out.rows.push_back(json::array({rep.lhs, rep.lhs_stderr, rep.rhs, rep.rhs_stderr,
                                        rep.holds, rep.advisory, rep.volume_product}));
        out.emit();
        return 0;
    }

    if (keps_cmd->parsed()) {
        const NormMode mode = parse_mode(keps_norm);
        const auto spec = MultiplierSpec::parse(keps_multiplier, mode);
        Output out = keps_opts.output("keps");
        out.config["multiplier"] = keps_multiplier;
        out.config["norm"] = keps_norm;
        out.config["eps"] = keps_eps;
        out.config["p"] = keps_p;
        out.config["d"] = keps_d;
        const auto rep = K_eps_check(spec, keps_eps, keps_p, keps_d, mode, keps_nmin,
                                     keps_nmax, keps_step, keps_opts.scan_budget,
                                     keps_opts.work_budget);
        out.config["sup_ratio"] = rep.sup_ratio;
        out.config["consistent"] = rep.consistent;
        out.columns = {"N", "ratio"};
        for (std::size_t i = 0; i < rep.bases.size(); ++i)
            out.rows.push_back(json::array({rep.bases[i], rep.ratios[i]}));
        out.emit();
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;  // CLI11_PARSE inside run() already printed diagnostics
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const precision_error& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
