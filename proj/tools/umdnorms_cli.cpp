#include "umdnorms/ideal_norms.hpp"
#include "umdnorms/kernels.hpp"
#include "umdnorms/literals.hpp"
#include "umdnorms/rng.hpp"
#include "umdnorms/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace umdnorms;
using ordered_json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 success, 1 check failure, 2 usage error, 3 numerical error.
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct OutputSink {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

struct EstimateOptions {
    std::string space_literal = "l2:2";
    std::string from_literal;
    std::string to_literal;
    std::string operator_path;
    std::string out_path;
    int grid_override = 0;
    int restarts = 32;
    int iterations = 500;
    std::uint64_t seed = 0;
    int threads = 0;
    bool emit_certificate = false;
};

void add_estimate_options(CLI::App* cmd, EstimateOptions& opt, bool with_systems) {
    cmd->add_option("--space", opt.space_literal, "space literal, e.g. l1:4, linf:3");
    if (with_systems) {
        cmd->add_option("--from", opt.from_literal, "source system literal (A)")->required();
        cmd->add_option("--to", opt.to_literal, "target system literal (B)")->required();
    }
    cmd->add_option("--operator", opt.operator_path, "CSV matrix file; identity if omitted");
    cmd->add_option("--grid", opt.grid_override, "grid node count override");
    cmd->add_option("--restarts", opt.restarts, "optimizer restarts");
    cmd->add_option("--iterations", opt.iterations, "max iterations per restart");
    cmd->add_option("--seed", opt.seed, "master seed");
    cmd->add_option("--threads", opt.threads, "parallel restarts (0 = UMDNORMS_THREADS/auto)");
    cmd->add_option("--out", opt.out_path, "output file (stdout if omitted)");
    cmd->add_flag("--emit-certificate", opt.emit_certificate, "include the maximizer");
}

LinearOperator load_operator(const NormedSpace& space, const std::string& path) {
    if (path.empty()) return LinearOperator::identity(space);
    Mat m = read_matrix_csv(path);
    return LinearOperator(space, space, m);
}

OptimizerConfig make_config(const EstimateOptions& opt) {
    OptimizerConfig cfg;
    cfg.restarts = opt.restarts;
    cfg.max_iterations = opt.iterations;
    cfg.seed = opt.seed;
    cfg.threads = opt.threads;
    return cfg;
}

ordered_json certificate_json(const IdealNormEstimate& est) {
    ordered_json cert;
    if (est.certificate_tuple) {
        ordered_json rows = ordered_json::array();
        for (const Vec& x : est.certificate_tuple->entries) {
            ordered_json row = ordered_json::array();
            for (int i = 0; i < x.size(); ++i) row.push_back(format_complex(x[i]));
            rows.push_back(row);
        }
        cert["tuple"] = rows;
    } else if (est.certificate_function) {
        ordered_json rows = ordered_json::array();
        for (const Vec& x : est.certificate_function->values) {
            ordered_json row = ordered_json::array();
            for (int i = 0; i < x.size(); ++i) row.push_back(format_complex(x[i]));
            rows.push_back(row);
        }
        cert["grid_samples"] = rows;
    }
    return cert;
}

ordered_json check_to_json(const CheckResult& r) {
    static const char* cls_names[] = {"identity", "constructive", "estimate", "informational"};
    static const char* verdict_names[] = {"pass", "fail", "informational"};
    ordered_json j;
    j["id"] = r.id;
    j["instance"] = r.instance;
    j["lhs"] = format_value(r.lhs);
    j["rhs"] = format_value(r.rhs);
    j["constant"] = r.constant;
    j["ratio"] = format_value(r.ratio);
    j["class"] = cls_names[static_cast<int>(r.cls)];
    j["verdict"] = verdict_names[static_cast<int>(r.verdict)];
    j["tolerance"] = r.tolerance;
    return j;
}

int run_norm(const EstimateOptions& opt, const std::string& system_literal,
             const std::string& tuple_arg) {
    NormedSpace space = parse_space(opt.space_literal);
    SystemRef system = parse_system(system_literal);
    std::vector<Vec> entries = tuple_arg.size() && tuple_arg[0] == '['
                                   ? parse_tuple_inline(tuple_arg)
                                   : read_tuple_csv(tuple_arg);
    VectorTuple tuple(space, entries);
    int n = system_size(system);
    if (tuple.size() != n) throw std::invalid_argument("dimension");

    QuadratureGrid grid = opt.grid_override > 0
                              ? QuadratureGrid(opt.grid_override)
                              : QuadratureGrid::default_for(system_max_frequency(system));
    double value, residual;
    if (const TrigSystem* trig = std::get_if<TrigSystem>(&system)) {
        value = system_norm(tuple, *trig, grid);
        residual = doubling_residual(tuple, *trig, grid);
    } else {
        const TensorSystem& ten = std::get<TensorSystem>(system);
        value = system_norm(tuple, ten, grid);
        double v2 = system_norm(tuple, ten, grid.doubled());
        residual = std::abs(value - v2) / std::max(v2, 1e-300);
    }

    ordered_json j;
    j["system"] = system_describe(system);
    j["n"] = n;
    j["space"] = space.describe();
    j["value"] = format_value(value);
    j["doubling_residual"] = format_value(residual);
    OutputSink sink;
    sink.open(opt.out_path);
    sink.out() << j.dump() << "\n";
    return 0;
}

int run_estimate(const std::string& which, const EstimateOptions& opt, int mu_n) {
    NormedSpace space = parse_space(opt.space_literal);
    LinearOperator T = load_operator(space, opt.operator_path);
    OptimizerConfig cfg = make_config(opt);

    ordered_json j;
    IdealNormEstimate est;
    if (which == "mu") {
        QuadratureGrid grid = opt.grid_override > 0 ? QuadratureGrid(opt.grid_override)
                                                    : QuadratureGrid(std::max(64, 4 * mu_n));
        est = mu_estimate(T, mu_n, grid, cfg);
        j["norm"] = "mu";
        j["n"] = mu_n;
        j["space"] = space.describe();
        j["operator"] = opt.operator_path.empty() ? "identity" : opt.operator_path;
        j["value"] = format_value(est.value);
        j["rho_cs"] = format_value(est.branches->first);
        j["rho_sc"] = format_value(est.branches->second);
        j["exact"] = est.exact;
        j["restarts"] = opt.restarts;
        j["seed"] = opt.seed;
    } else {
        SystemRef from_ref = parse_system(opt.from_literal);
        SystemRef to_ref = parse_system(opt.to_literal);
        const TrigSystem* from = std::get_if<TrigSystem>(&from_ref);
        const TrigSystem* to = std::get_if<TrigSystem>(&to_ref);
        if (!from || !to)
            throw std::invalid_argument("tensor systems are not supported for " + which);
        int n = from->size();
        int max_freq = std::max(from->max_frequency(), to->max_frequency());
        QuadratureGrid grid = opt.grid_override > 0
                                  ? QuadratureGrid(opt.grid_override)
                                  : QuadratureGrid(std::max({64, 4 * n, 2 * max_freq + 2}));
        double residual = 0.0;
        if (which == "rho") {
            est = rho_estimate(T, *to, *from, grid, cfg);
            if (est.certificate_tuple) {
                double r1 = rho_ratio(T, *to, *from, grid, *est.certificate_tuple);
                double r2 = rho_ratio(T, *to, *from, grid.doubled(), *est.certificate_tuple);
                residual = std::abs(r1 - r2) / std::max(r2, 1e-300);
            }
        } else {
            est = delta_estimate(T, *to, *from, grid, cfg);
            if (est.certificate_function) {
                VectorTuple coeffs = fourier_coefficients(*est.certificate_function, *from);
                VectorTuple tc = VectorTuple::from_matrix(T.codomain(),
                                                          T.matrix() * coeffs.as_matrix());
                residual = doubling_residual(tc, *to, grid);
            }
        }
        j["norm"] = which;
        j["from"] = from->describe();
        j["to"] = to->describe();
        j["n"] = n;
        j["space"] = space.describe();
        j["operator"] = opt.operator_path.empty() ? "identity" : opt.operator_path;
        j["value"] = format_value(est.value);
        j["exact"] = est.exact;
        j["restarts"] = opt.restarts;
        j["seed"] = opt.seed;
        j["doubling_residual"] = format_value(residual);
    }
    if (opt.emit_certificate) j["certificate"] = certificate_json(est);

    OutputSink sink;
    sink.open(opt.out_path);
    sink.out() << j.dump() << "\n";
    return 0;
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed, int n_max,
               const std::string& spaces_arg, int restarts, int threads,
               const std::string& out_path) {
    std::vector<NormedSpace> spaces;
    {
        std::stringstream ss(spaces_arg);
        std::string item;
        while (std::getline(ss, item, ' '))
            if (!item.empty()) spaces.push_back(parse_space(item));
    }
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.threads = threads;

    std::vector<CheckResult> results;
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
    if (want("identities")) {
        auto r = check_identities(trials, seed);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (want("tuple")) {
        auto r = check_tuple_inequalities(trials, spaces, n_max, seed);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (want("chain")) {
        std::vector<int> ns;
        for (int n = 2; n <= n_max; n *= 2) ns.push_back(n);
        auto r = check_constant_chain(spaces, ns, cfg);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (want("duality")) {
        auto r = check_duality_and_injectivity(cfg);
        results.insert(results.end(), r.begin(), r.end());
    }

    OutputSink sink;
    sink.open(out_path);
    ordered_json header;
    header["suite"] = suite;
    header["seed"] = seed;
    header["trials"] = trials;
    header["note"] =
        "sampled spaces and operators; estimate-level lines compare heuristic lower bounds "
        "and cannot certify universality over all operators";
    sink.out() << header.dump() << "\n";
    for (const CheckResult& r : results) sink.out() << check_to_json(r).dump() << "\n";
    return all_passed(results) ? 0 : kExitCheckFailure;
}

int run_growth(const std::string& space_literal, const std::string& range, int restarts,
               int iterations, std::uint64_t seed, int threads, const std::string& out_path,
               const std::string& format) {
    auto dots = range.find("..");
    int lo = 1, hi;
    if (dots != std::string::npos) {
        lo = std::stoi(range.substr(0, dots));
        hi = std::stoi(range.substr(dots + 2));
    } else {
        hi = std::stoi(range);
    }
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad n range");

    NormedSpace space = parse_space(space_literal);
    LinearOperator T = LinearOperator::identity(space);
    // one grid for the whole scan keeps the delta column comparable across n
    QuadratureGrid grid(std::max(64, 4 * hi));

    OutputSink sink;
    sink.open(out_path);
    const bool csv = format == "csv";
    if (csv) sink.out() << "n,space,delta_ee,rho_sc,rho_cs,mu,restarts,seed,doubling_residual\n";

    std::optional<GridFunction> warm;
    int rows = 0;
    for (int n = lo; n <= hi; ++n) {
        OptimizerConfig cfg;
        cfg.restarts = restarts;
        cfg.max_iterations = iterations;
        cfg.seed = split_seed(seed, static_cast<std::uint64_t>(n));
        cfg.threads = threads;

        TrigSystem E = TrigSystem::exponential(n), C = TrigSystem::cosine(n),
                   S = TrigSystem::sine(n);
        IdealNormEstimate rho_sc = rho_estimate(T, S, C, grid, cfg);
        IdealNormEstimate rho_cs = rho_estimate(T, C, S, grid, cfg);
        // carry the previous maximizer as a seed, but strip its frequency-n
        // content first so the new top coefficient starts from zero
        std::optional<GridFunction> seed_fn;
        if (warm) seed_fn = remove_frequency(*warm, n);
        IdealNormEstimate del = delta_estimate(T, E, E, grid, cfg, seed_fn ? &*seed_fn : nullptr);
        if (del.certificate_function) warm = del.certificate_function;
        double mu = std::max(rho_sc.value, rho_cs.value);
        double residual = 0.0;
        if (del.certificate_function) {
            VectorTuple coeffs = fourier_coefficients(*del.certificate_function, E);
            residual = doubling_residual(coeffs, E, grid);
        }

        if (csv) {
            sink.out() << n << ',' << space.describe() << ',' << format_value(del.value) << ','
                       << format_value(rho_sc.value) << ',' << format_value(rho_cs.value) << ','
                       << format_value(mu) << ',' << restarts << ',' << cfg.seed << ','
                       << format_value(residual) << "\n";
        } else {
            ordered_json j;
            j["n"] = n;
            j["space"] = space.describe();
            j["delta_ee"] = format_value(del.value);
            j["rho_sc"] = format_value(rho_sc.value);
            j["rho_cs"] = format_value(rho_cs.value);
            j["mu"] = format_value(mu);
            j["restarts"] = restarts;
            j["seed"] = cfg.seed;
            j["doubling_residual"] = format_value(residual);
            sink.out() << j.dump() << "\n";
        }
        sink.out().flush();
        ++rows;
    }
    if (csv)
        sink.out() << "# summary rows=" << rows << " seed=" << seed << "\n";
    else {
        ordered_json j;
        j["summary"] = true;
        j["rows"] = rows;
        j["seed"] = seed;
        sink.out() << j.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trigonometric system norms and UMD ideal-norm estimation"};
    app.require_subcommand(1);

    EstimateOptions norm_opt;
    std::string norm_system, norm_tuple;
    CLI::App* norm_cmd = app.add_subcommand("norm", "system norm of a vector tuple");
    norm_cmd->add_option("--space", norm_opt.space_literal, "space literal")->required();
    norm_cmd->add_option("--system", norm_system, "system literal")->required();
    norm_cmd->add_option("--tuple", norm_tuple, "inline [[..],[..]] or CSV path")->required();
    norm_cmd->add_option("--grid", norm_opt.grid_override, "grid node count override");
    norm_cmd->add_option("--seed", norm_opt.seed, "seed (recorded for reproducibility)");
    norm_cmd->add_option("--out", norm_opt.out_path, "output file");

    EstimateOptions rho_opt, delta_opt, mu_opt;
    CLI::App* rho_cmd = app.add_subcommand("rho", "Riemann-type ideal norm lower bound");
    add_estimate_options(rho_cmd, rho_opt, true);
    CLI::App* delta_cmd = app.add_subcommand("delta", "Dirichlet-type ideal norm lower bound");
    add_estimate_options(delta_cmd, delta_opt, true);
    int mu_n = 1;
    CLI::App* mu_cmd = app.add_subcommand("mu", "max of the two rho branches");
    mu_cmd->add_option("-n,--n", mu_n, "system size")->required();
    add_estimate_options(mu_cmd, mu_opt, false);

    std::string verify_suite = "all", verify_spaces = "l1:2 l2:3 linf:2", verify_out;
    int verify_trials = 200, verify_nmax = 12, verify_restarts = 16, verify_threads = 0;
    std::uint64_t verify_seed = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the inequality check suite");
    verify_cmd->add_option("--suite", verify_suite, "identities|tuple|chain|duality|all");
    verify_cmd->add_option("--trials", verify_trials, "random trials per check family");
    verify_cmd->add_option("--seed", verify_seed, "master seed");
    verify_cmd->add_option("--nmax", verify_nmax, "maximal system size");
    verify_cmd->add_option("--spaces", verify_spaces, "space literals, space-separated");
    verify_cmd->add_option("--restarts", verify_restarts, "optimizer restarts (chain/duality)");
    verify_cmd->add_option("--threads", verify_threads, "parallel restarts");
    verify_cmd->add_option("--out", verify_out, "JSONL report path");

    std::string growth_space = "l2:4", growth_range = "1..8", growth_out,
                growth_format = "csv";
    int growth_restarts = 32, growth_iterations = 500, growth_threads = 0;
    std::uint64_t growth_seed = 0;
    CLI::App* growth_cmd = app.add_subcommand("growth", "scan delta(E_n,E_n) growth over n");
    growth_cmd->add_option("--space", growth_space, "space literal")->required();
    growth_cmd->add_option("--n", growth_range, "n range lo..hi")->required();
    growth_cmd->add_option("--restarts", growth_restarts, "optimizer restarts");
    growth_cmd->add_option("--iterations", growth_iterations, "max iterations per restart");
    growth_cmd->add_option("--seed", growth_seed, "master seed");
    growth_cmd->add_option("--threads", growth_threads, "parallel restarts");
    growth_cmd->add_option("--out", growth_out, "output path");
    growth_cmd->add_option("--format", growth_format, "csv|jsonl");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (norm_cmd->parsed()) return run_norm(norm_opt, norm_system, norm_tuple);
        if (rho_cmd->parsed()) return run_estimate("rho", rho_opt, 0);
        if (delta_cmd->parsed()) return run_estimate("delta", delta_opt, 0);
        if (mu_cmd->parsed()) return run_estimate("mu", mu_opt, mu_n);
        if (verify_cmd->parsed())
            return run_verify(verify_suite, verify_trials, verify_seed, verify_nmax,
                              verify_spaces, verify_restarts, verify_threads, verify_out);
        if (growth_cmd->parsed())
            return run_growth(growth_space, growth_range, growth_restarts, growth_iterations,
                              growth_seed, growth_threads, growth_out, growth_format);
    } catch (const std::domain_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return 0;
}
