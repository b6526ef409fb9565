// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include "umdnorms/ideal_norms.hpp"
#include "umdnorms/kernels.hpp"
#include "umdnorms/rng.hpp"
#include "umdnorms/verify.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

using namespace umdnorms;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Criterion {
    bool pass = true;
    std::string detail;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Mat random_complex(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> g;
    Mat m(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) m(r, c) = Complex(g(rng), g(rng));
    return m;
}

// 1. Hilbert oracle: estimates equal the top singular value.
Criterion criterion1(std::uint64_t seed, std::ostream& log) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    OptimizerConfig cfg;
    cfg.restarts = 1;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        auto rng = make_rng(seed, trial);
        std::uniform_int_distribution<int> dpick(1, 5), npick(1, 12);
        int dim = dpick(rng), n = npick(rng);
        NormedSpace l2 = NormedSpace::lp(dim, 2.0);
        LinearOperator T(l2, l2, random_complex(rng, dim, dim));
        double sigma = Eigen::JacobiSVD<Mat>(T.matrix()).singularValues()(0);
        QuadratureGrid grid(std::max(64, 4 * n));
        std::vector<TrigSystem> systems = {TrigSystem::exponential(n), TrigSystem::cosine(n),
                                           TrigSystem::sine(n)};
        for (const TrigSystem& a : systems)
            for (const TrigSystem& b : systems) {
                auto r = rho_estimate(T, b, a, grid, cfg);
                auto d = delta_estimate(T, b, a, grid, cfg);
                worst = std::max({worst, std::abs(r.value - sigma) / sigma,
                                  std::abs(d.value - sigma) / sigma});
                c.pass = c.pass && r.exact && d.exact;
            }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.pass = c.pass && worst < 1e-10 && secs < 60.0;
    log << "c1 worst_rel=" << fmt(worst) << "\n";
    std::ostringstream os;
    os << "max relative deviation " << fmt(worst) << ", " << fmt(secs) << " s";
    c.detail = os.str();
    return c;
}

// 2. Quadrature exactness at N = 2n+1.
Criterion criterion2(std::ostream& log) {
    Criterion c;
    double worst = 0.0;
    for (int n = 1; n <= 64; ++n) {
        QuadratureGrid g(2 * n + 1);
        worst = std::max({worst, gram_deviation(TrigSystem::exponential(n), g),
                          gram_deviation(TrigSystem::cosine(n), g),
                          gram_deviation(TrigSystem::sine(n), g)});
    }
    c.pass = worst < 1e-12;
    log << "c2 worst_gram=" << fmt(worst) << "\n";
    c.detail = "max gram deviation " + fmt(worst);
    return c;
}

// 3. de la Vallee Poussin kernel properties.
Criterion criterion3(std::uint64_t seed, std::ostream& log) {
    Criterion c;
    double worst_coeff = 0.0;
    for (int m = 1; m <= 32; ++m) {
        int band = 2 * m + 2;
        QuadratureGrid grid(2 * (2 * m - 1 + band) + 1);
        for (int k = -band; k <= band; ++k) {
            Complex acc = 0.0;
            for (int j = 0; j < grid.size(); ++j) {
                double t = grid.node(j);
                acc += kernel_eval(KernelSpec::vallee_poussin(m), t) *
                       Complex(std::cos(k * t), -std::sin(k * t)) * grid.weight();
            }
            worst_coeff = std::max(worst_coeff, std::abs(acc - Complex(vp_coefficient(m, k))));
        }
    }
    double worst_l1 = 0.0;
    for (int m = 1; m <= 64; ++m)
        worst_l1 = std::max(worst_l1, vp_l1_norm(m, QuadratureGrid(8 * (2 * m - 1) + 2)));
    double worst_op = 0.0;
    std::vector<NormedSpace> spaces = {NormedSpace::lp(2, 1.0), NormedSpace::lp(3, 2.0),
                                       NormedSpace::lp(2, kInf)};
    for (int trial = 0; trial < 200; ++trial) {
        auto rng = make_rng(seed, 300 + trial);
        std::uniform_int_distribution<int> mpick(1, 6);
        int m = mpick(rng);
        const NormedSpace& sp = spaces[trial % spaces.size()];
        QuadratureGrid grid(std::max(32, 4 * (2 * m - 1) + 2));
        GridFunction f = GridFunction::from_matrix(
            sp, grid, random_complex(rng, sp.dim(), grid.size()));
        worst_op = std::max(worst_op, l2_norm(vp_apply(m, f)) - 3.0 * l2_norm(f));
    }
    c.pass = worst_coeff < 1e-10 && worst_l1 <= 3.0 + 1e-6 && worst_op <= 1e-9;
    log << "c3 coeff=" << fmt(worst_coeff) << " l1=" << fmt(worst_l1)
        << " op_excess=" << fmt(worst_op) << "\n";
    c.detail = "coeff dev " + fmt(worst_coeff) + ", max L1 " + fmt(worst_l1);
    return c;
}

// 4. Constructive inequality sweep plus exact identities.
Criterion criterion4(std::uint64_t seed, std::ostream& log) {
    Criterion c;
    std::vector<NormedSpace> spaces;
    for (double p : {1.0, 2.0, kInf})
        for (int dim : {2, 4, 6}) spaces.push_back(NormedSpace::lp(dim, p));
    auto tuples = check_tuple_inequalities(1000, spaces, 16, seed);
    auto ids = check_identities(200, seed);
    int violations = 0;
    double worst_res = 0.0;
    for (const CheckResult& r : tuples) {
        if (r.verdict == Verdict::fail) ++violations;
        log << "c4 " << r.id << " lhs=" << fmt(r.lhs) << " rhs=" << fmt(r.rhs) << "\n";
    }
    for (const CheckResult& r : ids) {
        worst_res = std::max(worst_res, r.lhs);
        log << "c4 " << r.id << " residual=" << fmt(r.lhs) << "\n";
    }
    c.pass = violations == 0 && worst_res < 1e-10;
    std::ostringstream os;
    os << violations << " violations, identity residual " << fmt(worst_res);
    c.detail = os.str();
    return c;
}

// 5. Constant chain at the estimate level.
Criterion criterion5(std::uint64_t seed, std::ostream& log) {
    Criterion c;
    OptimizerConfig cfg;
    cfg.restarts = 64;
    cfg.seed = seed;
    std::vector<NormedSpace> spaces = {NormedSpace::lp(2, 1.0), NormedSpace::lp(3, 1.0),
                                       NormedSpace::lp(2, kInf), NormedSpace::lp(3, kInf)};
    auto results = check_constant_chain(spaces, {2, 4, 8, 12}, cfg);
    int fails = 0;
    for (const CheckResult& r : results) {
        log << "c5 " << r.id << " " << r.instance << " lhs=" << fmt(r.lhs)
            << " rhs=" << fmt(r.rhs) << "\n";
        if (r.verdict == Verdict::fail) ++fails;
    }
    c.pass = fails == 0;
    std::ostringstream os;
    os << results.size() << " chain lines, " << fails << " failures";
    c.detail = os.str();
    return c;
}

// 6. Oracle equivalence on real linf^2, n = 2.
Criterion criterion6(std::uint64_t seed, std::ostream& log) {
    Criterion c;
    NormedSpace li = NormedSpace::lp(2, kInf, Field::real);
    LinearOperator id = LinearOperator::identity(li);
    QuadratureGrid grid(64);
    double oracle = brute_force_rho(id, TrigSystem::sine(2), TrigSystem::cosine(2), grid, 0.2);
    OptimizerConfig cfg;
    cfg.restarts = 32;
    cfg.seed = seed;
    auto est = rho_estimate(id, TrigSystem::sine(2), TrigSystem::cosine(2), grid, cfg);
    double rel = std::abs(est.value - oracle) / oracle;
    c.pass = rel < 0.01;
    log << "c6 oracle=" << fmt(oracle) << " estimate=" << fmt(est.value) << "\n";
    c.detail = "oracle " + fmt(oracle) + " vs estimate " + fmt(est.value);
    return c;
}

// 7. Growth contrast between l2:4 and l1:8.
Criterion criterion7(std::uint64_t seed, std::ostream& log) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    const int n_max = 32;
    QuadratureGrid grid(std::max(64, 4 * n_max));

    auto scan = [&](const NormedSpace& sp, int restarts, int iterations) {
        LinearOperator id = LinearOperator::identity(sp);
        std::vector<double> column;
        std::optional<GridFunction> warm;
        for (int n = 1; n <= n_max; ++n) {
            OptimizerConfig cfg;
            cfg.restarts = restarts;
            cfg.max_iterations = iterations;
            cfg.seed = split_seed(seed, static_cast<std::uint64_t>(n));
            TrigSystem E = TrigSystem::exponential(n);
            std::optional<GridFunction> seed_fn;
            if (warm) seed_fn = remove_frequency(*warm, n);
            auto d = delta_estimate(id, E, E, grid, cfg, seed_fn ? &*seed_fn : nullptr);
            if (d.certificate_function) warm = d.certificate_function;
            column.push_back(d.value);
        }
        return column;
    };

    std::vector<double> hilbert = scan(NormedSpace::lp(4, 2.0), 1, 100);
    double hilbert_dev = 0.0;
    for (double v : hilbert) hilbert_dev = std::max(hilbert_dev, std::abs(v - 1.0));

    std::vector<double> l1col = scan(NormedSpace::lp(8, 1.0), 64, 500);
    bool nondecreasing = true;
    double max_v = 0.0;
    for (size_t i = 0; i < l1col.size(); ++i) {
        if (i > 0 && l1col[i] < l1col[i - 1] - 0.02) nondecreasing = false;
        max_v = std::max(max_v, l1col[i]);
        log << "c7 n=" << (i + 1) << " delta_ee=" << fmt(l1col[i]) << "\n";
    }
    double margin = max_v - l1col[0];
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.pass = hilbert_dev < 1e-6 && nondecreasing && margin > 0.0 && secs < 1800.0;
    log << "c7 hilbert_dev=" << fmt(hilbert_dev) << " margin=" << fmt(margin) << "\n";
    std::ostringstream os;
    os << "hilbert dev " << fmt(hilbert_dev) << ", l1 growth margin " << fmt(margin) << ", "
       << fmt(secs) << " s";
    c.detail = os.str();
    return c;
}

struct SuiteRun {
    std::vector<Criterion> criteria;
    std::string transcript;
};

SuiteRun run_suite(std::uint64_t seed) {
    SuiteRun run;
    std::ostringstream log;
    run.criteria.push_back(criterion1(seed, log));
    run.criteria.push_back(criterion2(log));
    run.criteria.push_back(criterion3(seed, log));
    run.criteria.push_back(criterion4(seed, log));
    run.criteria.push_back(criterion5(seed, log));
    run.criteria.push_back(criterion6(seed, log));
    run.criteria.push_back(criterion7(seed, log));
    run.transcript = log.str();
    return run;
}

}  // namespace

int main() {
    const std::uint64_t seed = 2024;
    const char* names[] = {
        "hilbert oracle agreement",
        "quadrature exactness at N=2n+1",
        "vallee poussin coefficients, L1 bound, operator bound",
        "constructive inequality sweep",
        "constant chain at the estimate level",
        "brute force oracle equivalence",
        "growth contrast l2 vs l1",
        "determinism of repeated runs",
    };

    SuiteRun first = run_suite(seed);
    SuiteRun second = run_suite(seed);

    Criterion det;
    det.pass = first.transcript == second.transcript;
    det.detail = det.pass ? "transcripts byte-identical"
                          : "transcripts differ between reruns";
    for (size_t i = 0; i < first.criteria.size(); ++i)
        if (first.criteria[i].pass != second.criteria[i].pass) det.pass = false;

    std::vector<Criterion> all = first.criteria;
    all.push_back(det);

    bool ok = true;
    for (size_t i = 0; i < all.size(); ++i) {
        std::printf("criterion %zu (%s): %s (%s)\n", i + 1, names[i],
                    all[i].pass ? "PASS" : "FAIL", all[i].detail.c_str());
        ok = ok && all[i].pass;
    }
    return ok ? 0 : 1;
}
