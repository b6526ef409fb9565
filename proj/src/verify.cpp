#include "umdnorms/verify.hpp"
#include "umdnorms/rng.hpp"

#include <numbers>
#include <sstream>

namespace umdnorms {

namespace {

constexpr double kPi = std::numbers::pi;

std::string instance_tag(const NormedSpace& sp, int n, std::uint64_t seed) {
    std::ostringstream os;
    os << sp.describe() << ",n=" << n << ",seed=" << seed;
    return os.str();
}

std::vector<Vec> random_tuple(int count, int dim, bool real_field, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Vec> xs(count);
    for (Vec& x : xs) {
        x.resize(dim);
        for (int i = 0; i < dim; ++i)
            x[i] = Complex(gauss(rng), real_field ? 0.0 : gauss(rng));
    }
    return xs;
}

// (2/pi * int_0^pi ||sum_k x_k trig(freqs_k t)||^2 dt)^{1/2} with plain cos or
// sin, evaluated on the full circle (the integrand is even).
double raw_trig_norm(const NormedSpace& sp, const std::vector<Vec>& xs,
                     const std::vector<int>& freqs, bool use_sin, const QuadratureGrid& grid) {
    double acc = 0.0;
    Vec combo(sp.dim());
    for (int j = 0; j < grid.size(); ++j) {
        double t = grid.node(j);
        combo.setZero();
        for (size_t k = 0; k < xs.size(); ++k) {
            double c = use_sin ? std::sin(freqs[k] * t) : std::cos(freqs[k] * t);
            combo += xs[k] * c;
        }
        double v = sp.norm(combo);
        acc += v * v;
    }
    return std::sqrt(2.0 * acc * grid.weight());
}

// even node count keeps the node set closed under grid shifts and negation,
// which makes the translation arguments of the constructive proofs exact in the discrete
// setting
QuadratureGrid check_grid(int n) { return QuadratureGrid(std::max(2 * n + 2, 32)); }

struct Worst {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = -1e300;  // lhs - bound
    std::string instance;

    void update(double l, double bound_rhs, double constant, const std::string& inst) {
        double m = l - constant * bound_rhs;
        if (m > margin) {
            margin = m;
            lhs = l;
            rhs = bound_rhs;
            instance = inst;
        }
    }
};

CheckResult from_worst(const std::string& id, const Worst& w, double constant, double abs_tol,
                       CheckClass cls) {
    return make_check(id, w.instance, w.lhs, w.rhs, constant, 0.0, abs_tol, cls);
}

}  // namespace

CheckResult make_check(std::string id, std::string instance, double lhs, double rhs,
                       double constant, double slack, double abs_tol, CheckClass cls) {
    CheckResult r;
    r.id = std::move(id);
    r.instance = std::move(instance);
    r.lhs = lhs;
    r.rhs = rhs;
    r.constant = constant;
    r.ratio = rhs > 0 ? lhs / rhs : 0.0;
    r.tolerance = abs_tol;
    r.cls = cls;
    if (cls == CheckClass::informational)
        r.verdict = Verdict::informational;
    else
        r.verdict = lhs <= constant * rhs * (1.0 + slack) + abs_tol ? Verdict::pass
                                                                    : Verdict::fail;
    return r;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (r.verdict == Verdict::fail) return false;
    return true;
}

double cosine_subinterval_norm(const NormedSpace& space, const std::vector<Vec>& ys,
                               double lo, double hi) {
    auto integrand = [&](double t) {
        Vec combo = Vec::Zero(space.dim());
        for (size_t k = 0; k < ys.size(); ++k)
            combo += ys[k] * std::cos(static_cast<double>(k + 1) * t);
        double v = space.norm(combo);
        return v * v;
    };
    auto simpson = [&](int panels) {
        double h = (hi - lo) / panels;
        double acc = integrand(lo) + integrand(hi);
        for (int i = 1; i < panels; ++i)
            acc += (i % 2 ? 4.0 : 2.0) * integrand(lo + i * h);
        return acc * h / 3.0;
    };
    int panels = 32;
    double prev = simpson(panels);
    for (int level = 0; level < 16; ++level) {
        panels *= 2;
        double cur = simpson(panels);
        if (std::abs(cur - prev) <= 1e-9 * std::max(std::abs(cur), 1e-30))
            return std::sqrt(std::max(0.0, cur) * 2.0 / kPi);
        prev = cur;
    }
    return std::sqrt(std::max(0.0, prev) * 2.0 / kPi);
}

std::vector<CheckResult> check_identities(int trials, std::uint64_t seed) {
    std::vector<CheckResult> out;
    Worst rearr_sin, rearr_cos, conju, tensym;

    for (int trial = 0; trial < trials; ++trial) {
        auto rng = make_rng(seed, trial);
        std::uniform_int_distribution<int> npick(1, 16), dpick(1, 4);
        int n = npick(rng), dim = dpick(rng);
        NormedSpace sp = NormedSpace::lp(dim, 2.0);
        std::vector<Vec> xs = random_tuple(n, dim, false, rng);
        std::uniform_real_distribution<double> tpick(-kPi, kPi);
        double t = tpick(rng);
        std::ostringstream inst;
        inst << "n=" << n << ",dim=" << dim << ",seed=" << seed << "+" << trial;

        // padded coefficients x_{-1} = x_0 = x_{n+1} = x_{n+2} = 0
        auto xat = [&](int k) -> Vec {
            if (k >= 1 && k <= n) return xs[k - 1];
            return Vec::Zero(dim);
        };
        Vec lhs1 = Vec::Zero(dim), rhs1 = Vec::Zero(dim);
        Vec lhs2 = Vec::Zero(dim), rhs2 = Vec::Zero(dim);
        for (int k = 1; k <= n; ++k) {
            lhs1 += 2.0 * std::sin(t) * std::sin(k * t) * xs[k - 1];
            lhs2 += 2.0 * std::sin(t) * std::cos(k * t) * xs[k - 1];
        }
        for (int k = 0; k <= n + 1; ++k)
            rhs1 += std::cos(k * t) * (xat(k + 1) - xat(k - 1));
        for (int k = 1; k <= n + 1; ++k)
            rhs2 += std::sin(k * t) * (xat(k - 1) - xat(k + 1));
        rearr_sin.update((lhs1 - rhs1).cwiseAbs().maxCoeff(), 0.0, 1.0, inst.str());
        rearr_cos.update((lhs2 - rhs2).cwiseAbs().maxCoeff(), 0.0, 1.0, inst.str());

        // conjugation symmetry and tensor symmetry as norm equalities
        QuadratureGrid g = check_grid(n);
        VectorTuple tup(sp, xs);
        TrigSystem e = TrigSystem::exponential(n);
        double ve = system_norm(tup, e, g);
        double vec_ = system_norm(tup, e.conjugate(), g);
        conju.update(std::abs(ve - vec_), 0.0, 1.0, inst.str());

        if (n <= 8) {
            TrigSystem s = TrigSystem::sine(n), c = TrigSystem::cosine(n);
            double ab = system_norm(tup, tensor(s, c), g);
            double ba = system_norm(tup, tensor(c, s), g);
            tensym.update(std::abs(ab - ba), 0.0, 1.0, inst.str());
        }
    }

    out.push_back(from_worst("rearrangement.sin_identity", rearr_sin, 1.0, 1e-10, CheckClass::identity));
    out.push_back(from_worst("rearrangement.cos_identity", rearr_cos, 1.0, 1e-10, CheckClass::identity));
    out.push_back(from_worst("conjugation_symmetry", conju, 1.0, 1e-10, CheckClass::identity));
    out.push_back(from_worst("tensor_symmetry", tensym, 1.0, 1e-10, CheckClass::identity));
    return out;
}

std::vector<CheckResult> check_tuple_inequalities(int trials,
                                                  const std::vector<NormedSpace>& spaces,
                                                  int n_max, std::uint64_t seed) {
    std::vector<CheckResult> out;
    const double slack = 1e-8;
    Worst split_sq, split_cor, modul[4], ss_vs_c, trunc_cos, trunc_sin, expb_cos, expb_sin, single,
        mono, tensor_lift;

    for (int trial = 0; trial < trials; ++trial) {
        auto rng = make_rng(seed, 10000 + trial);
        const NormedSpace& sp = spaces[trial % spaces.size()];
        std::uniform_int_distribution<int> npick(1, n_max);
        int n = npick(rng);
        bool realf = sp.field() == Field::real;
        std::vector<Vec> xs = random_tuple(n, sp.dim(), realf, rng);
        VectorTuple tup(sp, xs);
        QuadratureGrid g = check_grid(n);
        std::string inst = instance_tag(sp, n, seed + trial);

        TrigSystem S = TrigSystem::sine(n), C = TrigSystem::cosine(n),
                   E = TrigSystem::exponential(n);
        double nS = system_norm(tup, S, g);
        double nC = system_norm(tup, C, g);
        double nE = system_norm(tup, E, g);
        double nSC = system_norm(tup, tensor(S, C), g);
        double nCS = system_norm(tup, tensor(C, S), g);
        double nSS = system_norm(tup, tensor(S, S), g);

        // (a) split of the sine norm across the two mixed tensor systems
        split_sq.update(nS * nS, nSC * nSC + nCS * nCS, 1.0, inst);
        split_cor.update(nS, nSC, std::sqrt(2.0), inst);

        // (b) modulation inequalities at a random grid node s
        std::uniform_int_distribution<int> spick(0, g.size() - 1);
        double s = g.node(spick(rng));
        auto scaled = [&](bool sine_scale) {
            std::vector<Vec> ys(n);
            for (int k = 1; k <= n; ++k)
                ys[k - 1] = xs[k - 1] * (sine_scale ? std::sin(k * s) : std::cos(k * s));
            return VectorTuple(sp, ys);
        };
        VectorTuple xcos = scaled(false), xsin = scaled(true);
        modul[0].update(system_norm(xcos, C, g), nC, 1.0, inst);
        modul[1].update(system_norm(xsin, S, g), nC, 1.0, inst);
        modul[2].update(system_norm(xcos, S, g), nS, 1.0, inst);
        modul[3].update(system_norm(xsin, C, g), nS, 1.0, inst);

        // (c) sine tensor square against the cosine system
        ss_vs_c.update(nSS * nSS, 2.0 * nC * nC, 1.0, inst);

        // (d) truncation inequalities, tuples indexed 0..n+1
        {
            std::vector<Vec> zs = random_tuple(n + 2, sp.dim(), realf, rng);  // z_0..z_{n+1}
            std::vector<int> freq_inner(n), freq_full(n + 2), freq_sin_ext(n + 1);
            for (int k = 0; k < n; ++k) freq_inner[k] = k + 1;
            for (int k = 0; k < n + 2; ++k) freq_full[k] = k;
            for (int k = 0; k < n + 1; ++k) freq_sin_ext[k] = k + 1;
            std::vector<Vec> inner(zs.begin() + 1, zs.begin() + 1 + n);
            QuadratureGrid g5 = check_grid(n + 2);
            double lhs_cos = raw_trig_norm(sp, inner, freq_inner, false, g5);
            double rhs_cos = raw_trig_norm(sp, zs, freq_full, false, g5) +
                             std::sqrt(2.0) * sp.norm(zs[0]) + sp.norm(zs[n + 1]);
            trunc_cos.update(lhs_cos, rhs_cos, 1.0, inst);
            std::vector<Vec> sin_ext(zs.begin() + 1, zs.end());  // z_1..z_{n+1}
            double lhs_sin = raw_trig_norm(sp, sin_ext, freq_sin_ext, true, g5);
            double rhs_sin = raw_trig_norm(sp, inner, freq_inner, true, g5) + sp.norm(zs[n + 1]);
            trunc_sin.update(lhs_sin, rhs_sin, 1.0, inst);
        }

        // (e) cosine and sine against the exponential system
        expb_cos.update(nC, nE, std::sqrt(2.0), inst);
        expb_sin.update(nS, nE, std::sqrt(2.0), inst);

        // (f) single-element bound, all three systems
        for (int h = 0; h < n; ++h) {
            double xh = sp.norm(xs[h]);
            single.update(xh, nE, 1.0, inst);
            single.update(xh, nC, 1.0, inst);
            single.update(xh, nS, 1.0, inst);
        }

        // (g) per-f subadditivity of the coefficient norm in the range length
        {
            std::uniform_int_distribution<int> mpick(1, 6);
            int m = mpick(rng), nn = mpick(rng);
            QuadratureGrid gm(std::max(4 * (m + nn), 32));
            std::vector<Vec> fv = random_tuple(gm.size(), sp.dim(), realf, rng);
            GridFunction f(sp, gm, fv);
            auto coeff_norm = [&](const GridFunction& fn, int count) {
                TrigSystem sys = TrigSystem::exponential(count);
                VectorTuple c = fourier_coefficients(fn, sys);
                return system_norm(c, sys, gm);
            };
            double lhs = coeff_norm(f, m + nn);
            double rhs = coeff_norm(f, m) + coeff_norm(modulate(f, -m), nn);
            mono.update(lhs, rhs, 1.0, inst);
        }

        // (h) tensor lift on Hilbert, where rho is exactly the operator norm
        if (sp.is_hilbert()) {
            std::normal_distribution<double> gauss(0.0, 1.0);
            Mat tmat(sp.dim(), sp.dim());
            for (int i = 0; i < sp.dim(); ++i)
                for (int j = 0; j < sp.dim(); ++j) tmat(i, j) = Complex(gauss(rng), gauss(rng));
            LinearOperator T(sp, sp, tmat);
            double sigma = Eigen::JacobiSVD<Mat>(tmat).singularValues()(0);
            VectorTuple ttup = VectorTuple::from_matrix(sp, tmat * tup.as_matrix());
            double lhs = system_norm(ttup, tensor(S, C), g);
            double rhs = sigma * system_norm(tup, tensor(C, C), g);
            // rho(S_n, C_n) on Hilbert equals sigma; lifted by the C_n factor
            tensor_lift.update(lhs, rhs, 1.0, inst);
        }
    }

    auto add = [&](const std::string& id, const Worst& w, double constant) {
        out.push_back(from_worst(id, w, constant, slack, CheckClass::constructive));
    };
    add("sine_split.squared", split_sq, 1.0);
    add("sine_split.sqrt2", split_cor, std::sqrt(2.0));
    const char* modul_ids[4] = {"modulation.cos_cos", "modulation.sin_cos",
                               "modulation.cos_sin", "modulation.sin_sin"};
    for (int i = 0; i < 4; ++i) add(modul_ids[i], modul[i], 1.0);
    add("tensor_sine_vs_cosine", ss_vs_c, 1.0);
    add("truncation.cos", trunc_cos, 1.0);
    add("truncation.sin", trunc_sin, 1.0);
    add("exp_bound.cos", expb_cos, std::sqrt(2.0));
    add("exp_bound.sin", expb_sin, std::sqrt(2.0));
    add("single_element", single, 1.0);
    add("coefficient_subadditivity", mono, 1.0);
    add("tensor_lift.hilbert", tensor_lift, 1.0);
    return out;
}

std::vector<CheckResult> check_constant_chain(const std::vector<NormedSpace>& spaces,
                                              const std::vector<int>& n_list,
                                              const OptimizerConfig& cfg) {
    std::vector<CheckResult> out;
    const double tau = 0.05;

    for (const NormedSpace& sp : spaces)
        for (int n : n_list) {
            LinearOperator id_op = LinearOperator::identity(sp);
            QuadratureGrid g(std::max(64, 4 * n));
            std::string inst = instance_tag(sp, n, cfg.seed);

            TrigSystem S = TrigSystem::sine(n), C = TrigSystem::cosine(n),
                       E = TrigSystem::exponential(n);
            double rho_sc = rho_estimate(id_op, S, C, g, cfg).value;
            double rho_cs = rho_estimate(id_op, C, S, g, cfg).value;
            double del_ee = delta_estimate(id_op, E, E, g, cfg).value;
            double del_sc = delta_estimate(id_op, S, C, g, cfg).value;
            double del_cs = delta_estimate(id_op, C, S, g, cfg).value;
            double mu = std::max(rho_cs, rho_sc);

            out.push_back(make_check("rho_sc_le_2rho_cs", inst, rho_sc, rho_cs, 2.0, tau,
                                     0.0, CheckClass::estimate));
            out.push_back(make_check("rho_cs_le_9rho_sc", inst, rho_cs, rho_sc, 9.0, tau,
                                     0.0, CheckClass::estimate));
            out.push_back(make_check("delta_ee_le_96mu", inst, del_ee, mu, 96.0, tau, 0.0,
                                     CheckClass::estimate));
            out.push_back(make_check("rho_le_delta.sc", inst, rho_sc, del_sc, 1.0, 0.0,
                                     1e-9, CheckClass::constructive));
            out.push_back(make_check("rho_le_delta.cs", inst, rho_cs, del_cs, 1.0, 0.0,
                                     1e-9, CheckClass::constructive));
            out.push_back(make_check("delta_sc_le_2delta_ee", inst, del_sc, del_ee, 2.0,
                                     tau, 0.0, CheckClass::estimate));
            out.push_back(make_check("delta_cs_le_2delta_ee", inst, del_cs, del_ee, 2.0,
                                     tau, 0.0, CheckClass::estimate));

            if (sp.is_hilbert()) {
                auto rng = make_rng(cfg.seed, 555 + n);
                std::normal_distribution<double> gauss(0.0, 1.0);
                Mat tmat(sp.dim(), sp.dim());
                for (int i = 0; i < sp.dim(); ++i)
                    for (int j = 0; j < sp.dim(); ++j)
                        tmat(i, j) = Complex(gauss(rng), gauss(rng));
                LinearOperator T(sp, sp, tmat);
                double sigma = Eigen::JacobiSVD<Mat>(tmat).singularValues()(0);
                std::vector<Vec> xs = random_tuple(n, sp.dim(), false, rng);
                VectorTuple tup(sp, xs);
                std::vector<Vec> txs(n);
                for (int k = 0; k < n; ++k) txs[k] = tmat * xs[k];

                // sub-interval cosine bound; rho is exactly sigma on Hilbert
                double lhs6 = cosine_subinterval_norm(sp, txs, kPi / 3.0, 2.0 * kPi / 3.0);
                double rhs6 = 4.0 * sigma * system_norm(tup, S, check_grid(n));
                out.push_back(make_check("cosine_subinterval.hilbert", inst, lhs6, rhs6, 1.0, 0.0, 1e-8,
                                         CheckClass::constructive));

                // extended-range bound; mu is exactly sigma, tuple indexed -n..n
                std::vector<Vec> full = random_tuple(2 * n + 1, sp.dim(), false, rng);
                std::vector<Vec> pos(full.begin() + n + 1, full.end());  // x_1..x_n
                std::vector<Vec> tpos(n);
                for (int k = 0; k < n; ++k) tpos[k] = tmat * pos[k];
                QuadratureGrid g7 = check_grid(2 * n + 1);
                TrigSystem erange = TrigSystem::exponential_range(-n, n);
                double lhs7 = system_norm(VectorTuple(sp, tpos), E, g7);
                double rhs7 = 4.0 * sigma * system_norm(VectorTuple(sp, full), erange, g7);
                out.push_back(make_check("extended_range.hilbert", inst, lhs7, rhs7, 1.0, 0.0, 1e-8,
                                         CheckClass::constructive));

                // the sqrt2 tuple bounds collapse to 1 at the ideal-norm level
                double r1 = system_norm(tup, S, check_grid(n)) /
                            std::max(system_norm(tup, tensor(S, C), check_grid(n)), 1e-300);
                double r3 = system_norm(tup, tensor(S, S), check_grid(n)) /
                            std::max(system_norm(tup, C, check_grid(n)), 1e-300);
                out.push_back(make_check("sine_split.ideal_norm_hilbert", inst, r1, std::sqrt(2.0),
                                         1.0, 0.0, 1e-8, CheckClass::constructive));
                out.push_back(make_check("tensor_sine_vs_cosine.ideal_norm_hilbert", inst, r3, std::sqrt(2.0),
                                         1.0, 0.0, 1e-8, CheckClass::constructive));
            }
        }
    return out;
}

std::vector<CheckResult> check_duality_and_injectivity(const OptimizerConfig& cfg) {
    std::vector<CheckResult> out;
    QuadratureGrid g(64);
    TrigSystem E = TrigSystem::exponential(2);

    {
        NormedSpace l2_3 = NormedSpace::lp(3, 2.0);
        double gap = duality_gap(LinearOperator::identity(l2_3), E, E, g, cfg);
        out.push_back(make_check("duality.l2_gap", instance_tag(l2_3, 2, cfg.seed), gap, 0.0,
                                 1.0, 0.0, 1e-9, CheckClass::constructive));
    }
    {
        // metric injection l2^2 -> l2^3; delta is invariant (both sides exact)
        NormedSpace l2_2 = NormedSpace::lp(2, 2.0), l2_3 = NormedSpace::lp(3, 2.0);
        auto rng = make_rng(cfg.seed, 777);
        std::normal_distribution<double> gauss(0.0, 1.0);
        Mat tmat(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) tmat(i, j) = Complex(gauss(rng), gauss(rng));
        Mat jmat = Mat::Zero(3, 2);
        jmat(0, 0) = 1.0;
        jmat(1, 1) = 1.0;
        LinearOperator T(l2_2, l2_2, tmat);
        LinearOperator JT(l2_2, l2_3, jmat * tmat);
        double a = delta_estimate(T, E, E, g, cfg).value;
        double b = delta_estimate(JT, E, E, g, cfg).value;
        out.push_back(make_check("injectivity.l2_embedding", instance_tag(l2_2, 2, cfg.seed),
                                 std::abs(a - b), 0.0, 1.0, 0.0, 1e-10,
                                 CheckClass::constructive));
    }
    {
        NormedSpace l1_2 = NormedSpace::lp(2, 1.0);
        double gap = duality_gap(LinearOperator::identity(l1_2), E, E, g, cfg);
        out.push_back(make_check("duality.l1_linf_gap", instance_tag(l1_2, 2, cfg.seed), gap,
                                 0.0, 1.0, 0.0, 0.0, CheckClass::informational));
    }
    {
        // composition bound for delta through the exponential system on a Hilbert instance
        NormedSpace l2_3 = NormedSpace::lp(3, 2.0);
        auto rng = make_rng(cfg.seed, 778);
        std::normal_distribution<double> gauss(0.0, 1.0);
        Mat tmat(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) tmat(i, j) = Complex(gauss(rng), gauss(rng));
        LinearOperator T(l2_3, l2_3, tmat);
        int n = 2;
        TrigSystem S = TrigSystem::sine(n), C = TrigSystem::cosine(n),
                   En = TrigSystem::exponential(n);
        LinearOperator id_op = LinearOperator::identity(l2_3);
        double lhs = delta_estimate(T, S, C, g, cfg).value;
        double rhs = rho_estimate(id_op, S, En, g, cfg).value *
                     delta_estimate(id_op, En, En, g, cfg).value *
                     rho_estimate(T.adjoint(), C.conjugate(), En.conjugate(), g, cfg).value;
        out.push_back(make_check("composition.hilbert", instance_tag(l2_3, n, cfg.seed), lhs,
                                 rhs, 1.0, 1e-10, 1e-9, CheckClass::constructive));
    }
    return out;
}

}  // namespace umdnorms
