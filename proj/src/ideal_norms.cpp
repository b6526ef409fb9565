#include "umdnorms/ideal_norms.hpp"
#include "umdnorms/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace umdnorms {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("UMDNORMS_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return std::max(1u, std::min(hc, 8u));
}

namespace {

// Norm of the node-value matrix F (columns = values at the nodes) under the
// discretized L2 norm, with the ascent direction as a by-product: G.col(j) is
// chosen so that d norm = Re<G, dF>_F.
double node_norm(const NormedSpace& sp, const Mat& f, double w, Mat* grad) {
    double acc = 0.0;
    const int n_nodes = static_cast<int>(f.cols());
    std::vector<double> norms(n_nodes);
    for (int j = 0; j < n_nodes; ++j) {
        norms[j] = sp.norm(f.col(j));
        acc += norms[j] * norms[j];
    }
    double val = std::sqrt(acc * w);
    if (grad) {
        grad->resize(f.rows(), n_nodes);
        if (val < 1e-300) {
            grad->setZero();
        } else {
            for (int j = 0; j < n_nodes; ++j) {
                if (norms[j] < 1e-300)
                    grad->col(j).setZero();
                else
                    grad->col(j) = (w * norms[j] / val) * sp.subgradient(f.col(j));
            }
        }
    }
    return val;
}

struct AscentResult {
    double best = 0.0;
    long iterations = 0;
};

// Maximizes ratio(x) = numerator(x) / denominator(x) where both are
// positively homogeneous; the iterate is kept on the unit sphere of the
// denominator norm, so projection is renormalization.
template <typename Normalize, typename Ratio, typename Grad>
AscentResult sphere_ascent(Mat x, int max_iterations, double grad_tol, bool real_field,
                           Normalize&& denom, Ratio&& numer, Grad&& grad_at, Mat* out) {
    AscentResult res;
    double d = denom(x);
    if (d < 1e-14) return res;
    x /= d;
    double r = numer(x);
    double step = 0.25;
    for (int it = 0; it < max_iterations; ++it) {
        ++res.iterations;
        Mat g = grad_at(x, r);
        if (real_field) g = g.real().template cast<Complex>();
        if (g.norm() < grad_tol * std::max(1.0, r)) break;
        bool accepted = false;
        for (int h = 0; h < 50 && step > 1e-16; ++h) {
            Mat xn = x + step * g;
            double dn = denom(xn);
            if (dn < 1e-14) {
                step *= 0.5;
                continue;
            }
            xn /= dn;
            double rn = numer(xn);
            if (rn > r) {
                x = std::move(xn);
                r = rn;
                step *= 1.5;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
    }
    res.best = r;
    if (out) *out = std::move(x);
    return res;
}

Mat random_matrix(int rows, int cols, bool real_field, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat m(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) {
            double re = gauss(rng);
            double im = real_field ? 0.0 : gauss(rng);
            m(r, c) = Complex(re, im);
        }
    return m;
}

// Runs one job per restart on up to `threads` workers and reduces the results
// in restart order, so the outcome does not depend on scheduling.
template <typename Job>
void run_restarts(int restarts, int threads, Job&& job) {
    threads = std::min(threads, restarts);
    if (threads <= 1) {
        for (int r = 0; r < restarts; ++r) job(r);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                int r = next.fetch_add(1);
                if (r >= restarts) return;
                job(r);
            }
        });
    for (auto& th : pool) th.join();
}

IdealNormEstimate hilbert_exact(const LinearOperator& T) {
    Eigen::JacobiSVD<Mat> svd(T.matrix(), Eigen::ComputeThinV);
    IdealNormEstimate est;
    est.value = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    est.exact = true;
    return est;
}

Vec top_right_singular_vector(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinV);
    return svd.matrixV().col(0);
}

}  // namespace

double rho_ratio(const LinearOperator& T, const TrigSystem& to_system,
                 const TrigSystem& from_system, const QuadratureGrid& grid,
                 const VectorTuple& xs) {
    VectorTuple txs = VectorTuple::from_matrix(T.codomain(), T.matrix() * xs.as_matrix());
    double den = system_norm(xs, from_system, grid);
    if (den < 1e-300) return 0.0;
    return system_norm(txs, to_system, grid) / den;
}

double delta_ratio(const LinearOperator& T, const TrigSystem& to_system,
                   const TrigSystem& from_system, const QuadratureGrid& grid,
                   const GridFunction& f) {
    VectorTuple coeffs = fourier_coefficients(f, from_system);
    VectorTuple tcoeffs = VectorTuple::from_matrix(T.codomain(), T.matrix() * coeffs.as_matrix());
    double den = l2_norm(f);
    if (den < 1e-300) return 0.0;
    return system_norm(tcoeffs, to_system, grid) / den;
}

IdealNormEstimate rho_estimate(const LinearOperator& T, const TrigSystem& to_system,
                               const TrigSystem& from_system, const QuadratureGrid& grid,
                               const OptimizerConfig& cfg) {
    const int n = from_system.size();
    if (to_system.size() != n) throw std::invalid_argument("dimension");
    const NormedSpace& dom = T.domain();
    const NormedSpace& cod = T.codomain();
    const bool real_field = dom.field() == Field::real;

    if (T.is_zero()) {
        IdealNormEstimate est;
        est.exact = true;
        Mat x0 = Mat::Zero(dom.dim(), n);
        x0(0, 0) = 1.0;
        est.certificate_tuple = VectorTuple::from_matrix(dom, x0);
        return est;
    }
    if (dom.is_hilbert() && cod.is_hilbert() && !cfg.force_iterative) {
        IdealNormEstimate est = hilbert_exact(T);
        Mat x0 = Mat::Zero(dom.dim(), n);
        x0.col(0) = top_right_singular_vector(T.matrix());
        est.certificate_tuple = VectorTuple::from_matrix(dom, x0);
        return est;
    }

    const Mat a = evaluation_matrix(from_system, grid);
    const Mat b = evaluation_matrix(to_system, grid);
    const Mat tm = T.matrix();
    const Mat th = tm.adjoint();
    const double w = grid.weight();

    auto denom = [&](const Mat& x) { return node_norm(dom, x * a, w, nullptr); };
    auto numer = [&](const Mat& x) { return node_norm(cod, (tm * x) * b, w, nullptr); };
    auto grad_at = [&](const Mat& x, double r) {
        Mat ub, ua;
        node_norm(cod, (tm * x) * b, w, &ub);
        node_norm(dom, x * a, w, &ua);
        Mat g_num = th * (ub * b.adjoint());
        Mat g_den = ua * a.adjoint();
        return Mat(g_num - r * g_den);
    };

    IdealNormEstimate est;
    est.restarts_used = cfg.restarts;
    est.best_per_restart.assign(cfg.restarts, 0.0);
    std::vector<Mat> certs(cfg.restarts);
    std::vector<long> iters(cfg.restarts, 0);

    run_restarts(cfg.restarts, resolve_threads(cfg.threads), [&](int r) {
        auto rng = make_rng(cfg.seed, r);
        Mat x = random_matrix(dom.dim(), n, real_field, rng);
        for (int attempt = 0; attempt < 8 && denom(x) < 1e-14; ++attempt)
            x = random_matrix(dom.dim(), n, real_field, rng);
        AscentResult ar = sphere_ascent(std::move(x), cfg.max_iterations, cfg.grad_tol,
                                        real_field, denom, numer, grad_at, &certs[r]);
        est.best_per_restart[r] = ar.best;
        iters[r] = ar.iterations;
    });

    int best = 0;
    for (int r = 0; r < cfg.restarts; ++r) {
        est.iterations += iters[r];
        if (est.best_per_restart[r] > est.best_per_restart[best]) best = r;
    }
    est.value = est.best_per_restart[best];
    est.certificate_tuple = VectorTuple::from_matrix(dom, certs[best]);
    return est;
}

IdealNormEstimate delta_estimate(const LinearOperator& T, const TrigSystem& to_system,
                                 const TrigSystem& from_system, const QuadratureGrid& grid,
                                 const OptimizerConfig& cfg, const GridFunction* warm_start) {
    const int n = from_system.size();
    if (to_system.size() != n) throw std::invalid_argument("dimension");
    if (grid.size() < 4 * n) throw std::domain_error("insufficient bandwidth");
    const NormedSpace& dom = T.domain();
    const NormedSpace& cod = T.codomain();
    const bool real_field = dom.field() == Field::real;
    const int N = grid.size();

    if (T.is_zero()) {
        IdealNormEstimate est;
        est.exact = true;
        Mat f0 = Mat::Zero(dom.dim(), N);
        f0.row(0).setOnes();
        est.certificate_function = GridFunction::from_matrix(dom, grid, f0);
        return est;
    }
    if (dom.is_hilbert() && cod.is_hilbert() && !cfg.force_iterative) {
        IdealNormEstimate est = hilbert_exact(T);
        Vec v = top_right_singular_vector(T.matrix());
        Mat f0(dom.dim(), N);
        for (int j = 0; j < N; ++j) f0.col(j) = v * from_system.evaluate(1, grid.node(j));
        est.certificate_function = GridFunction::from_matrix(dom, grid, f0);
        return est;
    }

    // rho certificate embedded as f = sum x_k a_k provides the guaranteed seed
    IdealNormEstimate rho = rho_estimate(T, to_system, from_system, grid, cfg);

    const Mat a = evaluation_matrix(from_system, grid);
    const Mat b = evaluation_matrix(to_system, grid);
    const Mat tm = T.matrix();
    const Mat th = tm.adjoint();
    const double w = grid.weight();

    auto denom = [&](const Mat& f) { return node_norm(dom, f, w, nullptr); };
    auto coeffs_of = [&](const Mat& f) { return Mat(f * a.adjoint() * w); };
    auto numer = [&](const Mat& f) { return node_norm(cod, (tm * coeffs_of(f)) * b, w, nullptr); };
    auto grad_at = [&](const Mat& f, double r) {
        Mat ub, uf;
        node_norm(cod, (tm * coeffs_of(f)) * b, w, &ub);
        node_norm(dom, f, w, &uf);
        Mat g_coeff = th * (ub * b.adjoint());  // ascent direction for the coefficient tuple
        Mat g_num = w * (g_coeff * a);
        return Mat(g_num - r * uf);
    };

    IdealNormEstimate est;
    est.restarts_used = cfg.restarts;
    est.best_per_restart.assign(cfg.restarts, 0.0);
    std::vector<Mat> certs(cfg.restarts);
    std::vector<long> iters(cfg.restarts, 0);

    Mat seed_f = rho.certificate_tuple ? Mat(rho.certificate_tuple->as_matrix() * a) : Mat();
    Mat warm_f;
    if (warm_start && warm_start->grid.size() == N && warm_start->space.dim() == dom.dim())
        warm_f = warm_start->as_matrix();

    run_restarts(cfg.restarts, resolve_threads(cfg.threads), [&](int r) {
        Mat f;
        if (r == 0 && seed_f.size() > 0 && denom(seed_f) > 1e-14) {
            f = seed_f;
        } else if (r == 1 && warm_f.size() > 0 && denom(warm_f) > 1e-14) {
            f = warm_f;
        } else {
            auto rng = make_rng(cfg.seed, 1000 + r);
            f = random_matrix(dom.dim(), N, real_field, rng);
            for (int attempt = 0; attempt < 8 && denom(f) < 1e-14; ++attempt)
                f = random_matrix(dom.dim(), N, real_field, rng);
        }
        AscentResult ar = sphere_ascent(std::move(f), cfg.max_iterations, cfg.grad_tol,
                                        real_field, denom, numer, grad_at, &certs[r]);
        est.best_per_restart[r] = ar.best;
        iters[r] = ar.iterations;
    });

    int best = 0;
    for (int r = 0; r < cfg.restarts; ++r) {
        est.iterations += iters[r];
        if (est.best_per_restart[r] > est.best_per_restart[best]) best = r;
    }
    est.value = est.best_per_restart[best];
    est.certificate_function = GridFunction::from_matrix(dom, grid, certs[best]);
    return est;
}

IdealNormEstimate mu_estimate(const LinearOperator& T, int n, const QuadratureGrid& grid,
                              const OptimizerConfig& cfg) {
    IdealNormEstimate cs = rho_estimate(T, TrigSystem::cosine(n), TrigSystem::sine(n), grid, cfg);
    IdealNormEstimate sc = rho_estimate(T, TrigSystem::sine(n), TrigSystem::cosine(n), grid, cfg);
    IdealNormEstimate& win = cs.value >= sc.value ? cs : sc;
    IdealNormEstimate est = win;
    est.branches = std::make_pair(cs.value, sc.value);
    est.iterations = cs.iterations + sc.iterations;
    est.exact = cs.exact && sc.exact;
    return est;
}

double brute_force_rho(const LinearOperator& T, const TrigSystem& to_system,
                       const TrigSystem& from_system, const QuadratureGrid& grid,
                       double net_resolution) {
    const int n = from_system.size();
    const NormedSpace& dom = T.domain();
    const bool real_field = dom.field() == Field::real;
    const int reals_per_scalar = real_field ? 1 : 2;
    const int d = n * dom.dim() * reals_per_scalar;
    if (d > 6) throw std::domain_error("oracle scope");
    if (!(net_resolution > 0.0)) throw std::invalid_argument("net resolution");

    auto to_tuple = [&](const std::vector<double>& v) {
        Mat x(dom.dim(), n);
        int idx = 0;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < dom.dim(); ++i) {
                double re = v[idx++];
                double im = real_field ? 0.0 : v[idx++];
                x(i, k) = Complex(re, im);
            }
        return VectorTuple::from_matrix(dom, x);
    };
    auto ratio = [&](const std::vector<double>& v) {
        return rho_ratio(T, to_system, from_system, grid, to_tuple(v));
    };

    const int m = std::max(1, static_cast<int>(std::ceil(1.0 / net_resolution)));
    std::vector<double> point(d, 0.0), best_point(d, 0.0);
    double best = 0.0;
    // lattice points of [-1,1]^d, normalized implicitly by the ratio's
    // homogeneity
    std::vector<int> idx(d, -m);
    for (;;) {
        double sq = 0.0;
        for (int i = 0; i < d; ++i) {
            point[i] = static_cast<double>(idx[i]) / m;
            sq += point[i] * point[i];
        }
        if (sq > 1e-12) {
            double r = ratio(point);
            if (r > best) {
                best = r;
                best_point = point;
            }
        }
        int i = 0;
        while (i < d && ++idx[i] > m) idx[i++] = -m;
        if (i == d) break;
    }

    // compass-search polish, derivative free
    double step = net_resolution;
    while (step > 1e-7) {
        bool improved = false;
        for (int i = 0; i < d; ++i)
            for (double sgn : {1.0, -1.0}) {
                std::vector<double> cand = best_point;
                cand[i] += sgn * step;
                double r = ratio(cand);
                if (r > best) {
                    best = r;
                    best_point = std::move(cand);
                    improved = true;
                }
            }
        if (!improved) step *= 0.5;
    }
    return best;
}

double duality_gap(const LinearOperator& T, const TrigSystem& to_system,
                   const TrigSystem& from_system, const QuadratureGrid& grid,
                   const OptimizerConfig& cfg) {
    IdealNormEstimate primal = delta_estimate(T, to_system, from_system, grid, cfg);
    LinearOperator adj = T.adjoint();
    IdealNormEstimate dual = delta_estimate(adj, from_system.conjugate(), to_system.conjugate(),
                                            grid, cfg);
    return std::abs(primal.value - dual.value);
}

}  // namespace umdnorms
