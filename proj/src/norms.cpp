#include "umdnorms/norms.hpp"

namespace umdnorms {

VectorTuple::VectorTuple(NormedSpace s, std::vector<Vec> xs)
    : space(std::move(s)), entries(std::move(xs)) {
    for (const Vec& x : entries)
        if (x.size() != space.dim()) throw std::invalid_argument("dimension");
}

Mat VectorTuple::as_matrix() const {
    Mat m(space.dim(), size());
    for (int k = 0; k < size(); ++k) m.col(k) = entries[k];
    return m;
}

VectorTuple VectorTuple::from_matrix(NormedSpace s, const Mat& m) {
    std::vector<Vec> xs(m.cols());
    for (int k = 0; k < m.cols(); ++k) xs[k] = m.col(k);
    return VectorTuple(std::move(s), std::move(xs));
}

GridFunction::GridFunction(NormedSpace s, QuadratureGrid g, std::vector<Vec> vals)
    : space(std::move(s)), grid(g), values(std::move(vals)) {
    if (static_cast<int>(values.size()) != grid.size())
        throw std::invalid_argument("dimension");
    for (const Vec& v : values)
        if (v.size() != space.dim()) throw std::invalid_argument("dimension");
}

Mat GridFunction::as_matrix() const {
    Mat m(space.dim(), grid.size());
    for (int j = 0; j < grid.size(); ++j) m.col(j) = values[j];
    return m;
}

GridFunction GridFunction::from_matrix(NormedSpace s, QuadratureGrid g, const Mat& m) {
    std::vector<Vec> vals(m.cols());
    for (int j = 0; j < m.cols(); ++j) vals[j] = m.col(j);
    return GridFunction(std::move(s), g, std::move(vals));
}

double system_norm(const VectorTuple& xs, const TrigSystem& system, const QuadratureGrid& grid) {
    if (xs.size() != system.size()) throw std::invalid_argument("dimension");
    Mat x = xs.as_matrix();
    Mat a = evaluation_matrix(system, grid);
    Mat f = x * a;  // dim x N, columns are the partial sums at the nodes
    double acc = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        double v = xs.space.norm(f.col(j));
        acc += v * v;
    }
    return std::sqrt(acc * grid.weight());
}

double system_norm(const VectorTuple& xs, const TensorSystem& system, const QuadratureGrid& grid) {
    if (xs.size() != system.size()) throw std::invalid_argument("dimension");
    Mat x = xs.as_matrix();
    Mat l = evaluation_matrix(system.left(), grid);
    Mat r = evaluation_matrix(system.right(), grid);
    const int n = xs.size();
    const int N = grid.size();
    double acc = 0.0;
    Vec coeff(n), combo(xs.space.dim());
    for (int js = 0; js < N; ++js)
        for (int jt = 0; jt < N; ++jt) {
            for (int k = 0; k < n; ++k) coeff[k] = l(k, js) * r(k, jt);
            combo.noalias() = x * coeff;
            double v = xs.space.norm(combo);
            acc += v * v;
        }
    return std::sqrt(acc * grid.weight() * grid.weight());
}

double doubling_residual(const VectorTuple& xs, const TrigSystem& system,
                         const QuadratureGrid& grid) {
    double v1 = system_norm(xs, system, grid);
    double v2 = system_norm(xs, system, grid.doubled());
    return std::abs(v1 - v2) / std::max(v2, 1e-300);
}

double l2_norm(const GridFunction& f) {
    double acc = 0.0;
    for (const Vec& v : f.values) {
        double n = f.space.norm(v);
        acc += n * n;
    }
    return std::sqrt(acc * f.grid.weight());
}

VectorTuple fourier_coefficients(const GridFunction& f, const TrigSystem& system) {
    if (2 * system.max_frequency() + 1 > f.grid.size())
        throw std::domain_error("aliasing");
    Mat a = evaluation_matrix(system, f.grid);
    Mat coeffs = f.as_matrix() * a.adjoint() * f.grid.weight();  // dim x n
    return VectorTuple::from_matrix(f.space, coeffs);
}

GridFunction modulate(const GridFunction& f, int l) {
    GridFunction g = f;
    for (int j = 0; j < f.grid.size(); ++j) {
        double t = f.grid.node(j);
        g.values[j] *= Complex(std::cos(l * t), std::sin(l * t));
    }
    return g;
}

GridFunction remove_frequency(const GridFunction& f, int l) {
    const int N = f.grid.size();
    Eigen::RowVectorXcd e(N);
    for (int j = 0; j < N; ++j) {
        double t = f.grid.node(j);
        e[j] = Complex(std::cos(l * t), std::sin(l * t));
    }
    Mat m = f.as_matrix();
    Vec c = m * e.adjoint() * f.grid.weight();
    return GridFunction::from_matrix(f.space, f.grid, Mat(m - c * e));
}

}  // namespace umdnorms
