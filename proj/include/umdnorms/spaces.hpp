#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace umdnorms {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

enum class Field { real, complex_field };

enum class NormKind { lp, weighted_lp, custom };

// Finite-dimensional normed space over R or C. Norm families: lp with
// p in [1,inf], weighted lp (weights multiply coordinates before the lp
// formula, so duality sends weights to their reciprocals), or a custom
// norm/subgradient pair supplied by the caller.
class NormedSpace {
public:
    using NormFn = std::function<double(const Vec&)>;
    using SubgradFn = std::function<Vec(const Vec&)>;

    static NormedSpace lp(int dim, double p, Field field = Field::complex_field);
    static NormedSpace weighted_lp(int dim, double p, std::vector<double> weights,
                                   Field field = Field::complex_field);
    static NormedSpace custom(int dim, NormFn norm, SubgradFn subgrad,
                              Field field = Field::complex_field,
                              std::function<NormedSpace()> dual = nullptr);

    int dim() const { return dim_; }
    Field field() const { return field_; }
    NormKind kind() const { return kind_; }
    double p() const { return p_; }
    const std::vector<double>& weights() const { return weights_; }

    // True for plain l2: every system norm collapses to the Euclidean tuple
    // norm, which the estimators exploit as an exact fast path.
    bool is_hilbert() const { return kind_ == NormKind::lp && p_ == 2.0; }

    double norm(const Vec& x) const;

    // Returns u with Re<x,u> = norm(x) and dual_norm(u) = 1. Tie-break at
    // nonsmooth points: lowest index wins, sign of 0 taken as +1.
    Vec subgradient(const Vec& x) const;

    NormedSpace dual() const;

    std::string describe() const;

private:
    NormedSpace() = default;

    int dim_ = 0;
    Field field_ = Field::complex_field;
    NormKind kind_ = NormKind::lp;
    double p_ = 2.0;
    std::vector<double> weights_;
    NormFn norm_fn_;
    SubgradFn subgrad_fn_;
    std::function<NormedSpace()> dual_fn_;
};

class LinearOperator {
public:
    LinearOperator(NormedSpace domain, NormedSpace codomain, Mat matrix);

    static LinearOperator identity(const NormedSpace& space);

    const NormedSpace& domain() const { return domain_; }
    const NormedSpace& codomain() const { return codomain_; }
    const Mat& matrix() const { return matrix_; }

    Vec apply(const Vec& x) const;

    // Conjugate transpose between the dual spaces: <Tx,y'> = <x,T'y'>.
    LinearOperator adjoint() const;

    bool is_zero() const { return matrix_.norm() == 0.0; }

private:
    NormedSpace domain_;
    NormedSpace codomain_;
    Mat matrix_;
};

// Real pairing Re(sum x_i conj(y_i)); the duality bracket used throughout.
inline double pairing(const Vec& x, const Vec& y) {
    return x.dot(y).real();
}

}  // namespace umdnorms
