#include "umdnorms/spaces.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace umdnorms {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sign of 0 taken as +1
Complex csign(Complex z) {
    double a = std::abs(z);
    return a == 0.0 ? Complex(1.0, 0.0) : z / a;
}

}  // namespace

NormedSpace NormedSpace::lp(int dim, double p, Field field) {
    if (dim <= 0 || p < 1.0) throw std::invalid_argument("invalid space");
    NormedSpace s;
    s.dim_ = dim;
    s.field_ = field;
    s.kind_ = NormKind::lp;
    s.p_ = p;
    return s;
}

NormedSpace NormedSpace::weighted_lp(int dim, double p, std::vector<double> weights, Field field) {
    if (dim <= 0 || p < 1.0 || static_cast<int>(weights.size()) != dim)
        throw std::invalid_argument("invalid space");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("invalid space");
    NormedSpace s;
    s.dim_ = dim;
    s.field_ = field;
    s.kind_ = NormKind::weighted_lp;
    s.p_ = p;
    s.weights_ = std::move(weights);
    return s;
}

NormedSpace NormedSpace::custom(int dim, NormFn norm, SubgradFn subgrad, Field field,
                                std::function<NormedSpace()> dual) {
    if (dim <= 0 || !norm) throw std::invalid_argument("invalid space");
    NormedSpace s;
    s.dim_ = dim;
    s.field_ = field;
    s.kind_ = NormKind::custom;
    s.norm_fn_ = std::move(norm);
    s.subgrad_fn_ = std::move(subgrad);
    s.dual_fn_ = std::move(dual);
    return s;
}

double NormedSpace::norm(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("dimension");
    if (kind_ == NormKind::custom) return norm_fn_(x);
    double p = p_;
    if (p == kInf) {
        double m = 0.0;
        for (int i = 0; i < dim_; ++i) {
            double a = std::abs(x[i]);
            if (kind_ == NormKind::weighted_lp) a *= weights_[i];
            m = std::max(m, a);
        }
        return m;
    }
    if (p == 1.0) {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) {
            double a = std::abs(x[i]);
            if (kind_ == NormKind::weighted_lp) a *= weights_[i];
            s += a;
        }
        return s;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) {
            double a = std::abs(x[i]);
            if (kind_ == NormKind::weighted_lp) a *= weights_[i];
            s += a * a;
        }
        return std::sqrt(s);
    }
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) {
        double a = std::abs(x[i]);
        if (kind_ == NormKind::weighted_lp) a *= weights_[i];
        s += std::pow(a, p);
    }
    return std::pow(s, 1.0 / p);
}

Vec NormedSpace::subgradient(const Vec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("dimension");
    double nx = norm(x);
    if (nx < 1e-300) throw std::domain_error("subgradient at zero");
    if (kind_ == NormKind::custom) {
        if (!subgrad_fn_) throw std::domain_error("no subgradient available");
        return subgrad_fn_(x);
    }
    Vec u = Vec::Zero(dim_);
    double p = p_;
    auto w = [&](int i) { return kind_ == NormKind::weighted_lp ? weights_[i] : 1.0; };
    if (p == kInf) {
        // lowest index attaining the max
        int best = 0;
        double bv = -1.0;
        for (int i = 0; i < dim_; ++i) {
            double a = w(i) * std::abs(x[i]);
            if (a > bv + 1e-15 * std::max(1.0, bv)) {
                bv = a;
                best = i;
            }
        }
        u[best] = w(best) * csign(x[best]);
        return u;
    }
    if (p == 1.0) {
        for (int i = 0; i < dim_; ++i) u[i] = w(i) * csign(x[i]);
        return u;
    }
    // smooth case, p in [2, inf) and general p > 1
    for (int i = 0; i < dim_; ++i) {
        double a = w(i) * std::abs(x[i]);
        if (a == 0.0) continue;
        u[i] = w(i) * std::pow(a / nx, p - 1.0) * csign(x[i]);
    }
    return u;
}

NormedSpace NormedSpace::dual() const {
    if (kind_ == NormKind::custom) {
        if (!dual_fn_) throw std::domain_error("no dual available");
        return dual_fn_();
    }
    double q = p_ == 1.0 ? kInf : (p_ == kInf ? 1.0 : p_ / (p_ - 1.0));
    if (kind_ == NormKind::lp) return lp(dim_, q, field_);
    std::vector<double> rw(weights_.size());
    for (size_t i = 0; i < weights_.size(); ++i) rw[i] = 1.0 / weights_[i];
    return weighted_lp(dim_, q, std::move(rw), field_);
}

std::string NormedSpace::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case NormKind::lp:
            if (p_ == kInf)
                os << "linf:" << dim_;
            else if (p_ == 1.0)
                os << "l1:" << dim_;
            else if (p_ == 2.0)
                os << "l2:" << dim_;
            else
                os << "lp(" << p_ << "):" << dim_;
            break;
        case NormKind::weighted_lp: {
            os << "wlp:p=" << p_ << ",w=";
            for (size_t i = 0; i < weights_.size(); ++i) {
                if (i) os << ';';
                os << weights_[i];
            }
            break;
        }
        case NormKind::custom:
            os << "custom:" << dim_;
            break;
    }
    if (field_ == Field::real) os << ",real";
    return os.str();
}

LinearOperator::LinearOperator(NormedSpace domain, NormedSpace codomain, Mat matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim())
        throw std::invalid_argument("dimension");
}

LinearOperator LinearOperator::identity(const NormedSpace& space) {
    return LinearOperator(space, space, Mat::Identity(space.dim(), space.dim()));
}

Vec LinearOperator::apply(const Vec& x) const {
    if (x.size() != domain_.dim()) throw std::invalid_argument("dimension");
    return matrix_ * x;
}

LinearOperator LinearOperator::adjoint() const {
    return LinearOperator(codomain_.dual(), domain_.dual(), matrix_.adjoint());
}

}  // namespace umdnorms
