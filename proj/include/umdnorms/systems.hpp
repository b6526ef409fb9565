#pragma once

#include "umdnorms/spaces.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace umdnorms {

// Trigonometric orthonormal systems on the circle with measure dt/2pi:
// exponentials e_k(t) = exp(ikt) over an integer range, c_k(t) = sqrt2 cos kt,
// s_k(t) = sqrt2 sin kt, and complex conjugates thereof.
class TrigSystem {
public:
    enum class Kind { exponential, cosine, sine };

    static TrigSystem exponential(int n) { return TrigSystem(Kind::exponential, 1, n); }
    static TrigSystem exponential_range(int lo, int hi) {
        return TrigSystem(Kind::exponential, lo, hi);
    }
    static TrigSystem cosine(int n) { return TrigSystem(Kind::cosine, 1, n); }
    static TrigSystem sine(int n) { return TrigSystem(Kind::sine, 1, n); }

    TrigSystem conjugate() const {
        TrigSystem s = *this;
        s.conjugated_ = !s.conjugated_;
        return s;
    }

    Kind kind() const { return kind_; }
    bool is_conjugate() const { return conjugated_; }
    int size() const { return hi_ - lo_ + 1; }
    int max_frequency() const { return std::max(std::abs(lo_), std::abs(hi_)); }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    // k is 1-based; throws "member index" when out of range.
    Complex evaluate(int k, double t) const;

    std::string describe() const;

private:
    TrigSystem(Kind kind, int lo, int hi) : kind_(kind), lo_(lo), hi_(hi) {
        if (hi_ < lo_) throw std::invalid_argument("invalid system");
    }

    Kind kind_;
    int lo_, hi_;
    bool conjugated_ = false;
};

// Product system a_k(s) b_k(t) over the product of two circles.
class TensorSystem {
public:
    TensorSystem(TrigSystem left, TrigSystem right);

    const TrigSystem& left() const { return left_; }
    const TrigSystem& right() const { return right_; }
    int size() const { return left_.size(); }

    Complex evaluate(int k, double s, double t) const {
        return left_.evaluate(k, s) * right_.evaluate(k, t);
    }

    std::string describe() const;

private:
    TrigSystem left_;
    TrigSystem right_;
};

inline TensorSystem tensor(const TrigSystem& left, const TrigSystem& right) {
    return TensorSystem(left, right);
}

// Equispaced nodes t_j = -pi + 2 pi j / N with weight 1/N each, realizing the
// normalized measure dt/2pi. Exact for trigonometric polynomials of degree
// <= N-1, so any system with maximal frequency n is discretely orthonormal
// once N >= 2n+1.
class QuadratureGrid {
public:
    explicit QuadratureGrid(int n_nodes) : n_(n_nodes) {
        if (n_ <= 0) throw std::invalid_argument("invalid grid");
    }

    static QuadratureGrid default_for(int max_frequency) {
        return QuadratureGrid(std::max(256, 8 * (max_frequency + 1)));
    }

    int size() const { return n_; }
    double node(int j) const { return -std::numbers::pi + 2.0 * std::numbers::pi * j / n_; }
    double weight() const { return 1.0 / n_; }

    QuadratureGrid doubled() const { return QuadratureGrid(2 * n_); }

private:
    int n_;
};

// n x N matrix of member values on the grid nodes.
Mat evaluation_matrix(const TrigSystem& system, const QuadratureGrid& grid);

// Max entrywise deviation of the discrete Gram matrix from the identity.
double gram_deviation(const TrigSystem& system, const QuadratureGrid& grid);
double gram_deviation(const TensorSystem& system, const QuadratureGrid& grid);

}  // namespace umdnorms
