#include "umdnorms/systems.hpp"

#include <sstream>

namespace umdnorms {

Complex TrigSystem::evaluate(int k, double t) const {
    if (k < 1 || k > size()) throw std::out_of_range("member index");
    Complex v;
    switch (kind_) {
        case Kind::exponential: {
            int freq = lo_ + k - 1;
            v = Complex(std::cos(freq * t), std::sin(freq * t));
            break;
        }
        case Kind::cosine:
            v = Complex(std::sqrt(2.0) * std::cos(k * t), 0.0);
            break;
        case Kind::sine:
            v = Complex(std::sqrt(2.0) * std::sin(k * t), 0.0);
            break;
    }
    return conjugated_ ? std::conj(v) : v;
}

std::string TrigSystem::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::exponential:
            if (lo_ == 1)
                os << (conjugated_ ? "Ebar:" : "E:") << hi_;
            else
                os << (conjugated_ ? "Ebar" : "E") << "range:" << lo_ << ".." << hi_;
            return os.str();
        case Kind::cosine:
            os << "C:" << hi_;
            break;
        case Kind::sine:
            os << "S:" << hi_;
            break;
    }
    if (conjugated_) os << ",conj";
    return os.str();
}

TensorSystem::TensorSystem(TrigSystem left, TrigSystem right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (left_.size() != right_.size()) throw std::invalid_argument("tensor size");
}

std::string TensorSystem::describe() const {
    // matches the CLI literal SxC:n when both factors are plain systems
    auto letter = [](const TrigSystem& s) -> std::string {
        if (s.lo() != 1) return "";
        switch (s.kind()) {
            case TrigSystem::Kind::exponential:
                return s.is_conjugate() ? "Ebar" : "E";
            case TrigSystem::Kind::cosine:
                return s.is_conjugate() ? "" : "C";
            case TrigSystem::Kind::sine:
                return s.is_conjugate() ? "" : "S";
        }
        return "";
    };
    std::string l = letter(left_), r = letter(right_);
    if (!l.empty() && !r.empty()) return l + "x" + r + ":" + std::to_string(size());
    return left_.describe() + "x" + right_.describe();
}

Mat evaluation_matrix(const TrigSystem& system, const QuadratureGrid& grid) {
    const int n = system.size();
    const int N = grid.size();
    Mat m(n, N);
    for (int j = 0; j < N; ++j) {
        double t = grid.node(j);
        for (int k = 0; k < n; ++k) m(k, j) = system.evaluate(k + 1, t);
    }
    return m;
}

double gram_deviation(const TrigSystem& system, const QuadratureGrid& grid) {
    Mat a = evaluation_matrix(system, grid);
    Mat g = (a * a.adjoint()) * grid.weight();
    g -= Mat::Identity(system.size(), system.size());
    return g.cwiseAbs().maxCoeff();
}

double gram_deviation(const TensorSystem& system, const QuadratureGrid& grid) {
    Mat l = evaluation_matrix(system.left(), grid);
    Mat r = evaluation_matrix(system.right(), grid);
    const int n = system.size();
    const int N = grid.size();
    Mat g = Mat::Zero(n, n);
    const double w = grid.weight() * grid.weight();
    for (int js = 0; js < N; ++js)
        for (int jt = 0; jt < N; ++jt) {
            // value vector of all members at (s_js, t_jt)
            for (int a = 0; a < n; ++a) {
                Complex va = l(a, js) * r(a, jt);
                for (int b = 0; b < n; ++b)
                    g(a, b) += va * std::conj(l(b, js) * r(b, jt)) * w;
            }
        }
    g -= Mat::Identity(n, n);
    return g.cwiseAbs().maxCoeff();
}

}  // namespace umdnorms
