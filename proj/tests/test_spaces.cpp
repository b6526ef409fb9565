#include "umdnorms/rng.hpp"
#include "umdnorms/spaces.hpp"

#include <doctest.h>

using namespace umdnorms;

namespace {

Vec rv(const std::vector<Complex>& v) {
    Vec x(v.size());
    for (size_t i = 0; i < v.size(); ++i) x[i] = v[i];
    return x;
}

Vec random_vec(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    Vec x(dim);
    for (int i = 0; i < dim; ++i) x[i] = Complex(g(rng), g(rng));
    return x;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("lp norms on fixed vectors") {
    CHECK(NormedSpace::lp(2, 2.0).norm(rv({3.0, 4.0})) == doctest::Approx(5.0));
    CHECK(NormedSpace::lp(2, 1.0).norm(rv({3.0, -4.0})) == doctest::Approx(7.0));
    CHECK(NormedSpace::lp(3, kInf).norm(rv({1.0, -2.0, 0.5})) == doctest::Approx(2.0));
    CHECK(NormedSpace::lp(2, 3.0).norm(rv({1.0, 1.0})) == doctest::Approx(std::pow(2.0, 1.0 / 3.0)));
}

TEST_CASE("norm axioms on random vectors") {
    auto rng = make_rng(11, 0);
    std::normal_distribution<double> g;
    for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
        NormedSpace sp = NormedSpace::lp(4, p);
        CHECK(sp.norm(Vec::Zero(4)) == 0.0);
        for (int trial = 0; trial < 50; ++trial) {
            Vec x = random_vec(rng, 4), y = random_vec(rng, 4);
            Complex lambda(g(rng), g(rng));
            double nx = sp.norm(x);
            CHECK(nx >= 0.0);
            CHECK(sp.norm(lambda * x) == doctest::Approx(std::abs(lambda) * nx).epsilon(1e-12));
            CHECK(sp.norm(x + y) <= nx + sp.norm(y) + 1e-12 * (nx + sp.norm(y)));
        }
    }
}

TEST_CASE("subgradient fixed points and tie rules") {
    Vec g2 = NormedSpace::lp(2, 2.0).subgradient(rv({3.0, 4.0}));
    CHECK(g2[0].real() == doctest::Approx(0.6));
    CHECK(g2[1].real() == doctest::Approx(0.8));

    Vec ginf = NormedSpace::lp(2, kInf).subgradient(rv({2.0, 2.0}));
    CHECK(ginf[0] == Complex(1.0, 0.0));
    CHECK(ginf[1] == Complex(0.0, 0.0));

    Vec g1 = NormedSpace::lp(2, 1.0).subgradient(rv({0.0, -5.0}));
    CHECK(g1[0] == Complex(1.0, 0.0));
    CHECK(g1[1] == Complex(-1.0, 0.0));
    CHECK(pairing(rv({0.0, -5.0}), g1) == doctest::Approx(5.0));

    CHECK_THROWS_WITH_AS(NormedSpace::lp(2, 2.0).subgradient(Vec::Zero(2)),
                         "subgradient at zero", std::domain_error);
}

TEST_CASE("subgradient pairing identity on random vectors") {
    auto rng = make_rng(12, 0);
    for (double p : {1.0, 1.5, 2.0, 4.0, kInf}) {
        NormedSpace sp = NormedSpace::lp(5, p);
        NormedSpace dual = sp.dual();
        for (int trial = 0; trial < 40; ++trial) {
            Vec x = random_vec(rng, 5);
            Vec u = sp.subgradient(x);
            CHECK(pairing(x, u) == doctest::Approx(sp.norm(x)).epsilon(1e-12));
            CHECK(dual.norm(u) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("dual spaces") {
    CHECK(NormedSpace::lp(4, 1.0).dual().p() == kInf);
    CHECK(NormedSpace::lp(3, 2.0).dual().p() == 2.0);
    CHECK(NormedSpace::lp(2, kInf).dual().p() == 1.0);

    NormedSpace w = NormedSpace::weighted_lp(2, 3.0, {1.0, 2.0});
    NormedSpace wd = w.dual();
    CHECK(wd.p() == doctest::Approx(1.5));
    CHECK(wd.weights()[0] == doctest::Approx(1.0));
    CHECK(wd.weights()[1] == doctest::Approx(0.5));

    // Hoelder: |Re<x,y>| <= ||x|| ||y||_dual, with equality at the subgradient
    auto rng = make_rng(13, 0);
    for (int trial = 0; trial < 40; ++trial) {
        Vec x = random_vec(rng, 2), y = random_vec(rng, 2);
        CHECK(std::abs(pairing(x, y)) <= w.norm(x) * wd.norm(y) * (1 + 1e-12));
    }

    // double dual reproduces the norm
    NormedSpace wdd = wd.dual();
    for (int trial = 0; trial < 20; ++trial) {
        Vec x = random_vec(rng, 2);
        CHECK(wdd.norm(x) == doctest::Approx(w.norm(x)).epsilon(1e-12));
    }

    NormedSpace c = NormedSpace::custom(
        2, [](const Vec& x) { return x.norm(); }, [](const Vec& x) { return Vec(x / x.norm()); });
    CHECK_THROWS_WITH_AS(c.dual(), "no dual available", std::domain_error);
}

TEST_CASE("invalid space construction") {
    CHECK_THROWS_WITH_AS(NormedSpace::lp(0, 2.0), "invalid space", std::invalid_argument);
    CHECK_THROWS_WITH_AS(NormedSpace::lp(2, 0.5), "invalid space", std::invalid_argument);
    CHECK_THROWS_WITH_AS(NormedSpace::weighted_lp(2, 2.0, {1.0, -1.0}), "invalid space",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(NormedSpace::lp(2, 2.0).norm(Vec::Zero(3)), "dimension",
                         std::invalid_argument);
}

TEST_CASE("operators: identity, linearity, adjoint") {
    NormedSpace l1 = NormedSpace::lp(2, 1.0);
    NormedSpace l2 = NormedSpace::lp(2, 2.0);
    LinearOperator id = LinearOperator::identity(l2);
    Vec x = rv({1.0, Complex(0.0, 2.0)});
    CHECK((id.apply(x) - x).norm() == 0.0);

    Mat m(2, 2);
    m << 1.0, 2.0, 0.0, 1.0;
    LinearOperator T(l1, l2, m);
    auto rng = make_rng(14, 0);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        Vec a = random_vec(rng, 2), b = random_vec(rng, 2);
        Complex s(g(rng), g(rng));
        CHECK((T.apply(a + s * b) - (T.apply(a) + s * T.apply(b))).norm() <= 1e-12);
    }

    LinearOperator Tp = T.adjoint();
    CHECK(Tp.domain().p() == 2.0);
    CHECK(Tp.codomain().p() == kInf);
    CHECK(Tp.matrix()(0, 0) == Complex(1.0));
    CHECK(Tp.matrix()(1, 0) == Complex(2.0));
    CHECK(Tp.matrix()(0, 1) == Complex(0.0));
    CHECK(Tp.matrix()(1, 1) == Complex(1.0));

    // <Tx, y'> = <x, T'y'> for random complex matrices
    Mat c(3, 2);
    for (int i = 0; i < 6; ++i) c(i / 2, i % 2) = Complex(g(rng), g(rng));
    LinearOperator S(NormedSpace::lp(2, 2.0), NormedSpace::lp(3, 2.0), c);
    LinearOperator Sp = S.adjoint();
    for (int trial = 0; trial < 20; ++trial) {
        Vec a = random_vec(rng, 2), y = random_vec(rng, 3);
        CHECK(pairing(S.apply(a), y) == doctest::Approx(pairing(a, Sp.apply(y))).epsilon(1e-12));
    }
}
