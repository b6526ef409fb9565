#include "umdnorms/systems.hpp"

#include <doctest.h>

using namespace umdnorms;
using std::numbers::pi;

TEST_CASE("member evaluation") {
    CHECK(TrigSystem::cosine(3).evaluate(1, 0.0).real() == doctest::Approx(std::sqrt(2.0)));
    CHECK(TrigSystem::sine(3).evaluate(2, pi / 4).real() == doctest::Approx(std::sqrt(2.0)));
    Complex e2 = TrigSystem::exponential_range(1, 3).evaluate(2, pi / 2);
    CHECK(e2.real() == doctest::Approx(-1.0));
    CHECK(e2.imag() == doctest::Approx(0.0));
    CHECK_THROWS_WITH_AS(TrigSystem::cosine(3).evaluate(4, 0.0), "member index",
                         std::out_of_range);
    CHECK_THROWS_WITH_AS(TrigSystem::cosine(3).evaluate(0, 0.0), "member index",
                         std::out_of_range);
}

TEST_CASE("conjugate system") {
    TrigSystem E = TrigSystem::exponential(4);
    TrigSystem Ebar = E.conjugate();
    for (int k = 1; k <= 4; ++k)
        for (double t : {0.3, -1.1, 2.9}) {
            CHECK(Ebar.evaluate(k, t) == std::conj(E.evaluate(k, t)));
            CHECK(Ebar.conjugate().evaluate(k, t) == E.evaluate(k, t));
        }
}

TEST_CASE("grid basics") {
    QuadratureGrid g(8);
    CHECK(g.node(0) == doctest::Approx(-pi));
    CHECK(g.node(4) == doctest::Approx(0.0));
    CHECK(g.weight() * g.size() == doctest::Approx(1.0));
    CHECK(QuadratureGrid::default_for(4).size() == 256);
    CHECK(QuadratureGrid::default_for(100).size() == 808);
    CHECK_THROWS_AS(QuadratureGrid(0), std::invalid_argument);
}

TEST_CASE("discrete orthonormality at the exactness threshold") {
    for (int n : {1, 2, 3, 8, 17, 64}) {
        QuadratureGrid g(2 * n + 1);
        CHECK(gram_deviation(TrigSystem::exponential(n), g) < 1e-12);
        CHECK(gram_deviation(TrigSystem::cosine(n), g) < 1e-12);
        CHECK(gram_deviation(TrigSystem::sine(n), g) < 1e-12);
    }
    CHECK(gram_deviation(TrigSystem::exponential(8), QuadratureGrid(17)) < 1e-12);
    CHECK(gram_deviation(TrigSystem::cosine(4), QuadratureGrid(9)) < 1e-12);
    CHECK(gram_deviation(TrigSystem::exponential_range(-6, 6), QuadratureGrid(13)) < 1e-12);
}

TEST_CASE("aliasing below the threshold") {
    // on a 7-point grid e_8 and e_1 coincide, so the Gram matrix picks up an
    // off-diagonal 1
    CHECK(gram_deviation(TrigSystem::exponential(8), QuadratureGrid(7)) >= 0.5);
    CHECK(gram_deviation(TrigSystem::exponential_range(0, 8), QuadratureGrid(8)) >= 0.5);
}

TEST_CASE("tensor systems") {
    TrigSystem S3 = TrigSystem::sine(3), C3 = TrigSystem::cosine(3);
    TensorSystem sc = tensor(S3, C3);
    CHECK(std::abs(sc.evaluate(2, pi / 2, 0.0)) < 1e-12);
    CHECK(sc.evaluate(1, pi / 2, 0.0).real() == doctest::Approx(2.0));
    CHECK(gram_deviation(tensor(TrigSystem::sine(2), TrigSystem::sine(2)), QuadratureGrid(5)) <
          1e-12);
    CHECK_THROWS_WITH_AS(tensor(TrigSystem::sine(2), TrigSystem::cosine(3)), "tensor size",
                         std::invalid_argument);
}

TEST_CASE("describe strings") {
    CHECK(TrigSystem::exponential(5).describe() == "E:5");
    CHECK(TrigSystem::cosine(2).describe() == "C:2");
    CHECK(TrigSystem::sine(7).describe() == "S:7");
    CHECK(TrigSystem::exponential(3).conjugate().describe() == "Ebar:3");
    CHECK(TrigSystem::exponential_range(-4, 4).describe() == "Erange:-4..4");
    CHECK(tensor(TrigSystem::sine(2), TrigSystem::cosine(2)).describe() == "SxC:2");
}
