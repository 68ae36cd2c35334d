#include <catch2/catch_amalgamated.hpp>

#include "todakdv/trigpoly.hpp"

using namespace todakdv;

TEST_CASE("real trig poly evaluation against direct sums") {
    TrigPoly f(0.25, {1.0, -0.5}, {0.0, 2.0});
    for (double x : {0.0, 0.1, 0.37, 0.9}) {
        double expect = 0.25 + std::cos(2 * kPi * x) - 0.5 * std::cos(4 * kPi * x) +
                        2.0 * std::sin(4 * kPi * x);
        REQUIRE(f.eval(x) == Catch::Approx(expect).margin(1e-14));
    }
}

TEST_CASE("derivative matches finite differences") {
    TrigPoly f(0.0, {1.0, 0.3}, {0.7, -0.2});
    TrigPoly d = f.derivative();
    double h = 1e-6;
    for (double x : {0.05, 0.42, 0.77}) {
        double fd = (f.eval(x + h) - f.eval(x - h)) / (2 * h);
        REQUIRE(d.eval(x) == Catch::Approx(fd).margin(1e-6));
    }
}

TEST_CASE("complex form agrees with real form pointwise") {
    TrigPoly f(0.5, {1.0, 0.0, -0.25}, {0.0, 2.0, 0.1});
    CTrigPoly c = CTrigPoly::from_real(f);
    for (double x : {0.0, 0.2, 0.61}) {
        cplx v = c.eval(x);
        REQUIRE(std::abs(v.imag()) < 1e-13);
        REQUIRE(v.real() == Catch::Approx(f.eval(x)).margin(1e-13));
    }
}

TEST_CASE("mode convolution product is the pointwise product") {
    CTrigPoly f = CTrigPoly::from_real(TrigPoly(0.0, {1.0}, {0.5}));
    CTrigPoly g = CTrigPoly::from_real(TrigPoly(1.0, {0.0, 0.3}, {0.2, 0.0}));
    CTrigPoly p = f * g;
    for (double x : {0.13, 0.5, 0.88}) {
        cplx expect = f.eval(x) * g.eval(x);
        REQUIRE(std::abs(p.eval(x) - expect) < 1e-13);
    }
}

TEST_CASE("frequency doubling is composition with 2x") {
    TrigPoly f(0.0, {1.0, -0.4}, {0.3, 0.0});
    TrigPoly f2 = frequency_double(f);
    for (double x : {0.07, 0.33, 0.71})
        REQUIRE(f2.eval(x) == Catch::Approx(f.eval(2 * x)).margin(1e-13));
}

TEST_CASE("Sobolev and L2 norms against hand-computed values") {
    // f = cos 2 pi x: modes +-1 each 1/2; ||f||_0^2 = 1/2, ||f||_1^2 = 2 * 4 * 1/4 = 2
    TrigPoly f(0.0, {1.0}, {0.0});
    REQUIRE(sobolev_norm(f, 0) == Catch::Approx(std::sqrt(0.5)).margin(1e-14));
    REQUIRE(sobolev_norm(f, 1) == Catch::Approx(std::sqrt(2.0)).margin(1e-14));
}

TEST_CASE("C0 and C2 norms of cos 2 pi x") {
    TrigPoly f(0.0, {1.0}, {0.0});
    REQUIRE(c0_norm(f) == Catch::Approx(1.0).margin(1e-6));
    // sup |f| + |f'| + |f''|; with w = 2 pi the max of |cos| (1 + w^2) + w |sin|
    // over the grid; at the grid resolution used this is within 1e-4 of the
    // true sup sqrt((1+w^2)^2 + w^2)
    double w = 2 * kPi;
    double true_sup = std::sqrt((1 + w * w) * (1 + w * w) + w * w);
    REQUIRE(c_norm(f, 2) == Catch::Approx(true_sup).epsilon(1e-4));
}

TEST_CASE("l2 inner product matches quadrature") {
    CTrigPoly f = CTrigPoly::from_real(TrigPoly(0.3, {1.0}, {0.0}));
    CTrigPoly g = CTrigPoly::from_real(TrigPoly(0.0, {0.5}, {0.7}));
    cplx ip = l2_inner(f, g);
    // trapezoid on the smooth periodic integrand is spectrally accurate
    int n = 4096;
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = static_cast<double>(i) / n;
        acc += f.eval(x) * std::conj(g.eval(x));
    }
    acc /= static_cast<double>(n);
    REQUIRE(std::abs(ip - acc) < 1e-12);
}
