#include <catch2/catch_amalgamated.hpp>

#include "todakdv/hill.hpp"
#include "todakdv/profiles.hpp"

using namespace todakdv;

namespace {
HillPotential q_cos() {  // q = -2 cos 4 pi x, from alpha = cos 2 pi x
    ProfilePair pp(TrigPoly(0.0, {1.0}, {0.0}), TrigPoly());
    return hill_potentials(pp).first;
}
}  // namespace

TEST_CASE("free Hill eigenvalues: 0 and double (2 n pi)^2") {
    HillSpectrum s = galerkin_eigs(HillPotential{TrigPoly()}, 128, 32);
    REQUIRE(std::abs(s.lambdas[0]) < 1e-8);
    for (int n = 1; n <= 32; ++n) {
        double t = 4.0 * kPi * kPi * n * n;
        REQUIRE(s.lambdas[2 * n - 1] == Catch::Approx(t).epsilon(1e-10));
        REQUIRE(s.lambdas[2 * n] == Catch::Approx(t).epsilon(1e-10));
    }
}

TEST_CASE("eigenfunctions are L2-orthonormal and satisfy the ODE weakly") {
    HillPotential q = q_cos();
    HillSpectrum s = galerkin_eigs(q, 64, 8);
    for (int i = 0; i < 8; ++i) {
        CTrigPoly fi = CTrigPoly::from_real(s.eigenfunctions[i]);
        for (int j = i; j < 8; ++j) {
            CTrigPoly fj = CTrigPoly::from_real(s.eigenfunctions[j]);
            cplx ip = l2_inner(fi, fj);
            REQUIRE(std::abs(ip - (i == j ? cplx(1.0) : cplx(0.0))) < 1e-9);
        }
        // residual of -g'' + q g - lambda g in L2 (spectral accuracy)
        CTrigPoly res = cplx(-1.0) * fi.derivative().derivative() +
                        CTrigPoly::from_real(q.q) * fi - cplx(s.lambdas[i]) * fi;
        REQUIRE(res.l2_norm() < 1e-7);
    }
}

TEST_CASE("free discriminant is 2 cos(sqrt(lambda)/2)") {
    HillPotential q{TrigPoly()};
    for (double lam : {-10.0, 1.0, 40.0, 200.0, 500.0}) {
        cplx expect = 2.0 * std::cos(std::sqrt(cplx(lam)) / 2.0);
        HillDiscriminantSample d = hill_discriminant(q, cplx(lam));
        REQUIRE(std::abs(d.value - expect) < 1e-8 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("discriminant derivatives against finite differences") {
    HillPotential q = q_cos();
    double lam = 7.3, h = 1e-4;
    auto v = [&](double l) { return hill_discriminant(q, cplx(l)).value.real(); };
    HillDiscriminantSample d = hill_discriminant(q, cplx(lam));
    REQUIRE(d.d1.real() == Catch::Approx((v(lam + h) - v(lam - h)) / (2 * h)).epsilon(1e-6));
    REQUIRE(d.d2.real() ==
            Catch::Approx((v(lam + h) - 2 * v(lam) + v(lam - h)) / (h * h)).epsilon(1e-4));
}

TEST_CASE("Galerkin eigenvalues vs independent discriminant roots") {
    HillPotential q = q_cos();
    HillSpectrum s = galerkin_eigs(q, 64, 4);
    std::vector<double> seeds(s.lambdas.begin(), s.lambdas.begin() + 5);
    std::vector<double> roots = discriminant_roots(q, seeds);
    for (int j = 0; j <= 4; ++j)
        REQUIRE(roots[j] == Catch::Approx(s.lambdas[j]).margin(1e-7 * (1 + std::abs(roots[j]))));
}

TEST_CASE("Delta^2 - 4 vanishes at periodic eigenvalues") {
    HillPotential q = q_cos();
    HillSpectrum s = galerkin_eigs(q, 64, 4);
    for (int j = 0; j <= 4; ++j) {
        cplx d = hill_discriminant(q, cplx(s.lambdas[j])).value;
        REQUIRE(std::abs(d * d - 4.0) < 1e-6);
    }
}

TEST_CASE("product representation of Delta^2 - 4") {
    HillPotential q = q_cos();
    HillSpectrum s = galerkin_eigs(q, 128, 64);
    for (cplx lam : {cplx(3.0, 1.0), cplx(-5.0, 0.0), cplx(25.0, -2.0)})
        REQUIRE(product_representation_check(q, s, lam, 60) < 1e-5);
}

TEST_CASE("critical points of Delta for q = sin 4 pi x") {
    ProfilePair pp(TrigPoly(), TrigPoly(0.0, {0.0}, {-1.0}));
    HillPotential q = hill_potentials(pp).first;  // q = sin 4 pi x
    HillSpectrum s = galerkin_eigs(q, 64, 4);
    std::vector<double> z = derivative_zeros_hill(q, s, 2);
    for (int n = 1; n <= 2; ++n) {
        REQUIRE(z[n - 1] >= s.lambdas[2 * n - 1] - 1e-9);
        REQUIRE(z[n - 1] <= s.lambdas[2 * n] + 1e-9);
        // independent oracle: dense scan of d1 sign change in the bracket
        double lo = s.lambdas[2 * n - 1], hi = s.lambdas[2 * n];
        if (hi - lo > 1e-8) {
            double prev = hill_discriminant(q, cplx(lo)).d1.real(), found = lo;
            int steps = 200;
            for (int i = 1; i <= steps; ++i) {
                double x = lo + (hi - lo) * i / steps;
                double cur = hill_discriminant(q, cplx(x)).d1.real();
                if (prev * cur <= 0.0) {
                    found = x - 0.5 * (hi - lo) / steps;
                    break;
                }
                prev = cur;
            }
            REQUIRE(z[n - 1] == Catch::Approx(found).margin(2.0 * (hi - lo) / steps));
        }
    }
}

TEST_CASE("counting box endpoints") {
    HillPotential q = q_cos();
    HillSpectrum s = galerkin_eigs(q, 128, 64);
    SpectralBox box = counting_box(s, 1024, 0.3, 2);
    REQUIRE(box.m == static_cast<int>(std::floor(std::pow(1024.0, 0.3))));
    REQUIRE(box.f_of_m == static_cast<int>(std::floor(std::pow(static_cast<double>(box.m), 0.3))));
    REQUIRE(box.re_lo == Catch::Approx(s.lambdas[0] - 2.0));
    REQUIRE(box.re_hi == Catch::Approx(s.lambdas[2 * box.f_of_m] + 2.0));
    REQUIRE(box.im_half == 2.0);
}

TEST_CASE("eigenfunction bounds hold for a standard profile") {
    ProfilePair pp(TrigPoly(0.0, {1.0}, {0.0}), TrigPoly(0.0, {0.0}, {0.3}));
    NormBundle nb = norms(pp);
    HillPotential q = hill_potentials(pp).second;
    HillSpectrum s = galerkin_eigs(q, 128, 64);
    EigenfunctionBoundReport rep = eigenfunction_bound_check(q, s, nb, 4096, 0.4);
    REQUIRE(rep.precondition_met);
    REQUIRE(rep.all_pass);
}
