#pragma once

// Hill operators H = -d^2/dx^2 + q on [0,1] with period-1/2 trig-poly
// potentials: periodic eigenvalues and eigenfunctions (Fourier Galerkin),
// the Floquet discriminant Delta(lambda) with lambda-derivatives (RK4 on
// the variational system), its product representation, critical points,
// counting boxes and eigenfunction bounds.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "todakdv/dual.hpp"
#include "todakdv/profiles.hpp"

namespace todakdv {

struct HillSpectrum {
    std::vector<double> lambdas;        // lowest 2*J_max+1 periodic eigenvalues
    std::vector<TrigPoly> eigenfunctions;  // real, L^2[0,1]-orthonormal
    int truncation = 0;                 // Galerkin half-bandwidth K
};

namespace detail {

// real Fourier basis on [0,1]: index 0 -> 1, 2m-1 -> sqrt2 sin(2 pi m x),
// 2m -> sqrt2 cos(2 pi m x)
inline TrigPoly real_basis_fn(int i) {
    if (i == 0) return TrigPoly(1.0, {}, {});
    int m = (i + 1) / 2;
    std::vector<double> c(m, 0.0), s(m, 0.0);
    if (i % 2 == 0) c[m - 1] = std::sqrt(2.0); else s[m - 1] = std::sqrt(2.0);
    return TrigPoly(0.0, c, s);
}

inline Eigen::MatrixXd galerkin_matrix(const TrigPoly& q, int K) {
    int n = 2 * K + 1;
    std::vector<CTrigPoly> basis(n);
    for (int i = 0; i < n; ++i) basis[i] = CTrigPoly::from_real(real_basis_fn(i));
    CTrigPoly qc = CTrigPoly::from_real(q);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        CTrigPoly qbj = qc * basis[j];
        int mj = (j + 1) / 2;
        A(j, j) += 4.0 * kPi * kPi * mj * mj;
        for (int i = 0; i < n; ++i) A(i, j) += l2_inner(qbj, basis[i]).real();
    }
    return A;
}

inline void sign_normalize(Eigen::Ref<Eigen::VectorXd> v) {
    int best = 0;
    for (int i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    if (v[best] < 0.0) v = -v;
}

// norm of the cosine-type components (constant + cos harmonics)
inline double cos_part_norm(const Eigen::VectorXd& v) {
    double s = v[0] * v[0];
    for (int i = 2; i < v.size(); i += 2) s += v[i] * v[i];
    return std::sqrt(s);
}

}  // namespace detail

// Fourier Galerkin eigensolve; degenerate pairs are rotated so the first
// member maximizes the cosine-component norm, then sign-normalized.
inline HillSpectrum galerkin_eigs(const HillPotential& q, int K = 128, int J_max = 64) {
    if (K < 4 * q.q.max_harmonic() || K < J_max + 8)
        throw std::invalid_argument("galerkin_eigs: truncation K too small");
    int n_keep = 2 * J_max + 1;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(detail::galerkin_matrix(q.q, K));
    if (es.info() != Eigen::Success) throw std::runtime_error("galerkin_eigs: solver failed");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(detail::galerkin_matrix(q.q, 2 * K),
                                                       Eigen::EigenvaluesOnly);
    for (int j = 0; j < n_keep; ++j) {
        double l1 = es.eigenvalues()[j], l2 = es2.eigenvalues()[j];
        if (std::abs(l1 - l2) > 1e-8 * (1.0 + std::abs(l1)))
            throw std::runtime_error("galerkin_eigs: truncation not converged");
    }

    Eigen::MatrixXd V = es.eigenvectors().leftCols(n_keep);
    Eigen::VectorXd lam = es.eigenvalues().head(n_keep);

    // resolve (near-)degenerate pairs deterministically
    for (int j = 0; j + 1 < n_keep; ++j) {
        if (std::abs(lam[j + 1] - lam[j]) > 1e-8 * (1.0 + std::abs(lam[j]))) continue;
        Eigen::VectorXd v1 = V.col(j), v2 = V.col(j + 1);
        // maximize ||P_cos(cos t v1 + sin t v2)|| over t: top eigenvector of the
        // 2x2 Gram matrix of the cosine-part projections
        auto cospart = [](const Eigen::VectorXd& v) {
            Eigen::VectorXd p = Eigen::VectorXd::Zero(v.size());
            p[0] = v[0];
            for (int i = 2; i < v.size(); i += 2) p[i] = v[i];
            return p;
        };
        Eigen::VectorXd p1 = cospart(v1), p2 = cospart(v2);
        Eigen::Matrix2d G;
        G << p1.dot(p1), p1.dot(p2), p2.dot(p1), p2.dot(p2);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> g(G);
        Eigen::Vector2d t = g.eigenvectors().col(1);  // largest eigenvalue
        Eigen::VectorXd w1 = t[0] * v1 + t[1] * v2;
        Eigen::VectorXd w2 = -t[1] * v1 + t[0] * v2;
        V.col(j) = w1 / w1.norm();
        V.col(j + 1) = w2 / w2.norm();
        ++j;
    }
    for (int j = 0; j < n_keep; ++j) detail::sign_normalize(V.col(j));

    HillSpectrum s;
    s.truncation = K;
    s.lambdas.assign(lam.data(), lam.data() + n_keep);
    s.eigenfunctions.reserve(n_keep);
    for (int j = 0; j < n_keep; ++j) {
        TrigPoly g(V(0, j), std::vector<double>(K, 0.0), std::vector<double>(K, 0.0));
        for (int m = 1; m <= K; ++m) {
            g.sin_coeffs[m - 1] = std::sqrt(2.0) * V(2 * m - 1, j);
            g.cos_coeffs[m - 1] = std::sqrt(2.0) * V(2 * m, j);
        }
        s.eigenfunctions.push_back(std::move(g));
    }
    return s;
}

struct HillDiscriminantSample {
    cplx lambda{}, value{}, d1{}, d2{};
};

namespace detail {

using D4 = std::array<Dual2<cplx>, 4>;  // (y1, y1', y2, y2')

inline D4 axpy(const D4& y, const D4& k, double h) {
    D4 r;
    for (int i = 0; i < 4; ++i) r[i] = y[i] + h * k[i];
    return r;
}

}  // namespace detail

// Delta(lambda) = y1(1/2) + y2'(1/2); fixed-step classical RK4 carrying the
// first two lambda-derivatives through the variational equations.
inline HillDiscriminantSample hill_discriminant(const HillPotential& q, cplx lambda) {
    using D = Dual2<cplx>;
    D lam = D::variable(lambda);
    auto integrate = [&](int steps) {
        double h = 0.5 / steps;
        detail::D4 y{D(1.0), D(0.0), D(0.0), D(1.0)};
        auto rhs = [&](double x, const detail::D4& s) {
            D qq(q.q.eval(x));
            detail::D4 d;
            d[0] = s[1];
            d[1] = (qq - lam) * s[0];
            d[2] = s[3];
            d[3] = (qq - lam) * s[2];
            return d;
        };
        for (int i = 0; i < steps; ++i) {
            double x = i * h;
            detail::D4 k1 = rhs(x, y);
            detail::D4 k2 = rhs(x + 0.5 * h, detail::axpy(y, k1, 0.5 * h));
            detail::D4 k3 = rhs(x + 0.5 * h, detail::axpy(y, k2, 0.5 * h));
            detail::D4 k4 = rhs(x + h, detail::axpy(y, k3, h));
            for (int c = 0; c < 4; ++c)
                y[c] = y[c] + (h / 6.0) * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        }
        return y[0] + y[3];
    };
    int steps = std::max(400, static_cast<int>(std::ceil(40.0 * (1.0 + std::sqrt(std::abs(lambda))))));
    D coarse = integrate(steps);
    D fine = integrate(2 * steps);
    if (std::abs(fine.v - coarse.v) > 1e-8 * (1.0 + std::abs(fine.v)))
        throw std::runtime_error("hill_discriminant: step-halving check failed");
    return {lambda, fine.v, fine.d1, fine.d2};
}

// relative deviation of Delta^2 - 4 from the truncated eigenvalue product
// (1.2) with the free-spectrum tail factor beyond n = tail
inline double product_representation_check(const HillPotential& q, const HillSpectrum& s,
                                           cplx lambda, int tail) {
    if (static_cast<int>(s.lambdas.size()) < 2 * tail + 1)
        throw std::invalid_argument("product_representation_check: spectrum too short");
    double logmag = 0.0, phase = 0.0;
    auto mul = [&](cplx f) {
        logmag += std::log(std::abs(f));
        phase += std::arg(f);
    };
    mul(cplx(s.lambdas[0]) - lambda);
    for (int n = 1; n <= tail; ++n) {
        double pin = n * kPi;
        mul((cplx(s.lambdas[2 * n]) - lambda) * (cplx(s.lambdas[2 * n - 1]) - lambda) /
            (16.0 * pin * pin * pin * pin));
    }
    // free tail: prod_{n>tail} ((2 n pi)^2 - lambda)^2/(16 pi_n^4) = prod (1 - lambda/(2n pi)^2)^2
    for (int n = tail + 1;; ++n) {
        cplx f = 1.0 - lambda / cplx(4.0 * kPi * kPi * n * n);
        mul(f * f);
        if (std::abs(f - 1.0) < 1e-14 && n > 8 * tail) break;
        if (n > 1000000) break;
    }
    cplx prod = std::exp(cplx(logmag, phase));
    cplx d = hill_discriminant(q, lambda).value;
    cplx lhs = d * d - 4.0;
    return std::abs(lhs - prod) / (1.0 + std::abs(lhs));
}

// zeros of d/dlambda Delta in the gap brackets [lambda_{2n-1}, lambda_{2n}]
inline std::vector<double> derivative_zeros_hill(const HillPotential& q, const HillSpectrum& s,
                                                 int n_max) {
    std::vector<double> zeros;
    auto d1 = [&](double l) { return hill_discriminant(q, cplx(l)).d1.real(); };
    for (int n = 1; n <= n_max; ++n) {
        double lo = s.lambdas[2 * n - 1], hi = s.lambdas[2 * n];
        double tol = 1e-10 * (1.0 + std::abs(lo));
        if (hi - lo <= tol) {
            zeros.push_back(0.5 * (lo + hi));
            continue;
        }
        double flo = d1(lo), fhi = d1(hi);
        if (flo * fhi > 0.0)
            throw std::runtime_error("derivative_zeros_hill: no sign change in bracket");
        while (hi - lo > tol) {
            double mid = 0.5 * (lo + hi), fm = d1(mid);
            if (fm == 0.0) { lo = hi = mid; break; }
            if (flo * fm < 0.0) { hi = mid; } else { lo = mid; flo = fm; }
        }
        zeros.push_back(0.5 * (lo + hi));
    }
    return zeros;
}

struct SpectralBox {
    int m = 0;            // M = [F(N)]
    int f_of_m = 0;       // [F(M)]
    double re_lo = 0.0, re_hi = 0.0, im_half = 0.0;
    int variant = 2;      // margin 2 (box Lambda) or 1 (box Lambda_1)
    // smallest k0 such that lambda_{2k+1} - lambda_{2k} >= 6 for all checked k >= k0
    int gap_holds_from_k = 0;
};

inline SpectralBox counting_box(const HillSpectrum& s, int N, double eta, int variant) {
    SpectralBox box;
    box.variant = variant;
    box.m = static_cast<int>(std::floor(std::pow(static_cast<double>(N), eta)));
    box.f_of_m = std::max(1, static_cast<int>(std::floor(std::pow(static_cast<double>(box.m), eta))));
    if (static_cast<int>(s.lambdas.size()) < 2 * box.f_of_m + 1)
        throw std::invalid_argument("counting_box: spectrum too short");
    double margin = static_cast<double>(variant);
    box.re_lo = s.lambdas[0] - margin;
    box.re_hi = s.lambdas[2 * box.f_of_m] + margin;
    box.im_half = margin;
    int kmax = (static_cast<int>(s.lambdas.size()) - 2) / 2;
    box.gap_holds_from_k = 0;
    for (int k = kmax; k >= 0; --k) {
        if (s.lambdas[2 * k + 1] - s.lambdas[2 * k] < 6.0) {
            box.gap_holds_from_k = k + 1;
            break;
        }
    }
    return box;
}

struct EigenfunctionBoundRow {
    int j = 0;
    double d1_l2 = 0.0, d2_l2 = 0.0, d3_l2 = 0.0, d4_l2 = 0.0;
    double c0 = 0.0, d2_c0 = 0.0;
    bool pass = false;
};

struct EigenfunctionBoundReport {
    bool precondition_met = false;  // M > 2(1+||q||_0) e^{||q||_0}
    std::vector<EigenfunctionBoundRow> rows;
    bool all_pass = false;
};

// Sobolev/C0 bounds on eigenfunctions for j <= 2M, plus |lambda_j| <= 4 pi^2 (M+1/2)^2
inline EigenfunctionBoundReport eigenfunction_bound_check(const HillPotential& q,
                                                          const HillSpectrum& s,
                                                          const NormBundle& nb, int N,
                                                          double eta) {
    EigenfunctionBoundReport rep;
    double F = std::pow(static_cast<double>(N), eta);
    int M = static_cast<int>(std::floor(F));
    double q_l2 = sobolev_norm(q.q, 0);
    rep.precondition_met = M > 2.0 * (1.0 + q_l2) * std::exp(q_l2);
    if (!rep.precondition_met) return rep;
    double K = nb.k_alpha_beta;
    double B = 2.0 * K + 8.0 * kPi * kPi * F * F;
    rep.all_pass = true;
    for (int j = 0; j <= 2 * M && j < static_cast<int>(s.lambdas.size()); ++j) {
        const TrigPoly& g = s.eigenfunctions[j];
        EigenfunctionBoundRow r;
        r.j = j;
        TrigPoly d1 = g.derivative(), d2 = d1.derivative(), d3 = d2.derivative(),
                 d4 = d3.derivative();
        // ||.||_0 here is the plain L^2 norm of the derivative itself
        auto l2 = [](const TrigPoly& f) { return CTrigPoly::from_real(f).l2_norm(); };
        r.d1_l2 = l2(d1);
        r.d2_l2 = l2(d2);
        r.d3_l2 = l2(d3);
        r.d4_l2 = l2(d4);
        r.c0 = c0_norm(g);
        r.d2_c0 = c0_norm(d2);
        bool ok = r.d1_l2 <= std::sqrt(B) && r.d2_l2 <= B &&
                  r.d3_l2 <= std::pow(B, 1.5) + 2.0 * K && r.d4_l2 <= 3.0 * B * B + 2.0 * K;
        ok = ok && std::abs(s.lambdas[j]) <= 4.0 * kPi * kPi * (M + 0.5) * (M + 0.5);
        ok = ok && r.d2_c0 <= (q_l2 + 8.0 * kPi * kPi * F * F) * r.c0;
        r.pass = ok;
        rep.all_pass = rep.all_pass && ok;
        rep.rows.push_back(r);
    }
    return rep;
}

// Second, independent eigenvalue route: each eigenvalue is the sign change
// of u(lambda) = Delta^2 - 4 between the midpoints of the two adjacent
// band/gap intervals (u < 0 inside bands, > 0 inside open gaps).  Gaps too
// small for u to resolve fall back to the critical point of Delta, which
// lies between the two coinciding eigenvalues.
inline std::vector<double> discriminant_roots(const HillPotential& q,
                                              const std::vector<double>& seeds) {
    auto u = [&](double l) {
        double d = hill_discriminant(q, cplx(l)).value.real();
        return d * d - 4.0;
    };
    auto bisect = [&](auto&& f, double lo, double hi, double flo) {
        while (hi - lo > 1e-11 * (1.0 + std::abs(lo))) {
            double mid = 0.5 * (lo + hi), fm = f(mid);
            if (fm == 0.0) return mid;
            if (flo * fm < 0.0) { hi = mid; } else { lo = mid; flo = fm; }
        }
        return 0.5 * (lo + hi);
    };
    std::vector<double> roots;
    roots.reserve(seeds.size());
    for (std::size_t idx = 0; idx < seeds.size(); ++idx) {
        double seed = seeds[idx];
        double p_lo = (idx == 0) ? seed - 1.0 : 0.5 * (seeds[idx - 1] + seed);
        double p_hi = (idx + 1 == seeds.size()) ? seed + 1.0 : 0.5 * (seed + seeds[idx + 1]);
        double u_lo = u(p_lo), u_hi = u(p_hi);
        if (u_lo * u_hi < 0.0) {
            roots.push_back(bisect(u, p_lo, p_hi, u_lo));
            continue;
        }
        // numerically closed gap: locate the critical point of Delta instead
        auto d1 = [&](double l) { return hill_discriminant(q, cplx(l)).d1.real(); };
        double f_lo = d1(p_lo), f_hi = d1(p_hi);
        if (f_lo * f_hi > 0.0)
            throw std::runtime_error("discriminant_roots: no sign change near seed");
        roots.push_back(bisect(d1, p_lo, p_hi, f_lo));
    }
    return roots;
}

}  // namespace todakdv
