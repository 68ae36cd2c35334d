#pragma once

// Periodic Jacobi matrices L(b,a), the doubled matrix Q, their spectra,
// the Toda discriminant Delta_N with mu-derivatives, Casimirs, and the
// critical points of Delta_N.

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <stdexcept>

#include "todakdv/dual.hpp"
#include "todakdv/profiles.hpp"

namespace todakdv {

// Tridiagonal with periodic corners; for N = 2 the corner and off-diagonal
// entries collide and the (1,2) entry is a_1 + a_2.
inline Eigen::MatrixXd build_L(const PeriodicJacobiMatrix& m) {
    int N = m.n_sites;
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i) L(i, i) = m.b[i];
    if (N == 2) {
        L(0, 1) = L(1, 0) = m.a[0] + m.a[1];
        return L;
    }
    for (int i = 0; i + 1 < N; ++i) L(i, i + 1) = L(i + 1, i) = m.a[i];
    L(0, N - 1) = L(N - 1, 0) = m.a[N - 1];
    return L;
}

inline PeriodicJacobiMatrix build_Q(const ProfilePair& pp, int N) {
    PeriodicJacobiMatrix s = sample_flaschka(pp, N);
    PeriodicJacobiMatrix q;
    q.n_sites = 2 * N;
    q.b = s.b;
    q.b.insert(q.b.end(), s.b.begin(), s.b.end());
    q.a = s.a;
    q.a.insert(q.a.end(), s.a.begin(), s.a.end());
    return q;
}

struct SpectrumN {
    int n_sites = 0;           // N when holding the spectrum of Q (2N values)
    std::vector<double> values;  // sorted ascending
};

inline std::vector<double> eig_values(const PeriodicJacobiMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_L(m), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("eig_values: eigensolver failed");
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + m.n_sites);
    std::sort(v.begin(), v.end());
    return v;
}

// full spectrum of a doubled matrix Q (size 2N)
inline SpectrumN eig_spectrum(const PeriodicJacobiMatrix& q) {
    SpectrumN s;
    s.n_sites = q.n_sites / 2;
    s.values = eig_values(q);
    return s;
}

// Floquet subset of the Q-spectrum equal to spec L(b,a):
// even N keeps indices j = 0,3 (mod 4); odd N keeps j = 1,2 (mod 4).
inline std::vector<double> floquet_subset(const SpectrumN& s) {
    int N = s.n_sites;
    std::vector<double> out;
    out.reserve(N);
    for (int j = 0; j < 2 * N; ++j) {
        int r = j % 4;
        bool keep = (N % 2 == 0) ? (r == 0 || r == 3) : (r == 1 || r == 2);
        if (keep) out.push_back(s.values[j]);
    }
    return out;
}

struct DiscriminantSample {
    cplx mu{}, value{}, d1{}, d2{};
};

// Three-term recurrence a_{k-1} y(k-1) + b_k y(k) + a_k y(k+1) = mu y(k),
// coefficients periodic mod N; Delta_N = y1(N) + y2(N+1).  Derivatives in mu
// carried by second-order dual numbers.
inline DiscriminantSample discriminant(const PeriodicJacobiMatrix& m, cplx mu) {
    int N = m.n_sites;
    auto a = [&](int k) {  // a_k with period N, k >= 0
        int i = ((k - 1) % N + N) % N;
        return m.a[i];
    };
    auto b = [&](int k) { return m.b[(((k - 1) % N) + N) % N]; };
    using D = Dual2<cplx>;
    D muD = D::variable(mu);
    D y1m(1.0), y1(0.0);   // y1(0), y1(1)
    D y2m(0.0), y2(1.0);   // y2(0), y2(1)
    for (int k = 1; k <= N; ++k) {  // step k produces y(k+1)
        D n1 = ((muD - D(b(k))) * y1 - a(k - 1) * y1m) / a(k);
        y1m = y1;
        y1 = n1;
        D n2 = ((muD - D(b(k))) * y2 - a(k - 1) * y2m) / a(k);
        y2m = y2;
        y2 = n2;
    }
    // after the loop y1m = y1(N), y2 = y2(N+1)
    D delta = y1m + y2;
    return {mu, delta.v, delta.d1, delta.d2};
}

// q_N = prod a_n, p_N = sum b_n = (1/2) tr Q, on the N-site data
inline std::pair<double, double> casimirs(const PeriodicJacobiMatrix& m) {
    double q = 1.0, p = 0.0;
    for (int i = 0; i < m.n_sites; ++i) {
        q *= m.a[i];
        p += m.b[i];
    }
    return {q, p};
}

// relative residual of Delta_N(mu)^2 - 4 = q_N^{-2} prod_j (mu - lambda_j),
// lambda_j running over the 2N eigenvalues of Q.  Delta_N is the
// single-period discriminant; the product is accumulated in
// log-magnitude + phase form.
inline double char_product_check(const PeriodicJacobiMatrix& q_matrix, const SpectrumN& s,
                                 cplx mu) {
    int N = s.n_sites;
    PeriodicJacobiMatrix half;
    half.n_sites = N;
    half.b.assign(q_matrix.b.begin(), q_matrix.b.begin() + N);
    half.a.assign(q_matrix.a.begin(), q_matrix.a.begin() + N);
    double qN = casimirs(half).first;

    double logmag = -2.0 * std::log(qN);
    double phase = 0.0;
    for (double lam : s.values) {
        cplx f = mu - cplx(lam);
        logmag += std::log(std::abs(f));
        phase += std::arg(f);
    }
    cplx prod = std::exp(cplx(logmag, phase));
    cplx d = discriminant(half, mu).value;
    cplx lhs = d * d - 4.0;
    return std::abs(lhs - prod) / (1.0 + std::abs(lhs));
}

// zeros of d/dmu Delta_N in the brackets [lambda_{2n-1}, lambda_{2n}], n = 1..N-1
inline std::vector<double> derivative_zeros(const PeriodicJacobiMatrix& m, const SpectrumN& s) {
    int N = s.n_sites;
    std::vector<double> zeros;
    zeros.reserve(N - 1);
    auto d1 = [&](double mu) { return discriminant(m, cplx(mu)).d1.real(); };
    for (int n = 1; n <= N - 1; ++n) {
        double lo = s.values[2 * n - 1], hi = s.values[2 * n];
        double tol = 1e-12 * (1.0 + std::abs(lo));
        if (hi - lo <= tol) {
            zeros.push_back(0.5 * (lo + hi));
            continue;
        }
        double flo = d1(lo), fhi = d1(hi);
        if (flo == 0.0) { zeros.push_back(lo); continue; }
        if (fhi == 0.0) { zeros.push_back(hi); continue; }
        if (flo * fhi > 0.0)
            throw std::runtime_error("derivative_zeros: no sign change in bracket");
        while (hi - lo > tol) {
            double mid = 0.5 * (lo + hi), fm = d1(mid);
            if (fm == 0.0) { lo = hi = mid; break; }
            if (flo * fm < 0.0) { hi = mid; } else { lo = mid; flo = fm; }
        }
        zeros.push_back(0.5 * (lo + hi));
    }
    return zeros;
}

}  // namespace todakdv
