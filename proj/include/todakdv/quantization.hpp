#pragma once

// States of the 2N-dimensional theta space as coefficient vectors,
// Lagrangian states psi^{N,k}_f, the shift and symbol operators, residual
// bounds, bulk/edge quasimodes and the abstract quasimode certificates.
//
// Convention: coeffs[j] multiplies theta_j, psi^{N,k} has coefficients
// (2N)^{-1/2} e^{-i pi k j / N}.  The operator T^{alpha,beta} is the
// doubled Jacobi matrix Q in the reversed basis [theta_{2N-1},...,theta_0],
// so matrix row r acts on theta index 2N-1-r.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "todakdv/hill.hpp"
#include "todakdv/jacobi.hpp"
#include "todakdv/profiles.hpp"

namespace todakdv {

struct FockState {
    int n_param = 0;            // N
    std::vector<cplx> coeffs;   // length 2N

    FockState() = default;
    explicit FockState(int N) : n_param(N), coeffs(2 * static_cast<std::size_t>(N), cplx(0.0)) {}

    double norm() const {
        double s = 0.0;
        for (const cplx& c : coeffs) s += std::norm(c);
        return std::sqrt(s);
    }
};

inline cplx inner(const FockState& a, const FockState& b) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < a.coeffs.size(); ++j) s += a.coeffs[j] * std::conj(b.coeffs[j]);
    return s;
}

inline FockState operator+(const FockState& a, const FockState& b) {
    FockState r = a;
    for (std::size_t j = 0; j < r.coeffs.size(); ++j) r.coeffs[j] += b.coeffs[j];
    return r;
}
inline FockState operator-(const FockState& a, const FockState& b) {
    FockState r = a;
    for (std::size_t j = 0; j < r.coeffs.size(); ++j) r.coeffs[j] -= b.coeffs[j];
    return r;
}
inline FockState operator*(cplx s, const FockState& a) {
    FockState r = a;
    for (cplx& c : r.coeffs) c *= s;
    return r;
}
inline FockState normalized(const FockState& a) { return cplx(1.0 / a.norm()) * a; }

// psi^{N,k}_f per the closed coefficient formula:
// c_j = (2N)^{-1/2} e^{-i pi k j/N} sum_m fhat_m e^{-pi m^2/2N} e^{-i pi m j/N}
inline FockState lagrangian_state(const CTrigPoly& f, int k, int N) {
    if (k < 0 || k > 2 * N - 1) throw std::invalid_argument("lagrangian_state: k out of range");
    FockState st(N);
    double root = 1.0 / std::sqrt(2.0 * N);
    for (int j = 0; j < 2 * N; ++j) {
        cplx s = 0.0;
        for (int m = -f.M; m <= f.M; ++m) {
            if (f.mode(m) == cplx(0.0)) continue;
            s += f.mode(m) * std::exp(-kPi * m * m / (2.0 * N)) *
                 std::exp(cplx(0.0, -kPi * m * j / static_cast<double>(N)));
        }
        st.coeffs[j] = root * std::exp(cplx(0.0, -kPi * k * j / static_cast<double>(N))) * s;
    }
    return st;
}
inline FockState lagrangian_state(const TrigPoly& f, int k, int N) {
    return lagrangian_state(CTrigPoly::from_real(f), k, N);
}

// the free eigenvector psi^{N,k} (= psi^{N,k}_1)
inline FockState psi_basis(int k, int N) { return lagrangian_state(CTrigPoly::one(), k, N); }

// Closed-form inner product <psi^{N,k}_f, psi^{N,l}_g>
inline cplx inner_product_formula(const CTrigPoly& f, const CTrigPoly& g, int k, int ell, int N) {
    cplx s = 0.0;
    for (int n = -f.M; n <= f.M; ++n) {
        int n2 = n + k - ell;
        if (std::abs(n2) > g.M) continue;
        s += f.mode(n) * std::conj(g.mode(n2)) * std::exp(-kPi * n * n / (2.0 * N)) *
             std::exp(-kPi * n2 * n2 / (2.0 * N));
    }
    return s;
}

// apply the doubled Jacobi matrix (size 2N) in the reversed theta basis
inline FockState apply_T(const PeriodicJacobiMatrix& q, const FockState& st) {
    int n = q.n_sites;  // 2N
    FockState out(st.n_param);
    // v_r = c_{n-1-r}; w = Q v; out_j = w_{n-1-j}
    for (int r = 0; r < n; ++r) {
        cplx v = q.b[r] * st.coeffs[n - 1 - r];
        int rp = (r + 1) % n, rm = (r - 1 + n) % n;
        v += q.a[r] * st.coeffs[n - 1 - rp];
        v += q.a[rm] * st.coeffs[n - 1 - rm];
        out.coeffs[n - 1 - r] = v;
    }
    return out;
}
inline FockState apply_T(const ProfilePair& pp, int N, const FockState& st) {
    return apply_T(build_Q(pp, N), st);
}

// shift operators T^{+/-} in theta coordinates: translation of the
// coefficient index (exact permutation)
inline FockState apply_shift(int sign, int N, const FockState& st) {
    int n = 2 * N;
    FockState out(N);
    for (int j = 0; j < n; ++j) out.coeffs[j] = st.coeffs[((j - sign) % n + n) % n];
    return out;
}

// symbol-side shift D^{+/-}_ell: mode m picks up e^{+/- i pi (ell+m)/N}
inline CTrigPoly symbol_shift(int sign, int ell, const CTrigPoly& f, int N) {
    CTrigPoly r = f;
    for (int m = -f.M; m <= f.M; ++m)
        r.mode_ref(m) = f.mode(m) * std::exp(cplx(0.0, sign * kPi * (ell + m) / static_cast<double>(N)));
    return r;
}

struct SymbolParams {
    int ell = 0;
    ProfilePair pp;
    int N = 0;
};

// D^{0,0}_ell: Fourier multiplier 2 cos(ell pi/N + m pi/N)
inline CTrigPoly symbol_free(int ell, const CTrigPoly& f, int N) {
    CTrigPoly r = f;
    for (int m = -f.M; m <= f.M; ++m)
        r.mode_ref(m) = f.mode(m) * 2.0 * std::cos(kPi * (ell + m) / static_cast<double>(N));
    return r;
}

// D^{alpha,beta}_ell(f) = D^{0,0}_ell(f) + (1/4N^2)(beta_2 f + alpha_2 D^{0,0}_ell(f))
inline CTrigPoly symbol_apply(const SymbolParams& sp, const CTrigPoly& f) {
    double eps = 1.0 / (4.0 * static_cast<double>(sp.N) * sp.N);
    CTrigPoly base = symbol_free(sp.ell, f, sp.N);
    CTrigPoly a2 = frequency_double(CTrigPoly::from_real(sp.pp.alpha));
    CTrigPoly b2 = frequency_double(CTrigPoly::from_real(sp.pp.beta));
    return base + cplx(eps) * (b2 * f) + cplx(eps) * (a2 * base);
}

// || T^{alpha,beta} psi^{N,ell}_f - psi^{N,ell}_{D^{alpha,beta}_ell f} ||
inline double prop35_residual(const ProfilePair& pp, int N, int ell, const CTrigPoly& f) {
    FockState lhs = apply_T(pp, N, lagrangian_state(f, ell, N));
    FockState rhs = lagrangian_state(symbol_apply({ell, pp, N}, f), ell, N);
    return (lhs - rhs).norm();
}

// (T^{0,f} - T^{0,0}) acts diagonally on theta_j with (2N)^{-2} f(-j/N)
inline FockState apply_diagonal_perturbation(const TrigPoly& f, int N, const FockState& st) {
    double eps = 1.0 / (4.0 * static_cast<double>(N) * N);
    FockState out(N);
    for (int j = 0; j < 2 * N; ++j)
        out.coeffs[j] = eps * f.eval(-static_cast<double>(j) / N) * st.coeffs[j];
    return out;
}

// || (T^{0,f} - T^{0,0}) psi^{N,k}_g - (1/4N^2) psi^{N,k}_{g f_2} ||
inline double lemma37_residual(const TrigPoly& f, const CTrigPoly& g, int k, int N) {
    double eps = 1.0 / (4.0 * static_cast<double>(N) * N);
    FockState lhs = apply_diagonal_perturbation(f, N, lagrangian_state(g, k, N));
    CTrigPoly f2 = frequency_double(CTrigPoly::from_real(f));
    FockState rhs = cplx(eps) * lagrangian_state(g * f2, k, N);
    return (lhs - rhs).norm();
}

struct BulkQuasimode {
    FockState plus, minus;
    double mu = 0.0;
    cplx overlap;  // <psi_+, psi_-> before renormalization
};

// Perturbation-theory quasimodes in the bulk: symmetric/antisymmetric
// combinations of psi^{N,N+/-ell} plus the first-order correction.
inline BulkQuasimode bulk_quasimode(const ProfilePair& pp, int N, int ell, double eta) {
    int M = static_cast<int>(std::floor(std::pow(static_cast<double>(N), eta)));
    if (!(M < ell && ell < N - M)) throw std::invalid_argument("bulk_quasimode: ell not in bulk range");

    CTrigPoly ac = CTrigPoly::from_real(pp.alpha), bc = CTrigPoly::from_real(pp.beta);
    double c_ell = 2.0 * std::cos(kPi * ell / static_cast<double>(N));
    cplx gamma = bc.mode(ell) - c_ell * ac.mode(ell);
    cplx phase = (gamma == cplx(0.0)) ? cplx(1.0) : std::abs(gamma) / gamma;  // e^{i eta_ell}

    FockState tp = psi_basis((N + ell) % (2 * N), N), tm = psi_basis(N - ell, N);
    double r2 = 1.0 / std::sqrt(2.0);
    FockState psi0p = cplx(r2) * (tp + phase * tm);
    FockState psi0m = cplx(r2) * (tp - phase * tm);

    PeriodicJacobiMatrix q = build_Q(pp, N);
    PeriodicJacobiMatrix q0 = build_Q(ProfilePair(), N);
    auto correct = [&](const FockState& psi0) {
        FockState v = apply_T(q, psi0) - apply_T(q0, psi0);
        FockState phi(N);
        for (int n = 0; n < 2 * N; ++n) {
            if (n == (N + ell) % (2 * N) || n == N - ell) continue;
            FockState basis_n = psi_basis(n, N);
            cplx num = inner(v, basis_n);
            double den = c_ell + 2.0 * std::cos(kPi * n / static_cast<double>(N));
            phi = phi + cplx(-1.0 / den) * (num * basis_n);
        }
        return psi0 + phi;
    };

    BulkQuasimode out;
    FockState p = correct(psi0p), m = correct(psi0m);
    out.overlap = inner(p, m) / (p.norm() * m.norm());
    out.plus = normalized(p);
    out.minus = normalized(m);
    out.mu = -c_ell;
    return out;
}

struct EdgeQuasimode {
    FockState state;
    double mu = 0.0;
};

// Left edge: carrier k = N with density g_j of q_-, mu = -2 + lambda_j/4N^2.
// Right edge: carrier k = 0 with density g_j of q_+, mu = 2 - lambda_j/4N^2.
inline EdgeQuasimode edge_quasimode(int N, int j, int side, const HillSpectrum& hs) {
    double eps = 1.0 / (4.0 * static_cast<double>(N) * N);
    EdgeQuasimode out;
    if (side < 0) {
        out.state = lagrangian_state(hs.eigenfunctions[j], N, N);
        out.mu = -2.0 + eps * hs.lambdas[j];
    } else {
        out.state = lagrangian_state(hs.eigenfunctions[j], 0, N);
        out.mu = 2.0 - eps * hs.lambdas[j];
    }
    return out;
}

struct QuasimodeCertificate {
    double mu = 0.0;
    double residual = 0.0;      // C
    double gram_offdiag = 0.0;  // theta, pair variant only
    bool pair = false;
    double pair_window = 0.0;   // D = 8C(1-theta)^{-1} * 1.01
};

template <class Op>
QuasimodeCertificate quasimode_certificate(Op&& apply, const FockState& psi, double mu) {
    FockState u = normalized(psi);
    QuasimodeCertificate c;
    c.mu = mu;
    c.residual = (apply(u) - cplx(mu) * u).norm();
    return c;
}

template <class Op>
QuasimodeCertificate quasimode_pair_certificate(Op&& apply, const FockState& psi_p,
                                                const FockState& psi_m, double mu) {
    FockState up = normalized(psi_p), um = normalized(psi_m);
    double theta = std::abs(inner(up, um));
    if (theta >= 1.0) throw std::invalid_argument("pair certificate: states not independent");
    double cp = (apply(up) - cplx(mu) * up).norm();
    double cm = (apply(um) - cplx(mu) * um).norm();
    QuasimodeCertificate c;
    c.mu = mu;
    c.pair = true;
    c.residual = std::max(cp, cm);
    c.gram_offdiag = theta;
    c.pair_window = 8.0 * c.residual / (1.0 - theta) * 1.01;
    return c;
}

// check the certificate against an actual (sorted) spectrum
inline bool certificate_verified(const QuasimodeCertificate& c, const std::vector<double>& spec) {
    if (!c.pair) {
        for (double l : spec)
            if (std::abs(l - c.mu) <= c.residual * (1.0 + 1e-12) + 1e-14) return true;
        return false;
    }
    int captured = 0;
    for (double l : spec)
        if (std::abs(l - c.mu) <= c.pair_window * (1.0 + 1e-12) + 1e-14) ++captured;
    return captured >= 2;
}

}  // namespace todakdv
