#pragma once

// Profile pairs (alpha, beta), their norms, Flaschka sampling and the two
// limiting Hill potentials q_± = -2 alpha(2x) ∓ beta(2x).

#include <stdexcept>
#include <string>

#include "todakdv/trigpoly.hpp"

namespace todakdv {

struct ProfilePair {
    TrigPoly alpha;
    TrigPoly beta;

    ProfilePair() = default;
    ProfilePair(TrigPoly a, TrigPoly b) : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha.constant != 0.0 || beta.constant != 0.0)
            throw std::invalid_argument("profile pair must be zero-mean");
    }
    int max_harmonic() const { return std::max(alpha.max_harmonic(), beta.max_harmonic()); }
};

struct FunctionNorms {
    double c0 = 0.0;
    double c2 = 0.0;
    double sobolev[3] = {0.0, 0.0, 0.0};
};

struct NormBundle {
    FunctionNorms alpha;
    FunctionNorms beta;
    double k_alpha_beta = 1.0;  // ||alpha||_{C^2} + ||beta||_{C^2} + 1
};

inline FunctionNorms function_norms(const TrigPoly& f) {
    FunctionNorms n;
    n.c0 = c0_norm(f);
    n.c2 = c_norm(f, 2);
    for (int l = 0; l < 3; ++l) n.sobolev[l] = sobolev_norm(f, l);
    return n;
}

inline NormBundle norms(const ProfilePair& pp) {
    NormBundle b;
    b.alpha = function_norms(pp.alpha);
    b.beta = function_norms(pp.beta);
    b.k_alpha_beta = b.alpha.c2 + b.beta.c2 + 1.0;
    return b;
}

struct PeriodicJacobiMatrix {
    int n_sites = 0;
    std::vector<double> b;  // diagonal, index n-1 for site n = 1..N
    std::vector<double> a;  // off-diagonal, a[n-1] couples sites n, n+1 (a_N wraps)
};

// b_n = eps beta(n/N), a_n = 1 + eps alpha(n/N), eps = (2N)^{-2}
inline PeriodicJacobiMatrix sample_flaschka(const ProfilePair& pp, int N) {
    if (N < 2) throw std::invalid_argument("sample_flaschka: N >= 2 required");
    double eps = 1.0 / (4.0 * static_cast<double>(N) * N);
    PeriodicJacobiMatrix m;
    m.n_sites = N;
    m.b.resize(N);
    m.a.resize(N);
    for (int n = 1; n <= N; ++n) {
        double x = static_cast<double>(n) / N;
        m.b[n - 1] = eps * pp.beta.eval(x);
        m.a[n - 1] = 1.0 + eps * pp.alpha.eval(x);
        if (m.a[n - 1] <= 0.0)
            throw std::domain_error("sample_flaschka: nonpositive a_n at N=" + std::to_string(N));
    }
    return m;
}

struct HillPotential {
    TrigPoly q;  // even harmonics only, zero mean (period 1/2)
};

// q_+ = -2 alpha(2x) - beta(2x), q_- = -2 alpha(2x) + beta(2x)
inline std::pair<HillPotential, HillPotential> hill_potentials(const ProfilePair& pp) {
    TrigPoly a2 = frequency_double(pp.alpha);
    TrigPoly b2 = frequency_double(pp.beta);
    HillPotential qp{(-2.0) * a2 - b2};
    HillPotential qm{(-2.0) * a2 + b2};
    return {qp, qm};
}

}  // namespace todakdv
