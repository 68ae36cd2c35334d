#pragma once

// Finite trigonometric polynomials on the unit circle, in two flavors:
// real cos/sin coefficient form (profile data) and complex Fourier-mode
// form (state densities).  All algebra is exact (coefficient arithmetic).

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace todakdv {

inline constexpr double kPi = 3.14159265358979323846;
using cplx = std::complex<double>;

struct CTrigPoly;

// f(x) = constant + sum_m cos_coeffs[m-1] cos(2 pi m x) + sin_coeffs[m-1] sin(2 pi m x)
struct TrigPoly {
    double constant = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    TrigPoly() = default;
    TrigPoly(double c, std::vector<double> cc, std::vector<double> sc)
        : constant(c), cos_coeffs(std::move(cc)), sin_coeffs(std::move(sc)) {
        if (cos_coeffs.size() != sin_coeffs.size()) {
            std::size_t m = std::max(cos_coeffs.size(), sin_coeffs.size());
            cos_coeffs.resize(m, 0.0);
            sin_coeffs.resize(m, 0.0);
        }
    }

    int max_harmonic() const { return static_cast<int>(cos_coeffs.size()); }

    double eval(double x) const {
        double s = constant;
        for (std::size_t i = 0; i < cos_coeffs.size(); ++i) {
            double w = 2.0 * kPi * static_cast<double>(i + 1) * x;
            s += cos_coeffs[i] * std::cos(w) + sin_coeffs[i] * std::sin(w);
        }
        return s;
    }

    TrigPoly derivative() const {
        TrigPoly d;
        d.cos_coeffs.resize(cos_coeffs.size());
        d.sin_coeffs.resize(sin_coeffs.size());
        for (std::size_t i = 0; i < cos_coeffs.size(); ++i) {
            double w = 2.0 * kPi * static_cast<double>(i + 1);
            d.cos_coeffs[i] = w * sin_coeffs[i];
            d.sin_coeffs[i] = -w * cos_coeffs[i];
        }
        return d;
    }

    bool is_zero() const {
        if (constant != 0.0) return false;
        for (double c : cos_coeffs) if (c != 0.0) return false;
        for (double s : sin_coeffs) if (s != 0.0) return false;
        return true;
    }
};

inline TrigPoly operator+(const TrigPoly& f, const TrigPoly& g) {
    TrigPoly r;
    r.constant = f.constant + g.constant;
    std::size_t m = std::max(f.cos_coeffs.size(), g.cos_coeffs.size());
    r.cos_coeffs.assign(m, 0.0);
    r.sin_coeffs.assign(m, 0.0);
    for (std::size_t i = 0; i < f.cos_coeffs.size(); ++i) {
        r.cos_coeffs[i] += f.cos_coeffs[i];
        r.sin_coeffs[i] += f.sin_coeffs[i];
    }
    for (std::size_t i = 0; i < g.cos_coeffs.size(); ++i) {
        r.cos_coeffs[i] += g.cos_coeffs[i];
        r.sin_coeffs[i] += g.sin_coeffs[i];
    }
    return r;
}

inline TrigPoly operator*(double s, const TrigPoly& f) {
    TrigPoly r = f;
    r.constant *= s;
    for (double& c : r.cos_coeffs) c *= s;
    for (double& c : r.sin_coeffs) c *= s;
    return r;
}

inline TrigPoly operator-(const TrigPoly& f, const TrigPoly& g) { return f + (-1.0) * g; }

// p(2x): harmonic m -> 2m, period 1/2
inline TrigPoly frequency_double(const TrigPoly& p) {
    TrigPoly r;
    r.constant = p.constant;
    int mh = p.max_harmonic();
    r.cos_coeffs.assign(2 * static_cast<std::size_t>(mh), 0.0);
    r.sin_coeffs.assign(2 * static_cast<std::size_t>(mh), 0.0);
    for (int m = 1; m <= mh; ++m) {
        r.cos_coeffs[2 * m - 1] = p.cos_coeffs[m - 1];
        r.sin_coeffs[2 * m - 1] = p.sin_coeffs[m - 1];
    }
    return r;
}

inline double eval_trigpoly(const TrigPoly& p, double x) { return p.eval(x); }

// f(x) = sum_{|m| <= M} mode(m) e^{2 pi i m x}
struct CTrigPoly {
    int M = 0;
    std::vector<cplx> modes;  // index m + M

    CTrigPoly() : modes(1, cplx(0.0)) {}
    explicit CTrigPoly(int half_width) : M(half_width), modes(2 * half_width + 1, cplx(0.0)) {}

    static CTrigPoly one() {
        CTrigPoly f(0);
        f.modes[0] = 1.0;
        return f;
    }
    static CTrigPoly mode_monomial(int m, cplx coeff = 1.0) {
        CTrigPoly f(std::abs(m));
        f.mode_ref(m) = coeff;
        return f;
    }
    static CTrigPoly from_real(const TrigPoly& p) {
        CTrigPoly f(p.max_harmonic());
        f.mode_ref(0) = p.constant;
        for (int m = 1; m <= p.max_harmonic(); ++m) {
            cplx c(p.cos_coeffs[m - 1], 0.0), s(p.sin_coeffs[m - 1], 0.0);
            f.mode_ref(m) = 0.5 * (c - cplx(0, 1) * s);
            f.mode_ref(-m) = 0.5 * (c + cplx(0, 1) * s);
        }
        return f;
    }

    cplx mode(int m) const {
        return (std::abs(m) > M) ? cplx(0.0) : modes[static_cast<std::size_t>(m + M)];
    }
    cplx& mode_ref(int m) { return modes[static_cast<std::size_t>(m + M)]; }

    cplx eval(double x) const {
        cplx s = 0.0;
        for (int m = -M; m <= M; ++m)
            s += mode(m) * std::exp(cplx(0.0, 2.0 * kPi * m * x));
        return s;
    }

    CTrigPoly derivative() const {
        CTrigPoly d(M);
        for (int m = -M; m <= M; ++m) d.mode_ref(m) = cplx(0.0, 2.0 * kPi * m) * mode(m);
        return d;
    }

    // Sobolev norm ||f||_l = (sum (1+|m|)^{2l} |fhat_m|^2)^{1/2}
    double sobolev_norm(int l) const {
        double s = 0.0;
        for (int m = -M; m <= M; ++m)
            s += std::pow(1.0 + std::abs(m), 2 * l) * std::norm(mode(m));
        return std::sqrt(s);
    }
    double l2_norm() const { return sobolev_norm(0); }
};

inline CTrigPoly operator+(const CTrigPoly& f, const CTrigPoly& g) {
    CTrigPoly r(std::max(f.M, g.M));
    for (int m = -r.M; m <= r.M; ++m) r.mode_ref(m) = f.mode(m) + g.mode(m);
    return r;
}

inline CTrigPoly operator-(const CTrigPoly& f, const CTrigPoly& g) {
    CTrigPoly r(std::max(f.M, g.M));
    for (int m = -r.M; m <= r.M; ++m) r.mode_ref(m) = f.mode(m) - g.mode(m);
    return r;
}

inline CTrigPoly operator*(cplx s, const CTrigPoly& f) {
    CTrigPoly r = f;
    for (cplx& c : r.modes) c *= s;
    return r;
}

// exact product by mode convolution
inline CTrigPoly operator*(const CTrigPoly& f, const CTrigPoly& g) {
    CTrigPoly r(f.M + g.M);
    for (int m = -f.M; m <= f.M; ++m) {
        if (f.mode(m) == cplx(0.0)) continue;
        for (int n = -g.M; n <= g.M; ++n) r.mode_ref(m + n) += f.mode(m) * g.mode(n);
    }
    return r;
}

inline CTrigPoly frequency_double(const CTrigPoly& f) {
    CTrigPoly r(2 * f.M);
    for (int m = -f.M; m <= f.M; ++m) r.mode_ref(2 * m) = f.mode(m);
    return r;
}

inline cplx l2_inner(const CTrigPoly& f, const CTrigPoly& g) {
    cplx s = 0.0;
    int M = std::max(f.M, g.M);
    for (int m = -M; m <= M; ++m) s += f.mode(m) * std::conj(g.mode(m));
    return s;
}

// sup-norm style quantities on a uniform grid of max(4096, 64*max_harmonic) points
inline int c_norm_grid_size(int max_harmonic) { return std::max(4096, 64 * max_harmonic); }

inline double c0_norm(const CTrigPoly& f) {
    int n = c_norm_grid_size(f.M);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s = std::max(s, std::abs(f.eval(static_cast<double>(i) / n)));
    return s;
}

// ||f||_{C^l} = sup_x sum_{j<=l} |f^{(j)}(x)|
inline double c_norm(const CTrigPoly& f, int l) {
    std::vector<CTrigPoly> ders{f};
    for (int j = 1; j <= l; ++j) ders.push_back(ders.back().derivative());
    int n = c_norm_grid_size(f.M);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = static_cast<double>(i) / n, t = 0.0;
        for (const auto& d : ders) t += std::abs(d.eval(x));
        s = std::max(s, t);
    }
    return s;
}

inline double c0_norm(const TrigPoly& f) { return c0_norm(CTrigPoly::from_real(f)); }
inline double c_norm(const TrigPoly& f, int l) { return c_norm(CTrigPoly::from_real(f), l); }
inline double sobolev_norm(const TrigPoly& f, int l) {
    return CTrigPoly::from_real(f).sobolev_norm(l);
}

}  // namespace todakdv
