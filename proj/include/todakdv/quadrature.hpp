#pragma once

// Tanh-sinh (double exponential) quadrature on a finite interval; handles
// integrable endpoint singularities such as log(sin).

#include <cmath>

#include "todakdv/trigpoly.hpp"  // kPi

namespace todakdv {

template <class F>
double tanh_sinh(F&& f, double a, double b, int max_level = 14, double tol = 1e-12) {
    double c = 0.5 * (a + b), d = 0.5 * (b - a);
    const double tmax = 4.5;
    auto sample = [&](double t) {
        double s = std::sinh(t);
        double x = c + d * std::tanh(0.5 * kPi * s);
        double ch = std::cosh(0.5 * kPi * s);
        double w = d * 0.5 * kPi * std::cosh(t) / (ch * ch);
        if (x <= a || x >= b || w < 1e-300) return 0.0;
        return w * f(x);
    };
    double h = 1.0;
    double S = sample(0.0);
    for (double t = h; t <= tmax; t += h) S += sample(t) + sample(-t);
    double I = h * S;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) add += sample(t) + sample(-t);
        S += add;
        double I_new = h * S;
        if (level >= 5 && std::abs(I_new - I) < tol * (1.0 + std::abs(I_new))) return I_new;
        I = I_new;
    }
    return I;
}

}  // namespace todakdv
