#pragma once

// Second-order forward-mode dual numbers: value plus first and second
// derivatives with respect to one parameter.  Enough arithmetic for the
// polynomial recurrences and linear ODE right-hand sides used here.

namespace todakdv {

template <class T>
struct Dual2 {
    T v{}, d1{}, d2{};

    Dual2() = default;
    Dual2(T value) : v(value) {}
    Dual2(T value, T first, T second) : v(value), d1(first), d2(second) {}

    // the active variable itself: d/dx x = 1
    static Dual2 variable(T value) { return Dual2(value, T(1), T(0)); }
};

template <class T>
Dual2<T> operator+(const Dual2<T>& a, const Dual2<T>& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}
template <class T>
Dual2<T> operator-(const Dual2<T>& a, const Dual2<T>& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}
template <class T>
Dual2<T> operator-(const Dual2<T>& a) {
    return {-a.v, -a.d1, -a.d2};
}
template <class T>
Dual2<T> operator*(const Dual2<T>& a, const Dual2<T>& b) {
    return {a.v * b.v, a.v * b.d1 + a.d1 * b.v, a.v * b.d2 + T(2) * a.d1 * b.d1 + a.d2 * b.v};
}
template <class T, class S>
Dual2<T> operator*(S s, const Dual2<T>& a) {
    return {T(s) * a.v, T(s) * a.d1, T(s) * a.d2};
}
template <class T, class S>
Dual2<T> operator/(const Dual2<T>& a, S s) {
    return {a.v / T(s), a.d1 / T(s), a.d2 / T(s)};
}

}  // namespace todakdv
