#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <functional>

namespace korn {

/// Truncated bivariate Taylor expansion in (theta, z) about an evaluation
/// point, total degree <= 4.  coeff(i, j) holds d^{i+j}f / (dtheta^i dz^j)
/// divided by i! j!, so arithmetic on jets is exact arithmetic on analytic
/// expressions up to the stored order.  Differentiation lowers the trusted
/// order by one; extracting a derivative that exceeds the trusted order is
/// a logic error in the calling code.
struct Jet2 {
    static constexpr int max_order = 4;
    static constexpr int n_coeff = 15;  // (max_order+1)(max_order+2)/2

    std::array<double, n_coeff> c{};
    int order = max_order;

    static constexpr int idx(int i, int j) {
        const int d = i + j;
        return d * (d + 1) / 2 + j;
    }

    static Jet2 constant(double v, int ord = max_order) {
        Jet2 r;
        r.c[0] = v;
        r.order = ord;
        return r;
    }

    /// Coordinate jet for the first variable.
    static Jet2 var_theta(double theta0, int ord = max_order) {
        Jet2 r = constant(theta0, ord);
        if (ord >= 1) r.c[idx(1, 0)] = 1.0;
        return r;
    }

    /// Coordinate jet for the second variable.
    static Jet2 var_z(double z0, int ord = max_order) {
        Jet2 r = constant(z0, ord);
        if (ord >= 1) r.c[idx(0, 1)] = 1.0;
        return r;
    }

    double value() const { return c[0]; }

    /// d^{i+j} f / dtheta^i dz^j (undoes the factorial scaling).
    double deriv(int i, int j) const {
        assert(i + j <= order);
        static constexpr double fact[5] = {1, 1, 2, 6, 24};
        return c[idx(i, j)] * fact[i] * fact[j];
    }

    double d_theta() const { return deriv(1, 0); }
    double d_z() const { return deriv(0, 1); }

    Jet2 operator-() const {
        Jet2 r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.order = std::min(a.order, b.order);
    for (int k = 0; k < Jet2::n_coeff; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.order = std::min(a.order, b.order);
    for (int k = 0; k < Jet2::n_coeff; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.order = std::min(a.order, b.order);
    r.c.fill(0.0);
    for (int da = 0; da <= Jet2::max_order; ++da)
        for (int ia = da; ia >= 0; --ia) {
            const int ja = da - ia;
            const double av = a.c[Jet2::idx(ia, ja)];
            if (av == 0.0) continue;
            for (int db = 0; db + da <= Jet2::max_order; ++db)
                for (int ib = db; ib >= 0; --ib) {
                    const int jb = db - ib;
                    const double bv = b.c[Jet2::idx(ib, jb)];
                    if (bv == 0.0) continue;
                    r.c[Jet2::idx(ia + ib, ja + jb)] += av * bv;
                }
        }
    return r;
}

inline Jet2 operator*(double s, const Jet2& a) {
    Jet2 r = a;
    for (auto& v : r.c) v *= s;
    return r;
}
inline Jet2 operator*(const Jet2& a, double s) { return s * a; }
inline Jet2 operator+(const Jet2& a, double s) { Jet2 r = a; r.c[0] += s; return r; }
inline Jet2 operator+(double s, const Jet2& a) { return a + s; }
inline Jet2 operator-(const Jet2& a, double s) { Jet2 r = a; r.c[0] -= s; return r; }
inline Jet2 operator-(double s, const Jet2& a) { return (-a) + s; }

/// Composition g(f) given the outer derivatives g, g', ..., g'''' at f.value().
inline Jet2 compose(const Jet2& f, const std::array<double, 5>& g) {
    Jet2 delta = f;
    delta.c[0] = 0.0;
    Jet2 r = Jet2::constant(g[0], f.order);
    Jet2 p = delta;
    static constexpr double inv_fact[5] = {1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0};
    for (int k = 1; k <= Jet2::max_order; ++k) {
        r = r + (g[k] * inv_fact[k]) * p;
        if (k < Jet2::max_order) p = p * delta;
    }
    r.order = f.order;
    return r;
}

inline Jet2 reciprocal(const Jet2& a) {
    const double a0 = a.value();
    assert(a0 != 0.0);
    const double i0 = 1.0 / a0;
    // derivatives of 1/x at a0: (-1)^k k! / a0^{k+1}
    return compose(a, {i0, -i0 * i0, 2.0 * i0 * i0 * i0, -6.0 * i0 * i0 * i0 * i0,
                       24.0 * i0 * i0 * i0 * i0 * i0});
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
inline Jet2 operator/(const Jet2& a, double s) { return a * (1.0 / s); }
inline Jet2 operator/(double s, const Jet2& a) { return s * reciprocal(a); }

inline Jet2 sin(const Jet2& f) {
    const double s = std::sin(f.value()), c = std::cos(f.value());
    return compose(f, {s, c, -s, -c, s});
}

inline Jet2 cos(const Jet2& f) {
    const double s = std::sin(f.value()), c = std::cos(f.value());
    return compose(f, {c, -s, -c, s, c});
}

inline Jet2 exp(const Jet2& f) {
    const double e = std::exp(f.value());
    return compose(f, {e, e, e, e, e});
}

inline Jet2 sqrt(const Jet2& f) {
    const double v = f.value();
    assert(v > 0.0);
    const double s = std::sqrt(v);
    return compose(f, {s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v),
                       -0.9375 / (s * v * v * v)});
}

/// Partial derivative with respect to theta; trusted order drops by one.
inline Jet2 d_theta(const Jet2& a) {
    Jet2 r;
    r.order = std::max(0, a.order - 1);
    r.c.fill(0.0);
    for (int d = 1; d <= Jet2::max_order; ++d)
        for (int i = d; i >= 1; --i) {
            const int j = d - i;
            r.c[Jet2::idx(i - 1, j)] = i * a.c[Jet2::idx(i, j)];
        }
    return r;
}

/// Partial derivative with respect to z; trusted order drops by one.
inline Jet2 d_z(const Jet2& a) {
    Jet2 r;
    r.order = std::max(0, a.order - 1);
    r.c.fill(0.0);
    for (int d = 1; d <= Jet2::max_order; ++d)
        for (int j = d; j >= 1; --j) {
            const int i = d - j;
            r.c[Jet2::idx(i, j - 1)] = j * a.c[Jet2::idx(i, j)];
        }
    return r;
}

/// Jet of a univariate function of theta given value and derivatives at theta0.
inline Jet2 curve_jet_theta(double f0, double f1, double f2, double f3, double f4 = 0.0) {
    Jet2 r = Jet2::constant(f0);
    r.c[Jet2::idx(1, 0)] = f1;
    r.c[Jet2::idx(2, 0)] = f2 / 2.0;
    r.c[Jet2::idx(3, 0)] = f3 / 6.0;
    r.c[Jet2::idx(4, 0)] = f4 / 24.0;
    return r;
}

/// Jet of a univariate function of z given value and derivatives at z0.
inline Jet2 curve_jet_z(double f0, double f1, double f2, double f3, double f4 = 0.0) {
    Jet2 r = Jet2::constant(f0);
    r.c[Jet2::idx(0, 1)] = f1;
    r.c[Jet2::idx(0, 2)] = f2 / 2.0;
    r.c[Jet2::idx(0, 3)] = f3 / 6.0;
    r.c[Jet2::idx(0, 4)] = f4 / 24.0;
    return r;
}

}  // namespace korn
