#pragma once

// Truncated Taylor jets in one and two variables.
//
// Coefficients are stored in normalized form: c_k = f^(k)(t0)/k! for Jet1 and
// c_ij = (d_u^i d_v^j f)(u0,v0)/(i! j!) for Jet2, so products are plain
// truncated Cauchy convolutions. Binary operations between jets of different
// order truncate to the smaller order.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

namespace cusp {

class JetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Jet1 {
public:
    Jet1() : Jet1(0) {}
    explicit Jet1(int order, double value = 0.0, double base = 0.0);

    /// Jet of the identity map t -> t about `base`.
    static Jet1 variable(int order, double base);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double base() const { return base_; }
    double value() const { return c_[0]; }

    double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    /// k-th derivative at the base parameter.
    double derivative_value(int k) const;
    /// d/dt as a jet of order - 1 (order 0 jets stay order 0 with value 0).
    Jet1 derivative() const;
    /// Antiderivative with constant term `c0`, order + 1.
    Jet1 integral(double c0) const;
    Jet1 truncated(int order) const;
    /// Polynomial value at base + dt.
    double evaluate(double dt) const;

    Jet1 operator-() const;
    Jet1& operator+=(const Jet1& o);
    Jet1& operator-=(const Jet1& o);
    Jet1& operator*=(double s);
    Jet1& operator+=(double s);

private:
    friend Jet1 operator*(const Jet1&, const Jet1&);
    friend Jet1 operator/(const Jet1&, const Jet1&);
    std::vector<double> c_;
    double base_ = 0.0;
};

Jet1 operator+(Jet1 a, const Jet1& b);
Jet1 operator-(Jet1 a, const Jet1& b);
Jet1 operator*(const Jet1& a, const Jet1& b);
Jet1 operator/(const Jet1& a, const Jet1& b);
Jet1 operator+(Jet1 a, double s);
Jet1 operator+(double s, Jet1 a);
Jet1 operator-(Jet1 a, double s);
Jet1 operator-(double s, const Jet1& a);
Jet1 operator*(Jet1 a, double s);
Jet1 operator*(double s, Jet1 a);
Jet1 operator/(Jet1 a, double s);
Jet1 operator/(double s, const Jet1& a);

class Jet2 {
public:
    Jet2() : Jet2(0) {}
    explicit Jet2(int order, double value = 0.0, std::array<double, 2> base = {0.0, 0.0});

    static Jet2 variable_u(int order, std::array<double, 2> base);
    static Jet2 variable_v(int order, std::array<double, 2> base);
    /// Lift a univariate jet in u (resp. v) to a bivariate jet constant in the other variable.
    static Jet2 from_u(const Jet1& a, std::array<double, 2> base);
    static Jet2 from_v(const Jet1& a, std::array<double, 2> base);

    static constexpr std::size_t size_for(int order) {
        return static_cast<std::size_t>((order + 1) * (order + 2) / 2);
    }
    static constexpr std::size_t index(int i, int j) {
        const int d = i + j;
        return static_cast<std::size_t>(d * (d + 1) / 2 + j);
    }

    int order() const { return order_; }
    const std::array<double, 2>& base() const { return base_; }
    double value() const { return c_[0]; }

    double coeff(int i, int j) const { return c_[index(i, j)]; }
    double& coeff(int i, int j) { return c_[index(i, j)]; }

    /// The partial derivative d_u^i d_v^j at the base point (i! j! c_ij).
    double partial(int i, int j) const;

    Jet2 derivative_u() const;
    Jet2 derivative_v() const;
    Jet2 truncated(int order) const;

    /// Coefficients with j = 0 as a jet in u (restriction to the line v = v0).
    Jet1 restrict_u_axis() const;
    /// Coefficients with i = 0 as a jet in v.
    Jet1 restrict_v_axis() const;

    /// H with H_ij = F_{i,j+1}: the jet of F/(v - v0) when F vanishes on the axis.
    /// Throws JetError naming the largest j = 0 coefficient above `tol`.
    Jet2 divide_by_v(double tol) const;
    /// Largest |c_i0| over the axis coefficients.
    double max_axis_coefficient() const;

    /// The same polynomial re-expanded about base + (du, dv).
    Jet2 shifted(double du, double dv) const;
    /// Polynomial value at base + (du, dv).
    double evaluate(double du, double dv) const;

    Jet2 operator-() const;
    Jet2& operator+=(const Jet2& o);
    Jet2& operator-=(const Jet2& o);
    Jet2& operator*=(double s);
    Jet2& operator+=(double s);

private:
    friend Jet2 operator*(const Jet2&, const Jet2&);
    friend Jet2 operator/(const Jet2&, const Jet2&);
    int order_ = 0;
    std::array<double, 2> base_{0.0, 0.0};
    std::vector<double> c_;
};

Jet2 operator+(Jet2 a, const Jet2& b);
Jet2 operator-(Jet2 a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator+(Jet2 a, double s);
Jet2 operator+(double s, Jet2 a);
Jet2 operator-(Jet2 a, double s);
Jet2 operator-(double s, const Jet2& a);
Jet2 operator*(Jet2 a, double s);
Jet2 operator*(double s, Jet2 a);
Jet2 operator/(Jet2 a, double s);
Jet2 operator/(double s, const Jet2& a);

inline double constant_term(double x) { return x; }
inline double constant_term(const Jet1& x) { return x.value(); }
inline double constant_term(const Jet2& x) { return x.value(); }

inline int jet_order(const Jet1& x) { return x.order(); }
inline int jet_order(const Jet2& x) { return x.order(); }

/// Sum_k coeffs[k] * (a - a0)^k, truncated at the jet order of `a`.
template <class J>
J compose_series(const J& a, const std::vector<double>& coeffs) {
    J delta = a - constant_term(a);
    const int n = std::min<int>(jet_order(a), static_cast<int>(coeffs.size()) - 1);
    J result = delta * 0.0 + coeffs[static_cast<std::size_t>(n)];
    for (int k = n - 1; k >= 0; --k) {
        result = result * delta;
        result += coeffs[static_cast<std::size_t>(k)];
    }
    return result;
}

// Univariate Taylor coefficients f^(k)(x0)/k!, k = 0..n.
std::vector<double> series_sqrt(double x0, int n);
std::vector<double> series_pow(double x0, double p, int n);
std::vector<double> series_exp(double x0, int n);
std::vector<double> series_log(double x0, int n);
std::vector<double> series_sin(double x0, int n);
std::vector<double> series_cos(double x0, int n);
std::vector<double> series_tan(double x0, int n);
std::vector<double> series_atan(double x0, int n);

template <class J>
J sqrt(const J& a) {
    if (!(constant_term(a) > 0.0)) throw JetError("sqrt of jet with non-positive constant term");
    return compose_series(a, series_sqrt(constant_term(a), jet_order(a)));
}
template <class J>
J pow_const(const J& a, double p) {
    if (!(constant_term(a) > 0.0)) throw JetError("pow of jet with non-positive constant term");
    return compose_series(a, series_pow(constant_term(a), p, jet_order(a)));
}
template <class J>
J exp(const J& a) {
    return compose_series(a, series_exp(constant_term(a), jet_order(a)));
}
template <class J>
J log(const J& a) {
    if (!(constant_term(a) > 0.0)) throw JetError("log of jet with non-positive constant term");
    return compose_series(a, series_log(constant_term(a), jet_order(a)));
}
template <class J>
J sin(const J& a) {
    return compose_series(a, series_sin(constant_term(a), jet_order(a)));
}
template <class J>
J cos(const J& a) {
    return compose_series(a, series_cos(constant_term(a), jet_order(a)));
}
template <class J>
J tan(const J& a) {
    if (std::cos(constant_term(a)) == 0.0) throw JetError("tan of jet at a pole");
    return compose_series(a, series_tan(constant_term(a), jet_order(a)));
}
template <class J>
J atan(const J& a) {
    return compose_series(a, series_atan(constant_term(a), jet_order(a)));
}
template <class J>
J abs(const J& a) {
    const double a0 = constant_term(a);
    if (a0 == 0.0 && jet_order(a) > 0) throw JetError("abs of jet with zero constant term");
    return a0 < 0.0 ? -a : a;
}
/// a^k by repeated multiplication; negative k takes the reciprocal.
template <class J>
J pow_int(const J& a, long k) {
    if (k == 0) return a * 0.0 + 1.0;
    if (k < 0) return 1.0 / pow_int(a, -k);
    J result = a;
    for (long i = 1; i < k; ++i) result = result * a;
    return result;
}

/// F(U(t), V(t)) for F a bivariate jet about (u0, v0). Requires U(0) = u0, V(0) = v0.
Jet1 plug_curve(const Jet2& F, const Jet1& U, const Jet1& V, double tol = 1e-9);
/// F(U(t,s), V(t,s)) without a base check; U - u0 and V - v0 may have constant terms.
Jet2 compose(const Jet2& F, const Jet2& U, const Jet2& V);
/// g(T) for a univariate jet g about t0 and bivariate T.
Jet2 compose(const Jet1& g, const Jet2& T);
/// g(T) for univariate jets.
Jet1 compose(const Jet1& g, const Jet1& T);

/// Three jets sharing base point and order.
template <class J>
struct JetVec3 {
    J x, y, z;

    J& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const J& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Eigen::Vector3d value() const { return {x.value(), y.value(), z.value()}; }

    JetVec3 operator+(const JetVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    JetVec3 operator-(const JetVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    JetVec3 operator-() const { return {-x, -y, -z}; }
    JetVec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    JetVec3 operator*(const J& s) const { return {x * s, y * s, z * s}; }
    JetVec3 operator/(const J& s) const { return {x / s, y / s, z / s}; }

    template <class F>
    auto map(F&& f) const -> JetVec3<std::decay_t<decltype(f(x))>> {
        return {f(x), f(y), f(z)};
    }
};

template <class J>
JetVec3<J> operator*(const J& s, const JetVec3<J>& a) {
    return a * s;
}
template <class J>
JetVec3<J> operator*(double s, const JetVec3<J>& a) {
    return a * s;
}

template <class J>
J dot(const JetVec3<J>& a, const JetVec3<J>& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
template <class J>
JetVec3<J> cross(const JetVec3<J>& a, const JetVec3<J>& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
template <class J>
J det3(const JetVec3<J>& a, const JetVec3<J>& b, const JetVec3<J>& c) {
    return dot(a, cross(b, c));
}
template <class J>
J norm(const JetVec3<J>& a) {
    const J sq = dot(a, a);
    if (!(constant_term(sq) > 0.0)) throw JetError("norm of jet vector vanishing at the base point");
    return sqrt(sq);
}
template <class J>
JetVec3<J> normalized(const JetVec3<J>& a) {
    return a / norm(a);
}

/// Constant jet vector with the same shape as `like`.
template <class J>
JetVec3<J> constant_vec(const J& like, const Eigen::Vector3d& v) {
    const J zero = like * 0.0;
    return {zero + v.x(), zero + v.y(), zero + v.z()};
}

using JetVec2d = JetVec3<Jet2>;
using JetVec1d = JetVec3<Jet1>;

inline JetVec2d derivative_u(const JetVec2d& a) {
    return a.map([](const Jet2& c) { return c.derivative_u(); });
}
inline JetVec2d derivative_v(const JetVec2d& a) {
    return a.map([](const Jet2& c) { return c.derivative_v(); });
}
inline JetVec1d derivative(const JetVec1d& a) {
    return a.map([](const Jet1& c) { return c.derivative(); });
}
inline JetVec1d restrict_u_axis(const JetVec2d& a) {
    return a.map([](const Jet2& c) { return c.restrict_u_axis(); });
}
inline Eigen::Vector3d partial(const JetVec2d& a, int i, int j) {
    return {a.x.partial(i, j), a.y.partial(i, j), a.z.partial(i, j)};
}

/// Jet of h with F = (v - v0) h, componentwise.
JetVec2d divide_by_v(const JetVec2d& F, double tol);

}  // namespace cusp
