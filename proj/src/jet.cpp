#include "cuspidal/jet.hpp"

#include <algorithm>
#include <sstream>

namespace cusp {

namespace {

void check_base(const Jet2& a, const Jet2& b) {
    if (a.base() != b.base()) {
        std::ostringstream os;
        os << "jet base mismatch: (" << a.base()[0] << ", " << a.base()[1] << ") vs (" << b.base()[0]
           << ", " << b.base()[1] << ")";
        throw JetError(os.str());
    }
}

template <class J>
std::vector<J> powers_of(const J& x, int n) {
    std::vector<J> p;
    p.reserve(static_cast<std::size_t>(n) + 1);
    p.push_back(x * 0.0 + 1.0);
    for (int k = 1; k <= n; ++k) p.push_back(p.back() * x);
    return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Jet1

Jet1::Jet1(int order, double value, double base) : c_(static_cast<std::size_t>(std::max(order, 0)) + 1, 0.0), base_(base) {
    if (order < 0) throw JetError("negative jet order");
    c_[0] = value;
}

Jet1 Jet1::variable(int order, double base) {
    Jet1 j(order, base, base);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
}

double Jet1::derivative_value(int k) const {
    if (k > order()) throw JetError("derivative order exceeds jet order");
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f * c_[static_cast<std::size_t>(k)];
}

Jet1 Jet1::derivative() const {
    Jet1 d(std::max(order() - 1, 0), 0.0, base_);
    for (int k = 1; k <= order(); ++k) d.c_[static_cast<std::size_t>(k - 1)] = k * c_[static_cast<std::size_t>(k)];
    return d;
}

Jet1 Jet1::integral(double c0) const {
    Jet1 r(order() + 1, c0, base_);
    for (int k = 0; k <= order(); ++k) r.c_[static_cast<std::size_t>(k + 1)] = c_[static_cast<std::size_t>(k)] / (k + 1);
    return r;
}

Jet1 Jet1::truncated(int n) const {
    Jet1 r(std::min(n, order()), 0.0, base_);
    std::copy_n(c_.begin(), r.c_.size(), r.c_.begin());
    return r;
}

double Jet1::evaluate(double dt) const {
    double r = 0.0;
    for (int k = order(); k >= 0; --k) r = r * dt + c_[static_cast<std::size_t>(k)];
    return r;
}

Jet1 Jet1::operator-() const {
    Jet1 r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Jet1& Jet1::operator+=(const Jet1& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Jet1& Jet1::operator-=(const Jet1& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Jet1& Jet1::operator*=(double s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Jet1& Jet1::operator+=(double s) {
    c_[0] += s;
    return *this;
}

Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }

Jet1 operator*(const Jet1& a, const Jet1& b) {
    const int n = std::min(a.order(), b.order());
    Jet1 r(n, 0.0, a.base_);
    for (int i = 0; i <= n; ++i) {
        const double ai = a.c_[static_cast<std::size_t>(i)];
        if (ai == 0.0) continue;
        for (int k = 0; i + k <= n; ++k) r.c_[static_cast<std::size_t>(i + k)] += ai * b.c_[static_cast<std::size_t>(k)];
    }
    return r;
}

Jet1 operator/(const Jet1& a, const Jet1& b) {
    const double b0 = b.c_[0];
    if (b0 == 0.0) throw JetError("division by jet with zero constant term");
    const int n = std::min(a.order(), b.order());
    Jet1 q(n, 0.0, a.base_);
    for (int k = 0; k <= n; ++k) {
        double s = a.c_[static_cast<std::size_t>(k)];
        for (int i = 1; i <= k; ++i) s -= b.c_[static_cast<std::size_t>(i)] * q.c_[static_cast<std::size_t>(k - i)];
        q.c_[static_cast<std::size_t>(k)] = s / b0;
    }
    return q;
}

Jet1 operator+(Jet1 a, double s) { return a += s; }
Jet1 operator+(double s, Jet1 a) { return a += s; }
Jet1 operator-(Jet1 a, double s) { return a += -s; }
Jet1 operator-(double s, const Jet1& a) { return (-a) + s; }
Jet1 operator*(Jet1 a, double s) { return a *= s; }
Jet1 operator*(double s, Jet1 a) { return a *= s; }
Jet1 operator/(Jet1 a, double s) {
    if (s == 0.0) throw JetError("division of jet by zero");
    for (int k = 0; k <= a.order(); ++k) a[k] /= s;
    return a;
}
Jet1 operator/(double s, const Jet1& a) { return Jet1(a.order(), s, a.base()) / a; }

// ---------------------------------------------------------------------------
// Jet2

Jet2::Jet2(int order, double value, std::array<double, 2> base)
    : order_(order), base_(base), c_(size_for(std::max(order, 0)), 0.0) {
    if (order < 0) throw JetError("negative jet order");
    c_[0] = value;
}

Jet2 Jet2::variable_u(int order, std::array<double, 2> base) {
    Jet2 j(order, base[0], base);
    if (order >= 1) j.coeff(1, 0) = 1.0;
    return j;
}

Jet2 Jet2::variable_v(int order, std::array<double, 2> base) {
    Jet2 j(order, base[1], base);
    if (order >= 1) j.coeff(0, 1) = 1.0;
    return j;
}

Jet2 Jet2::from_u(const Jet1& a, std::array<double, 2> base) {
    Jet2 j(a.order(), 0.0, base);
    for (int i = 0; i <= a.order(); ++i) j.coeff(i, 0) = a[i];
    return j;
}

Jet2 Jet2::from_v(const Jet1& a, std::array<double, 2> base) {
    Jet2 j(a.order(), 0.0, base);
    for (int k = 0; k <= a.order(); ++k) j.coeff(0, k) = a[k];
    return j;
}

double Jet2::partial(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_) throw JetError("partial derivative order exceeds jet order");
    double f = 1.0;
    for (int k = 2; k <= i; ++k) f *= k;
    for (int k = 2; k <= j; ++k) f *= k;
    return f * coeff(i, j);
}

Jet2 Jet2::derivative_u() const {
    Jet2 d(std::max(order_ - 1, 0), 0.0, base_);
    for (int i = 1; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j) d.coeff(i - 1, j) = i * coeff(i, j);
    return d;
}

Jet2 Jet2::derivative_v() const {
    Jet2 d(std::max(order_ - 1, 0), 0.0, base_);
    for (int i = 0; i <= order_; ++i)
        for (int j = 1; i + j <= order_; ++j) d.coeff(i, j - 1) = j * coeff(i, j);
    return d;
}

Jet2 Jet2::truncated(int n) const {
    Jet2 r(std::min(n, order_), 0.0, base_);
    std::copy_n(c_.begin(), r.c_.size(), r.c_.begin());
    return r;
}

Jet1 Jet2::restrict_u_axis() const {
    Jet1 r(order_, 0.0, base_[0]);
    for (int i = 0; i <= order_; ++i) r[i] = coeff(i, 0);
    return r;
}

Jet1 Jet2::restrict_v_axis() const {
    Jet1 r(order_, 0.0, base_[1]);
    for (int j = 0; j <= order_; ++j) r[j] = coeff(0, j);
    return r;
}

double Jet2::max_axis_coefficient() const {
    double m = 0.0;
    for (int i = 0; i <= order_; ++i) m = std::max(m, std::abs(coeff(i, 0)));
    return m;
}

Jet2 Jet2::divide_by_v(double tol) const {
    const double m = max_axis_coefficient();
    if (m > tol) {
        std::ostringstream os;
        os << "jet does not vanish on the axis: max |c_i0| = " << m << " > " << tol;
        throw JetError(os.str());
    }
    Jet2 h(std::max(order_ - 1, 0), 0.0, base_);
    for (int i = 0; i <= order_ - 1; ++i)
        for (int j = 0; i + j <= order_ - 1; ++j) h.coeff(i, j) = coeff(i, j + 1);
    return h;
}

Jet2 Jet2::shifted(double du, double dv) const {
    const std::array<double, 2> nb{base_[0] + du, base_[1] + dv};
    return compose(*this, variable_u(order_, nb), variable_v(order_, nb));
}

double Jet2::evaluate(double du, double dv) const {
    double r = 0.0;
    for (int i = order_; i >= 0; --i) {
        double row = 0.0;
        for (int j = order_ - i; j >= 0; --j) row = row * dv + coeff(i, j);
        r = r * du + row;
    }
    return r;
}

Jet2 Jet2::operator-() const {
    Jet2 r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Jet2& Jet2::operator+=(const Jet2& o) {
    check_base(*this, o);
    if (o.order_ < order_) *this = truncated(o.order_);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
    check_base(*this, o);
    if (o.order_ < order_) *this = truncated(o.order_);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Jet2& Jet2::operator*=(double s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Jet2& Jet2::operator+=(double s) {
    c_[0] += s;
    return *this;
}

Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }

Jet2 operator*(const Jet2& a, const Jet2& b) {
    check_base(a, b);
    const int n = std::min(a.order_, b.order_);
    Jet2 r(n, 0.0, a.base_);
    for (int da = 0; da <= n; ++da) {
        for (int ia = 0; ia <= da; ++ia) {
            const int ja = da - ia;
            const double x = a.coeff(ia, ja);
            if (x == 0.0) continue;
            for (int db = 0; da + db <= n; ++db) {
                for (int ib = 0; ib <= db; ++ib) {
                    const int jb = db - ib;
                    r.coeff(ia + ib, ja + jb) += x * b.coeff(ib, jb);
                }
            }
        }
    }
    return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
    check_base(a, b);
    const double b0 = b.c_[0];
    if (b0 == 0.0) throw JetError("division by jet with zero constant term");
    const int n = std::min(a.order_, b.order_);
    Jet2 q(n, 0.0, a.base_);
    for (int d = 0; d <= n; ++d) {
        for (int i = 0; i <= d; ++i) {
            const int j = d - i;
            double s = a.coeff(i, j);
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l)
                    if (k + l > 0) s -= b.coeff(k, l) * q.coeff(i - k, j - l);
            q.coeff(i, j) = s / b0;
        }
    }
    return q;
}

Jet2 operator+(Jet2 a, double s) { return a += s; }
Jet2 operator+(double s, Jet2 a) { return a += s; }
Jet2 operator-(Jet2 a, double s) { return a += -s; }
Jet2 operator-(double s, const Jet2& a) { return (-a) + s; }
Jet2 operator*(Jet2 a, double s) { return a *= s; }
Jet2 operator*(double s, Jet2 a) { return a *= s; }
Jet2 operator/(Jet2 a, double s) {
    if (s == 0.0) throw JetError("division of jet by zero");
    for (int d = 0; d <= a.order(); ++d)
        for (int i = 0; i <= d; ++i) a.coeff(i, d - i) /= s;
    return a;
}
Jet2 operator/(double s, const Jet2& a) { return Jet2(a.order(), s, a.base()) / a; }

// ---------------------------------------------------------------------------
// univariate series

std::vector<double> series_pow(double x0, double p, int n) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    c[0] = std::pow(x0, p);
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] * (p - k + 1) / (k * x0);
    return c;
}

std::vector<double> series_sqrt(double x0, int n) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    c[0] = std::sqrt(x0);
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] * (0.5 - k + 1) / (k * x0);
    return c;
}

std::vector<double> series_exp(double x0, int n) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    c[0] = std::exp(x0);
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] / k;
    return c;
}

std::vector<double> series_log(double x0, int n) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    c[0] = std::log(x0);
    double p = 1.0;
    for (int k = 1; k <= n; ++k) {
        p /= x0;
        c[static_cast<std::size_t>(k)] = (k % 2 == 1 ? 1.0 : -1.0) * p / k;
    }
    return c;
}

namespace {
std::vector<double> trig_series(double s, double co, int n) {
    const double cycle[4] = {s, co, -s, -co};
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    double fact = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 1) fact *= k;
        c[static_cast<std::size_t>(k)] = cycle[k % 4] / fact;
    }
    return c;
}
}  // namespace

std::vector<double> series_sin(double x0, int n) { return trig_series(std::sin(x0), std::cos(x0), n); }
std::vector<double> series_cos(double x0, int n) { return trig_series(std::cos(x0), -std::sin(x0), n); }

std::vector<double> series_tan(double x0, int n) {
    // T' = 1 + T^2
    std::vector<double> t(static_cast<std::size_t>(n) + 1, 0.0);
    t[0] = std::tan(x0);
    for (int k = 0; k < n; ++k) {
        double s = (k == 0) ? 1.0 : 0.0;
        for (int i = 0; i <= k; ++i) s += t[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(k - i)];
        t[static_cast<std::size_t>(k + 1)] = s / (k + 1);
    }
    return t;
}

std::vector<double> series_atan(double x0, int n) {
    // atan' = 1 / q with q = 1 + (x0 + t)^2
    const double q0 = 1.0 + x0 * x0, q1 = 2.0 * x0, q2 = 1.0;
    std::vector<double> r(static_cast<std::size_t>(n) + 1, 0.0);
    r[0] = 1.0 / q0;
    for (int k = 1; k <= n; ++k) {
        double s = q1 * r[static_cast<std::size_t>(k - 1)];
        if (k >= 2) s += q2 * r[static_cast<std::size_t>(k - 2)];
        r[static_cast<std::size_t>(k)] = -s / q0;
    }
    std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
    a[0] = std::atan(x0);
    for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k + 1)] = r[static_cast<std::size_t>(k)] / (k + 1);
    return a;
}

// ---------------------------------------------------------------------------
// composition

Jet1 plug_curve(const Jet2& F, const Jet1& U, const Jet1& V, double tol) {
    if (std::abs(U.value() - F.base()[0]) > tol || std::abs(V.value() - F.base()[1]) > tol) {
        std::ostringstream os;
        os << "curve base (" << U.value() << ", " << V.value() << ") does not match jet base (" << F.base()[0]
           << ", " << F.base()[1] << ")";
        throw JetError(os.str());
    }
    const int n = std::min({F.order(), U.order(), V.order()});
    const Jet1 du = (U - F.base()[0]).truncated(n);
    const Jet1 dv = (V - F.base()[1]).truncated(n);
    const auto pu = powers_of(du, F.order());
    const auto pv = powers_of(dv, F.order());
    Jet1 r(n, 0.0, U.base());
    for (int i = 0; i <= F.order(); ++i)
        for (int j = 0; i + j <= F.order(); ++j) {
            const double c = F.coeff(i, j);
            if (c != 0.0) r += (pu[static_cast<std::size_t>(i)] * pv[static_cast<std::size_t>(j)]) * c;
        }
    return r;
}

Jet2 compose(const Jet2& F, const Jet2& U, const Jet2& V) {
    const int n = std::min(U.order(), V.order());
    const Jet2 du = (U - F.base()[0]).truncated(n);
    const Jet2 dv = (V - F.base()[1]).truncated(n);
    const auto pu = powers_of(du, F.order());
    const auto pv = powers_of(dv, F.order());
    Jet2 r(n, 0.0, U.base());
    for (int i = 0; i <= F.order(); ++i)
        for (int j = 0; i + j <= F.order(); ++j) {
            const double c = F.coeff(i, j);
            if (c != 0.0) r += (pu[static_cast<std::size_t>(i)] * pv[static_cast<std::size_t>(j)]) * c;
        }
    return r;
}

Jet2 compose(const Jet1& g, const Jet2& T) {
    const Jet2 dt = T - g.base();
    Jet2 r = dt * 0.0 + g[g.order()];
    for (int k = g.order() - 1; k >= 0; --k) r = r * dt + g[k];
    return r;
}

Jet1 compose(const Jet1& g, const Jet1& T) {
    const Jet1 dt = T - g.base();
    Jet1 r = dt * 0.0 + g[g.order()];
    for (int k = g.order() - 1; k >= 0; --k) r = r * dt + g[k];
    return r;
}

JetVec2d divide_by_v(const JetVec2d& F, double tol) {
    const double m = std::max({F.x.max_axis_coefficient(), F.y.max_axis_coefficient(), F.z.max_axis_coefficient()});
    if (m > tol) {
        std::ostringstream os;
        os << "vector jet does not vanish on the axis: max |c_i0| = " << m << " > " << tol;
        throw JetError(os.str());
    }
    return {F.x.divide_by_v(tol), F.y.divide_by_v(tol), F.z.divide_by_v(tol)};
}

}  // namespace cusp
