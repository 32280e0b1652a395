#pragma once

// The coefficient field: rational functions in q and t over the integers.
// A QtRational is kept in a unique canonical form at all times, so equality
// is plain structural comparison.

#include "pbmac/dense_poly.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

namespace pbmac {

using TPoly = dense_poly<Int>;   // Z[t]
using QtPoly = dense_poly<TPoly>; // Z[t][q], q outermost

inline QtPoly qt_constant(Int c) { return QtPoly(TPoly(std::move(c))); }

inline QtPoly qt_monomial(Int c, int dq, int dt) {
    if (dq < 0 || dt < 0) throw std::invalid_argument("qt_monomial: negative exponent");
    return QtPoly::monomial(TPoly::monomial(std::move(c), dt), dq);
}

// 1 - q^a t^b (a or b may be zero)
inline QtPoly qt_one_minus(int a, int b) {
    return qt_constant(1) - qt_monomial(1, a, b);
}

// Substitute q := value, sharing one power of the denominator across terms.
// Returns (polynomial in t alone, den^k) with the substituted value num/den.
inline std::pair<QtPoly, Int> qt_substitute_q(const QtPoly& p, const Rational& value) {
    Int num = boost::multiprecision::numerator(value);
    Int den = boost::multiprecision::denominator(value);
    int dq = std::max(p.degree(), 0);
    TPoly acc;
    Int num_pow = 1;
    std::vector<Int> den_pow(static_cast<std::size_t>(dq) + 1);
    den_pow[static_cast<std::size_t>(dq)] = 1;
    for (int k = dq - 1; k >= 0; --k)
        den_pow[static_cast<std::size_t>(k)] = den_pow[static_cast<std::size_t>(k) + 1] * den;
    for (int k = 0; k <= p.degree(); ++k) {
        acc = acc + scalar_mul(p.coeff(k), Int(num_pow * den_pow[static_cast<std::size_t>(k)]));
        num_pow *= num;
    }
    Int scale = 1;
    for (int k = 0; k < dq; ++k) scale *= den;
    return {QtPoly(std::move(acc)), std::move(scale)};
}

// Substitute t := value; result has t-degree zero in every q-coefficient.
inline std::pair<QtPoly, Int> qt_substitute_t(const QtPoly& p, const Rational& value) {
    Int num = boost::multiprecision::numerator(value);
    Int den = boost::multiprecision::denominator(value);
    int dt = 0;
    for (int k = 0; k <= p.degree(); ++k) dt = std::max(dt, p.coeff(k).degree());
    dt = std::max(dt, 0);
    std::vector<Int> num_pow(static_cast<std::size_t>(dt) + 1), den_pow(static_cast<std::size_t>(dt) + 1);
    num_pow[0] = 1;
    den_pow[static_cast<std::size_t>(dt)] = 1;
    for (int j = 1; j <= dt; ++j) num_pow[static_cast<std::size_t>(j)] = num_pow[static_cast<std::size_t>(j) - 1] * num;
    for (int j = dt - 1; j >= 0; --j) den_pow[static_cast<std::size_t>(j)] = den_pow[static_cast<std::size_t>(j) + 1] * den;
    std::vector<TPoly> out;
    out.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) {
        const TPoly& c = p.coeff(k);
        Int v = 0;
        for (int j = 0; j <= c.degree(); ++j)
            v += c.coeff(j) * num_pow[static_cast<std::size_t>(j)] * den_pow[static_cast<std::size_t>(j)];
        out.push_back(TPoly(std::move(v)));
    }
    Int scale = 1;
    for (int j = 0; j < dt; ++j) scale *= den;
    return {QtPoly(std::move(out)), std::move(scale)};
}

inline int qt_degree_t(const QtPoly& p) {
    int dt = -1;
    for (int k = 0; k <= p.degree(); ++k) dt = std::max(dt, p.coeff(k).degree());
    return dt;
}

inline QtPoly qt_transpose(const QtPoly& p) { // swap the roles of q and t
    if (p.is_zero()) return p;
    const int dq = p.degree(), dt = qt_degree_t(p);
    std::vector<std::vector<Int>> grid(static_cast<std::size_t>(dt) + 1,
                                       std::vector<Int>(static_cast<std::size_t>(dq) + 1));
    for (int i = 0; i <= dq; ++i) {
        const TPoly& c = p.coeff(i);
        for (int j = 0; j <= c.degree(); ++j) grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c.coeff(j);
    }
    std::vector<TPoly> rows;
    rows.reserve(grid.size());
    for (auto& r : grid) rows.emplace_back(std::move(r));
    return QtPoly(std::move(rows));
}

inline Int tpoly_eval(const TPoly& p, const Int& x) {
    Int v = 0;
    for (int j = p.degree(); j >= 0; --j) v = v * x + p.coeff(j);
    return v;
}

inline dense_poly<Int> qt_project_t(const QtPoly& p, const Int& tau) {
    std::vector<Int> out(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
    for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(i)] = tpoly_eval(p.coeff(i), tau);
    return dense_poly<Int>(std::move(out));
}

// gcd in Z[t][q] with a sound shortcut: strip q-contents, then certify
// coprimality of the primitive parts from one univariate image.  The image at
// t=tau has the full q-degree of the true gcd whenever gcd(lc_a, lc_b)(tau)
// is nonzero, so a constant image gcd proves the primitive parts coprime.
inline QtPoly ring_gcd(const QtPoly& a, const QtPoly& b) {
    if (a.is_zero()) return sign_normalized(b);
    if (b.is_zero()) return sign_normalized(a);
    if (qt_degree_t(a) + qt_degree_t(b) < a.degree() + b.degree())
        return sign_normalized(qt_transpose(ring_gcd(qt_transpose(a), qt_transpose(b))));

    TPoly ca = poly_content(a), cb = poly_content(b);
    QtPoly pa = scalar_divexact(a, ca), pb = scalar_divexact(b, cb);
    TPoly content_gcd = ring_gcd(ca, cb);

    TPoly lead_gcd = ring_gcd(pa.lead(), pb.lead());
    for (Int tau = 2; tau < 64; ++tau) {
        if (tpoly_eval(lead_gcd, tau).is_zero()) continue;
        dense_poly<Int> image = ring_gcd(qt_project_t(pa, tau), qt_project_t(pb, tau));
        if (image.degree() == 0) return sign_normalized(scalar_mul(QtPoly(TPoly(1)), content_gcd));
        break;
    }
    QtPoly g = ring_gcd<TPoly>(pa, pb);
    return sign_normalized(scalar_mul(g, content_gcd));
}

inline std::string qt_poly_to_string(const QtPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // ascending in q then t reads like the usual 1-t, 1-q*t shapes
    for (int dq = 0; dq <= p.degree(); ++dq) {
        const TPoly& c = p.coeff(dq);
        for (int dt = 0; dt <= c.degree(); ++dt) {
            const Int& a = c.coeff(dt);
            if (a.is_zero()) continue;
            Int mag = a < 0 ? Int(-a) : a;
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            std::string vars;
            if (dq > 0) vars += "q" + (dq > 1 ? "^" + std::to_string(dq) : "");
            if (dt > 0) {
                if (!vars.empty()) vars += "*";
                vars += "t" + (dt > 1 ? "^" + std::to_string(dt) : "");
            }
            if (vars.empty()) {
                os << mag;
            } else {
                if (mag != 1) os << mag << "*";
                os << vars;
            }
        }
    }
    return os.str();
}

class QtRational {
public:
    QtRational() : num_(), den_(qt_constant(1)) {}
    QtRational(int v) : num_(qt_constant(v)), den_(qt_constant(1)) {} // NOLINT(google-explicit-constructor)
    QtRational(QtPoly num, QtPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("QtRational: zero denominator");
        normalize();
    }
    explicit QtRational(const Rational& r)
        : num_(qt_constant(boost::multiprecision::numerator(r))),
          den_(qt_constant(boost::multiprecision::denominator(r))) {}

    // q^dq * t^dt * c with possibly negative exponents
    static QtRational monomial(Int c, int dq, int dt) {
        QtPoly n = qt_monomial(std::move(c), std::max(dq, 0), std::max(dt, 0));
        QtPoly d = qt_monomial(1, std::max(-dq, 0), std::max(-dt, 0));
        return QtRational(std::move(n), std::move(d));
    }
    static QtRational from_poly(QtPoly p) { return QtRational(std::move(p), qt_constant(1)); }

    const QtPoly& num() const { return num_; }
    const QtPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == qt_constant(1) && den_ == qt_constant(1); }

    friend bool operator==(const QtRational& a, const QtRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_; // canonical form is unique
    }
    friend bool operator!=(const QtRational& a, const QtRational& b) { return !(a == b); }

    friend QtRational operator+(const QtRational& a, const QtRational& b) {
        if (a.den_ == b.den_) return QtRational(a.num_ + b.num_, a.den_);
        QtPoly g = ring_gcd(a.den_, b.den_);
        if (g.degree() == 0 && qt_degree_t(g) <= 0)
            return QtRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        QtPoly aq = ring_divexact(a.den_, g), bq = ring_divexact(b.den_, g);
        return QtRational(a.num_ * bq + b.num_ * aq, a.den_ * bq);
    }
    friend QtRational operator-(const QtRational& a, const QtRational& b) {
        return a + (-b);
    }
    friend QtRational operator-(const QtRational& a) {
        QtRational r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend QtRational operator*(const QtRational& a, const QtRational& b) {
        return QtRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QtRational operator/(const QtRational& a, const QtRational& b) {
        if (b.is_zero()) throw std::domain_error("QtRational: division by zero in div");
        return QtRational(a.num_ * b.den_, a.den_ * b.num_);
    }
    QtRational& operator+=(const QtRational& b) { return *this = *this + b; }
    QtRational& operator-=(const QtRational& b) { return *this = *this - b; }
    QtRational& operator*=(const QtRational& b) { return *this = *this * b; }
    QtRational& operator/=(const QtRational& b) { return *this = *this / b; }

    QtRational pow(int e) const {
        if (e < 0) return (QtRational(1) / *this).pow(-e);
        QtRational r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // Substitute exact rational values for q and/or t.  Throws domain_error if
    // the denominator vanishes at the requested point.
    QtRational substitute(const std::optional<Rational>& q_value,
                          const std::optional<Rational>& t_value) const {
        QtPoly n = num_, d = den_;
        Int n_scale = 1, d_scale = 1;
        if (q_value) {
            auto [np, ns] = qt_substitute_q(n, *q_value);
            auto [dp, ds] = qt_substitute_q(d, *q_value);
            n = std::move(np);
            d = std::move(dp);
            n_scale *= ns;
            d_scale *= ds;
        }
        if (t_value) {
            auto [np, ns] = qt_substitute_t(n, *t_value);
            auto [dp, ds] = qt_substitute_t(d, *t_value);
            n = std::move(np);
            d = std::move(dp);
            n_scale *= ns;
            d_scale *= ds;
        }
        if (d.is_zero()) {
            std::ostringstream os;
            os << "QtRational: denominator " << qt_poly_to_string(den_) << " vanishes at";
            if (q_value) os << " q=" << *q_value;
            if (t_value) os << " t=" << *t_value;
            throw std::domain_error(os.str());
        }
        return QtRational(scalar_mul(n, TPoly(d_scale)), scalar_mul(d, TPoly(n_scale)));
    }

    // True when the value is a polynomial in t alone.
    bool is_t_polynomial() const {
        return den_ == qt_constant(1) && num_.degree() <= 0;
    }
    bool is_constant() const {
        return den_ == qt_constant(1) && num_.degree() <= 0 &&
               (num_.is_zero() || num_.coeff(0).degree() <= 0);
    }
    // Value as an exact rational; requires is_constant().
    Rational constant_value() const {
        if (!is_constant()) throw std::logic_error("QtRational: not a constant");
        if (num_.is_zero()) return Rational(0);
        return Rational(num_.coeff(0).coeff(0));
    }
    // Evaluate a t-polynomial at a rational point.
    Rational evaluate_t(const Rational& t) const {
        if (!is_t_polynomial()) throw std::logic_error("QtRational: not a t-polynomial");
        Rational v = 0, tp = 1;
        if (num_.is_zero()) return v;
        const TPoly& c = num_.coeff(0);
        for (int j = 0; j <= c.degree(); ++j) {
            v += Rational(c.coeff(j)) * tp;
            tp *= t;
        }
        return v;
    }

    std::string to_string() const {
        std::string n = qt_poly_to_string(num_);
        if (den_ == qt_constant(1)) return n;
        std::string d = qt_poly_to_string(den_);
        auto wrap = [](const std::string& s) {
            return s.find_first_of("+- ") == std::string::npos ? s : "(" + s + ")";
        };
        return wrap(n) + "/" + wrap(d);
    }

private:
    QtPoly num_;
    QtPoly den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = qt_constant(1);
            return;
        }
        QtPoly g = ring_gcd(num_, den_);
        num_ = ring_divexact(num_, g);
        den_ = ring_divexact(den_, g);
        // lexicographically-leading denominator term (q before t) positive
        if (ring_lead_negative(den_)) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

inline QtRational qt_one_minus_t() {
    return QtRational::from_poly(qt_one_minus(0, 1));
}

} // namespace pbmac
