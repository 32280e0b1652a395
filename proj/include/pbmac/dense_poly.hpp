#pragma once

// Dense univariate polynomials over a ring, nested to build Z[t] and Z[t][q].
// Exact arithmetic only: gcds run the primitive PRS, divisions check remainders.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/misc.hpp>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pbmac {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int ring_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b); // non-negative
}

inline bool ring_is_zero(const Int& a) { return a.is_zero(); }

inline bool ring_lead_negative(const Int& a) { return a < 0; }

inline Int ring_divexact(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("ring_divexact: inexact integer division");
    return q;
}

template <class R>
class dense_poly {
public:
    dense_poly() = default;
    explicit dense_poly(R c) {
        if (!ring_is_zero(c)) coeffs_.push_back(std::move(c));
    }
    explicit dense_poly(std::vector<R> cs) : coeffs_(std::move(cs)) { trim(); }

    static dense_poly monomial(R c, int deg) {
        dense_poly p;
        if (ring_is_zero(c)) return p;
        p.coeffs_.assign(static_cast<std::size_t>(deg) + 1, R{});
        p.coeffs_.back() = std::move(c);
        return p;
    }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const R& coeff(int i) const {
        static const R zero{};
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<std::size_t>(i)];
    }
    const R& lead() const {
        if (is_zero()) throw std::logic_error("dense_poly: lead of zero");
        return coeffs_.back();
    }
    const std::vector<R>& coeffs() const { return coeffs_; }

    friend bool operator==(const dense_poly& a, const dense_poly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const dense_poly& a, const dense_poly& b) { return !(a == b); }
    friend bool operator<(const dense_poly& a, const dense_poly& b) {
        return a.coeffs_ < b.coeffs_;
    }

    friend dense_poly operator+(const dense_poly& a, const dense_poly& b) {
        std::vector<R> c(std::max(a.coeffs_.size(), b.coeffs_.size()), R{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
        return dense_poly(std::move(c));
    }
    friend dense_poly operator-(const dense_poly& a, const dense_poly& b) {
        std::vector<R> c(std::max(a.coeffs_.size(), b.coeffs_.size()), R{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] - b.coeffs_[i];
        return dense_poly(std::move(c));
    }
    friend dense_poly operator-(const dense_poly& a) {
        std::vector<R> c(a.coeffs_.size(), R{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = R{} - a.coeffs_[i];
        return dense_poly(std::move(c));
    }
    friend dense_poly operator*(const dense_poly& a, const dense_poly& b) {
        if (a.is_zero() || b.is_zero()) return dense_poly{};
        std::vector<R> c(a.coeffs_.size() + b.coeffs_.size() - 1, R{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return dense_poly(std::move(c));
    }

    dense_poly shifted(int k) const { // multiply by x^k
        if (is_zero()) return *this;
        std::vector<R> c(coeffs_.size() + static_cast<std::size_t>(k), R{});
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<std::size_t>(k)] = coeffs_[i];
        return dense_poly(std::move(c));
    }

private:
    std::vector<R> coeffs_; // low degree first, no trailing zeros

    void trim() {
        while (!coeffs_.empty() && ring_is_zero(coeffs_.back())) coeffs_.pop_back();
    }
};

template <class R>
bool ring_is_zero(const dense_poly<R>& p) { return p.is_zero(); }

template <class R>
bool ring_lead_negative(const dense_poly<R>& p) {
    return !p.is_zero() && ring_lead_negative(p.lead());
}

template <class R>
dense_poly<R> scalar_mul(const dense_poly<R>& p, const R& c) {
    std::vector<R> out(p.coeffs().size(), R{});
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i] = p.coeffs()[i] * c;
    return dense_poly<R>(std::move(out));
}

template <class R>
dense_poly<R> scalar_divexact(const dense_poly<R>& p, const R& c) {
    std::vector<R> out(p.coeffs().size(), R{});
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i] = ring_divexact(p.coeffs()[i], c);
    return dense_poly<R>(std::move(out));
}

// gcd of all coefficients; R{} for the zero polynomial
template <class R>
R poly_content(const dense_poly<R>& p) {
    R g{};
    for (const auto& c : p.coeffs()) g = ring_gcd(g, c);
    return g;
}

template <class R>
dense_poly<R> primitive_part(const dense_poly<R>& p) {
    if (p.is_zero()) return p;
    return scalar_divexact(p, poly_content(p));
}

// Pseudo-remainder of a by b (associate of the true remainder; caller
// normalizes via primitive_part).
template <class R>
dense_poly<R> pseudo_rem(dense_poly<R> a, const dense_poly<R>& b) {
    if (b.is_zero()) throw std::logic_error("pseudo_rem: zero divisor");
    const R& lb = b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int e = a.degree() - b.degree();
        a = scalar_mul(a, lb) - scalar_mul(b.shifted(e), a.lead());
    }
    return a;
}

template <class R>
dense_poly<R> ring_gcd(const dense_poly<R>& a, const dense_poly<R>& b);

template <class R>
dense_poly<R> sign_normalized(dense_poly<R> p) {
    if (ring_lead_negative(p)) return -p;
    return p;
}

// Primitive PRS over a gcd domain.
template <class R>
dense_poly<R> ring_gcd(const dense_poly<R>& a, const dense_poly<R>& b) {
    if (a.is_zero()) return sign_normalized(b);
    if (b.is_zero()) return sign_normalized(a);
    R g = ring_gcd(poly_content(a), poly_content(b));
    dense_poly<R> u = primitive_part(a);
    dense_poly<R> v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        dense_poly<R> r = pseudo_rem(u, v);
        u = std::move(v);
        v = primitive_part(r);
    }
    return sign_normalized(scalar_mul(u, g));
}

// Exact polynomial division; throws if the division leaves a remainder.
template <class R>
dense_poly<R> ring_divexact(const dense_poly<R>& a, const dense_poly<R>& b) {
    if (b.is_zero()) throw std::logic_error("poly divexact: zero divisor");
    if (a.is_zero()) return a;
    std::vector<R> q(static_cast<std::size_t>(std::max(0, a.degree() - b.degree())) + 1, R{});
    dense_poly<R> r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int e = r.degree() - b.degree();
        R qc = ring_divexact(r.lead(), b.lead());
        q[static_cast<std::size_t>(e)] = qc;
        r = r - scalar_mul(b.shifted(e), qc);
    }
    if (!r.is_zero()) throw std::logic_error("poly divexact: inexact division");
    return dense_poly<R>(std::move(q));
}

} // namespace pbmac
