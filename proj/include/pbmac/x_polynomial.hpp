#pragma once

// Polynomials in x_1..x_n over the (q,t) rational-function field.  Terms are
// kept in graded reverse-lexicographic descending order, which is also the
// canonical serialization order.

#include "pbmac/qt_rational.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace pbmac {

using ExpVec = std::vector<int>;

inline int exp_total(const ExpVec& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

// a >_grevlex b
inline bool grevlex_greater(const ExpVec& a, const ExpVec& b) {
    int da = exp_total(a), db = exp_total(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        int diff = a[i] - b[i];
        if (diff != 0) return diff < 0;
    }
    return false;
}

struct GrevlexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return grevlex_greater(a, b); }
};

class XPolynomial {
public:
    using TermMap = std::map<ExpVec, QtRational, GrevlexDesc>;

    explicit XPolynomial(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("XPolynomial: negative variable count");
    }
    static XPolynomial constant(int n, QtRational c) {
        XPolynomial p(n);
        p.add_term(ExpVec(static_cast<std::size_t>(n), 0), std::move(c));
        return p;
    }
    static XPolynomial one(int n) { return constant(n, QtRational(1)); }
    static XPolynomial monomial(int n, ExpVec e, QtRational c = QtRational(1)) {
        XPolynomial p(n);
        p.check_exponents(e);
        p.add_term(std::move(e), std::move(c));
        return p;
    }
    // x_i (1-based)
    static XPolynomial variable(int n, int i) {
        ExpVec e(static_cast<std::size_t>(n), 0);
        e.at(static_cast<std::size_t>(i) - 1) = 1;
        return monomial(n, std::move(e));
    }

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    QtRational coefficient(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? QtRational() : it->second;
    }

    void add_term(ExpVec e, QtRational c) {
        if (c.is_zero()) return;
        check_exponents(e);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const XPolynomial& a, const XPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const XPolynomial& a, const XPolynomial& b) { return !(a == b); }

    friend XPolynomial operator+(const XPolynomial& a, const XPolynomial& b) {
        a.check_same_n(b);
        XPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend XPolynomial operator-(const XPolynomial& a, const XPolynomial& b) {
        a.check_same_n(b);
        XPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend XPolynomial operator-(const XPolynomial& a) {
        XPolynomial r(a.n_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
        a.check_same_n(b);
        XPolynomial r(a.n_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }
    friend XPolynomial operator*(const QtRational& c, const XPolynomial& a) {
        XPolynomial r(a.n_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : a.terms_) r.add_term(e, c * k);
        return r;
    }
    XPolynomial& operator+=(const XPolynomial& b) { return *this = *this + b; }
    XPolynomial& operator-=(const XPolynomial& b) { return *this = *this - b; }
    XPolynomial& operator*=(const XPolynomial& b) { return *this = *this * b; }

    // exchange x_i and x_{i+1}, 1-based
    XPolynomial swap_variables(int i) const {
        if (i < 1 || i >= n_) throw std::invalid_argument("swap_variables: index out of range");
        XPolynomial r(n_);
        for (const auto& [e, c] : terms_) {
            ExpVec f = e;
            std::swap(f[static_cast<std::size_t>(i) - 1], f[static_cast<std::size_t>(i)]);
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    bool symmetric_in(int i) const { return swap_variables(i) == *this; }

    XPolynomial specialize(const std::optional<Rational>& q_value,
                           const std::optional<Rational>& t_value) const {
        XPolynomial r(n_);
        for (const auto& [e, c] : terms_) {
            try {
                r.add_term(e, c.substitute(q_value, t_value));
            } catch (const std::domain_error& err) {
                std::ostringstream os;
                os << err.what() << " in term with exponents " << exp_to_string(e);
                throw std::domain_error(os.str());
            }
        }
        return r;
    }

    // total degree of highest term; -1 for zero
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, exp_total(e));
        return d;
    }
    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = exp_total(e);
            if (d == -1) d = t;
            else if (t != d) return false;
        }
        return true;
    }

    nlohmann::json to_json() const;
    static XPolynomial from_json(const nlohmann::json& j);
    std::string to_string() const;

private:
    int n_;
    TermMap terms_;

    void check_same_n(const XPolynomial& b) const {
        if (n_ != b.n_) throw std::invalid_argument("XPolynomial: mismatched variable counts");
    }
    void check_exponents(const ExpVec& e) const {
        if (static_cast<int>(e.size()) != n_)
            throw std::invalid_argument("XPolynomial: exponent vector length mismatch");
        for (int v : e)
            if (v < 0 || v > (1 << 20)) throw std::overflow_error("XPolynomial: exponent out of range");
    }
    static std::string exp_to_string(const ExpVec& e) {
        std::string s = "(";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e[i]);
        }
        return s + ")";
    }
};

// --- serialization -----------------------------------------------------

inline std::int64_t int_to_i64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("serialization: coefficient exceeds 64-bit range");
    return v.convert_to<std::int64_t>();
}

// [[c, dq, dt], ...] sorted q-degree desc then t-degree desc
inline nlohmann::json qt_poly_to_json(const QtPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int dq = p.degree(); dq >= 0; --dq) {
        const TPoly& c = p.coeff(dq);
        for (int dt = c.degree(); dt >= 0; --dt) {
            if (c.coeff(dt).is_zero()) continue;
            arr.push_back({int_to_i64(c.coeff(dt)), dq, dt});
        }
    }
    return arr;
}

inline QtPoly qt_poly_from_json(const nlohmann::json& arr) {
    QtPoly p;
    for (const auto& triple : arr) {
        if (!triple.is_array() || triple.size() != 3)
            throw std::invalid_argument("qt polynomial: expected [c, dq, dt] triples");
        Int c = Int(triple[0].get<std::int64_t>());
        p = p + qt_monomial(std::move(c), triple[1].get<int>(), triple[2].get<int>());
    }
    return p;
}

inline nlohmann::json qt_rational_to_json(const QtRational& c) {
    return {{"num", qt_poly_to_json(c.num())}, {"den", qt_poly_to_json(c.den())}};
}

inline QtRational qt_rational_from_json(const nlohmann::json& j) {
    return QtRational(qt_poly_from_json(j.at("num")), qt_poly_from_json(j.at("den")));
}

inline nlohmann::json XPolynomial::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        terms.push_back({{"exp", e}, {"coeff", qt_rational_to_json(c)}});
    }
    return {{"n", n_}, {"terms", terms}};
}

inline XPolynomial XPolynomial::from_json(const nlohmann::json& j) {
    XPolynomial p(j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
        p.add_term(term.at("exp").get<ExpVec>(), qt_rational_from_json(term.at("coeff")));
    }
    return p;
}

inline std::string XPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.to_string();
        bool simple = cs.find_first_of("+- /") == std::string::npos;
        if (mono.empty()) {
            os << (simple ? cs : "(" + cs + ")");
        } else if (c.is_one()) {
            os << mono;
        } else {
            os << (simple ? cs : "(" + cs + ")") << "*" << mono;
        }
    }
    return os.str();
}

} // namespace pbmac
