#pragma once

// Divided differences, Demazure operators and their Demazure-Lusztig
// t-deformations, acting termwise on XPolynomials.

#include "pbmac/x_polynomial.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pbmac {

// (f - s_i f)/(x_i - x_{i+1}); the quotient is exact by antisymmetry and is
// taken monomial by monomial
inline XPolynomial divided_difference(const XPolynomial& f, int i) {
    if (i < 1 || i >= f.n()) throw std::invalid_argument("divided_difference: index out of range");
    XPolynomial r(f.n());
    const std::size_t ia = static_cast<std::size_t>(i) - 1, ib = static_cast<std::size_t>(i);
    for (const auto& [e, c] : f.terms()) {
        const int p = e[ia], q = e[ib];
        if (p == q) continue;
        ExpVec g = e;
        if (p > q) {
            for (int k = 0; k < p - q; ++k) {
                g[ia] = q + k;
                g[ib] = p - 1 - k;
                r.add_term(g, c);
            }
        } else {
            for (int k = 0; k < q - p; ++k) {
                g[ia] = p + k;
                g[ib] = q - 1 - k;
                r.add_term(g, -c);
            }
        }
    }
    return r;
}

// pi_i = del_i x_i
inline XPolynomial demazure_pi(const XPolynomial& f, int i) {
    XPolynomial xf(f.n());
    const std::size_t ia = static_cast<std::size_t>(i) - 1;
    for (const auto& [e, c] : f.terms()) {
        ExpVec g = e;
        ++g[ia];
        xf.add_term(std::move(g), c);
    }
    return divided_difference(xf, i);
}

// theta_i = pi_i - 1
inline XPolynomial demazure_theta(const XPolynomial& f, int i) {
    return demazure_pi(f, i) - f;
}

// pi~_i(f) = (1-t) pi_i(f) + t s_i(f)
inline XPolynomial pi_t(const XPolynomial& f, int i) {
    return qt_one_minus_t() * demazure_pi(f, i) + QtRational::monomial(1, 0, 1) * f.swap_variables(i);
}

// theta~_i(f) = (1-t) theta_i(f) + t s_i(f); the Demazure-Lusztig operators
inline XPolynomial theta_t(const XPolynomial& f, int i) {
    return qt_one_minus_t() * demazure_theta(f, i) + QtRational::monomial(1, 0, 1) * f.swap_variables(i);
}

enum class OpKind { pi, theta, pi_t, theta_t };

struct OperatorWord {
    struct Step {
        OpKind kind;
        int index;
    };
    std::vector<Step> steps; // applied right to left, like operator composition

    XPolynomial apply(XPolynomial f) const {
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            switch (it->kind) {
                case OpKind::pi: f = demazure_pi(f, it->index); break;
                case OpKind::theta: f = demazure_theta(f, it->index); break;
                case OpKind::pi_t: f = pi_t(f, it->index); break;
                case OpKind::theta_t: f = theta_t(f, it->index); break;
            }
        }
        return f;
    }

    static std::string kind_name(OpKind k) {
        switch (k) {
            case OpKind::pi: return "pi";
            case OpKind::theta: return "theta";
            case OpKind::pi_t: return "pi~";
            case OpKind::theta_t: return "theta~";
        }
        return {};
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (i) s += " . ";
            s += kind_name(steps[i].kind) + "_" + std::to_string(steps[i].index);
        }
        return s;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& st : steps) {
            std::string k;
            switch (st.kind) {
                case OpKind::pi: k = "pi"; break;
                case OpKind::theta: k = "theta"; break;
                case OpKind::pi_t: k = "pi_t"; break;
                case OpKind::theta_t: k = "theta_t"; break;
            }
            arr.push_back({{"kind", k}, {"index", st.index}});
        }
        return arr;
    }
};

} // namespace pbmac
