#pragma once

// Named polynomial families: elementary symmetric, Schur, Hall-Littlewood P,
// key polynomials, Demazure atoms and permuted-basement t-atoms, plus the
// q=1 factorization data.

#include "pbmac/filling.hpp"
#include "pbmac/operator_construction.hpp"

#include <optional>

namespace pbmac {

inline XPolynomial elementary_k(int k, int n) {
    XPolynomial e(n);
    if (k == 0) return XPolynomial::one(n);
    if (k < 0 || k > n) return e; // zero
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int picked) {
        if (picked == k) {
            ExpVec ev(static_cast<std::size_t>(n), 0);
            for (int s : idx) ev[static_cast<std::size_t>(s)] = 1;
            e.add_term(std::move(ev), QtRational(1));
            return;
        }
        for (int s = start; s < n; ++s) {
            idx[static_cast<std::size_t>(picked)] = s;
            rec(s + 1, picked + 1);
        }
    };
    rec(0, 0);
    return e;
}

inline XPolynomial elementary_poly(const Partition& mu, int n) {
    XPolynomial e = XPolynomial::one(n);
    for (int part : mu.parts()) e *= elementary_k(part, n);
    return e;
}

// Schur polynomial by semistandard tableau enumeration (zero when mu has more
// than n nonzero parts).  The bialternant ratio is kept as a test oracle.
inline XPolynomial schur_poly(const Partition& mu, int n) {
    XPolynomial s(n);
    std::vector<int> shape;
    for (int p : mu.parts())
        if (p > 0) shape.push_back(p);
    if (static_cast<int>(shape.size()) > n) return s;
    if (shape.empty()) return XPolynomial::one(n);
    std::vector<std::vector<int>> tab(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) tab[r].assign(static_cast<std::size_t>(shape[r]), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
        if (r == shape.size()) {
            ExpVec ev(static_cast<std::size_t>(n), 0);
            for (const auto& row : tab)
                for (int v : row) ++ev[static_cast<std::size_t>(v) - 1];
            s.add_term(std::move(ev), QtRational(1));
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == tab[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);                       // rows weakly increase
        if (r > 0 && c < tab[r - 1].size()) lo = std::max(lo, tab[r - 1][c] + 1); // columns strictly
        for (int v = lo; v <= n; ++v) {
            tab[r][c] = v;
            rec(nr, nc);
        }
        tab[r][c] = 0;
    };
    rec(0, 0);
    return s;
}

// exact quotient of f by (x_i - x_j); throws when the division is not exact
inline XPolynomial divide_by_var_difference(XPolynomial f, int i, int j) {
    XPolynomial q(f.n());
    const std::size_t ii = static_cast<std::size_t>(i) - 1, jj = static_cast<std::size_t>(j) - 1;
    while (!f.is_zero()) {
        ExpVec best;
        QtRational bc;
        int maxe = -1;
        for (const auto& [e, c] : f.terms())
            if (e[ii] > maxe) {
                maxe = e[ii];
                best = e;
                bc = c;
            }
        if (maxe == 0) throw std::logic_error("divide_by_var_difference: inexact division");
        ExpVec qe = best;
        --qe[ii];
        q.add_term(qe, bc);
        ExpVec t2 = qe;
        ++t2[jj];
        f.add_term(best, -bc);
        f.add_term(std::move(t2), bc);
    }
    return q;
}

// permute variables of f: x_k -> x_{w(k)}
inline XPolynomial permute_variables(const XPolynomial& f, const Permutation& w) {
    XPolynomial r(f.n());
    for (const auto& [e, c] : f.terms()) {
        ExpVec g(e.size());
        for (int k = 1; k <= f.n(); ++k)
            g[static_cast<std::size_t>(w(k)) - 1] = e[static_cast<std::size_t>(k) - 1];
        r.add_term(std::move(g), c);
    }
    return r;
}

inline int perm_sign(const Permutation& w) { return perm_length(w) % 2 == 0 ? 1 : -1; }

// Hall-Littlewood P by the classical symmetrization formula, computed as the
// alternant  sum_w sign(w) w(x^mu prod_{i<j}(x_i - t x_j))  divided by the
// Vandermonde and by v_mu(t).  P_mu(x;0) = s_mu.
inline XPolynomial hall_littlewood_p(const Partition& mu, int n) {
    int nonzero = 0;
    for (int p : mu.parts())
        if (p > 0) ++nonzero;
    if (nonzero > n) throw std::invalid_argument("hall_littlewood_p: too many parts");

    ExpVec muv(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < mu.size() && k < n; ++k) muv[static_cast<std::size_t>(k)] = mu[k];

    XPolynomial core = XPolynomial::monomial(n, muv);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            XPolynomial factor = XPolynomial::variable(n, i) -
                                 QtRational::monomial(1, 0, 1) * XPolynomial::variable(n, j);
            core *= factor;
        }
    XPolynomial acc(n);
    for (const Permutation& w : all_permutations(n)) {
        XPolynomial term = permute_variables(core, w);
        acc += perm_sign(w) == 1 ? term : -term;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) acc = divide_by_var_difference(std::move(acc), i, j);

    // v_mu(t) with the zero parts of the n-variable alphabet counted
    std::map<int, int> mult;
    for (int v : muv) ++mult[v];
    QtRational v_mu(1);
    const QtRational one_minus_t = qt_one_minus_t();
    for (const auto& [part, m] : mult) {
        for (int k = 1; k <= m; ++k)
            v_mu *= QtRational::from_poly(qt_one_minus(0, k)) / one_minus_t;
    }
    return (QtRational(1) / v_mu) * acc;
}

// --- keys, atoms, t-atoms -------------------------------------------------

inline XPolynomial patom_t(const Composition& gamma, const Permutation& sigma) {
    return macdonald_combinatorial(gamma, sigma, Rational(0), std::nullopt);
}

inline XPolynomial demazure_atom(const Composition& gamma) {
    return macdonald_combinatorial(gamma, Permutation::identity(gamma.size()), Rational(0),
                                   Rational(0));
}

inline XPolynomial key_poly(const Composition& gamma) {
    return macdonald_combinatorial(gamma, Permutation::longest(gamma.size()), Rational(0),
                                   Rational(0));
}

// Cross-check construction for keys: a pure pi~ word on x^{revsort(gamma)}
// moving longer rows upward at basement omega_0.
inline std::pair<OperatorWord, XPolynomial> key_operator_construction(const Composition& gamma) {
    const int n = gamma.size();
    OperatorWord word;
    Composition cur = gamma;
    while (true) {
        int j = 0;
        for (int k = 1; k < n; ++k)
            if (cur[k - 1] > cur[k]) {
                j = k;
                break;
            }
        if (j == 0) break;
        word.steps.push_back({OpKind::pi_t, n - j});
        cur = cur.swapped(j);
    }
    Partition sorted = revsort(gamma);
    ExpVec base(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < sorted.size(); ++k) base[static_cast<std::size_t>(k)] = sorted[k];
    XPolynomial x_base = XPolynomial::monomial(n, std::move(base));
    return {word, word.apply(x_base)};
}

// --- the q=1 factorization --------------------------------------------------

struct FactorizationData {
    XPolynomial factor;  // e_{lambda'} / e_{(lambda~)'} as an honest product
    bool check = false;  // E^sigma_lambda(x;1,t) == factor * E^sigma_{lambda~}(x;1,t)
};

// parts of conjugate(lambda) with the parts of conjugate(weak standardization)
// removed once each
inline Partition conjugate_difference(const Composition& lambda) {
    Partition lc = conjugate(revsort(lambda));
    Partition sc = conjugate(revsort(weak_standardize(lambda)));
    std::vector<int> remaining = lc.parts().empty() ? std::vector<int>{} : lc.parts();
    for (int p : sc.parts()) {
        auto it = std::find(remaining.begin(), remaining.end(), p);
        if (it == remaining.end())
            throw std::logic_error("conjugate_difference: conjugate parts not nested");
        remaining.erase(it);
    }
    std::sort(remaining.rbegin(), remaining.rend());
    return Partition(Composition(std::move(remaining)));
}

inline FactorizationData factorization_data(const Composition& lambda, const Permutation& sigma) {
    const int n = lambda.size();
    FactorizationData out{XPolynomial::one(n), false};
    out.factor = elementary_poly(conjugate_difference(lambda), n);
    Composition tilde = weak_standardize(lambda);
    XPolynomial lhs = macdonald_combinatorial(lambda, sigma, Rational(1), std::nullopt);
    XPolynomial rhs = macdonald_combinatorial(tilde, sigma, Rational(1), std::nullopt);
    out.check = lhs == out.factor * rhs;
    return out;
}

} // namespace pbmac
