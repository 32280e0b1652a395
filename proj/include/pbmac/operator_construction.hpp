#pragma once

// Operator-recursive constructions: the Knop-Sahi rotation, the recursion
// computing E^sigma_lambda from E_{0..0} = 1, the basement-permuting steps,
// and the operator word building permuted-basement t-atoms.
//
// Convention notes.  The basement-permuting operators swap the *labels* i and
// i+1 wherever they sit in the basement (Permutation::swap_values), while the
// shape-permuting relation swaps adjacent *rows*.  theta~ moves the basement
// down in length, pi~ moves it up.

#include "pbmac/filling.hpp"
#include "pbmac/operators.hpp"

#include <map>
#include <optional>

namespace pbmac {

// E_{(l2..ln, l1+1)} = q^{l1} x_1 E_lambda(x_2,..,x_n, q^{-1} x_1)
inline XPolynomial knop_sahi_shift(const XPolynomial& e, int lambda1) {
    const int n = e.n();
    XPolynomial r(n);
    for (const auto& [ex, c] : e.terms()) {
        ExpVec g(static_cast<std::size_t>(n), 0);
        const int last = ex[static_cast<std::size_t>(n) - 1];
        g[0] = last + 1; // the x_1 prefactor
        for (int k = 1; k < n; ++k) g[static_cast<std::size_t>(k)] = ex[static_cast<std::size_t>(k) - 1];
        r.add_term(std::move(g), c * QtRational::monomial(1, lambda1 - last, 0));
    }
    return r;
}

// row length of the row carrying basement label i: gamma_i = lambda_{sigma^{-1}(i)}
inline int row_length_of_label(const Composition& shape, const Permutation& basement, int label) {
    return shape[basement.inverse()(label) - 1];
}

enum class BasementDirection { up, down };

// One basement-permuting step.  Down: theta~_i E^sigma = E^{sigma s_i} times
// (t when gamma_i <= gamma_{i+1}); up: pi~_i with a t factor when
// gamma_i < gamma_{i+1}.  Returns E at the new basement, factor divided out.
inline std::pair<XPolynomial, Permutation> basement_permute(const XPolynomial& e,
                                                            const Composition& shape,
                                                            const Permutation& basement,
                                                            int i,
                                                            BasementDirection direction) {
    Permutation next = basement.swap_values(i);
    const bool length_drops = perm_length(next) < perm_length(basement);
    if ((direction == BasementDirection::down) != length_drops)
        throw std::invalid_argument("basement_permute: direction does not match length change");
    const int gi = row_length_of_label(shape, basement, i);
    const int gi1 = row_length_of_label(shape, basement, i + 1);
    XPolynomial out = direction == BasementDirection::down ? theta_t(e, i) : pi_t(e, i);
    const bool t_factor = direction == BasementDirection::down ? gi <= gi1 : gi < gi1;
    if (t_factor) out = QtRational::monomial(1, 0, -1) * out;
    return {std::move(out), std::move(next)};
}

namespace detail {

// E^{omega_0}_lambda by structural recursion: sort adjacent shape descents
// down with the shape-permuting relation, then peel weakly increasing shapes
// with the Knop-Sahi rotation.
inline XPolynomial macdonald_w0(const Composition& shape,
                                std::map<std::vector<int>, XPolynomial>& memo) {
    auto it = memo.find(shape.parts);
    if (it != memo.end()) return it->second;
    const int n = shape.size();
    XPolynomial result(n);
    if (shape.is_zero()) {
        result = XPolynomial::one(n);
    } else {
        int j = 0;
        for (int k = 1; k < n; ++k)
            if (shape[k - 1] > shape[k]) {
                j = k;
                break;
            }
        if (j > 0) {
            Composition mu = shape.swapped(j); // mu_j < mu_{j+1}
            XPolynomial emu = macdonald_w0(mu, memo);
            ArmLeg al = arm_leg(mu, j + 1, mu[j - 1] + 1);
            QtRational factor(qt_one_minus(0, 1), qt_one_minus(1 + al.leg, al.arm));
            result = theta_t(emu, n - j) + factor * emu;
        } else {
            // weakly increasing and nonzero, so the last part is positive
            const int first = shape[n - 1] - 1;
            std::vector<int> mu(static_cast<std::size_t>(n));
            mu[0] = first;
            for (int k = 1; k < n; ++k) mu[static_cast<std::size_t>(k)] = shape[k - 1];
            result = knop_sahi_shift(macdonald_w0(Composition(std::move(mu)), memo), first);
        }
    }
    memo.emplace(shape.parts, result);
    return result;
}

// letters l_0..l_{k-1} with w = s_{l_0} o s_{l_1} o ... o s_{l_{k-1}}, reduced
inline std::vector<int> reduced_word_left(Permutation w) {
    std::vector<int> letters;
    const int n = w.size();
    while (!w.is_identity()) {
        Permutation inv = w.inverse();
        int pick = 0;
        for (int i = 1; i < n; ++i)
            if (inv(i) > inv(i + 1)) {
                pick = i;
                break;
            }
        letters.push_back(pick);
        w = w.swap_values(pick);
    }
    return letters;
}

} // namespace detail

// E^sigma_lambda via operators; equals macdonald_combinatorial exactly.
inline XPolynomial macdonald_recursive(const Composition& shape, const Permutation& basement) {
    if (shape.size() != basement.size())
        throw std::invalid_argument("macdonald_recursive: shape/basement length mismatch");
    const int n = shape.size();
    std::map<std::vector<int>, XPolynomial> memo;
    XPolynomial e = detail::macdonald_w0(shape, memo);
    // walk the basement down from omega_0 to the target
    Permutation omega0 = Permutation::longest(n);
    Permutation u = Permutation([&] {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) w[static_cast<std::size_t>(j) - 1] = basement(omega0(j));
        return w;
    }());
    std::vector<int> letters = detail::reduced_word_left(u);
    Permutation tau = omega0;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        auto [next_e, next_tau] = basement_permute(e, shape, tau, *it, BasementDirection::down);
        e = std::move(next_e);
        tau = std::move(next_tau);
    }
    if (tau != basement) throw std::logic_error("macdonald_recursive: basement walk failed");
    return e;
}

// Operator word for the permuted-basement t-atom: A^sigma_lambda(x;t) equals
// the word applied to x^{revsort(lambda)}.  The topmost eligible pair is taken
// at each step, which makes the emitted word deterministic.
inline std::pair<OperatorWord, XPolynomial> atom_operator_construction(const Composition& shape,
                                                                       const Permutation& basement) {
    if (shape.size() != basement.size())
        throw std::invalid_argument("atom_operator_construction: shape/basement length mismatch");
    const int n = shape.size();
    OperatorWord word;
    Permutation sigma = basement;
    while (true) {
        Permutation inv = sigma.inverse();
        int best_row = n + 1, best_i = 0;
        OpKind best_kind = OpKind::pi_t;
        for (int i = 1; i < n; ++i) {
            const int row_i = inv(i), row_i1 = inv(i + 1);
            const int gi = shape[row_i - 1], gi1 = shape[row_i1 - 1];
            if (row_i1 < row_i && gi1 >= gi) { // label i+1 above label i, weakly longer
                if (row_i1 < best_row) {
                    best_row = row_i1;
                    best_i = i;
                    best_kind = OpKind::pi_t;
                }
            } else if (row_i < row_i1 && gi < gi1) { // label i above, strictly shorter
                if (row_i < best_row) {
                    best_row = row_i;
                    best_i = i;
                    best_kind = OpKind::theta_t;
                }
            }
        }
        if (best_i == 0) break;
        word.steps.push_back({best_kind, best_i});
        sigma = sigma.swap_values(best_i);
    }
    // base case: label 1 has the longest row, label 2 the next, and so on
    for (int i = 1; i < n; ++i)
        if (row_length_of_label(shape, sigma, i) < row_length_of_label(shape, sigma, i + 1))
            throw std::logic_error("atom_operator_construction: elimination did not terminate sorted");
    Partition sorted = revsort(shape);
    ExpVec base(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < sorted.size(); ++k) base[static_cast<std::size_t>(k)] = sorted[k];
    XPolynomial x_base = XPolynomial::monomial(n, std::move(base));
    return {word, word.apply(x_base)};
}

} // namespace pbmac
