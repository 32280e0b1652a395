#pragma once

// Change of basis: rewrite a homogeneous polynomial in one of the named
// families by an exact linear solve in monomial coordinates.  Square bases
// (monomial, key, atom, patom_t) get a cached inverse per (basis, degree);
// symmetric families solve a rectangular system per call.

#include "pbmac/bases.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace pbmac {

enum class BasisFamily { monomial, elementary, schur, hall_littlewood_P, key, atom, patom_t };

inline std::string basis_family_name(BasisFamily f) {
    switch (f) {
        case BasisFamily::monomial: return "monomial";
        case BasisFamily::elementary: return "elementary";
        case BasisFamily::schur: return "schur";
        case BasisFamily::hall_littlewood_P: return "hall_littlewood_P";
        case BasisFamily::key: return "key";
        case BasisFamily::atom: return "atom";
        case BasisFamily::patom_t: return "patom_t";
    }
    return {};
}

inline std::optional<BasisFamily> basis_family_from_name(const std::string& s) {
    for (BasisFamily f : {BasisFamily::monomial, BasisFamily::elementary, BasisFamily::schur,
                          BasisFamily::hall_littlewood_P, BasisFamily::key, BasisFamily::atom,
                          BasisFamily::patom_t})
        if (basis_family_name(f) == s) return f;
    return std::nullopt;
}

struct BasisId {
    BasisFamily family = BasisFamily::monomial;
    std::optional<Permutation> basement; // required for patom_t; key is omega_0,
                                         // atom defaults to the identity

    Permutation effective_basement(int n) const {
        switch (family) {
            case BasisFamily::key: return Permutation::longest(n);
            case BasisFamily::atom: return basement ? *basement : Permutation::identity(n);
            case BasisFamily::patom_t:
                if (!basement) throw std::invalid_argument("BasisId: patom_t requires a basement");
                return *basement;
            default:
                throw std::logic_error("BasisId: family has no basement");
        }
    }
    bool is_square_family() const {
        return family == BasisFamily::monomial || family == BasisFamily::key ||
               family == BasisFamily::atom || family == BasisFamily::patom_t;
    }
    std::string cache_key(int n, int degree) const {
        std::string k = basis_family_name(family) + "|n" + std::to_string(n) + "|d" +
                        std::to_string(degree);
        if (family == BasisFamily::key || family == BasisFamily::atom ||
            family == BasisFamily::patom_t)
            k += "|b" + effective_basement(n).to_string();
        return k;
    }
};

inline XPolynomial basis_element(const BasisId& basis, const Composition& alpha, int n) {
    switch (basis.family) {
        case BasisFamily::monomial: {
            ExpVec e(alpha.parts.begin(), alpha.parts.end());
            e.resize(static_cast<std::size_t>(n), 0);
            return XPolynomial::monomial(n, std::move(e));
        }
        case BasisFamily::elementary: return elementary_poly(revsort(alpha), n);
        case BasisFamily::schur: return schur_poly(revsort(alpha), n);
        case BasisFamily::hall_littlewood_P: return hall_littlewood_p(revsort(alpha), n);
        case BasisFamily::key: return key_poly(pad_to(alpha, n));
        case BasisFamily::atom:
            return macdonald_combinatorial(pad_to(alpha, n), basis.effective_basement(n),
                                           Rational(0), Rational(0));
        case BasisFamily::patom_t: return patom_t(pad_to(alpha, n), basis.effective_basement(n));
    }
    throw std::logic_error("basis_element: unknown family");
}

struct CompositionGrevlexDesc {
    bool operator()(const Composition& a, const Composition& b) const {
        return grevlex_greater(a.parts, b.parts);
    }
};

struct ExpansionResult {
    BasisId basis;
    std::map<Composition, QtRational, CompositionGrevlexDesc> coefficients;

    nlohmann::json to_json() const {
        nlohmann::json b{{"family", basis_family_name(basis.family)}};
        if (basis.family == BasisFamily::patom_t || basis.family == BasisFamily::atom ||
            basis.family == BasisFamily::key) {
            int n = coefficients.empty() ? 0 : coefficients.begin()->first.size();
            if (n > 0) b["basement"] = basis.effective_basement(n).word;
        }
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& [alpha, c] : coefficients)
            coeffs.push_back({{"alpha", alpha.parts},
                              {"num", qt_poly_to_json(c.num())},
                              {"den", qt_poly_to_json(c.den())}});
        return {{"basis", b}, {"coeffs", coeffs}};
    }
};

class expansion_error : public std::runtime_error {
public:
    expansion_error(const std::string& msg, XPolynomial residual_)
        : std::runtime_error(msg + "; residual " + residual_.to_string()),
          residual(std::move(residual_)) {}
    XPolynomial residual;
};

namespace detail {

inline std::vector<Composition> sorted_compositions(int degree, int n) {
    std::vector<Composition> cs = compositions_of(degree, n);
    std::sort(cs.begin(), cs.end(), CompositionGrevlexDesc{});
    return cs;
}

inline std::vector<Composition> basis_index_set(const BasisId& basis, int degree, int n) {
    if (basis.is_square_family()) return sorted_compositions(degree, n);
    std::vector<Composition> out;
    for (const Partition& mu : partitions_of(degree, basis.family == BasisFamily::elementary
                                                         ? degree
                                                         : n)) {
        if (basis.family == BasisFamily::elementary) {
            bool ok = true;
            for (int p : mu.parts())
                if (p > n) ok = false;
            if (!ok) continue;
        }
        out.push_back(mu.comp);
    }
    std::sort(out.begin(), out.end(), CompositionGrevlexDesc{});
    return out;
}

// Gauss-Jordan inverse over the exact field; throws when singular.
inline std::vector<std::vector<QtRational>> invert(std::vector<std::vector<QtRational>> m) {
    const std::size_t k = m.size();
    std::vector<std::vector<QtRational>> inv(k, std::vector<QtRational>(k, QtRational(0)));
    for (std::size_t i = 0; i < k; ++i) inv[i][i] = QtRational(1);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col].is_zero()) ++pivot;
        if (pivot == k) throw std::logic_error("basis matrix is singular");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        QtRational d = m[col][col];
        for (std::size_t j = 0; j < k; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            QtRational f = m[r][col];
            for (std::size_t j = 0; j < k; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

struct SquareBasisSolver {
    std::vector<Composition> index;
    std::map<ExpVec, std::size_t> mono_pos;
    std::vector<std::vector<QtRational>> inverse;

    SquareBasisSolver(const BasisId& basis, int degree, int n) {
        index = sorted_compositions(degree, n);
        const std::size_t k = index.size();
        for (std::size_t r = 0; r < k; ++r) {
            ExpVec e(index[r].parts.begin(), index[r].parts.end());
            mono_pos.emplace(std::move(e), r);
        }
        std::vector<std::vector<QtRational>> m(k, std::vector<QtRational>(k, QtRational(0)));
        for (std::size_t c = 0; c < k; ++c) {
            XPolynomial b = basis_element(basis, index[c], n);
            for (const auto& [e, coef] : b.terms()) m[mono_pos.at(e)][c] = coef;
        }
        inverse = invert(std::move(m));
    }

    std::vector<QtRational> solve(const XPolynomial& f) const {
        const std::size_t k = index.size();
        std::vector<QtRational> b(k, QtRational(0));
        for (const auto& [e, coef] : f.terms()) b[mono_pos.at(e)] = coef;
        std::vector<QtRational> c(k, QtRational(0));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < k; ++j)
                if (!inverse[r][j].is_zero() && !b[j].is_zero()) c[r] += inverse[r][j] * b[j];
        return c;
    }
};

inline const SquareBasisSolver& square_solver(const BasisId& basis, int degree, int n) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<SquareBasisSolver>> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::string key = basis.cache_key(n, degree);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<SquareBasisSolver>(basis, degree, n)).first;
    return *it->second;
}

} // namespace detail

inline ExpansionResult expand_in_basis(const XPolynomial& f, const BasisId& basis) {
    if (!f.is_homogeneous())
        throw std::invalid_argument("expand_in_basis: polynomial is not homogeneous");
    ExpansionResult out;
    out.basis = basis;
    if (f.is_zero()) return out;
    const int n = f.n();
    const int degree = f.degree();

    if (basis.is_square_family()) {
        const auto& solver = detail::square_solver(basis, degree, n);
        std::vector<QtRational> c = solver.solve(f);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) out.coefficients.emplace(solver.index[i], std::move(c[i]));
        return out;
    }

    // symmetric families: rectangular exact solve with residual check
    std::vector<Composition> index = detail::basis_index_set(basis, degree, n);
    std::vector<XPolynomial> elems;
    elems.reserve(index.size());
    for (const Composition& alpha : index) elems.push_back(basis_element(basis, alpha, n));
    std::vector<Composition> monos = detail::sorted_compositions(degree, n);
    std::map<ExpVec, std::size_t> mono_pos;
    for (std::size_t r = 0; r < monos.size(); ++r) {
        ExpVec e(monos[r].parts.begin(), monos[r].parts.end());
        mono_pos.emplace(std::move(e), r);
    }
    const std::size_t rows = monos.size(), cols = index.size();
    std::vector<std::vector<QtRational>> m(rows, std::vector<QtRational>(cols + 1, QtRational(0)));
    for (std::size_t c = 0; c < cols; ++c)
        for (const auto& [e, coef] : elems[c].terms()) m[mono_pos.at(e)][c] = coef;
    for (const auto& [e, coef] : f.terms()) m[mono_pos.at(e)][cols] = coef;

    std::vector<std::size_t> pivot_of_col(cols, rows);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        QtRational d = m[rank][col];
        for (std::size_t j = col; j <= cols; ++j) m[rank][j] /= d;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            QtRational fac = m[r][col];
            for (std::size_t j = col; j <= cols; ++j) m[r][j] -= fac * m[rank][j];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<QtRational> solution(cols, QtRational(0));
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] != rows) solution[c] = m[pivot_of_col[c]][cols];
    // exact residual check
    XPolynomial recon(n);
    for (std::size_t c = 0; c < cols; ++c)
        if (!solution[c].is_zero()) recon += solution[c] * elems[c];
    if (recon != f) throw expansion_error("expand_in_basis: polynomial is not in the span", f - recon);
    for (std::size_t c = 0; c < cols; ++c)
        if (!solution[c].is_zero()) out.coefficients.emplace(index[c], std::move(solution[c]));
    return out;
}

// s_mu(x) * A^sigma_gamma(x) in the sigma-atom basis at t=0; the coefficients
// are asserted to be non-negative integers.
inline ExpansionResult product_expand_schur(const Partition& mu, const Composition& gamma,
                                            const Permutation& sigma) {
    const int n = gamma.size();
    BasisId basis{BasisFamily::atom, sigma};
    XPolynomial atom = macdonald_combinatorial(gamma, sigma, Rational(0), Rational(0));
    XPolynomial product = schur_poly(mu, n) * atom;
    ExpansionResult r = expand_in_basis(product, basis);
    for (const auto& [alpha, c] : r.coefficients) {
        if (!c.is_constant())
            throw std::logic_error("product_expand_schur: non-constant coefficient at " +
                                   alpha.to_string());
        Rational v = c.constant_value();
        if (boost::multiprecision::denominator(v) != 1 || v < 0)
            throw std::logic_error("product_expand_schur: coefficient not a non-negative integer at " +
                                   alpha.to_string());
    }
    return r;
}

} // namespace pbmac
