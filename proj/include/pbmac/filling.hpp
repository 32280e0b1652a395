#pragma once

// Augmented fillings and the combinatorial formula for E^sigma_lambda(x;q,t).
//
// A box is (row, column) with the basement at column 0.  Basement boxes take
// part in attacking pairs and in triples; entries live in {1..n}.

#include "pbmac/shapes.hpp"
#include "pbmac/x_polynomial.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace pbmac {

struct Box {
    int row = 0; // 1-based
    int col = 0; // 0 = basement
    friend bool operator==(const Box& a, const Box& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator<(const Box& a, const Box& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
};

struct AugmentedFilling {
    Composition shape;
    Permutation basement; // read top to bottom
    std::vector<std::vector<int>> rows;

    AugmentedFilling(Composition s, Permutation b)
        : shape(std::move(s)), basement(std::move(b)) {
        if (shape.size() != basement.size())
            throw std::invalid_argument("AugmentedFilling: shape/basement length mismatch");
        rows.resize(static_cast<std::size_t>(shape.size()));
        for (int r = 1; r <= shape.size(); ++r)
            rows[static_cast<std::size_t>(r) - 1].assign(static_cast<std::size_t>(shape[r - 1]), 0);
    }

    int n() const { return shape.size(); }
    int entry(int row, int col) const { // col 0 reads the basement
        if (col == 0) return basement(row);
        return rows.at(static_cast<std::size_t>(row) - 1).at(static_cast<std::size_t>(col) - 1);
    }
    void set(int row, int col, int value) {
        rows.at(static_cast<std::size_t>(row) - 1).at(static_cast<std::size_t>(col) - 1) = value;
    }
    // row-major reading word of the non-basement entries
    std::vector<int> word() const {
        std::vector<int> w;
        for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
        return w;
    }

    friend bool operator==(const AugmentedFilling& a, const AugmentedFilling& b) {
        return a.shape == b.shape && a.basement == b.basement && a.rows == b.rows;
    }
};

// Two boxes attack if their entries are equal and they are in the same column,
// or in adjacent columns with the rightmost box strictly below the other.
inline bool boxes_attack(const AugmentedFilling& f, const Box& a, const Box& b) {
    if (f.entry(a.row, a.col) != f.entry(b.row, b.col)) return false;
    if (a.col == b.col) return a.row != b.row;
    const Box& left = a.col < b.col ? a : b;
    const Box& right = a.col < b.col ? b : a;
    if (right.col != left.col + 1) return false;
    return right.row > left.row;
}

inline std::vector<Box> all_boxes(const Composition& shape, bool include_basement) {
    std::vector<Box> out;
    for (int r = 1; r <= shape.size(); ++r) {
        if (include_basement) out.push_back({r, 0});
        for (int c = 1; c <= shape[r - 1]; ++c) out.push_back({r, c});
    }
    return out;
}

inline std::vector<std::pair<Box, Box>> attacking_pairs(const AugmentedFilling& f) {
    std::vector<std::pair<Box, Box>> out;
    std::vector<Box> boxes = all_boxes(f.shape, true);
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (boxes_attack(f, boxes[i], boxes[j])) out.emplace_back(boxes[i], boxes[j]);
    return out;
}

inline bool is_non_attacking(const AugmentedFilling& f) { return attacking_pairs(f).empty(); }

inline std::vector<Box> descent_set(const AugmentedFilling& f) {
    std::vector<Box> out;
    for (int r = 1; r <= f.shape.size(); ++r)
        for (int c = 1; c <= f.shape[r - 1]; ++c)
            if (f.entry(r, c - 1) < f.entry(r, c)) out.push_back({r, c});
    return out;
}

inline int maj(const AugmentedFilling& f) {
    int m = 0;
    for (const Box& u : descent_set(f)) m += arm_leg(f.shape, u.row, u.col).leg + 1;
    return m;
}

// A triple is (a, b, c) with a immediately left of b.  Type A has c below b in
// b's column with row(a,b) at least as long as row(c); type B has c above a in
// a's column with row(a,b) strictly longer than row(c).
struct Triple {
    Box a, b, c;
    bool type_a = true;
};

inline std::vector<Triple> shape_triples(const Composition& shape) {
    std::vector<Triple> out;
    const int n = shape.size();
    for (int r = 1; r <= n; ++r) {
        for (int r2 = r + 1; r2 <= n; ++r2) {
            if (shape[r2 - 1] <= shape[r - 1]) // type A rows (r above, c in row r2)
                for (int j = 1; j <= shape[r2 - 1]; ++j)
                    out.push_back({{r, j - 1}, {r, j}, {r2, j}, true});
        }
        for (int r2 = 1; r2 < r; ++r2) {
            if (shape[r2 - 1] < shape[r - 1]) // type B rows (a,b in row r, c above)
                for (int j = 1; j <= std::min(shape[r - 1], shape[r2 - 1] + 1); ++j)
                    out.push_back({{r, j - 1}, {r, j}, {r2, j - 1}, false});
        }
    }
    return out;
}

// On equal entries the role subscripts break ties: b carries 1, c carries 2,
// a carries 3, and larger subscripts count as larger.
inline bool is_inversion_triple(const AugmentedFilling& f, const Triple& t) {
    struct Entry {
        int value;
        int subscript;
        char role;
    };
    std::array<Entry, 3> e{{{f.entry(t.b.row, t.b.col), 1, 'b'},
                            {f.entry(t.c.row, t.c.col), 2, 'c'},
                            {f.entry(t.a.row, t.a.col), 3, 'a'}}};
    std::sort(e.begin(), e.end(), [](const Entry& x, const Entry& y) {
        return x.value != y.value ? x.value < y.value : x.subscript < y.subscript;
    });
    const std::string order{e[0].role, e[1].role, e[2].role};
    // ascending labels forming a rotation of (a,c,b) give the counter-clockwise
    // (type A) / clockwise (type B) orientation
    return order == "acb" || order == "cba" || order == "bac";
}

inline int inv(const AugmentedFilling& f) {
    int k = 0;
    for (const Triple& t : shape_triples(f.shape))
        if (is_inversion_triple(f, t)) ++k;
    return k;
}

inline int coinv(const AugmentedFilling& f) {
    int k = 0;
    for (const Triple& t : shape_triples(f.shape))
        if (!is_inversion_triple(f, t)) ++k;
    return k;
}

inline XPolynomial weight_monomial(const AugmentedFilling& f) {
    ExpVec e(static_cast<std::size_t>(f.n()), 0);
    for (const auto& row : f.rows)
        for (int v : row) ++e[static_cast<std::size_t>(v) - 1];
    return XPolynomial::monomial(f.n(), std::move(e));
}

// Numerator/denominator of one filling's weight, built by plain polynomial
// products with no normalization.  Passing a q or t value specializes factor
// by factor, which keeps the arithmetic in small fractions instead of
// accumulating symbolic rational functions.
inline std::pair<QtPoly, QtPoly> filling_weight_parts(
    const AugmentedFilling& f,
    const std::optional<Rational>& q_value = std::nullopt,
    const std::optional<Rational>& t_value = std::nullopt) {
    QtPoly num, den = qt_constant(1);
    if (q_value || t_value) {
        QtRational lead = QtRational::monomial(1, maj(f), coinv(f)).substitute(q_value, t_value);
        if (lead.is_zero()) return {QtPoly{}, qt_constant(1)};
        num = lead.num();
        den = den * lead.den();
    } else {
        num = qt_monomial(1, maj(f), coinv(f));
    }
    for (int r = 1; r <= f.shape.size(); ++r)
        for (int c = 1; c <= f.shape[r - 1]; ++c) {
            if (f.entry(r, c - 1) == f.entry(r, c)) continue;
            ArmLeg al = arm_leg(f.shape, r, c);
            if (q_value || t_value) {
                QtRational factor =
                    QtRational(qt_one_minus(0, 1), qt_one_minus(1 + al.leg, 1 + al.arm))
                        .substitute(q_value, t_value);
                num = num * factor.num();
                den = den * factor.den();
            } else {
                num = num * qt_one_minus(0, 1);
                den = den * qt_one_minus(1 + al.leg, 1 + al.arm);
            }
        }
    return {std::move(num), std::move(den)};
}

// Full (q,t)-weight of one filling in the combinatorial formula.
inline QtRational filling_weight(const AugmentedFilling& f,
                                 const std::optional<Rational>& q_value = std::nullopt,
                                 const std::optional<Rational>& t_value = std::nullopt) {
    auto [num, den] = filling_weight_parts(f, q_value, t_value);
    return QtRational(std::move(num), std::move(den));
}

// All non-attacking fillings with entries in {1..n}, listed in row-major
// lexicographic order of the entry grids.
inline std::vector<AugmentedFilling> enumerate_naf(const Composition& shape,
                                                   const Permutation& basement) {
    if (shape.size() != basement.size())
        throw std::invalid_argument("enumerate_naf: shape/basement length mismatch");
    const int n = shape.size();
    std::vector<Box> cells = all_boxes(shape, false);
    std::vector<AugmentedFilling> out;
    AugmentedFilling f(shape, basement);

    // placing (r,c)=v only needs checks against boxes already placed: every
    // attacking pair is seen once its later box in row-major order goes in
    auto clashes = [&](int r, int c, int v) {
        for (int r2 = 1; r2 <= n; ++r2) {
            if (c == 1 && basement(r2) == v && r > r2) return true; // vs basement column
            const auto& row2 = f.rows[static_cast<std::size_t>(r2) - 1];
            auto placed = [&](int cc) {
                if (cc < 1 || cc > static_cast<int>(row2.size())) return 0;
                if (r2 > r || (r2 == r && cc >= c)) return 0; // not placed yet
                return row2[static_cast<std::size_t>(cc) - 1];
            };
            if (r2 != r && placed(c) == v) return true;
            if (placed(c - 1) == v && r > r2) return true;
            if (placed(c + 1) == v && r2 > r) return true;
        }
        return false;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            out.push_back(f);
            return;
        }
        const Box u = cells[k];
        for (int v = 1; v <= n; ++v) {
            if (clashes(u.row, u.col, v)) continue;
            f.set(u.row, u.col, v);
            rec(k + 1);
        }
        f.set(u.row, u.col, 0);
    };
    rec(0);
    return out;
}

namespace detail {

inline bool try_divexact(const QtPoly& a, const QtPoly& b, QtPoly& quotient) {
    try {
        quotient = ring_divexact(a, b);
        return true;
    } catch (const std::logic_error&) {
        return false;
    }
}

} // namespace detail

// E^sigma_lambda(x;q,t) summed over non-attacking fillings, optionally with q
// and/or t specialized.  The symbolic path carries denominators as factor
// multisets so group sums combine over true least common multiples and the
// per-coefficient normalization happens once, after the known factors have
// been stripped from the numerator.
inline XPolynomial macdonald_combinatorial(const Composition& shape, const Permutation& basement,
                                           const std::optional<Rational>& q_value = std::nullopt,
                                           const std::optional<Rational>& t_value = std::nullopt) {
    using FactorSet = std::map<std::pair<int, int>, int>; // (1+leg, 1+arm) -> multiplicity
    const bool symbolic = !q_value && !t_value;
    XPolynomial e(shape.size());

    if (!symbolic) {
        std::map<ExpVec, std::map<QtPoly, QtPoly>> buckets;
        for (const AugmentedFilling& f : enumerate_naf(shape, basement)) {
            auto [num, den] = filling_weight_parts(f, q_value, t_value);
            if (num.is_zero()) continue;
            ExpVec ev(static_cast<std::size_t>(f.n()), 0);
            for (const auto& row : f.rows)
                for (int v : row) ++ev[static_cast<std::size_t>(v) - 1];
            auto& groups = buckets[ev];
            auto it = groups.find(den);
            if (it == groups.end()) groups.emplace(std::move(den), std::move(num));
            else it->second = it->second + num;
        }
        for (auto& [ev, groups] : buckets) {
            std::vector<QtRational> parts;
            for (auto& [den, num] : groups)
                if (!num.is_zero()) parts.emplace_back(num, den);
            if (parts.empty()) continue;
            while (parts.size() > 1) {
                std::vector<QtRational> next;
                for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
                    next.push_back(parts[i] + parts[i + 1]);
                if (parts.size() % 2) next.push_back(parts.back());
                parts = std::move(next);
            }
            e.add_term(ev, parts.front());
        }
        return e;
    }

    std::map<ExpVec, std::map<FactorSet, QtPoly>> buckets;
    for (const AugmentedFilling& f : enumerate_naf(shape, basement)) {
        QtPoly num = qt_monomial(1, maj(f), coinv(f));
        FactorSet den;
        for (int r = 1; r <= shape.size(); ++r)
            for (int c = 1; c <= shape[r - 1]; ++c) {
                if (f.entry(r, c - 1) == f.entry(r, c)) continue;
                ArmLeg al = arm_leg(shape, r, c);
                num = num * qt_one_minus(0, 1);
                ++den[{1 + al.leg, 1 + al.arm}];
            }
        ExpVec ev(static_cast<std::size_t>(f.n()), 0);
        for (const auto& row : f.rows)
            for (int v : row) ++ev[static_cast<std::size_t>(v) - 1];
        auto& groups = buckets[ev];
        auto it = groups.find(den);
        if (it == groups.end()) groups.emplace(std::move(den), std::move(num));
        else it->second = it->second + num;
    }
    for (auto& [ev, groups] : buckets) {
        FactorSet lcm;
        for (const auto& [den, num] : groups)
            for (const auto& [fac, mult] : den) {
                auto it = lcm.find(fac);
                if (it == lcm.end()) lcm.emplace(fac, mult);
                else it->second = std::max(it->second, mult);
            }
        QtPoly total;
        for (const auto& [den, num] : groups) {
            QtPoly scaled = num;
            for (const auto& [fac, mult] : lcm) {
                auto it = den.find(fac);
                int missing = mult - (it == den.end() ? 0 : it->second);
                for (int k = 0; k < missing; ++k)
                    scaled = scaled * qt_one_minus(fac.first, fac.second);
            }
            total = total + scaled;
        }
        if (total.is_zero()) continue;
        QtPoly den_poly = qt_constant(1);
        for (const auto& [fac, mult] : lcm) {
            QtPoly factor = qt_one_minus(fac.first, fac.second);
            for (int k = 0; k < mult; ++k) {
                QtPoly quotient;
                if (detail::try_divexact(total, factor, quotient)) total = std::move(quotient);
                else den_poly = den_poly * factor;
            }
        }
        e.add_term(ev, QtRational(std::move(total), std::move(den_poly)));
    }
    return e;
}

// --- serialization -------------------------------------------------------

inline nlohmann::json filling_to_json(const AugmentedFilling& f) {
    return {{"shape", f.shape.parts},
            {"basement", f.basement.word},
            {"rows", f.rows},
            {"stats", {{"maj", maj(f)}, {"inv", inv(f)}, {"coinv", coinv(f)}}}};
}

inline std::string filling_to_string(const AugmentedFilling& f) {
    std::ostringstream os;
    for (int r = 1; r <= f.shape.size(); ++r) {
        os << "[" << f.basement(r) << "]|";
        for (int c = 1; c <= f.shape[r - 1]; ++c) os << " " << f.entry(r, c);
        os << "\n";
    }
    os << "maj=" << maj(f) << " inv=" << inv(f) << " coinv=" << coinv(f) << "\n";
    return os.str();
}

} // namespace pbmac
