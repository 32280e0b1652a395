#pragma once

// Compositions, partitions, permutations, the two Bruhat-style orders used by
// the verification suites, and the arm/leg geometry of augmented diagrams.
//
// Diagram conventions, fixed here once: rows are indexed top-to-bottom
// starting at 1, columns left-to-right with the basement at column 0.  The
// basement column exists for every row, including rows of length zero.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbmac {

struct Composition {
    std::vector<int> parts; // explicit length; trailing zeros significant

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int v : parts)
            if (v < 0) throw std::invalid_argument("Composition: negative part");
    }

    int size() const { return static_cast<int>(parts.size()); }
    int operator[](int i) const { return parts.at(static_cast<std::size_t>(i)); } // 0-based
    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int inversions() const {
        int inv = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                if (parts[i] > parts[j]) ++inv;
        return inv;
    }
    bool is_weakly_decreasing() const {
        return std::is_sorted(parts.rbegin(), parts.rend());
    }
    bool is_weakly_increasing() const {
        return std::is_sorted(parts.begin(), parts.end());
    }
    bool is_zero() const {
        return std::all_of(parts.begin(), parts.end(), [](int v) { return v == 0; });
    }
    Composition swapped(int i) const { // swap entries i, i+1 (1-based)
        if (i < 1 || i >= size()) throw std::invalid_argument("Composition: swap index out of range");
        Composition c = *this;
        std::swap(c.parts[static_cast<std::size_t>(i) - 1], c.parts[static_cast<std::size_t>(i)]);
        return c;
    }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
    friend bool operator<(const Composition& a, const Composition& b) { return a.parts < b.parts; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s;
    }
    static Composition parse(const std::string& s);
};

struct Partition {
    Composition comp;

    Partition() = default;
    explicit Partition(Composition c) : comp(std::move(c)) {
        if (!comp.is_weakly_decreasing())
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    explicit Partition(std::vector<int> p) : Partition(Composition(std::move(p))) {}

    int size() const { return comp.size(); }
    int operator[](int i) const { return comp[i]; }
    int total() const { return comp.total(); }
    const std::vector<int>& parts() const { return comp.parts; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.comp == b.comp; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
};

struct Permutation {
    std::vector<int> word; // one-line notation, a bijection on {1..n}

    Permutation() = default;
    explicit Permutation(std::vector<int> w) : word(std::move(w)) {
        std::vector<bool> seen(word.size(), false);
        for (int v : word) {
            if (v < 1 || v > static_cast<int>(word.size()) || seen[static_cast<std::size_t>(v) - 1])
                throw std::invalid_argument("Permutation: not a bijection on {1..n}");
            seen[static_cast<std::size_t>(v) - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }
    static Permutation longest(int n) { // omega_0
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(word.size()); }
    int operator()(int i) const { return word.at(static_cast<std::size_t>(i) - 1); } // 1-based
    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> w(word.size());
        for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>((*this)(i)) - 1] = i;
        return Permutation(std::move(w));
    }

    // this followed by nothing: swap of one-line positions i, i+1 (this * s_i)
    Permutation swap_positions(int i) const {
        if (i < 1 || i >= size()) throw std::invalid_argument("Permutation: position out of range");
        Permutation p = *this;
        std::swap(p.word[static_cast<std::size_t>(i) - 1], p.word[static_cast<std::size_t>(i)]);
        return p;
    }
    // swap of the values i, i+1 wherever they sit (s_i * this)
    Permutation swap_values(int i) const {
        if (i < 1 || i >= size()) throw std::invalid_argument("Permutation: value out of range");
        Permutation p = *this;
        for (int& v : p.word) {
            if (v == i) v = i + 1;
            else if (v == i + 1) v = i;
        }
        return p;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.word == b.word; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.word < b.word; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(word[i]);
        }
        return s;
    }
    static Permutation parse(const std::string& s);
};

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("parse: bad integer '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("parse: empty list");
    return out;
}

inline Composition Composition::parse(const std::string& s) { return Composition(parse_int_list(s)); }
inline Permutation Permutation::parse(const std::string& s) { return Permutation(parse_int_list(s)); }

// --- basic operations ---------------------------------------------------

// lambda'_j = #{i : lambda_i >= j}; drops trailing zeros
inline Partition conjugate(const Partition& p) {
    int maxpart = 0;
    for (int v : p.parts()) maxpart = std::max(maxpart, v);
    std::vector<int> out;
    for (int j = 1; j <= maxpart; ++j) {
        int count = 0;
        for (int v : p.parts())
            if (v >= j) ++count;
        out.push_back(count);
    }
    return Partition(Composition(std::move(out)));
}

inline Partition revsort(const Composition& c) {
    std::vector<int> p = c.parts;
    std::sort(p.rbegin(), p.rend());
    return Partition(Composition(std::move(p)));
}

// lex-smallest composition with the same order pattern: each part is replaced
// by its rank (from 0) among the distinct part values
inline Composition weak_standardize(const Composition& c) {
    std::vector<int> distinct = c.parts;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> out;
    out.reserve(c.parts.size());
    for (int v : c.parts) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), v);
        out.push_back(static_cast<int>(it - distinct.begin()));
    }
    return Composition(std::move(out));
}

// omega(lambda)_i = lambda_{omega_i}
inline Composition permute_composition(const Permutation& w, const Composition& c) {
    if (w.size() != c.size())
        throw std::invalid_argument("permute_composition: length mismatch");
    std::vector<int> out(c.parts.size());
    for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(i) - 1] = c[w(i) - 1];
    return Composition(std::move(out));
}

inline int perm_length(const Permutation& w) {
    int inv = 0;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

// --- arm/leg ------------------------------------------------------------

struct ArmLeg {
    int arm = 0;
    int leg = 0;
};

// box = (row, column), 1-based, with 1 <= column <= shape[row].
inline ArmLeg arm_leg(const Composition& shape, int row, int column) {
    if (row < 1 || row > shape.size() || column < 1 || column > shape[row - 1])
        throw std::invalid_argument("arm_leg: box outside diagram");
    const int len = shape[row - 1];
    ArmLeg al;
    al.leg = len - column;
    for (int r = row + 1; r <= shape.size(); ++r)
        if (shape[r - 1] <= len && shape[r - 1] >= column) ++al.arm;
    for (int r = 1; r < row; ++r)
        if (shape[r - 1] < len && shape[r - 1] >= column - 1) ++al.arm;
    return al;
}

// --- Bruhat order on permutations ---------------------------------------
//
// Covers are one-line position swaps that increase the length by one (the
// solid edges of the S_4 diagram).  Posets are built once per n by BFS and
// shared read-only afterwards.

class BruhatPoset {
public:
    explicit BruhatPoset(int n) : n_(n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        do {
            index_.emplace(w, static_cast<int>(perms_.size()));
            perms_.push_back(Permutation(w));
        } while (std::next_permutation(w.begin(), w.end()));
        up_.resize(perms_.size());
        reachable_.resize(perms_.size());
        for (std::size_t k = 0; k < perms_.size(); ++k) {
            const Permutation& p = perms_[k];
            int len = perm_length(p);
            for (int i = 1; i < n; ++i) {
                Permutation q = p.swap_positions(i);
                if (perm_length(q) == len + 1) up_[k].push_back(index_.at(q.word));
            }
        }
        // reachability by BFS from each element
        for (std::size_t k = 0; k < perms_.size(); ++k) {
            std::vector<bool> seen(perms_.size(), false);
            std::vector<int> queue{static_cast<int>(k)};
            seen[k] = true;
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                for (int u : up_[static_cast<std::size_t>(v)])
                    if (!seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = true;
                        queue.push_back(u);
                    }
            }
            reachable_[k] = std::move(seen);
        }
    }

    bool leq(const Permutation& u, const Permutation& v) const {
        return reachable_[static_cast<std::size_t>(index_.at(u.word))]
                         [static_cast<std::size_t>(index_.at(v.word))];
    }
    const std::vector<Permutation>& elements() const { return perms_; }
    std::vector<std::pair<Permutation, Permutation>> cover_relations() const {
        std::vector<std::pair<Permutation, Permutation>> covers;
        for (std::size_t k = 0; k < perms_.size(); ++k)
            for (int u : up_[k]) covers.emplace_back(perms_[k], perms_[static_cast<std::size_t>(u)]);
        return covers;
    }

private:
    int n_;
    std::vector<Permutation> perms_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<bool>> reachable_;
};

inline const BruhatPoset& bruhat_poset(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("bruhat_poset: n out of supported range");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<BruhatPoset>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<BruhatPoset>(n)).first;
    return *it->second;
}

inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    return bruhat_poset(u.size()).leq(u, v);
}

// --- Bruhat order on compositions ----------------------------------------
//
// b is reachable from a by adjacent entry swaps, each increasing the number
// of inversions.  Incomparable when the part multisets differ.

inline bool composition_bruhat_leq(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) return false;
    if (!(revsort(a) == revsort(b))) return false;
    if (a == b) return true;
    std::set<std::vector<int>> seen{a.parts};
    std::vector<Composition> frontier{a};
    while (!frontier.empty()) {
        std::vector<Composition> next;
        for (const Composition& c : frontier) {
            int inv = c.inversions();
            for (int i = 1; i < c.size(); ++i) {
                Composition d = c.swapped(i);
                if (d.inversions() != inv + 1) continue;
                if (d == b) return true;
                if (seen.insert(d.parts).second) next.push_back(std::move(d));
            }
        }
        frontier = std::move(next);
    }
    return false;
}

// --- enumeration helpers --------------------------------------------------

inline std::vector<Composition> compositions_of(int total, int length) {
    std::vector<Composition> out;
    std::vector<int> cur(static_cast<std::size_t>(length), 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == length) {
            if (remaining == 0) out.push_back(Composition(cur));
            return;
        }
        if (pos == length - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(Composition(cur));
            cur[static_cast<std::size_t>(pos)] = 0;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    if (length == 0) {
        if (total == 0) out.push_back(Composition(std::vector<int>{}));
        return out;
    }
    rec(0, total);
    return out;
}

inline std::vector<Partition> partitions_of(int total, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.push_back(Partition(Composition(cur)));
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int v = std::min(remaining, maxpart); v >= 1; --v) {
            cur.push_back(v);
            rec(remaining - v, v);
            cur.pop_back();
        }
    };
    rec(total, total == 0 ? 1 : total);
    return out;
}

inline Composition pad_to(const Composition& c, int n) {
    if (c.size() > n) throw std::invalid_argument("pad_to: composition longer than target");
    std::vector<int> p = c.parts;
    p.resize(static_cast<std::size_t>(n), 0);
    return Composition(std::move(p));
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace pbmac
