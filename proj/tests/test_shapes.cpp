#include "pbmac/shapes.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pbmac;

namespace {

Composition C(std::vector<int> v) { return Composition(std::move(v)); }
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

// independent conjugate oracle: count diagram cells column by column
Partition conjugate_by_counting(const Partition& p) {
    std::vector<int> cols;
    for (int j = 1;; ++j) {
        int cnt = 0;
        for (int v : p.parts())
            if (v >= j) ++cnt;
        if (cnt == 0) break;
        cols.push_back(cnt);
    }
    return Partition(Composition(std::move(cols)));
}

} // namespace

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({std::vector<int>{2, 1, 0}})) == Partition({std::vector<int>{2, 1}}));
    CHECK(conjugate(Partition({std::vector<int>{0, 0, 0}})).size() == 0);
    CHECK(conjugate(Partition({std::vector<int>{3, 2, 2}})) == Partition({std::vector<int>{3, 3, 1}}));

    for (int d = 0; d <= 6; ++d)
        for (const Partition& mu : partitions_of(d, 6)) {
            CHECK(conjugate(mu) == conjugate_by_counting(mu));
            CHECK(conjugate(conjugate(mu)) == Partition(Composition(
                      [&] { // strip trailing zeros for the involution statement
                          std::vector<int> v;
                          for (int x : mu.parts())
                              if (x > 0) v.push_back(x);
                          return v;
                      }())));
        }
}

TEST_CASE("revsort") {
    CHECK(revsort(C({2, 0, 1, 4, 9})) == Partition({std::vector<int>{9, 4, 2, 1, 0}}));
    CHECK(revsort(C({1, 1, 1})) == Partition({std::vector<int>{1, 1, 1}}));
    Partition p({std::vector<int>{3, 1, 0}});
    CHECK(revsort(p.comp) == p);
}

TEST_CASE("weak standardization") {
    CHECK(weak_standardize(C({6, 2, 5, 2, 3, 3})) == C({3, 0, 2, 0, 1, 1}));
    CHECK(weak_standardize(C({0, 0, 0})) == C({0, 0, 0}));
    CHECK(weak_standardize(C({5, 5, 5})) == C({0, 0, 0}));

    // idempotent and order-pattern preserving in both directions, exhaustively
    for (const Composition& c : [] {
             std::vector<Composition> all;
             for (int n = 1; n <= 4; ++n) {
                 std::vector<int> cur(static_cast<std::size_t>(n));
                 std::function<void(int)> rec = [&](int pos) {
                     if (pos == n) {
                         all.push_back(Composition(cur));
                         return;
                     }
                     for (int v = 0; v <= 4; ++v) {
                         cur[static_cast<std::size_t>(pos)] = v;
                         rec(pos + 1);
                     }
                 };
                 rec(0);
             }
             return all;
         }()) {
        Composition w = weak_standardize(c);
        CHECK(weak_standardize(w) == w);
        for (int i = 0; i < c.size(); ++i)
            for (int j = 0; j < c.size(); ++j) {
                CHECK((c[i] <= c[j]) == (w[i] <= w[j]));
            }
    }
}

TEST_CASE("permutation action on compositions") {
    CHECK(permute_composition(P({2, 4, 3, 1}), C({5, 3, 1, 0})) == C({3, 0, 1, 5}));
    Composition c({std::vector<int>{4, 2, 2, 0}});
    CHECK(permute_composition(Permutation::identity(4), c) == c);
    Permutation s1 = Permutation::identity(4).swap_positions(1);
    CHECK(permute_composition(s1, permute_composition(s1, c)) == c);
    CHECK_THROWS_AS(permute_composition(P({1, 2}), c), std::invalid_argument);
}

TEST_CASE("permutation length") {
    CHECK(perm_length(P({1, 2, 3, 4})) == 0);
    CHECK(perm_length(P({4, 3, 2, 1})) == 6);
    CHECK(perm_length(P({3, 1, 2, 4})) == 2);
}

TEST_CASE("bruhat order basics") {
    const Permutation id4 = Permutation::identity(4);
    const Permutation w0 = Permutation::longest(4);
    for (const Permutation& w : all_permutations(4)) {
        CHECK(bruhat_leq(id4, w));
        CHECK(bruhat_leq(w, w0));
    }
    CHECK(bruhat_leq(P({2, 1, 4, 3}), P({2, 4, 1, 3})));
    CHECK_THROWS_AS(bruhat_leq(P({1, 2}), P({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("bruhat covers reproduce the S4 diagram") {
    // the solid (elementary transposition) edges of the S4 order diagram
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"1234", "1243"}, {"1234", "1324"}, {"1234", "2134"}, {"1243", "1423"}, {"1243", "2143"},
        {"1324", "1342"}, {"1324", "3124"}, {"1342", "1432"}, {"1342", "3142"}, {"1423", "1432"},
        {"1423", "4123"}, {"1432", "4132"}, {"2134", "2143"}, {"2134", "2314"}, {"2143", "2413"},
        {"2314", "2341"}, {"2314", "3214"}, {"2341", "2431"}, {"2341", "3241"}, {"2413", "2431"},
        {"2413", "4213"}, {"2431", "4231"}, {"3124", "3142"}, {"3124", "3214"}, {"3142", "3412"},
        {"3214", "3241"}, {"3241", "3421"}, {"3412", "3421"}, {"3412", "4312"}, {"3421", "4321"},
        {"4123", "4132"}, {"4123", "4213"}, {"4132", "4312"}, {"4213", "4231"}, {"4231", "4321"},
        {"4312", "4321"}};
    auto key = [](const Permutation& p) {
        std::string s;
        for (int v : p.word) s += std::to_string(v);
        return s;
    };
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& [lo, hi] : bruhat_poset(4).cover_relations()) got.emplace(key(lo), key(hi));
    std::set<std::pair<std::string, std::string>> want(expected.begin(), expected.end());
    CHECK(got == want);
    CHECK(got.size() == 36);
}

TEST_CASE("bruhat order on compositions") {
    Composition asc({std::vector<int>{0, 1, 2}});
    Composition desc({std::vector<int>{2, 1, 0}});
    CHECK(composition_bruhat_leq(asc, desc));
    CHECK(!composition_bruhat_leq(desc, asc));
    CHECK(composition_bruhat_leq(asc, asc));
    CHECK(!composition_bruhat_leq(C({1, 0}), C({2, 0})));
}

TEST_CASE("arm and leg of the worked diagram") {
    Composition shape({std::vector<int>{4, 1, 0, 5, 3, 1, 4}});
    CHECK(arm_leg(shape, 4, 2).arm == 4);
    CHECK(arm_leg(shape, 4, 2).leg == 3);
    CHECK(arm_leg(shape, 4, 1).arm == 6);

    const std::vector<std::vector<int>> arm_table = {
        {4, 2, 2, 1}, {1}, {}, {6, 4, 3, 2, 1}, {3, 1, 0}, {1}, {4, 3, 1, 1}};
    for (int r = 1; r <= shape.size(); ++r)
        for (int c = 1; c <= shape[r - 1]; ++c)
            CHECK(arm_leg(shape, r, c).arm ==
                  arm_table[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1]);

    for (int r = 1; r <= shape.size(); ++r)
        if (shape[r - 1] > 0) CHECK(arm_leg(shape, r, shape[r - 1]).leg == 0);

    CHECK_THROWS_AS(arm_leg(shape, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(arm_leg(shape, 1, 5), std::invalid_argument);
}

TEST_CASE("parsing") {
    CHECK(Composition::parse("2,0,1") == C({2, 0, 1}));
    CHECK(Permutation::parse("3,1,2") == P({3, 1, 2}));
    CHECK_THROWS_AS(Permutation::parse("1,1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("2,-1"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("a,b"), std::exception);
}
