#include "latwalk/composition.hpp"

#include "latwalk/rational.hpp"

#include <doctest.h>

#include <set>

using namespace latwalk;

namespace {

std::vector<std::vector<int>> collect(int total, int slots,
                                      void (*gen)(int, int,
                                                  const std::function<void(const std::vector<int>&)>&)) {
    std::vector<std::vector<int>> out;
    gen(total, slots, [&](const std::vector<int>& v) { out.push_back(v); });
    return out;
}

} // namespace

TEST_CASE("composition struct basics") {
    Composition c({2, 0, 1});
    CHECK(c.slots() == 3);
    CHECK(c.total() == 3);
    CHECK(!c.all_positive());
    CHECK(c.class_key() == std::vector<int>{2, 1, 0});
    CHECK(Composition({1, 1}).all_positive());
    CHECK_THROWS_AS(Composition({}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({1, -1}), std::invalid_argument);
}

TEST_CASE("weak composition enumeration") {
    auto all = collect(3, 2, for_each_composition);
    REQUIRE(all.size() == 4);
    std::set<std::vector<int>> seen(all.begin(), all.end());
    CHECK(seen.count({3, 0}));
    CHECK(seen.count({2, 1}));
    CHECK(seen.count({1, 2}));
    CHECK(seen.count({0, 3}));

    for (int total = 0; total <= 6; ++total)
        for (int slots = 1; slots <= 4; ++slots) {
            auto v = collect(total, slots, for_each_composition);
            CHECK(BigInt(v.size()) == binomial(total + slots - 1, slots - 1));
            std::set<std::vector<int>> uniq(v.begin(), v.end());
            CHECK(uniq.size() == v.size()); // no repeats
            for (const auto& parts : v) {
                int s = 0;
                for (int p : parts) s += p;
                CHECK(s == total);
            }
        }
}

TEST_CASE("positive composition enumeration") {
    for (int total = 0; total <= 6; ++total)
        for (int slots = 1; slots <= 4; ++slots) {
            auto v = collect(total, slots, for_each_positive_composition);
            CHECK(BigInt(v.size()) == binomial(total - 1, slots - 1));
            for (const auto& parts : v) CHECK(Composition(parts).all_positive());
        }
}

TEST_CASE("suffix dominance predicate") {
    CHECK(is_suffix_dominant({1}));
    CHECK(is_suffix_dominant({2}));
    CHECK(is_suffix_dominant({1, 1}));
    CHECK(is_suffix_dominant({0, 2}));
    CHECK(!is_suffix_dominant({2, 0}));
    CHECK(!is_suffix_dominant({1, 0}));
    CHECK(is_suffix_dominant({0, 1, 3}));
    CHECK(!is_suffix_dominant({1, 3, 0}));
    CHECK(is_suffix_dominant({0, 3, 1}));
    CHECK(!is_suffix_dominant({2, 0, 1, 1})); // suffix (0,1,1) covers only 2 of 3
}

TEST_CASE("suffix dominant enumeration matches the filtered weak one") {
    for (int total = 0; total <= 8; ++total)
        for (int slots = 1; slots <= 5; ++slots) {
            std::vector<std::vector<int>> filtered;
            for_each_composition(total, slots, [&](const std::vector<int>& v) {
                if (is_suffix_dominant(v)) filtered.push_back(v);
            });
            std::vector<std::vector<int>> direct;
            for_each_suffix_dominant_composition(total, slots,
                                                 [&](const std::vector<int>& v) {
                                                     direct.push_back(v);
                                                 });
            std::set<std::vector<int>> a(filtered.begin(), filtered.end());
            std::set<std::vector<int>> b(direct.begin(), direct.end());
            CHECK(a == b);
            CHECK(direct.size() == filtered.size());
        }
    // weight 2 over two slots: only (1,1) and (0,2) survive
    auto v = collect(2, 2, for_each_suffix_dominant_composition);
    std::set<std::vector<int>> s(v.begin(), v.end());
    CHECK(s == std::set<std::vector<int>>{{1, 1}, {0, 2}});
}

TEST_CASE("sign sequences") {
    int count = 0;
    std::set<std::vector<int>> seen;
    for_each_sign_sequence(3, [&](const SignSequence& s) {
        ++count;
        REQUIRE(s.eps.size() == 3);
        for (int e : s.eps) CHECK((e == -1 || e == 0 || e == 1));
        CHECK(s.plus_count() + s.minus_count() + s.zero_count() == 3);
        seen.insert(s.eps);
    });
    CHECK(count == 27);
    CHECK(seen.size() == 27);
}
