#include <doctest.h>

#include "vinc/patterns.hpp"

using namespace vinc;

TEST_SUITE_BEGIN("patterns");

namespace {

// Brute-force oracle: checks every k-subset of positions directly.
long oracle_count(const PatternDescriptor& d, const Permutation& s) {
    const int n = s.size();
    const int k = d.length();
    if (k > n) return 0;
    std::vector<int> idx(static_cast<std::size_t>(k));
    long count = 0;
    // Odometer over increasing index tuples.
    for (int t = 0; t < k; ++t) idx[static_cast<std::size_t>(t)] = t + 1;
    for (;;) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k && ok; ++b) {
                const bool pat_less = d.letters[static_cast<std::size_t>(a)] <
                                      d.letters[static_cast<std::size_t>(b)];
                ok = pat_less == (s(idx[static_cast<std::size_t>(a)]) <
                                  s(idx[static_cast<std::size_t>(b)]));
            }
        for (int t = 1; t < k && ok; ++t)
            if (d.pos_adjacent & (1u << t))
                ok = idx[static_cast<std::size_t>(t)] == idx[static_cast<std::size_t>(t - 1)] + 1;
        for (int v = 1; v < k && ok; ++v)
            if (d.val_adjacent & (1u << v)) {
                int pos_v = 0, pos_v1 = 0;
                for (int t = 0; t < k; ++t) {
                    if (d.letters[static_cast<std::size_t>(t)] == v)
                        pos_v = idx[static_cast<std::size_t>(t)];
                    if (d.letters[static_cast<std::size_t>(t)] == v + 1)
                        pos_v1 = idx[static_cast<std::size_t>(t)];
                }
                ok = s(pos_v1) == s(pos_v) + 1;
            }
        if (ok) ++count;
        int t = k - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - (k - 1 - t)) --t;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < k; ++u)
            idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
    return count;
}

} // namespace

TEST_CASE("single occurrence of the underlined decreasing pattern") {
    const PatternDescriptor d = PatternDescriptor::parse("4321 u12");
    CHECK(count_occurrences(d, parse_permutation("5 3 4 2 6 1")) == 1);
    // Without the underline there are more occurrences.
    const PatternDescriptor plain = PatternDescriptor::parse("4321");
    CHECK(count_occurrences(plain, parse_permutation("5 3 4 2 6 1")) == 2);
}

TEST_CASE("value-adjacent pattern misses monotone input") {
    const PatternDescriptor d = PatternDescriptor::parse("2413 o2");
    CHECK(count_occurrences(d, Permutation::identity(8)) == 0);
}

TEST_CASE("vincular count never exceeds the plain count") {
    const PatternDescriptor vinc_pat = PatternDescriptor::parse("3142 u12");
    const PatternDescriptor plain = PatternDescriptor::parse("3142");
    for_each_perm(6, [&](const Permutation& s) {
        CHECK(count_occurrences(vinc_pat, s) <= count_occurrences(plain, s));
        return true;
    });
}

TEST_CASE("matcher agrees with the subset oracle") {
    const PatternDescriptor descriptors[] = {
        PatternDescriptor::parse("3142 u23"), PatternDescriptor::parse("2413 u23"),
        PatternDescriptor::parse("2413 o2"),  PatternDescriptor::parse("3142 o2"),
        PatternDescriptor::parse("321 u12"),  PatternDescriptor::parse("21"),
        PatternDescriptor::parse("1234"),     PatternDescriptor::parse("132 o1"),
    };
    for (int n = 1; n <= 6; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            for (const auto& d : descriptors) {
                const long expected = oracle_count(d, s);
                CHECK(count_occurrences(d, s) == expected);
                CHECK(contains_pattern(d, s) == (expected > 0));
            }
            return true;
        });
}

TEST_CASE("known Baxter and non-Baxter words") {
    CHECK(is_baxter(parse_permutation("4 3 6 9 7 5 1 2 8")));
    CHECK_FALSE(is_baxter(parse_permutation("4 2 1 7 3 8 5 6")));
    CHECK(is_baxter(Permutation::identity(9)));
    CHECK_FALSE(is_baxter(parse_permutation("2 4 1 3")));
    CHECK_FALSE(is_baxter(parse_permutation("3 1 4 2")));
}

TEST_CASE("all short permutations are Baxter") {
    for (int n = 0; n <= 3; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            CHECK(is_baxter(s));
            CHECK(is_baxter_dual(s));
            return true;
        });
}

TEST_CASE("dual characterisation agrees exhaustively") {
    for (int n = 4; n <= 7; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            CHECK(is_baxter(s) == is_baxter_dual(s));
            return true;
        });
}

TEST_CASE("Baxter set is closed under the classical symmetries") {
    for (int n = 4; n <= 8; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            const bool b = is_baxter(s);
            CHECK(b == is_baxter(inverse(s)));
            CHECK(b == is_baxter(reverse(s)));
            CHECK(b == is_baxter(complement(s)));
            return true;
        });
}

TEST_CASE("pattern grammar errors") {
    CHECK_THROWS_AS(PatternDescriptor::parse("35124"), ParseError); // too long
    CHECK_THROWS_AS(PatternDescriptor::parse("3142 u2"), ParseError);
    CHECK_THROWS_AS(PatternDescriptor::parse("3142 u13"), ParseError);
    CHECK_THROWS_AS(PatternDescriptor::parse("3142 o4"), ParseError);
    CHECK_THROWS_AS(PatternDescriptor::parse("3142 z2"), ParseError);
    CHECK_THROWS_AS(PatternDescriptor::parse("3132"), ParseError);
    CHECK_THROWS_AS(PatternDescriptor::parse(""), ParseError);
}

TEST_CASE("patterns longer than the text count zero") {
    CHECK(count_occurrences(PatternDescriptor::parse("3142 u23"), parse_permutation("1 2")) == 0);
}

TEST_SUITE_END();
