#include <doctest.h>

#include "vinc/stats.hpp"

using namespace vinc;

TEST_SUITE_BEGIN("stats");

namespace {

// Literal set-builder oracles, independent of the library path (quadruple
// loops over raw letter vectors).
long oracle_vincular_total(VincularStat stat, const Permutation& s) {
    const int n = s.size();
    long total = 0;
    for (int l = 1; l <= n; ++l) {
        const int pos = s.position_of(l);
        for (int j = 1; j <= n; ++j) {
            bool hit = false;
            switch (stat) {
            case VincularStat::V213:
                hit = pos < j && j < n && s(j) < l && l < s(j + 1);
                break;
            case VincularStat::V231:
                hit = pos < j && j < n && s(j + 1) < l && l < s(j);
                break;
            case VincularStat::V312:
                hit = 1 < j && j < pos && s(j) < l && l < s(j - 1);
                break;
            case VincularStat::V132:
                hit = 1 < j && j < pos && s(j - 1) < l && l < s(j);
                break;
            }
            if (hit) ++total;
        }
    }
    return total;
}

} // namespace

TEST_CASE("coordinate rows of the worked example") {
    const Permutation sigma = parse_permutation("4 7 1 8 6 3 2 5");
    const int row312[8] = {0, 0, 0, 0, 1, 1, 1, 2};
    const int row231[8] = {2, 1, 0, 0, 0, 0, 0, 0};
    for (int col = 1; col <= 8; ++col) {
        CHECK(vincular_coord(VincularStat::V312, sigma(col), sigma) == row312[col - 1]);
        CHECK(vincular_coord(VincularStat::V231, sigma(col), sigma) == row231[col - 1]);
    }
    CHECK(vincular_coord(VincularStat::V312, 5, sigma) == 2);
    CHECK(vincular_coord(VincularStat::V231, 4, sigma) == 2);
    CHECK(vincular_total(VincularStat::V312, sigma) == 5);
    CHECK(vincular_total(VincularStat::V231, sigma) == 3);
}

TEST_CASE("identity has no vincular occurrrences") {
    const Permutation id = Permutation::identity(7);
    for (VincularStat stat :
         {VincularStat::V213, VincularStat::V231, VincularStat::V312, VincularStat::V132}) {
        CHECK(vincular_total(stat, id) == 0);
        for (int l = 1; l <= 7; ++l) CHECK(vincular_coord(stat, l, id) == 0);
    }
}

TEST_CASE("vincular totals match the literal oracle exhaustively") {
    for (int n = 0; n <= 6; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            for (VincularStat stat : {VincularStat::V213, VincularStat::V231,
                                      VincularStat::V312, VincularStat::V132})
                CHECK(vincular_total(stat, s) == oracle_vincular_total(stat, s));
            return true;
        });
}

TEST_CASE("cros and nest coordinates of the worked example") {
    const Permutation tau = parse_permutation("5 7 1 4 8 2 6 3");
    const int rowcros[8] = {2, 0, 0, 0, 0, 1, 1, 1};
    const int rownest[8] = {0, 1, 0, 2, 0, 0, 0, 0};
    for (int col = 1; col <= 8; ++col) {
        CHECK(cros_coord(tau, tau(col)) == rowcros[col - 1]);
        CHECK(nest_coord(tau, tau(col)) == rownest[col - 1]);
    }
    // The table is letter-indexed: its first column shows the coordinate of
    // the letter 5 sitting there.
    CHECK(cros_coord(tau, 5) == 2);
    CHECK(nest_coord(tau, 4) == 2);

    const Permutation id = Permutation::identity(6);
    for (int i = 1; i <= 6; ++i) CHECK(cros_coord(id, i) == 0);
}

TEST_CASE("cros and nest totals of the pictorial example") {
    const Permutation s = parse_permutation("9 3 7 4 6 11 2 8 10 1 5");
    CHECK(cros_total(s) == 7);
    CHECK(nest_total(s) == 10);
}

TEST_CASE("ecr vanishes when n is a fixed point at the end") {
    for_each_perm(6, [&](const Permutation& s) {
        if (s(6) == 6) CHECK(ecr(s) == 0);
        return true;
    });
}

TEST_CASE("crossing and nesting decompositions") {
    for (int n = 0; n <= 6; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            CHECK(cros_total(s) == ecr(s) + ucr(s) + lcr(s));
            CHECK(nest_total(s) == ene(s) + une(s) + lne(s));
            CHECK(nest_tilde(s) == ene_tilde(s) + une(s) + lne(s));
            return true;
        });
}

TEST_CASE("set statistics") {
    CHECK(aba_set(Permutation::identity(5)).empty());
    // The literal definition of Dtb compares against the last letter; in a
    // decreasing word that letter is 1, so nothing qualifies.
    CHECK(dtb_set(parse_permutation("5 4 3 2 1")).empty());
    CHECK(aba_set(parse_permutation("5 4 3 2 1")).empty());

    const Permutation pi = parse_permutation("4 7 1 8 6 3 2 5");
    CHECK(aba_set(pi).empty());
    CHECK(dtb_set(pi) == std::vector<int>{3});

    const Permutation tau = parse_permutation("5 7 1 4 8 2 6 3");
    CHECK(ene_set(tau).empty());
    CHECK(ene_tilde_set(tau) == std::vector<int>{3});
}

TEST_CASE("set sizes agree with the pair counts") {
    for (int n = 0; n <= 6; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            CHECK(static_cast<long>(ene_set(s).size()) == ene(s));
            CHECK(static_cast<long>(ene_tilde_set(s).size()) == ene_tilde(s));
            return true;
        });
}

TEST_CASE("difference identity between 213 and 231") {
    for (int n = 0; n <= 7; ++n)
        for_each_perm(n, [&](const Permutation& pi) {
            const long lhs = vincular_total(VincularStat::V213, pi);
            const long rhs = vincular_total(VincularStat::V231, pi) -
                             static_cast<long>(aba_set(pi).size()) +
                             static_cast<long>(dtb_set(pi).size());
            CHECK(lhs == rhs);
            return true;
        });
}

TEST_CASE("letter out of range is rejected") {
    const Permutation p = parse_permutation("2 1 3");
    CHECK_THROWS_AS((void)vincular_coord(VincularStat::V213, 4, p), std::out_of_range);
    CHECK_THROWS_AS((void)cros_coord(p, 0), std::out_of_range);
    CHECK_THROWS_AS((void)crossnest_coord(CrossNestKind::Ecr, 1, p), std::invalid_argument);
}

TEST_SUITE_END();
