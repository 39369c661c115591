#include <doctest.h>

#include "vinc/maps.hpp"
#include "vinc/patterns.hpp"
#include "vinc/stats.hpp"

using namespace vinc;

TEST_SUITE_BEGIN("maps");

TEST_CASE("theta_hat on small and worked inputs") {
    CHECK(to_string(theta_hat(parse_permutation("1 2"))) == "2 1");
    CHECK(to_string(theta_hat(parse_permutation("2 1"))) == "1 2");
    CHECK(to_string(theta_hat(parse_permutation("4 7 1 8 6 3 2 5"))) == "3 6 5 2 8 7 1 4");
    CHECK(to_string(theta_hat(parse_permutation("1"))) == "1");
}

TEST_CASE("theta_hat starts with n when n is fixed last") {
    for_each_perm(6, [&](const Permutation& s) {
        if (s(6) == 6) CHECK(theta_hat(s)(1) == 6);
        CHECK(theta_hat(theta_hat(s)) == s);
        return true;
    });
}

TEST_CASE("theta formula and involution") {
    CHECK(to_string(theta(parse_permutation("1"))) == "1");
    CHECK(to_string(theta(parse_permutation("1 2 3"))) == "2 3 1");
    for_each_perm(6, [&](const Permutation& p) {
        CHECK(theta(theta(p)) == p);
        return true;
    });
}

TEST_CASE("theta_hat is theta conjugated by inversion") {
    for (int n = 1; n <= 6; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            CHECK(theta_hat(s) == inverse(theta(inverse(s))));
            return true;
        });
}

TEST_CASE("phi_sz worked example and identities") {
    CHECK(to_string(phi_sz(parse_permutation("4 7 1 8 6 3 2 5"))) == "5 7 1 4 8 2 6 3");
    CHECK(to_string(phi_sz(parse_permutation("1"))) == "1");
    CHECK(phi_sz(Permutation::identity(7)) == Permutation::identity(7));

    CHECK(to_string(phi_sz_inv(parse_permutation("5 7 1 4 8 2 6 3"))) == "4 7 1 8 6 3 2 5");
    CHECK(phi_sz_inv(Permutation::identity(7)) == Permutation::identity(7));
}

TEST_CASE("phi_sz round trip") {
    for (int n = 1; n <= 6; ++n)
        for_each_perm(n, [&](const Permutation& p) {
            CHECK(phi_sz_inv(phi_sz(p)) == p);
            CHECK(phi_sz(phi_sz_inv(p)) == p);
            return true;
        });
}

TEST_CASE("phi_hat involution and statistic exchange") {
    for (int n = 1; n <= 6; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            const Permutation t = phi_hat(s);
            CHECK(phi_hat(t) == s);
            CHECK(vincular_total(VincularStat::V312, s) ==
                  vincular_total(VincularStat::V312, t));
            CHECK(vincular_total(VincularStat::V231, s) ==
                  vincular_total(VincularStat::V213, t));
            return true;
        });
}

TEST_CASE("phi_hat has exactly two fixed points at n = 3") {
    int fixed = 0;
    for_each_perm(3, [&](const Permutation& s) {
        if (phi_hat(s) == s) ++fixed;
        return true;
    });
    CHECK(fixed == 2);
}

TEST_CASE("history route equals biword route") {
    for (int n = 1; n <= 6; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            CHECK(phi_laguerre(s) == phi_hat(s));
            return true;
        });
}

TEST_CASE("phi maps the worked insertion preimage to a Baxter permutation") {
    const Permutation s = parse_permutation("5 3 2 4 7 6 1 8 10 9");
    CHECK(is_baxter(s));
    CHECK(is_baxter(phi_laguerre(s)));
}

TEST_CASE("composite encoding realises theta") {
    for (int n = 1; n <= 6; ++n)
        for_each_perm(n, [&](const Permutation& pi) {
            CHECK(phi_fz_inv(xi(phi_fz(pi))) == theta(pi));
            return true;
        });
}

TEST_CASE("composite encoding of the singleton") {
    const LaguerreHistory w = phi_fz(parse_permutation("1"));
    CHECK(w.size() == 1);
    CHECK(w.steps[0] == Step::Lr);
    CHECK(w.weights[0] == 0);
}

TEST_SUITE_END();
