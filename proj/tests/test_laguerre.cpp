#include <doctest.h>

#include "vinc/laguerre.hpp"
#include "vinc/patterns.hpp"
#include "vinc/poly.hpp"

using namespace vinc;

TEST_SUITE_BEGIN("laguerre");

namespace {

LaguerreHistory worked_history() {
    return parse_history("UUBRDBDRUD", "0,1,2,1,2,1,1,0,0,1");
}

} // namespace

TEST_CASE("validation derives the height profile") {
    const LaguerreHistory w = worked_history();
    CHECK(w.heights == std::vector<int>{0, 1, 2, 2, 2, 1, 1, 0, 0, 1});

    const LaguerreHistory single = parse_history("R", "0");
    CHECK(single.size() == 1);
    CHECK(single.heights == std::vector<int>{0});
}

TEST_CASE("validation rejects each violation kind with its index") {
    try {
        parse_history("B", "1");
        FAIL("expected weight-above-height");
    } catch (const HistoryError& e) {
        CHECK(e.kind() == HistoryError::Kind::WeightAboveHeight);
        CHECK(e.index() == 1);
    }
    try {
        parse_history("UD", "0,0");
        FAIL("expected weight-below-floor");
    } catch (const HistoryError& e) {
        CHECK(e.kind() == HistoryError::Kind::WeightBelowFloor);
        CHECK(e.index() == 2);
    }
    try {
        parse_history("DU", "1,0");
        FAIL("expected negative path");
    } catch (const HistoryError& e) {
        CHECK(e.kind() == HistoryError::Kind::PathNegative);
        CHECK(e.index() == 1);
    }
    try {
        parse_history("UU", "0,1");
        FAIL("expected unclosed path");
    } catch (const HistoryError& e) {
        CHECK(e.kind() == HistoryError::Kind::PathNotClosed);
    }
    try {
        make_history_checked({Step::U, Step::D}, {0, 0}, {0, 1});
        FAIL("expected height mismatch");
    } catch (const HistoryError& e) {
        CHECK(e.kind() == HistoryError::Kind::HeightMismatch);
        CHECK(e.index() == 2);
    }
}

TEST_CASE("critical step") {
    CHECK(critical_step(worked_history()) == 9);
    CHECK(critical_step(parse_history("R", "0")) == 1);
    CHECK(critical_step(parse_history("RRR", "0,0,0")) == 3);
}

TEST_CASE("prudence") {
    CHECK(is_prudent(worked_history()));
    CHECK(is_prudent(parse_history("R", "0")));
    CHECK_FALSE(is_prudent(parse_history("UUDD", "0,0,2,1")));
}

TEST_CASE("insertion decoding of the worked history") {
    CHECK(to_string(fv_inverse(worked_history())) == "5 3 2 4 7 6 1 8 10 9");
    CHECK(to_string(fv_inverse(parse_history("R", "0"))) == "1");
    CHECK(to_string(fv_inverse(parse_history("URD", "0,1,1"))) == "2 3 1");
    CHECK(fv_inverse(LaguerreHistory{}).size() == 0);
}

TEST_CASE("encoding of the worked permutation") {
    const LaguerreHistory w = fv_forward(parse_permutation("5 3 2 4 7 6 1 8 10 9"));
    CHECK(steps_to_string(w) == "UUBRDBDRUD");
    CHECK(weights_to_string(w) == "0,1,2,1,2,1,1,0,0,1");
    CHECK(to_string(fv_forward(parse_permutation("1"))) == "R / 0");
}

TEST_CASE("encoding and decoding are mutually inverse") {
    for (int n = 0; n <= 7; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            CHECK(fv_inverse(fv_forward(s)) == s);
            return true;
        });
    for (int n = 0; n <= 6; ++n)
        for_each_history(n, false, [&](const LaguerreHistory& w) {
            CHECK(fv_forward(fv_inverse(w)) == w);
            return true;
        });
}

TEST_CASE("xi fixes the singleton") {
    const LaguerreHistory w = parse_history("R", "0");
    CHECK(xi(w) == w);
}

TEST_CASE("xi image of the worked history") {
    const LaguerreHistory v = xi(worked_history());
    CHECK(critical_step(v) == 2);
    CHECK(steps_to_string(v) == "RUBRUUDRDD");
    CHECK(v.weights == std::vector<int>{0, 0, 1, 1, 1, 2, 2, 2, 2, 1});
    CHECK(is_prudent(v));
    CHECK(xi(v) == worked_history());
}

TEST_CASE("xi is an involution with mirrored critical step") {
    for (int n = 0; n <= 6; ++n)
        for_each_history(n, false, [&](const LaguerreHistory& w) {
            const LaguerreHistory v = xi(w);
            CHECK(xi(v) == w);
            if (n >= 1) CHECK(critical_step(v) == n + 1 - critical_step(w));
            return true;
        });
}

TEST_CASE("xi preserves prudence") {
    for (int n = 1; n <= 7; ++n)
        for_each_history(n, true, [&](const LaguerreHistory& w) {
            CHECK(is_prudent(xi(w)));
            return true;
        });
}

TEST_CASE("history counts: n! in full, Baxter numbers when prudent") {
    for (int n = 0; n <= 6; ++n) CHECK(count_histories(n, false) == factorial(n));
    for (int n = 1; n <= 7; ++n)
        CHECK(count_histories(n, true) == static_cast<std::uint64_t>(baxter_number(n)));
}

TEST_CASE("first weight is always zero and floors hold") {
    for_each_history(6, false, [&](const LaguerreHistory& w) {
        CHECK(w.weights[0] == 0);
        for (int i = 1; i <= w.size(); ++i) {
            const int floor = is_up_class(w.steps[static_cast<std::size_t>(i - 1)]) ? 0 : 1;
            CHECK(w.weights[static_cast<std::size_t>(i - 1)] >= floor);
            CHECK(w.weights[static_cast<std::size_t>(i - 1)] <=
                  w.heights[static_cast<std::size_t>(i - 1)]);
        }
        return true;
    });
}

TEST_CASE("prudent histories decode exactly to Baxter permutations") {
    for (int n = 1; n <= 6; ++n)
        for_each_perm(n, [&](const Permutation& s) {
            CHECK(is_baxter(s) == is_prudent(fv_forward(s)));
            return true;
        });
}

TEST_CASE("prefix blocks tile the enumeration in order") {
    for (bool prudent : {false, true}) {
        std::vector<std::string> whole;
        for_each_history(5, prudent, [&](const LaguerreHistory& w) {
            whole.push_back(to_string(w));
            return true;
        });
        std::vector<std::string> tiled;
        for (const auto& prefix : history_prefixes(5, prudent))
            for_each_history_with_prefix(5, prudent, prefix, [&](const LaguerreHistory& w) {
                tiled.push_back(to_string(w));
                return true;
            });
        CHECK(whole == tiled);
    }
}

TEST_CASE("enumeration caps are enforced") {
    CHECK_THROWS_AS(count_histories(11, false), std::invalid_argument);
    CHECK_THROWS_AS(count_histories(13, true), std::invalid_argument);
}

TEST_SUITE_END();
