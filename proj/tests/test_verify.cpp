#include <doctest.h>

#include <json.hpp>

#include "vinc/checked.hpp"
#include "vinc/stats.hpp"
#include "vinc/verify.hpp"

using namespace vinc;
using namespace vinc::verify;

TEST_SUITE_BEGIN("verify");

namespace {

// A deliberately broken copy of the biword map: the rank selection drops its
// "+1" (clamped to stay selectable). The suite must catch it.
Permutation mutated_phi_sz(const Permutation& sigma) {
    const int n = sigma.size();
    if (n == 0) return sigma;
    std::vector<char> in_f(static_cast<std::size_t>(n + 1), 0);
    std::vector<char> in_fp(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i < n; ++i)
        if (sigma(i) > sigma(i + 1)) {
            in_f[static_cast<std::size_t>(sigma(i))] = 1;
            in_fp[static_cast<std::size_t>(sigma(i + 1))] = 1;
        }
    std::vector<int> tau(static_cast<std::size_t>(n + 1), 0);
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    for (int j = 1; j <= n; ++j) {
        if (!in_f[static_cast<std::size_t>(j)]) continue;
        int rank = std::max(1, vincular_coord(VincularStat::V312, j, sigma)); // bug: no +1
        for (int x = j - 1; x >= 1; --x) {
            if (!in_fp[static_cast<std::size_t>(x)] || used[static_cast<std::size_t>(x)]) continue;
            if (--rank == 0) {
                tau[static_cast<std::size_t>(j)] = x;
                used[static_cast<std::size_t>(x)] = 1;
                break;
            }
        }
        internal_check(rank == 0, "mutant ran out of candidates");
    }
    std::fill(used.begin(), used.end(), 0);
    for (int j = n; j >= 1; --j) {
        if (in_f[static_cast<std::size_t>(j)]) continue;
        int rank = std::max(1, vincular_coord(VincularStat::V312, j, sigma)); // bug: no +1
        for (int y = j; y <= n; ++y) {
            if (in_fp[static_cast<std::size_t>(y)] || used[static_cast<std::size_t>(y)]) continue;
            if (--rank == 0) {
                tau[static_cast<std::size_t>(j)] = y;
                used[static_cast<std::size_t>(y)] = 1;
                break;
            }
        }
        internal_check(rank == 0, "mutant ran out of candidates");
    }
    return Permutation(std::vector<int>(tau.begin() + 1, tau.end()));
}

nlohmann::json strip_ms(const CheckReport& r) {
    auto j = nlohmann::json::parse(report_to_json(r));
    j.erase("ms");
    return j;
}

} // namespace

TEST_CASE("registry lists the expected checks") {
    const auto& checks = list_checks();
    CHECK(checks.size() >= 20);
    auto has = [&](const char* id) {
        for (const auto& c : checks)
            if (c.id == id) return true;
        return false;
    };
    CHECK(has("thm-1-3"));
    CHECK(has("lem-3-8"));
    CHECK(has("ex-2-2"));
    CHECK(has("qn-tables"));
    CHECK(has("roundtrips"));
    for (const auto& c : checks) {
        CHECK(!c.claim.empty());
        CHECK(c.default_lo >= c.cap_lo);
        CHECK(c.default_hi <= c.cap_hi);
    }
}

TEST_CASE("golden example check passes with one item") {
    const CheckReport r = run_check("ex-2-2", 8, 8, 1);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.items_checked == 1);
    CHECK(!r.counterexample.has_value());
}

TEST_CASE("unknown check id is rejected") {
    CHECK_THROWS_AS(run_check("no-such-check", 1, 5, 1), std::invalid_argument);
}

TEST_CASE("out-of-cap ranges are skipped with a reason") {
    const CheckReport r = run_check("thm-1-3", 1, 11, 1);
    CHECK(r.status == CheckStatus::Skipped);
    CHECK(r.items_checked == 0);
    CHECK(!r.skip_reason.empty());
    const CheckReport golden = run_check("ex-2-2", 3, 5, 1);
    CHECK(golden.status == CheckStatus::Skipped);
}

TEST_CASE("small ranges pass quickly") {
    for (const char* id : {"thm-1-3", "thm-2-3", "eq-2-13", "lem-2-1", "eq-hattheta"}) {
        const CheckReport r = run_check(id, 1, 5, 2);
        CHECK(r.status == CheckStatus::Pass);
        CHECK(r.items_checked == 1 + 2 + 6 + 24 + 120);
    }
}

TEST_CASE("reports are identical for any worker count") {
    for (const char* id : {"thm-2-3", "claesson", "def-3-4-involution", "roundtrips"}) {
        const CheckReport one = run_check(id, 1, 6, 1);
        const CheckReport four = run_check(id, 1, 6, 4);
        CHECK(one.status == CheckStatus::Pass);
        CHECK(strip_ms(one) == strip_ms(four));
    }
}

TEST_CASE("mutated biword map is caught at small n") {
    const CheckReport r = run_lem_2_1_with(mutated_phi_sz, 1, 6, 2);
    CHECK(r.status == CheckStatus::Fail);
    REQUIRE(r.counterexample.has_value());
    CHECK(!r.counterexample->witness.empty());

    // The failure report is itself deterministic across worker counts.
    const CheckReport again = run_lem_2_1_with(mutated_phi_sz, 1, 6, 1);
    CHECK(strip_ms(r) == strip_ms(again));

    // And the genuine map passes the same range.
    const CheckReport good = run_check("lem-2-1", 1, 6, 2);
    CHECK(good.status == CheckStatus::Pass);

    // Failing reports render their counterexample in both formats.
    const std::string text = report_to_text(r);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("witness:") != std::string::npos);
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j.at("status") == "FAIL");
    CHECK(j.at("counterexample").contains("expected"));
}

TEST_CASE("report JSON carries the schema fields") {
    const CheckReport r = run_check("eq-2-9", 1, 4, 1);
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j.at("check") == "eq-2-9");
    CHECK(j.at("range") == nlohmann::json({1, 4}));
    CHECK(j.at("status") == "PASS");
    CHECK(j.at("items") == 1 + 2 + 6 + 24);
    CHECK(j.contains("ms"));
    CHECK(!j.contains("counterexample"));
}

TEST_CASE("report text lines carry status and counts") {
    const CheckReport r = run_check("eq-2-9", 1, 4, 1);
    const std::string line = report_to_text(r);
    CHECK(line.find("eq-2-9") != std::string::npos);
    CHECK(line.find("PASS") != std::string::npos);
    CHECK(line.find("33 items") != std::string::npos);
}

TEST_SUITE_END();
