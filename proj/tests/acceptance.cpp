// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Each criterion bundles registered checks at pinned ranges; the final one
// replays the whole registry at three worker counts and insists the reports
// agree byte for byte once timing is stripped.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "vinc/verify.hpp"

using vinc::verify::CheckReport;
using vinc::verify::CheckStatus;

namespace {

int g_jobs = 0;
bool g_all_ok = true;

struct Criterion {
    const char* label;
    std::vector<std::tuple<const char*, int, int>> checks; // id, lo, hi
};

bool run_bundle(const Criterion& c, std::string& detail) {
    for (const auto& [id, lo, hi] : c.checks) {
        const CheckReport r = vinc::verify::run_check(id, lo, hi, g_jobs);
        if (r.status != CheckStatus::Pass) {
            detail = std::string(id) + " " + vinc::verify::status_name(r.status);
            if (r.counterexample)
                detail += " at " + r.counterexample->witness +
                          " (expected " + r.counterexample->expected + ", got " +
                          r.counterexample->actual + ")";
            if (!r.skip_reason.empty()) detail += " (" + r.skip_reason + ")";
            return false;
        }
    }
    return true;
}

void report(int index, const char* label, bool ok, double seconds, const std::string& detail) {
    std::printf("[%2d/15] %-58s %s (%.1f s)\n", index, label, ok ? "PASS" : "FAIL", seconds);
    if (!ok && !detail.empty()) std::printf("        %s\n", detail.c_str());
    if (!ok) g_all_ok = false;
    std::fflush(stdout);
}

std::string normalised_reports(const std::vector<CheckReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        auto j = nlohmann::json::parse(vinc::verify::report_to_json(r));
        j.erase("ms");
        out += j.dump();
        out += '\n';
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--jobs" && i + 1 < argc) g_jobs = std::atoi(argv[++i]);
    }

    const Criterion criteria[] = {
        {"golden example: biword image and coordinate rows", {{"ex-2-2", 8, 8}}},
        {"phi-hat involution and statistic swap on S_1..S_9",
         {{"thm-1-3", 1, 9}, {"eq-1-10", 1, 9}}},
        {"biword route equals history route on S_1..S_8", {{"prop-hatphi-phi", 1, 8}}},
        {"biword image relations (all five) on S_1..S_8", {{"lem-2-1", 1, 8}}},
        {"theta-hat sextuple and cros/nest-tilde on S_1..S_8",
         {{"thm-2-3", 1, 8}, {"eq-2-13", 1, 8}}},
        {"xi involution, case-table conformance, prudence closure",
         {{"def-3-4-involution", 1, 8}, {"table-1-conformance", 1, 8}, {"lem-3-10", 1, 9}}},
        {"Baxter iff prudent, and the dual pattern view, on S_1..S_9",
         {{"lem-3-8", 1, 9}, {"prop-dual-baxter", 1, 9}}},
        {"phi-hat closed on Baxter; trivariate Baxter identity",
         {{"thm-1-5", 1, 9}, {"cor-baxter-equidist", 1, 9}}},
        {"frozen bivariate tables for n=3..7; Catalan specialisation",
         {{"qn-tables", 3, 7}, {"qn-catalan", 1, 9}}},
        {"continued-fraction coefficients for n=0..8", {{"cf-expansion", 0, 8}}},
        {"distribution symmetries and one-variable specialisations",
         {{"pn-symmetry", 1, 8}, {"conj-1-2", 1, 8}}},
        {"fixed-point counts and theta-hat fixed-point shape",
         {{"thm-4-2", 1, 9}, {"fixpoint-shape", 1, 9}}},
        {"counting: closed form, prudent histories, brute force", {{"baxter-counts", 1, 11}}},
        {"round trips and composite conjugation identities",
         {{"roundtrips", 1, 9}, {"eq-hattheta", 1, 8}, {"eq-3-1-3-2", 1, 7}}},
    };

    const auto suite_start = std::chrono::steady_clock::now();
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        const bool ok = run_bundle(c, detail);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report(index, c.label, ok, secs, detail);
    }

    // Criterion 15: the full registry at worker counts 1, 4, 8 must agree
    // byte for byte (timing aside) and pass everywhere.
    {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        std::string baseline;
        for (int workers : {1, 4, 8}) {
            const auto reports = vinc::verify::run_all(workers);
            for (const auto& r : reports)
                if (r.status != CheckStatus::Pass) {
                    ok = false;
                    detail = r.check_id + std::string(" did not pass with ") +
                             std::to_string(workers) + " workers";
                }
            const std::string dump = normalised_reports(reports);
            if (baseline.empty()) baseline = dump;
            else if (dump != baseline) {
                ok = false;
                detail = "reports differ at " + std::to_string(workers) + " workers";
            }
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report(15, "determinism: full run at 1, 4, 8 workers", ok, secs, detail);
    }

    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    std::printf("total: %.1f s -- %s\n", total, g_all_ok ? "all criteria PASS" : "FAILURES");
    if (total > 600.0) {
        std::printf("time budget exceeded (limit 600 s)\n");
        g_all_ok = false;
    }
    return g_all_ok ? 0 : 1;
}
