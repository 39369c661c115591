#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vinc/perm.hpp"

namespace vinc::verify {

struct Counterexample {
    std::string witness;  // offending permutation/history, or the mismatch site
    std::string expected;
    std::string actual;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

enum class CheckStatus { Pass, Fail, Skipped };

const char* status_name(CheckStatus s);

struct CheckReport {
    std::string check_id;
    int n_lo = 0;
    int n_hi = 0;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Counterexample> counterexample;
    std::uint64_t items_checked = 0;
    double wall_ms = 0.0;
    std::string skip_reason;
};

struct CheckInfo {
    std::string id;
    std::string claim; // one-line statement of what is verified
    int default_lo;
    int default_hi;
    int cap_lo;
    int cap_hi;
};

/// The full registry, in a fixed order.
const std::vector<CheckInfo>& list_checks();

/// Runs one check over the inclusive range [n_lo, n_hi]. Throws
/// std::invalid_argument for an unknown id; an out-of-cap range yields a
/// Skipped report. Results are identical for any worker count (wall_ms aside).
CheckReport run_check(const std::string& id, int n_lo, int n_hi, int workers);

/// Runs every registered check at its default range.
std::vector<CheckReport> run_all(int workers);

/// JSON object {check, range, status, items, counterexample?, reason?, ms}.
std::string report_to_json(const CheckReport& report);

/// One line per report: id, range, status, items, timing; a counterexample
/// adds indented detail lines.
std::string report_to_text(const CheckReport& report);

/// Testing seam: the lem-2-1 engine with a substitute for the biword
/// bijection, so the suite can demonstrate that a deliberately broken map is
/// caught. The registered check binds phi_sz.
CheckReport run_lem_2_1_with(const std::function<Permutation(const Permutation&)>& sz_map,
                             int n_lo, int n_hi, int workers);

} // namespace vinc::verify
