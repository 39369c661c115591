#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vinc/perm.hpp"

namespace vinc {

/// Steps of a 2-Motzkin path: up, down, red level, blue level.
enum class Step : std::uint8_t { U, D, Lr, Lb };

/// Up-class: U or Lr. Down-class: D or Lb.
inline bool is_up_class(Step s) { return s == Step::U || s == Step::Lr; }
inline bool is_down_class(Step s) { return s == Step::D || s == Step::Lb; }

char step_char(Step s); // 'U', 'D', 'R', 'B'

/**
 * A weighted 2-Motzkin path W = (steps, heights, weights) of length n.
 * heights[i] is the height before step i+1; weights obey
 *   0 <= c_i <= h_i  for up-class steps,
 *   1 <= c_i <= h_i  for down-class steps.
 * Heights are derivable from the steps and are stored so that externally
 * supplied triples can be cross-checked.
 */
struct LaguerreHistory {
    std::vector<Step> steps;
    std::vector<int> heights;
    std::vector<int> weights;

    int size() const noexcept { return static_cast<int>(steps.size()); }

    friend bool operator==(const LaguerreHistory& a, const LaguerreHistory& b) {
        return a.steps == b.steps && a.weights == b.weights;
    }
};

class HistoryError : public std::runtime_error {
public:
    enum class Kind {
        PathNegative,
        PathNotClosed,
        HeightMismatch,
        WeightBelowFloor,
        WeightAboveHeight,
        BadFormat,
    };

    HistoryError(Kind kind, int index, const std::string& msg)
        : std::runtime_error(msg), kind_(kind), index_(index) {}

    Kind kind() const noexcept { return kind_; }
    /// 1-based index of the first offending step, 0 if not step-specific.
    int index() const noexcept { return index_; }

private:
    Kind kind_;
    int index_;
};

/// Validates and assembles a history; derives heights. Throws HistoryError
/// naming the first offending index.
LaguerreHistory make_history(std::vector<Step> steps, std::vector<int> weights);

/// As make_history, but also cross-checks an externally supplied height
/// sequence against the derived one.
LaguerreHistory make_history_checked(std::vector<Step> steps, std::vector<int> heights,
                                     std::vector<int> weights);

/// Index of the last step of weight 0 (every valid nonempty history has one).
int critical_step(const LaguerreHistory& w);

/// Consecutive weight differences are restricted by the step class:
/// after an up-class step the weight may stay or rise by 1, after a
/// down-class step it may stay or drop by 1.
bool is_prudent(const LaguerreHistory& w);

/// Slot-insertion decoding: letters 1..n are inserted left to right, step i
/// choosing the weights[i]-th open slot counted right to left from 0, with
/// shape U: "_ i _", Lr: "i _", Lb: "_ i", D: "i".
Permutation fv_inverse(const LaguerreHistory& w);

/// Encoding inverse to fv_inverse: letter i's step type is read off from its
/// neighbours (with sentinels -inf/+inf) and its weight counts the positions
/// q > pos(i) where the letters around the gap bracket i.
LaguerreHistory fv_forward(const Permutation& sigma);

/// The weight-reversing involution: with m the critical step of W, the image
/// V has critical step n+1-m, opposite step classes at mirrored positions,
/// heights shifted by the class rules, and weights b_j = g_j - h_{n+1-j} + c_{n+1-j}.
LaguerreHistory xi(const LaguerreHistory& w);

// Text format: steps as a string over {U, D, R, B}, weights comma-separated,
// e.g. "UUBRDBDRUD" / "0,1,2,1,2,1,1,0,0,1".
std::string steps_to_string(const LaguerreHistory& w);
std::string weights_to_string(const LaguerreHistory& w);
std::string to_string(const LaguerreHistory& w); // "<steps> / <weights>"
LaguerreHistory parse_history(std::string_view steps_text, std::string_view weights_text);

inline constexpr int kMaxHistoryN = 10;        // full enumeration cap
inline constexpr int kMaxPrudentHistoryN = 12; // prudent enumeration cap

void check_history_cap(int n, bool prudent_only);

std::uint64_t count_histories(int n, bool prudent_only);

namespace detail {

// Depth-first extension. Candidate steps are tried in the order U, D, Lr, Lb
// and weights ascending; this is the canonical enumeration order.
template <class F>
bool history_dfs(int n, bool prudent_only, std::vector<Step>& steps, std::vector<int>& heights,
                 std::vector<int>& weights, F&& emit) {
    const int i = static_cast<int>(steps.size()); // 0-based position about to be filled
    if (i == n) {
        LaguerreHistory h{steps, heights, weights};
        return emit(h);
    }
    const int height = heights.empty() ? 0 : heights.back() +
                                                 (steps.back() == Step::U   ? 1
                                                  : steps.back() == Step::D ? -1
                                                                            : 0);
    const int remaining_after = n - i - 1;
    for (Step s : {Step::U, Step::D, Step::Lr, Step::Lb}) {
        const int next_height = height + (s == Step::U ? 1 : s == Step::D ? -1 : 0);
        if (next_height < 0 || next_height > remaining_after) continue;
        int lo = is_up_class(s) ? 0 : 1;
        int hi = height;
        if (prudent_only && i > 0) {
            const int prev = weights.back();
            if (is_up_class(steps.back())) {
                lo = std::max(lo, prev);
                hi = std::min(hi, prev + 1);
            } else {
                lo = std::max(lo, prev - 1);
                hi = std::min(hi, prev);
            }
        }
        for (int c = lo; c <= hi; ++c) {
            steps.push_back(s);
            heights.push_back(height);
            weights.push_back(c);
            const bool keep_going = history_dfs(n, prudent_only, steps, heights, weights, emit);
            steps.pop_back();
            heights.pop_back();
            weights.pop_back();
            if (!keep_going) return false;
        }
    }
    return true;
}

} // namespace detail

/// A canonical-order block of the history enumeration, identified by the
/// fixed first min(2, n) (step, weight) pairs.
struct HistoryPrefix {
    std::vector<Step> steps;
    std::vector<int> weights;
};

/// All valid prefixes in canonical order; their blocks partition the space.
std::vector<HistoryPrefix> history_prefixes(int n, bool prudent_only);

/// Visits every history of length n (prudent only, if requested) in canonical
/// order; the visitor returns false to stop. Returns false iff stopped.
template <class F>
bool for_each_history(int n, bool prudent_only, F&& visit) {
    check_history_cap(n, prudent_only);
    std::vector<Step> steps;
    std::vector<int> heights, weights;
    steps.reserve(static_cast<std::size_t>(n));
    heights.reserve(static_cast<std::size_t>(n));
    weights.reserve(static_cast<std::size_t>(n));
    return detail::history_dfs(n, prudent_only, steps, heights, weights, visit);
}

/// Visits the block of one prefix in canonical order.
template <class F>
bool for_each_history_with_prefix(int n, bool prudent_only, const HistoryPrefix& prefix,
                                  F&& visit) {
    check_history_cap(n, prudent_only);
    std::vector<Step> steps = prefix.steps;
    std::vector<int> weights = prefix.weights;
    std::vector<int> heights;
    int h = 0;
    for (Step s : steps) {
        heights.push_back(h);
        h += s == Step::U ? 1 : s == Step::D ? -1 : 0;
    }
    return detail::history_dfs(n, prudent_only, steps, heights, weights, visit);
}

} // namespace vinc
