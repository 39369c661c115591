#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vinc/perm.hpp"

namespace vinc {

/**
 * A pattern of length k <= 4 with optional adjacency constraints.
 *
 * pos_adjacent bit t (1 <= t < k) forces the text positions matched by
 * pattern slots t and t+1 to be consecutive. val_adjacent bit v (1 <= v < k)
 * forces the text letter matched by pattern value v+1 to be exactly one more
 * than the letter matched by pattern value v.
 *
 * Text grammar (parse): the pattern letters as digits, then optional
 * space-separated tokens; "uXY..." marks the run of positions X..Y as one
 * underlined group, "oV" adds the value constraint for the pair (V, V+1).
 * Examples: "4321 u12", "3142 u23", "2413 o2".
 */
struct PatternDescriptor {
    std::vector<int> letters;
    std::uint8_t pos_adjacent = 0;
    std::uint8_t val_adjacent = 0;

    static PatternDescriptor parse(std::string_view text);
    static PatternDescriptor make(std::vector<int> letters, std::initializer_list<int> pos_adj,
                                  std::initializer_list<int> val_adj);

    int length() const noexcept { return static_cast<int>(letters.size()); }
};

inline constexpr int kMaxPatternLen = 4;

/// Number of index tuples i_1 < ... < i_k order-isomorphic to the pattern and
/// satisfying all adjacency constraints. Returns 0 when k > n.
long count_occurrences(const PatternDescriptor& pattern, const Permutation& sigma);

/// Early-exit form of count_occurrences(...) > 0.
bool contains_pattern(const PatternDescriptor& pattern, const Permutation& sigma);

/// Avoidance of the two vincular patterns 3142 (with "14" position-adjacent)
/// and 2413 (with "41" position-adjacent).
bool is_baxter(const Permutation& sigma);

/// Avoidance of the two value-adjacent patterns 2413 (values 2,3 consecutive)
/// and 3142 (values 2,3 consecutive); agrees with is_baxter.
bool is_baxter_dual(const Permutation& sigma);

} // namespace vinc
