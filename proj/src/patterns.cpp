#include "vinc/patterns.hpp"

#include <array>
#include <stdexcept>

#include "vinc/checked.hpp"

namespace vinc {

namespace {

void validate_descriptor(const PatternDescriptor& d) {
    const int k = d.length();
    if (k < 1 || k > kMaxPatternLen)
        throw ParseError(ParseError::Kind::BadFormat,
                         "pattern length must be between 1 and " + std::to_string(kMaxPatternLen));
    Permutation check{std::vector<int>(d.letters)}; // rearrangement of 1..k
    (void)check;
    const std::uint8_t mask = static_cast<std::uint8_t>((1u << k) - 2); // bits 1..k-1
    if ((d.pos_adjacent & ~mask) || (d.val_adjacent & ~mask))
        throw ParseError(ParseError::Kind::BadFormat, "adjacency constraint out of range 1..k-1");
}

struct Matcher {
    const Permutation& sigma;
    int n;
    int k;
    const std::vector<int>& letters;
    std::uint8_t pos_adjacent;
    // val_pair[t] = earlier slot whose matched letter must be exactly one
    // below slot t's matched letter (or one above, see val_dir), -1 if none.
    std::array<int, 4> val_pair{};
    std::array<int, 4> val_dir{};
    std::array<int, 4> match_pos{};
    std::array<int, 4> match_val{};
    long count = 0;
    bool stop_at_first = false;

    bool descend(int t) {
        if (t == k) {
            ++count;
            return stop_at_first;
        }
        int lo = 1, hi = n;
        if (t > 0) {
            lo = match_pos[static_cast<std::size_t>(t - 1)] + 1;
            if (pos_adjacent & (1u << t)) hi = lo; // slots t and t+1 (1-based) adjacent
        }
        if (hi > n) hi = n;
        for (int p = lo; p <= hi; ++p) {
            const int x = sigma(p);
            bool ok = true;
            for (int u = 0; u < t && ok; ++u) {
                const bool want_less = letters[static_cast<std::size_t>(t)] <
                                       letters[static_cast<std::size_t>(u)];
                ok = want_less == (x < match_val[static_cast<std::size_t>(u)]);
            }
            if (ok && val_pair[static_cast<std::size_t>(t)] >= 0) {
                const int other =
                    match_val[static_cast<std::size_t>(val_pair[static_cast<std::size_t>(t)])];
                ok = x == other + val_dir[static_cast<std::size_t>(t)];
            }
            if (!ok) continue;
            match_pos[static_cast<std::size_t>(t)] = p;
            match_val[static_cast<std::size_t>(t)] = x;
            if (descend(t + 1)) return true;
        }
        return false;
    }
};

long run_matcher(const PatternDescriptor& d, const Permutation& sigma, bool stop_at_first) {
    validate_descriptor(d);
    const int k = d.length();
    if (k > sigma.size()) return 0;
    Matcher m{sigma, sigma.size(), k, d.letters, d.pos_adjacent, {}, {}, {}, {}, 0, stop_at_first};
    m.val_pair.fill(-1);
    // Resolve value-adjacency pairs to slot indices; the later slot checks
    // against the earlier one.
    for (int v = 1; v < k; ++v) {
        if (!(d.val_adjacent & (1u << v))) continue;
        int slot_v = -1, slot_v1 = -1;
        for (int t = 0; t < k; ++t) {
            if (d.letters[static_cast<std::size_t>(t)] == v) slot_v = t;
            if (d.letters[static_cast<std::size_t>(t)] == v + 1) slot_v1 = t;
        }
        if (slot_v < slot_v1) {
            m.val_pair[static_cast<std::size_t>(slot_v1)] = slot_v;
            m.val_dir[static_cast<std::size_t>(slot_v1)] = +1;
        } else {
            m.val_pair[static_cast<std::size_t>(slot_v)] = slot_v1;
            m.val_dir[static_cast<std::size_t>(slot_v)] = -1;
        }
    }
    m.descend(0);
    return m.count;
}

const PatternDescriptor& baxter_pattern_a() {
    static const PatternDescriptor d = PatternDescriptor::make({3, 1, 4, 2}, {2}, {});
    return d;
}
const PatternDescriptor& baxter_pattern_b() {
    static const PatternDescriptor d = PatternDescriptor::make({2, 4, 1, 3}, {2}, {});
    return d;
}
const PatternDescriptor& baxter_dual_a() {
    static const PatternDescriptor d = PatternDescriptor::make({2, 4, 1, 3}, {}, {2});
    return d;
}
const PatternDescriptor& baxter_dual_b() {
    static const PatternDescriptor d = PatternDescriptor::make({3, 1, 4, 2}, {}, {2});
    return d;
}

} // namespace

PatternDescriptor PatternDescriptor::parse(std::string_view text) {
    PatternDescriptor d;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        d.letters.push_back(text[i++] - '0');
    if (d.letters.empty())
        throw ParseError(ParseError::Kind::BadFormat, "pattern must start with its letters");
    const int k = d.length();
    skip_ws();
    while (i < text.size()) {
        const char tag = text[i++];
        std::vector<int> digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            digits.push_back(text[i++] - '0');
        if (tag == 'u') {
            if (digits.size() < 2)
                throw ParseError(ParseError::Kind::BadFormat,
                                 "underline group needs at least two positions, e.g. u23");
            for (std::size_t t = 0; t + 1 < digits.size(); ++t) {
                if (digits[t + 1] != digits[t] + 1 || digits[t] < 1 || digits[t + 1] > k)
                    throw ParseError(ParseError::Kind::BadFormat,
                                     "underline group must list consecutive positions in 1..k");
                d.pos_adjacent |= static_cast<std::uint8_t>(1u << digits[t]);
            }
        } else if (tag == 'o') {
            if (digits.size() != 1 || digits[0] < 1 || digits[0] >= k)
                throw ParseError(ParseError::Kind::BadFormat,
                                 "overline token is oV with 1 <= V < k, e.g. o2");
            d.val_adjacent |= static_cast<std::uint8_t>(1u << digits[0]);
        } else {
            throw ParseError(ParseError::Kind::BadFormat,
                             std::string("unknown pattern token prefix '") + tag + "'");
        }
        skip_ws();
    }
    validate_descriptor(d);
    return d;
}

PatternDescriptor PatternDescriptor::make(std::vector<int> letters,
                                          std::initializer_list<int> pos_adj,
                                          std::initializer_list<int> val_adj) {
    PatternDescriptor d;
    d.letters = std::move(letters);
    for (int t : pos_adj) d.pos_adjacent |= static_cast<std::uint8_t>(1u << t);
    for (int v : val_adj) d.val_adjacent |= static_cast<std::uint8_t>(1u << v);
    validate_descriptor(d);
    return d;
}

long count_occurrences(const PatternDescriptor& pattern, const Permutation& sigma) {
    return run_matcher(pattern, sigma, false);
}

bool contains_pattern(const PatternDescriptor& pattern, const Permutation& sigma) {
    return run_matcher(pattern, sigma, true) > 0;
}

bool is_baxter(const Permutation& sigma) {
    return !contains_pattern(baxter_pattern_a(), sigma) &&
           !contains_pattern(baxter_pattern_b(), sigma);
}

bool is_baxter_dual(const Permutation& sigma) {
    return !contains_pattern(baxter_dual_a(), sigma) && !contains_pattern(baxter_dual_b(), sigma);
}

} // namespace vinc
