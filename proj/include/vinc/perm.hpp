#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vinc {

class ParseError : public std::runtime_error {
public:
    enum class Kind { NonInteger, OutOfRange, Duplicate, BadFormat };

    ParseError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/**
 * A permutation of {1, ..., n} in one-line notation. Letters and indices are
 * 1-based in the whole public interface; the empty permutation (n = 0) is a
 * valid value.
 */
class Permutation {
public:
    Permutation() = default;

    /// Validates that `letters` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> letters);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(letters_.size()); }

    /// sigma_i for 1 <= i <= n.
    int operator()(int i) const {
        if (i < 1 || i > size()) throw std::out_of_range("permutation index out of range");
        return letters_[static_cast<std::size_t>(i - 1)];
    }

    /// The unique i with sigma_i = letter.
    int position_of(int letter) const {
        if (letter < 1 || letter > size()) throw std::out_of_range("letter out of range");
        return positions_[static_cast<std::size_t>(letter - 1)];
    }

    const std::vector<int>& letters() const noexcept { return letters_; }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.letters_ < b.letters_;
    }

private:
    std::vector<int> letters_;   // letters_[i-1] = sigma_i
    std::vector<int> positions_; // positions_[l-1] = sigma^{-1}(l)
};

/// Parses whitespace-separated one-line notation, e.g. "4 7 1 8 6 3 2 5".
Permutation parse_permutation(std::string_view text);

/// One-line notation with single spaces.
std::string to_string(const Permutation& p);

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);    // index map i -> n+1-i
Permutation complement(const Permutation& p); // letter map l -> n+1-l

/// Hard cap for exhaustive generation of S_n.
inline constexpr int kMaxEnumN = 12;

std::uint64_t factorial(int n); // exact for n <= 20

/// Throws if n is outside [0, kMaxEnumN].
void check_enum_cap(int n);

/**
 * Visits every permutation of S_n with first letter `first` in lexicographic
 * order. The visitor returns false to stop early; the function returns false
 * iff a visitor did. Together with ascending `first`, these blocks cover S_n
 * in full lexicographic order.
 */
template <class F>
bool for_each_perm_with_first(int n, int first, F&& visit) {
    check_enum_cap(n);
    if (n < 1 || first < 1 || first > n) throw std::invalid_argument("bad partition");
    std::vector<int> v(static_cast<std::size_t>(n));
    v[0] = first;
    int next = 1;
    for (int i = 1; i < n; ++i) {
        if (next == first) ++next;
        v[static_cast<std::size_t>(i)] = next++;
    }
    do {
        if (!visit(Permutation(v))) return false;
    } while (std::next_permutation(v.begin() + 1, v.end()));
    return true;
}

/// Visits all of S_n in lexicographic order (n = 0 yields the empty permutation).
template <class F>
bool for_each_perm(int n, F&& visit) {
    check_enum_cap(n);
    if (n == 0) return visit(Permutation{});
    for (int first = 1; first <= n; ++first)
        if (!for_each_perm_with_first(n, first, visit)) return false;
    return true;
}

} // namespace vinc
