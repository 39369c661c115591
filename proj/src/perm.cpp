#include "vinc/perm.hpp"

#include <charconv>
#include <sstream>

namespace vinc {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
    const int n = size();
    positions_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const int l = letters_[static_cast<std::size_t>(i - 1)];
        if (l < 1 || l > n)
            throw ParseError(ParseError::Kind::OutOfRange,
                             "letter " + std::to_string(l) + " out of range 1.." + std::to_string(n));
        int& pos = positions_[static_cast<std::size_t>(l - 1)];
        if (pos != 0)
            throw ParseError(ParseError::Kind::Duplicate, "duplicate letter " + std::to_string(l));
        pos = i;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
        if (ec != std::errc() || ptr != text.data() + j || value < 1)
            throw ParseError(ParseError::Kind::NonInteger,
                             "token '" + std::string(text.substr(i, j - i)) +
                                 "' is not a positive integer");
        letters.push_back(value);
        i = j;
    }
    return Permutation(std::move(letters));
}

std::string to_string(const Permutation& p) {
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += ' ';
        out += std::to_string(p(i));
    }
    return out;
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(p(i) - 1)] = i;
    return Permutation(std::move(v));
}

Permutation reverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(n - i)] = p(i);
    return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = n + 1 - p(i);
    return Permutation(std::move(v));
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial supported for 0 <= n <= 20");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

void check_enum_cap(int n) {
    if (n < 0 || n > kMaxEnumN)
        throw std::invalid_argument("S_n enumeration is capped at n <= " +
                                    std::to_string(kMaxEnumN) + " (requested n = " +
                                    std::to_string(n) + ")");
}

} // namespace vinc
