#include "vinc/maps.hpp"

#include "vinc/checked.hpp"
#include "vinc/stats.hpp"

namespace vinc {

Permutation theta_hat(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int a = sigma(n + 1 - i);
        out[static_cast<std::size_t>(i - 1)] = a == n ? n : n - a;
    }
    return Permutation(std::move(out));
}

Permutation theta(const Permutation& pi) {
    const int n = pi.size();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) out[static_cast<std::size_t>(i - 1)] = n + 1 - pi(n - i);
    if (n >= 1) out[static_cast<std::size_t>(n - 1)] = n + 1 - pi(n);
    return Permutation(std::move(out));
}

Permutation phi_sz(const Permutation& sigma) {
    const int n = sigma.size();
    if (n == 0) return sigma;
    std::vector<char> in_f(static_cast<std::size_t>(n + 1), 0);  // descent tops
    std::vector<char> in_fp(static_cast<std::size_t>(n + 1), 0); // descent bottoms
    for (int i = 1; i < n; ++i)
        if (sigma(i) > sigma(i + 1)) {
            in_f[static_cast<std::size_t>(sigma(i))] = 1;
            in_fp[static_cast<std::size_t>(sigma(i + 1))] = 1;
        }

    std::vector<int> tau(static_cast<std::size_t>(n + 1), 0);
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    // F-side pairing, ascending.
    for (int j = 1; j <= n; ++j) {
        if (!in_f[static_cast<std::size_t>(j)]) continue;
        int rank = vincular_coord(VincularStat::V312, j, sigma) + 1;
        for (int x = j - 1; x >= 1; --x) {
            if (!in_fp[static_cast<std::size_t>(x)] || used[static_cast<std::size_t>(x)]) continue;
            if (--rank == 0) {
                tau[static_cast<std::size_t>(j)] = x;
                used[static_cast<std::size_t>(x)] = 1;
                break;
            }
        }
        internal_check(rank == 0, "phi_sz: descent-side candidates exhausted");
    }
    // G-side pairing, descending.
    std::fill(used.begin(), used.end(), 0);
    for (int j = n; j >= 1; --j) {
        if (in_f[static_cast<std::size_t>(j)]) continue;
        int rank = vincular_coord(VincularStat::V312, j, sigma) + 1;
        for (int y = j; y <= n; ++y) {
            if (in_fp[static_cast<std::size_t>(y)] || used[static_cast<std::size_t>(y)]) continue;
            if (--rank == 0) {
                tau[static_cast<std::size_t>(j)] = y;
                used[static_cast<std::size_t>(y)] = 1;
                break;
            }
        }
        internal_check(rank == 0, "phi_sz: ascent-side candidates exhausted");
    }
    return Permutation(std::vector<int>(tau.begin() + 1, tau.end()));
}

Permutation phi_sz_inv(const Permutation& tau) {
    const int n = tau.size();
    if (n == 0) return tau;
    // Descent tops of the preimage are the letters mapped down by tau.
    std::vector<char> in_f(static_cast<std::size_t>(n + 1), 0);
    std::vector<char> in_fp(static_cast<std::size_t>(n + 1), 0);
    for (int a = 1; a <= n; ++a)
        if (tau(a) < a) {
            in_f[static_cast<std::size_t>(a)] = 1;
            in_fp[static_cast<std::size_t>(tau(a))] = 1;
        }

    // Undo the rank selection to recover each letter's 312 coordinate.
    std::vector<int> rank(static_cast<std::size_t>(n + 1), 0);
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    for (int j = 1; j <= n; ++j) {
        if (!in_f[static_cast<std::size_t>(j)]) continue;
        int s = 0;
        for (int x = tau(j) + 1; x < j; ++x)
            if (in_fp[static_cast<std::size_t>(x)] && !used[static_cast<std::size_t>(x)]) ++s;
        rank[static_cast<std::size_t>(j)] = s;
        used[static_cast<std::size_t>(tau(j))] = 1;
    }
    std::fill(used.begin(), used.end(), 0);
    for (int j = n; j >= 1; --j) {
        if (in_f[static_cast<std::size_t>(j)]) continue;
        int s = 0;
        for (int y = j; y < tau(j); ++y)
            if (!in_fp[static_cast<std::size_t>(y)] && !used[static_cast<std::size_t>(y)]) ++s;
        rank[static_cast<std::size_t>(j)] = s;
        used[static_cast<std::size_t>(tau(j))] = 1;
    }

    // Rebuild by slot insertion; the letter's shape encodes whether its
    // neighbours in the preimage are larger, and its rank counts the open
    // slots strictly to the left of the insertion point.
    std::vector<int> cells{0};
    for (int j = 1; j <= n; ++j) {
        const bool left_larger = in_fp[static_cast<std::size_t>(j)] != 0;
        const bool right_larger = in_f[static_cast<std::size_t>(j)] == 0;
        int seen = 0;
        int at = -1;
        for (int pos = 0; pos < static_cast<int>(cells.size()); ++pos) {
            if (cells[static_cast<std::size_t>(pos)] != 0) continue;
            if (seen == rank[static_cast<std::size_t>(j)]) {
                at = pos;
                break;
            }
            ++seen;
        }
        internal_check(at >= 0, "phi_sz_inv: rank exceeds the number of open slots");
        if (left_larger && right_larger) {
            cells[static_cast<std::size_t>(at)] = j;
            cells.insert(cells.begin() + at, 0);
            cells.insert(cells.begin() + at + 2, 0);
        } else if (!left_larger && right_larger) {
            cells[static_cast<std::size_t>(at)] = j;
            cells.insert(cells.begin() + at + 1, 0);
        } else if (left_larger && !right_larger) {
            cells[static_cast<std::size_t>(at)] = j;
            cells.insert(cells.begin() + at, 0);
        } else {
            cells[static_cast<std::size_t>(at)] = j;
        }
    }
    internal_check(static_cast<int>(cells.size()) == n + 1 && cells.back() == 0,
                   "phi_sz_inv: rebuilt word does not end with the single open slot");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(n));
    for (int c : cells)
        if (c != 0) letters.push_back(c);
    return Permutation(std::move(letters));
}

Permutation phi_hat(const Permutation& sigma) { return phi_sz_inv(theta_hat(phi_sz(sigma))); }

Permutation phi_laguerre(const Permutation& sigma) { return fv_inverse(xi(fv_forward(sigma))); }

LaguerreHistory phi_fz(const Permutation& pi) { return fv_forward(phi_sz_inv(inverse(pi))); }

Permutation phi_fz_inv(const LaguerreHistory& w) { return inverse(phi_sz(fv_inverse(w))); }

} // namespace vinc
