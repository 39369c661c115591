#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vinc/perm.hpp"
#include "vinc/stats.hpp"

namespace vinc {

enum class Var : int { P = 0, Q = 1, R = 2, S = 3 };

const char* var_name(Var v); // "p", "q", "r", "s"
Var parse_var(char c);

/**
 * Sparse exact-integer polynomial in the four variables p, q, r, s. Terms are
 * kept in graded lexicographic order; coefficients are checked 64-bit
 * integers and never silently wrap.
 */
class MultiPoly {
public:
    using Exp = std::array<std::uint8_t, 4>;

    // Ascending total degree; within a degree, p-heavy terms first (so that
    // p^2 + p q + q^2 prints in the conventional order).
    struct GradedLex {
        bool operator()(const Exp& a, const Exp& b) const {
            const int da = a[0] + a[1] + a[2] + a[3];
            const int db = b[0] + b[1] + b[2] + b[3];
            if (da != db) return da < db;
            return a > b;
        }
    };

    using TermMap = std::map<Exp, std::int64_t, GradedLex>;

    MultiPoly() = default;
    static MultiPoly constant(std::int64_t c);
    static MultiPoly variable(Var v);

    bool is_zero() const noexcept { return terms_.empty(); }
    const TermMap& terms() const noexcept { return terms_; }

    /// Adds c * x^e (checked); zero coefficients are pruned.
    void add_term(const Exp& e, std::int64_t c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Renames variables: exponent of old variable v moves to mapping[v].
    MultiPoly rename_vars(const std::array<Var, 4>& mapping) const;

    /// Sets one variable to 1 (its exponent is dropped, terms merge).
    MultiPoly substitute_one(Var v) const;

    /// Value at p = q = r = s = 1, i.e. the checked sum of coefficients.
    std::int64_t eval_all_ones() const;

    /// Canonical form, graded-lex term order, e.g. "4 + q + 2 q r^2".
    std::string to_string() const;

    /// Layout for polynomials in q and r only: groups of q-polynomials by
    /// ascending r-degree, e.g. "(8 + 4 q + 2 q^2) + (4 + 2 q) r + 2 r^2".
    std::string to_qr_grouped_string() const;

private:
    TermMap terms_;
};

/// [i]_{p,q} = p^{i-1} + p^{i-2} q + ... + q^{i-1} for i >= 1.
MultiPoly pq_integer(int i);

/**
 * Power series in x truncated at a fixed degree, with MultiPoly coefficients.
 * All arithmetic truncates; the truncation degree is fixed at construction.
 */
class SeriesInX {
public:
    explicit SeriesInX(int trunc_degree);
    static SeriesInX one(int trunc_degree);

    int trunc_degree() const noexcept { return trunc_; }
    const MultiPoly& coefficient(int k) const;
    MultiPoly& coefficient(int k);

    SeriesInX& operator+=(const SeriesInX& o);
    SeriesInX& operator-=(const SeriesInX& o);
    friend SeriesInX operator*(const SeriesInX& a, const SeriesInX& b);

    /// Multiplies by c * x (shifts up one degree, truncating the top).
    SeriesInX shift_mul(const MultiPoly& c) const;

    /// Multiplicative inverse; requires constant term 1.
    SeriesInX reciprocal() const;

    friend bool operator==(const SeriesInX& a, const SeriesInX& b) {
        return a.trunc_ == b.trunc_ && a.coef_ == b.coef_;
    }

private:
    int trunc_;
    std::vector<MultiPoly> coef_;
};

/**
 * The continued fraction 1/(1 - a_1 x/(1 - a_2 x/(...))) with the weight
 * ladder a_k = [ceil(k/2)]_{p,q}, expanded to `trunc_degree`. Levels beyond
 * trunc_degree + 1 cannot affect the kept coefficients; `levels` may force a
 * deeper expansion to demonstrate that.
 */
SeriesInX cf_series(int trunc_degree, int levels = -1);

enum class PermClass { All, Baxter };

using StatBinding = std::pair<VincularStat, Var>;

/**
 * Joint distribution polynomial of the bound statistics over S_n (All) or
 * over Baxter permutations (Baxter; enumerated through prudent histories).
 * Caps: n <= 10 for All, n <= 11 for Baxter.
 */
MultiPoly distribution_poly(int n, std::span<const StatBinding> stats, PermClass cls,
                            int workers = 0);

/// Triple-binomial closed form for the number of Baxter permutations,
/// 1 <= n <= 25; every summand divides exactly.
std::int64_t baxter_number(int n);

std::int64_t catalan(int n);               // (2n choose n)/(n+1), overflow-checked
std::int64_t double_factorial_even(int m); // (2m)!! = 2^m m!

} // namespace vinc
