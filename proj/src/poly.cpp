#include "vinc/poly.hpp"

#include <stdexcept>

#include "vinc/checked.hpp"
#include "vinc/detail/parallel.hpp"
#include "vinc/laguerre.hpp"

namespace vinc {

const char* var_name(Var v) {
    switch (v) {
    case Var::P: return "p";
    case Var::Q: return "q";
    case Var::R: return "r";
    case Var::S: return "s";
    }
    return "?";
}

Var parse_var(char c) {
    switch (c) {
    case 'p': return Var::P;
    case 'q': return Var::Q;
    case 'r': return Var::R;
    case 's': return Var::S;
    default: throw std::invalid_argument(std::string("unknown variable '") + c + "'");
    }
}

MultiPoly MultiPoly::constant(std::int64_t c) {
    MultiPoly out;
    out.add_term({0, 0, 0, 0}, c);
    return out;
}

MultiPoly MultiPoly::variable(Var v) {
    MultiPoly out;
    Exp e{0, 0, 0, 0};
    e[static_cast<std::size_t>(v)] = 1;
    out.add_term(e, 1);
    return out;
}

void MultiPoly::add_term(const Exp& e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exp e;
            for (std::size_t v = 0; v < 4; ++v) {
                const int sum = ea[v] + eb[v];
                if (sum > 255) throw std::overflow_error("polynomial exponent overflow");
                e[v] = static_cast<std::uint8_t>(sum);
            }
            out.add_term(e, checked_mul(ca, cb));
        }
    return out;
}

MultiPoly MultiPoly::rename_vars(const std::array<Var, 4>& mapping) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        std::array<int, 4> acc{0, 0, 0, 0};
        for (std::size_t v = 0; v < 4; ++v)
            acc[static_cast<std::size_t>(mapping[v])] += e[v];
        Exp r{0, 0, 0, 0};
        for (std::size_t v = 0; v < 4; ++v) {
            if (acc[v] > 255) throw std::overflow_error("polynomial exponent overflow");
            r[v] = static_cast<std::uint8_t>(acc[v]);
        }
        out.add_term(r, c);
    }
    return out;
}

MultiPoly MultiPoly::substitute_one(Var v) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        Exp r = e;
        r[static_cast<std::size_t>(v)] = 0;
        out.add_term(r, c);
    }
    return out;
}

std::int64_t MultiPoly::eval_all_ones() const {
    std::int64_t sum = 0;
    for (const auto& [e, c] : terms_) sum = checked_add(sum, c);
    return sum;
}

namespace {

void append_monomial(std::string& out, const MultiPoly::Exp& e, std::int64_t c) {
    const bool constant_term = e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0;
    bool printed = false;
    if (c != 1 || constant_term) {
        out += std::to_string(c);
        printed = true;
    }
    static constexpr const char* names[4] = {"p", "q", "r", "s"};
    for (std::size_t v = 0; v < 4; ++v) {
        if (e[v] == 0) continue;
        if (printed) out += ' ';
        out += names[v];
        if (e[v] > 1) {
            out += '^';
            out += std::to_string(static_cast<int>(e[v]));
        }
        printed = true;
    }
}

} // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += '-';
        first = false;
        append_monomial(out, e, c < 0 ? -c : c);
    }
    return out;
}

std::string MultiPoly::to_qr_grouped_string() const {
    if (terms_.empty()) return "0";
    // group[r-degree] -> list of (q-degree, coefficient), ascending q.
    std::map<int, std::vector<std::pair<int, std::int64_t>>> groups;
    for (const auto& [e, c] : terms_) {
        internal_check(e[0] == 0 && e[3] == 0,
                       "grouped layout is defined for polynomials in q and r only");
        groups[e[2]].emplace_back(e[1], c);
    }
    std::string out;
    bool first_group = true;
    for (auto& [rdeg, qterms] : groups) {
        std::sort(qterms.begin(), qterms.end());
        std::string inner;
        for (std::size_t t = 0; t < qterms.size(); ++t) {
            const auto [qdeg, c] = qterms[t];
            if (t) inner += c < 0 ? " - " : " + ";
            else if (c < 0) inner += '-';
            const std::int64_t abs_c = c < 0 ? -c : c;
            const bool unit = abs_c == 1 && qdeg > 0;
            if (!unit) inner += std::to_string(abs_c);
            if (qdeg > 0) {
                if (!unit) inner += ' ';
                inner += 'q';
                if (qdeg > 1) inner += "^" + std::to_string(qdeg);
            }
        }
        std::string group;
        const bool single = qterms.size() == 1;
        if (single) {
            // "1 r^k" prints as just "r^k".
            if (rdeg > 0 && inner == "1") inner.clear();
            group = inner;
        } else {
            group = "(" + inner + ")";
        }
        if (rdeg > 0) {
            if (!group.empty()) group += ' ';
            group += 'r';
            if (rdeg > 1) group += "^" + std::to_string(rdeg);
        }
        if (!first_group) out += " + ";
        first_group = false;
        out += group;
    }
    return out;
}

MultiPoly pq_integer(int i) {
    if (i < 1) throw std::invalid_argument("pq_integer requires i >= 1");
    MultiPoly out;
    for (int a = 0; a < i; ++a)
        out.add_term({static_cast<std::uint8_t>(i - 1 - a), static_cast<std::uint8_t>(a), 0, 0},
                     1);
    return out;
}

SeriesInX::SeriesInX(int trunc_degree) : trunc_(trunc_degree) {
    if (trunc_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
    coef_.resize(static_cast<std::size_t>(trunc_degree) + 1);
}

SeriesInX SeriesInX::one(int trunc_degree) {
    SeriesInX s(trunc_degree);
    s.coef_[0] = MultiPoly::constant(1);
    return s;
}

const MultiPoly& SeriesInX::coefficient(int k) const {
    if (k < 0 || k > trunc_) throw std::out_of_range("series coefficient index");
    return coef_[static_cast<std::size_t>(k)];
}

MultiPoly& SeriesInX::coefficient(int k) {
    if (k < 0 || k > trunc_) throw std::out_of_range("series coefficient index");
    return coef_[static_cast<std::size_t>(k)];
}

SeriesInX& SeriesInX::operator+=(const SeriesInX& o) {
    internal_check(trunc_ == o.trunc_, "series truncation degrees differ");
    for (int k = 0; k <= trunc_; ++k) coef_[static_cast<std::size_t>(k)] += o.coef_[static_cast<std::size_t>(k)];
    return *this;
}

SeriesInX& SeriesInX::operator-=(const SeriesInX& o) {
    internal_check(trunc_ == o.trunc_, "series truncation degrees differ");
    for (int k = 0; k <= trunc_; ++k) coef_[static_cast<std::size_t>(k)] -= o.coef_[static_cast<std::size_t>(k)];
    return *this;
}

SeriesInX operator*(const SeriesInX& a, const SeriesInX& b) {
    internal_check(a.trunc_ == b.trunc_, "series truncation degrees differ");
    SeriesInX out(a.trunc_);
    for (int i = 0; i <= a.trunc_; ++i)
        for (int j = 0; i + j <= a.trunc_; ++j)
            out.coef_[static_cast<std::size_t>(i + j)] +=
                a.coef_[static_cast<std::size_t>(i)] * b.coef_[static_cast<std::size_t>(j)];
    return out;
}

SeriesInX SeriesInX::shift_mul(const MultiPoly& c) const {
    SeriesInX out(trunc_);
    for (int k = 0; k < trunc_; ++k)
        out.coef_[static_cast<std::size_t>(k + 1)] = coef_[static_cast<std::size_t>(k)] * c;
    return out;
}

SeriesInX SeriesInX::reciprocal() const {
    internal_check(coef_[0] == MultiPoly::constant(1),
                   "series reciprocal requires constant term 1");
    SeriesInX out(trunc_);
    out.coef_[0] = MultiPoly::constant(1);
    for (int m = 1; m <= trunc_; ++m) {
        MultiPoly acc;
        for (int i = 1; i <= m; ++i)
            acc += coef_[static_cast<std::size_t>(i)] * out.coef_[static_cast<std::size_t>(m - i)];
        out.coef_[static_cast<std::size_t>(m)] = MultiPoly{} - acc;
    }
    return out;
}

SeriesInX cf_series(int trunc_degree, int levels) {
    if (levels < 0) levels = trunc_degree + 1;
    internal_check(levels >= trunc_degree + 1, "continued fraction expanded too shallowly");
    SeriesInX t = SeriesInX::one(trunc_degree);
    for (int k = levels; k >= 1; --k) {
        const MultiPoly a = pq_integer((k + 1) / 2);
        SeriesInX denom = SeriesInX::one(trunc_degree);
        denom -= t.shift_mul(a);
        t = denom.reciprocal();
    }
    return t;
}

namespace {

MultiPoly::Exp exponent_of(const Permutation& sigma, std::span<const StatBinding> stats) {
    MultiPoly::Exp e{0, 0, 0, 0};
    for (const auto& [stat, var] : stats) {
        const long value = vincular_total(stat, sigma);
        internal_check(value >= 0 && value <= 255, "statistic value exceeds exponent range");
        e[static_cast<std::size_t>(var)] =
            static_cast<std::uint8_t>(e[static_cast<std::size_t>(var)] + value);
    }
    return e;
}

} // namespace

MultiPoly distribution_poly(int n, std::span<const StatBinding> stats, PermClass cls,
                            int workers) {
    if (cls == PermClass::All && (n < 0 || n > 10))
        throw std::invalid_argument("distribution over S_n is capped at n <= 10");
    if (cls == PermClass::Baxter && (n < 0 || n > 11))
        throw std::invalid_argument("distribution over Baxter permutations is capped at n <= 11");

    if (cls == PermClass::All) {
        const int parts = n >= 1 ? n : 1;
        std::vector<MultiPoly> partial(static_cast<std::size_t>(parts));
        detail::run_partitions(parts, workers, [&](int part) {
            MultiPoly acc;
            auto visit = [&](const Permutation& sigma) {
                acc.add_term(exponent_of(sigma, stats), 1);
                return true;
            };
            if (n == 0) visit(Permutation{});
            else for_each_perm_with_first(n, part + 1, visit);
            partial[static_cast<std::size_t>(part)] = std::move(acc);
        });
        MultiPoly out;
        for (auto& poly : partial) out += poly;
        return out;
    }

    const auto prefixes = history_prefixes(n, true);
    std::vector<MultiPoly> partial(prefixes.size());
    detail::run_partitions(static_cast<int>(prefixes.size()), workers, [&](int part) {
        MultiPoly acc;
        for_each_history_with_prefix(n, true, prefixes[static_cast<std::size_t>(part)],
                                     [&](const LaguerreHistory& w) {
                                         acc.add_term(exponent_of(fv_inverse(w), stats), 1);
                                         return true;
                                     });
        partial[static_cast<std::size_t>(part)] = std::move(acc);
    });
    MultiPoly out;
    for (auto& poly : partial) out += poly;
    return out;
}

namespace {

std::int64_t narrow_u128(unsigned __int128 v, const char* what) {
    if (v > static_cast<unsigned __int128>(INT64_MAX)) throw std::overflow_error(what);
    return static_cast<std::int64_t>(v);
}

unsigned __int128 binomial_u128(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= static_cast<unsigned>(n - k + i);
        r /= static_cast<unsigned>(i);
    }
    return r;
}

} // namespace

std::int64_t baxter_number(int n) {
    if (n < 1 || n > 25) throw std::invalid_argument("baxter_number supports 1 <= n <= 25");
    const unsigned __int128 denom = binomial_u128(n + 1, 1) * binomial_u128(n + 1, 2);
    std::int64_t total = 0;
    for (int k = 0; k <= n - 1; ++k) {
        const unsigned __int128 numer =
            binomial_u128(n + 1, k) * binomial_u128(n + 1, k + 1) * binomial_u128(n + 1, k + 2);
        internal_check(numer % denom == 0, "baxter_number: summand does not divide exactly");
        total = checked_add(total, narrow_u128(numer / denom, "baxter_number overflow"));
    }
    return total;
}

std::int64_t catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan requires n >= 0");
    unsigned __int128 c = 1;
    for (int k = 0; k < n; ++k) {
        c *= static_cast<unsigned>(2 * (2 * k + 1));
        internal_check(c % static_cast<unsigned>(k + 2) == 0, "catalan recurrence not exact");
        c /= static_cast<unsigned>(k + 2);
        if (c > static_cast<unsigned __int128>(INT64_MAX))
            throw std::overflow_error("catalan number exceeds 64 bits");
    }
    return static_cast<std::int64_t>(c);
}

std::int64_t double_factorial_even(int m) {
    if (m < 0) throw std::invalid_argument("double_factorial_even requires m >= 0");
    std::int64_t r = 1;
    for (int i = 1; i <= m; ++i) r = checked_mul(r, 2 * static_cast<std::int64_t>(i));
    return r;
}

} // namespace vinc
