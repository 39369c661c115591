#include "vinc/verify.hpp"

#include <atomic>
#include <chrono>
#include <climits>
#include <cstdio>

#include <json.hpp>

#include "vinc/checked.hpp"
#include "vinc/detail/parallel.hpp"
#include "vinc/laguerre.hpp"
#include "vinc/maps.hpp"
#include "vinc/patterns.hpp"
#include "vinc/poly.hpp"
#include "vinc/stats.hpp"

namespace vinc::verify {

namespace {

// ---------------------------------------------------------------------------
// Deterministic partitioned scans.
//
// A scan visits a canonically ordered space split into contiguous blocks.
// Each block reports how many items it visited and its earliest failure; the
// reduction keeps the failure from the lowest block, so the outcome (and the
// item count up to a failure) is the same for every worker count. Blocks
// after an already-failed lower block may abort early.
// ---------------------------------------------------------------------------

struct ScanResult {
    std::uint64_t items = 0;
    std::optional<Counterexample> ce;
};

ScanResult reduce_blocks(std::vector<ScanResult>& blocks) {
    ScanResult out;
    for (auto& b : blocks) {
        out.items += b.items;
        if (b.ce) {
            out.ce = std::move(b.ce);
            break;
        }
    }
    return out;
}

template <class Pred>
ScanResult scan_sn(int n, int workers, Pred&& pred) {
    const int parts = n >= 1 ? n : 1;
    std::vector<ScanResult> blocks(static_cast<std::size_t>(parts));
    std::atomic<int> first_failed{INT_MAX};
    detail::run_partitions(parts, workers, [&](int part) {
        ScanResult local;
        auto visit = [&](const Permutation& p) {
            ++local.items;
            auto ce = pred(p);
            if (ce) {
                local.ce = std::move(ce);
                int cur = first_failed.load();
                while (part < cur && !first_failed.compare_exchange_weak(cur, part)) {
                }
                return false;
            }
            return first_failed.load(std::memory_order_relaxed) > part;
        };
        if (n == 0) visit(Permutation{});
        else for_each_perm_with_first(n, part + 1, visit);
        blocks[static_cast<std::size_t>(part)] = std::move(local);
    });
    return reduce_blocks(blocks);
}

template <class Pred>
ScanResult scan_histories(int n, bool prudent_only, int workers, Pred&& pred) {
    const auto prefixes = history_prefixes(n, prudent_only);
    const int parts = static_cast<int>(prefixes.size());
    std::vector<ScanResult> blocks(static_cast<std::size_t>(parts));
    std::atomic<int> first_failed{INT_MAX};
    detail::run_partitions(parts, workers, [&](int part) {
        ScanResult local;
        auto visit = [&](const LaguerreHistory& w) {
            ++local.items;
            auto ce = pred(w);
            if (ce) {
                local.ce = std::move(ce);
                int cur = first_failed.load();
                while (part < cur && !first_failed.compare_exchange_weak(cur, part)) {
                }
                return false;
            }
            return first_failed.load(std::memory_order_relaxed) > part;
        };
        for_each_history_with_prefix(n, prudent_only, prefixes[static_cast<std::size_t>(part)],
                                     visit);
        blocks[static_cast<std::size_t>(part)] = std::move(local);
    });
    return reduce_blocks(blocks);
}

// Aggregating scans always visit the full space; Acc must be mergeable with +=.
template <class Acc, class Visit>
std::pair<std::uint64_t, Acc> aggregate_sn(int n, int workers, Visit&& visit) {
    const int parts = n >= 1 ? n : 1;
    std::vector<Acc> accs(static_cast<std::size_t>(parts));
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(parts), 0);
    detail::run_partitions(parts, workers, [&](int part) {
        Acc& acc = accs[static_cast<std::size_t>(part)];
        auto fn = [&](const Permutation& p) {
            ++counts[static_cast<std::size_t>(part)];
            visit(acc, p);
            return true;
        };
        if (n == 0) fn(Permutation{});
        else for_each_perm_with_first(n, part + 1, fn);
    });
    Acc total{};
    std::uint64_t items = 0;
    for (int part = 0; part < parts; ++part) {
        total += std::move(accs[static_cast<std::size_t>(part)]);
        items += counts[static_cast<std::size_t>(part)];
    }
    return {items, std::move(total)};
}

template <class Acc, class Visit>
std::pair<std::uint64_t, Acc> aggregate_histories(int n, bool prudent_only, int workers,
                                                  Visit&& visit) {
    const auto prefixes = history_prefixes(n, prudent_only);
    const int parts = static_cast<int>(prefixes.size());
    std::vector<Acc> accs(static_cast<std::size_t>(parts));
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(parts), 0);
    detail::run_partitions(parts, workers, [&](int part) {
        Acc& acc = accs[static_cast<std::size_t>(part)];
        for_each_history_with_prefix(n, prudent_only, prefixes[static_cast<std::size_t>(part)],
                                     [&](const LaguerreHistory& w) {
                                         ++counts[static_cast<std::size_t>(part)];
                                         visit(acc, w);
                                         return true;
                                     });
    });
    Acc total{};
    std::uint64_t items = 0;
    for (int part = 0; part < parts; ++part) {
        total += std::move(accs[static_cast<std::size_t>(part)]);
        items += counts[static_cast<std::size_t>(part)];
    }
    return {items, std::move(total)};
}

std::string perm_witness(int n, const Permutation& p) {
    return "n=" + std::to_string(n) + " perm=" + vinc::to_string(p);
}

std::string hist_witness(int n, const LaguerreHistory& w) {
    return "n=" + std::to_string(n) + " history=" + vinc::to_string(w);
}

std::optional<Counterexample> fail(std::string witness, std::string expected,
                                   std::string actual) {
    return Counterexample{std::move(witness), std::move(expected), std::move(actual)};
}

// ---------------------------------------------------------------------------
// Frozen golden data.
// ---------------------------------------------------------------------------

constexpr const char* kGoldenSigma = "4 7 1 8 6 3 2 5";
constexpr const char* kGoldenTau = "5 7 1 4 8 2 6 3";
constexpr int kGoldenRow312[8] = {0, 0, 0, 0, 1, 1, 1, 2};
constexpr int kGoldenRow231[8] = {2, 1, 0, 0, 0, 0, 0, 0};
constexpr int kGoldenRowCros[8] = {2, 0, 0, 0, 0, 1, 1, 1};
constexpr int kGoldenRowNest[8] = {0, 1, 0, 2, 0, 0, 0, 0};

const char* qn_golden(int n) {
    switch (n) {
    case 3: return "(4 + q) + r";
    case 4: return "(8 + 4 q + 2 q^2) + (4 + 2 q) r + 2 r^2";
    case 5:
        return "(16 + 12 q + 9 q^2 + 4 q^3 + q^4) + (12 + 10 q + 5 q^2 + q^3) r + "
               "(9 + 5 q + 2 q^2) r^2 + (4 + q) r^3 + r^4";
    case 6:
        return "(32 + 32 q + 30 q^2 + 20 q^3 + 12 q^4 + 4 q^5 + 2 q^6) + "
               "(32 + 36 q + 28 q^2 + 16 q^3 + 6 q^4 + 2 q^5) r + "
               "(30 + 28 q + 22 q^2 + 8 q^3 + 4 q^4) r^2 + "
               "(20 + 16 q + 8 q^2 + 4 q^3) r^3 + (12 + 6 q + 4 q^2) r^4 + "
               "(4 + 2 q) r^5 + 2 r^6";
    case 7:
        return "(64 + 80 q + 88 q^2 + 73 q^3 + 56 q^4 + 34 q^5 + 20 q^6 + 9 q^7 + 4 q^8 + q^9) + "
               "(80 + 112 q + 111 q^2 + 86 q^3 + 56 q^4 + 30 q^5 + 14 q^6 + 5 q^7 + q^8) r + "
               "(88 + 111 q + 112 q^2 + 75 q^3 + 47 q^4 + 21 q^5 + 9 q^6 + 2 q^7) r^2 + "
               "(73 + 86 q + 75 q^2 + 48 q^3 + 25 q^4 + 10 q^5 + 3 q^6) r^3 + "
               "(56 + 56 q + 47 q^2 + 25 q^3 + 12 q^4 + 3 q^5) r^4 + "
               "(34 + 30 q + 21 q^2 + 10 q^3 + 3 q^4) r^5 + "
               "(20 + 14 q + 9 q^2 + 3 q^3) r^6 + (9 + 5 q + 2 q^2) r^7 + (4 + q) r^8 + r^9";
    default: throw std::logic_error("no golden table for this n");
    }
}

// ---------------------------------------------------------------------------
// Check engines. Each runs one n and reports items visited plus the earliest
// counterexample, if any.
// ---------------------------------------------------------------------------

using Engine = std::function<ScanResult(int n, int workers)>;

ScanResult engine_ex_2_2(int n, int) {
    internal_check(n == 8, "golden example is pinned at n = 8");
    ScanResult out;
    out.items = 1;
    const Permutation sigma = parse_permutation(kGoldenSigma);
    const Permutation tau = phi_sz(sigma);
    if (vinc::to_string(tau) != kGoldenTau) {
        out.ce = fail("phi-sz image of " + std::string(kGoldenSigma), kGoldenTau,
                      vinc::to_string(tau));
        return out;
    }
    if (phi_sz_inv(parse_permutation(kGoldenTau)) != sigma) {
        out.ce = fail("phi-sz preimage of " + std::string(kGoldenTau), kGoldenSigma,
                      vinc::to_string(phi_sz_inv(parse_permutation(kGoldenTau))));
        return out;
    }
    for (int col = 1; col <= 8; ++col) {
        const int l = sigma(col);
        const int got312 = vincular_coord(VincularStat::V312, l, sigma);
        const int got231 = vincular_coord(VincularStat::V231, l, sigma);
        if (got312 != kGoldenRow312[col - 1] || got231 != kGoldenRow231[col - 1]) {
            out.ce = fail("coordinate column " + std::to_string(col) + " of sigma",
                          std::to_string(kGoldenRow312[col - 1]) + "/" +
                              std::to_string(kGoldenRow231[col - 1]),
                          std::to_string(got312) + "/" + std::to_string(got231));
            return out;
        }
        const int t = tau(col);
        const int gotc = cros_coord(tau, t);
        const int gotn = nest_coord(tau, t);
        if (gotc != kGoldenRowCros[col - 1] || gotn != kGoldenRowNest[col - 1]) {
            out.ce = fail("coordinate column " + std::to_string(col) + " of tau",
                          std::to_string(kGoldenRowCros[col - 1]) + "/" +
                              std::to_string(kGoldenRowNest[col - 1]),
                          std::to_string(gotc) + "/" + std::to_string(gotn));
            return out;
        }
    }
    return out;
}

ScanResult engine_thm_1_3(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& s) -> std::optional<Counterexample> {
        const Permutation t = phi_hat(s);
        if (vincular_total(VincularStat::V312, s) != vincular_total(VincularStat::V312, t) ||
            vincular_total(VincularStat::V231, s) != vincular_total(VincularStat::V213, t))
            return fail(perm_witness(n, s), "(312, 231) preserved as (312, 213)",
                        "image " + vinc::to_string(t));
        if (phi_hat(t) != s)
            return fail(perm_witness(n, s), "phi-hat applied twice returns the input",
                        vinc::to_string(phi_hat(t)));
        return std::nullopt;
    });
}

ScanResult engine_eq_1_10(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& s) -> std::optional<Counterexample> {
        const Permutation t = phi_hat(s);
        const bool ok =
            vincular_total(VincularStat::V312, s) == vincular_total(VincularStat::V312, t) &&
            vincular_total(VincularStat::V213, s) == vincular_total(VincularStat::V231, t) &&
            vincular_total(VincularStat::V231, s) == vincular_total(VincularStat::V213, t);
        if (!ok)
            return fail(perm_witness(n, s), "(312, 213, 231) maps to (312, 231, 213)",
                        "image " + vinc::to_string(t));
        return std::nullopt;
    });
}

ScanResult engine_thm_1_5(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& s) -> std::optional<Counterexample> {
        if (!is_baxter(s)) return std::nullopt;
        const Permutation t = phi_hat(s);
        if (!is_baxter(t))
            return fail(perm_witness(n, s), "phi-hat image stays Baxter",
                        "non-Baxter image " + vinc::to_string(t));
        return std::nullopt;
    });
}

ScanResult engine_cor_baxter_equidist(int n, int workers) {
    struct Acc {
        MultiPoly poly;
        Acc& operator+=(Acc&& o) {
            poly += o.poly;
            return *this;
        }
    };
    auto [items, acc] = aggregate_histories<Acc>(
        n, true, workers, [](Acc& a, const LaguerreHistory& w) {
            const Permutation s = fv_inverse(w);
            a.poly.add_term({static_cast<std::uint8_t>(vincular_total(VincularStat::V132, s)),
                             static_cast<std::uint8_t>(vincular_total(VincularStat::V312, s)),
                             static_cast<std::uint8_t>(vincular_total(VincularStat::V213, s)),
                             static_cast<std::uint8_t>(vincular_total(VincularStat::V231, s))},
                            1);
        });
    ScanResult out;
    out.items = items;
    const MultiPoly& poly = acc.poly;
    // Double-swap symmetries of the Baxter joint distribution.
    const std::array<std::array<Var, 4>, 3> symmetries = {{
        {Var::Q, Var::P, Var::S, Var::R},
        {Var::S, Var::R, Var::Q, Var::P},
        {Var::R, Var::S, Var::P, Var::Q},
    }};
    for (const auto& m : symmetries) {
        const MultiPoly renamed = poly.rename_vars(m);
        if (!(poly == renamed)) {
            out.ce = fail("n=" + std::to_string(n) +
                              " Baxter distribution under a variable double swap",
                          poly.to_string(), renamed.to_string());
            return out;
        }
    }
    // The four one-variable specialisations, the first being the trivariate
    // identity in q, r, s.
    struct Relation {
        Var fixed;
        std::array<Var, 4> rename;
        const char* label;
    };
    const Relation relations[4] = {
        {Var::P, {Var::P, Var::Q, Var::S, Var::R}, "p = 1, swap r and s"},
        {Var::Q, {Var::P, Var::Q, Var::S, Var::R}, "q = 1, swap r and s"},
        {Var::R, {Var::Q, Var::P, Var::R, Var::S}, "r = 1, swap p and q"},
        {Var::S, {Var::Q, Var::P, Var::R, Var::S}, "s = 1, swap p and q"},
    };
    for (const auto& rel : relations) {
        const MultiPoly specialised = poly.substitute_one(rel.fixed);
        const MultiPoly swapped = specialised.rename_vars(rel.rename);
        if (!(specialised == swapped)) {
            out.ce = fail("n=" + std::to_string(n) + " Baxter relation " + rel.label,
                          specialised.to_string(), swapped.to_string());
            return out;
        }
    }
    return out;
}

std::optional<Counterexample> lem_2_1_pred(
    int n, const Permutation& pi, const std::function<Permutation(const Permutation&)>& sz) {
    Permutation sigma;
    try {
        sigma = sz(pi);
    } catch (const std::exception& e) {
        return fail(perm_witness(n, pi), "a valid biword image", std::string("error: ") + e.what());
    }
    if (sigma.size() != n)
        return fail(perm_witness(n, pi), "an image of the same length", vinc::to_string(sigma));
    if (n >= 1 && sigma(pi(n)) != n)
        return fail(perm_witness(n, pi), "image sends the last letter's slot to n",
                    "image " + vinc::to_string(sigma));
    for (int i = 1; i <= n; ++i) {
        if (vincular_coord(VincularStat::V231, i, pi) != nest_coord(sigma, i))
            return fail(perm_witness(n, pi),
                        "231 coordinate at " + std::to_string(i) + " equals nest coordinate",
                        std::to_string(vincular_coord(VincularStat::V231, i, pi)) + " vs " +
                            std::to_string(nest_coord(sigma, i)));
        if (vincular_coord(VincularStat::V312, i, pi) != cros_coord(sigma, i))
            return fail(perm_witness(n, pi),
                        "312 coordinate at " + std::to_string(i) + " equals cros coordinate",
                        std::to_string(vincular_coord(VincularStat::V312, i, pi)) + " vs " +
                            std::to_string(cros_coord(sigma, i)));
    }
    if (aba_set(pi) != ene_set(sigma))
        return fail(perm_witness(n, pi), "Aba set equals Ene set of the image", "differs");
    if (dtb_set(pi) != ene_tilde_set(sigma))
        return fail(perm_witness(n, pi), "Dtb set equals Ene-tilde set of the image", "differs");
    if (vincular_total(VincularStat::V213, pi) != nest_tilde(sigma))
        return fail(perm_witness(n, pi), "213 total equals nest-tilde of the image",
                    std::to_string(vincular_total(VincularStat::V213, pi)) + " vs " +
                        std::to_string(nest_tilde(sigma)));
    for (int i = 1; i < n; ++i) {
        const bool ascent = pi(i) < pi(i + 1);
        const bool rule = sigma(pi(i)) >= pi(i) && pi(i) != pi(n);
        if (ascent != rule)
            return fail(perm_witness(n, pi),
                        "ascent at " + std::to_string(i) + " iff the image rule holds",
                        ascent ? "ascent without rule" : "rule without ascent");
    }
    return std::nullopt;
}

ScanResult engine_lem_2_1(int n, int workers,
                          const std::function<Permutation(const Permutation&)>& sz) {
    return scan_sn(n, workers, [n, &sz](const Permutation& pi) { return lem_2_1_pred(n, pi, sz); });
}

ScanResult engine_eq_2_9(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& pi) -> std::optional<Counterexample> {
        const long lhs = vincular_total(VincularStat::V213, pi);
        const long rhs = vincular_total(VincularStat::V231, pi) -
                         static_cast<long>(aba_set(pi).size()) +
                         static_cast<long>(dtb_set(pi).size());
        if (lhs != rhs)
            return fail(perm_witness(n, pi), "213 = 231 - |Aba| + |Dtb|",
                        std::to_string(lhs) + " vs " + std::to_string(rhs));
        return std::nullopt;
    });
}

ScanResult engine_thm_2_3(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& s) -> std::optional<Counterexample> {
        const Permutation t = theta_hat(s);
        const bool ok = ecr(s) == ecr(t) && ucr(s) == lcr(t) && lcr(s) == ucr(t) &&
                        ene(s) == ene_tilde(t) && une(s) == lne(t) && lne(s) == une(t);
        if (!ok)
            return fail(perm_witness(n, s),
                        "(ecr, ucr, lcr, ene, une, lne) maps to (ecr, lcr, ucr, ene-tilde, lne, une)",
                        "image " + vinc::to_string(t));
        return std::nullopt;
    });
}

ScanResult engine_eq_2_13(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& s) -> std::optional<Counterexample> {
        const Permutation t = theta_hat(s);
        if (cros_total(s) != cros_total(t) || nest_total(s) != nest_tilde(t))
            return fail(perm_witness(n, s), "(cros, nest) maps to (cros, nest-tilde)",
                        "image " + vinc::to_string(t));
        return std::nullopt;
    });
}

ScanResult engine_stat_decompositions(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& s) -> std::optional<Counterexample> {
        if (cros_total(s) != ecr(s) + ucr(s) + lcr(s))
            return fail(perm_witness(n, s), "cros = ecr + ucr + lcr",
                        std::to_string(cros_total(s)) + " vs " +
                            std::to_string(ecr(s) + ucr(s) + lcr(s)));
        if (nest_total(s) != ene(s) + une(s) + lne(s))
            return fail(perm_witness(n, s), "nest = ene + une + lne",
                        std::to_string(nest_total(s)) + " vs " +
                            std::to_string(ene(s) + une(s) + lne(s)));
        return std::nullopt;
    });
}

ScanResult engine_claesson(int n, int workers) {
    struct Acc {
        std::array<std::vector<std::uint64_t>, 4> hist;
        Acc& operator+=(Acc&& o) {
            for (std::size_t k = 0; k < 4; ++k) {
                if (hist[k].size() < o.hist[k].size()) hist[k].resize(o.hist[k].size(), 0);
                for (std::size_t v = 0; v < o.hist[k].size(); ++v) hist[k][v] += o.hist[k][v];
            }
            return *this;
        }
    };
    static constexpr VincularStat kStats[4] = {VincularStat::V213, VincularStat::V231,
                                               VincularStat::V312, VincularStat::V132};
    auto [items, acc] = aggregate_sn<Acc>(n, workers, [](Acc& a, const Permutation& s) {
        for (std::size_t k = 0; k < 4; ++k) {
            const auto v = static_cast<std::size_t>(vincular_total(kStats[k], s));
            if (a.hist[k].size() <= v) a.hist[k].resize(v + 1, 0);
            ++a.hist[k][v];
        }
    });
    ScanResult out;
    out.items = items;
    for (std::size_t k = 1; k < 4; ++k) {
        const auto& ref = acc.hist[0];
        const auto& got = acc.hist[k];
        const std::size_t len = std::max(ref.size(), got.size());
        for (std::size_t v = 0; v < len; ++v) {
            const std::uint64_t a = v < ref.size() ? ref[v] : 0;
            const std::uint64_t b = v < got.size() ? got[v] : 0;
            if (a != b) {
                out.ce = fail("n=" + std::to_string(n) + " value " + std::to_string(v) +
                                  " of " + stat_name(kStats[k]),
                              std::to_string(a) + " permutations (as for 213)",
                              std::to_string(b) + " permutations");
                return out;
            }
        }
    }
    return out;
}

ScanResult engine_cf_expansion(int n, int workers) {
    struct Acc {
        MultiPoly with_231; // p^231 q^312
        MultiPoly with_213; // p^213 q^312
        Acc& operator+=(Acc&& o) {
            with_231 += o.with_231;
            with_213 += o.with_213;
            return *this;
        }
    };
    auto [items, acc] = aggregate_sn<Acc>(n, workers, [](Acc& a, const Permutation& s) {
        const auto v312 = static_cast<std::uint8_t>(vincular_total(VincularStat::V312, s));
        a.with_231.add_term(
            {static_cast<std::uint8_t>(vincular_total(VincularStat::V231, s)), v312, 0, 0}, 1);
        a.with_213.add_term(
            {static_cast<std::uint8_t>(vincular_total(VincularStat::V213, s)), v312, 0, 0}, 1);
    });
    ScanResult out;
    out.items = items;
    const MultiPoly coeff = cf_series(n).coefficient(n);
    if (!(coeff == acc.with_231)) {
        out.ce = fail("n=" + std::to_string(n) + " series coefficient vs (231, 312) sum",
                      acc.with_231.to_string(), coeff.to_string());
        return out;
    }
    if (!(coeff == acc.with_213)) {
        out.ce = fail("n=" + std::to_string(n) + " series coefficient vs (213, 312) sum",
                      acc.with_213.to_string(), coeff.to_string());
        return out;
    }
    const std::int64_t at_ones = coeff.eval_all_ones();
    if (at_ones != static_cast<std::int64_t>(factorial(n))) {
        out.ce = fail("n=" + std::to_string(n) + " series coefficient at p = q = 1",
                      std::to_string(factorial(n)), std::to_string(at_ones));
        return out;
    }
    return out;
}

std::pair<std::uint64_t, MultiPoly> full_distribution(int n, int workers) {
    struct Acc {
        MultiPoly poly;
        Acc& operator+=(Acc&& o) {
            poly += o.poly;
            return *this;
        }
    };
    auto [items, acc] = aggregate_sn<Acc>(n, workers, [](Acc& a, const Permutation& s) {
        a.poly.add_term({static_cast<std::uint8_t>(vincular_total(VincularStat::V132, s)),
                         static_cast<std::uint8_t>(vincular_total(VincularStat::V312, s)),
                         static_cast<std::uint8_t>(vincular_total(VincularStat::V213, s)),
                         static_cast<std::uint8_t>(vincular_total(VincularStat::V231, s))},
                        1);
    });
    return {items, std::move(acc.poly)};
}

ScanResult engine_pn_symmetry(int n, int workers) {
    auto [items, poly] = full_distribution(n, workers);
    ScanResult out;
    out.items = items;
    const std::array<std::array<Var, 4>, 3> renames = {{
        {Var::Q, Var::P, Var::S, Var::R}, // (p q)(r s)
        {Var::S, Var::R, Var::Q, Var::P}, // (p s)(q r)
        {Var::R, Var::S, Var::P, Var::Q}, // (p r)(q s)
    }};
    for (const auto& m : renames) {
        const MultiPoly renamed = poly.rename_vars(m);
        if (!(poly == renamed)) {
            out.ce = fail("n=" + std::to_string(n) + " distribution under a variable double swap",
                          poly.to_string(), renamed.to_string());
            return out;
        }
    }
    return out;
}

ScanResult engine_conj_1_2(int n, int workers) {
    auto [items, poly] = full_distribution(n, workers);
    ScanResult out;
    out.items = items;
    struct Relation {
        Var fixed;
        std::array<Var, 4> rename;
        const char* label;
    };
    const Relation relations[4] = {
        {Var::P, {Var::P, Var::Q, Var::S, Var::R}, "p = 1, swap r and s"},
        {Var::Q, {Var::P, Var::Q, Var::S, Var::R}, "q = 1, swap r and s"},
        {Var::R, {Var::Q, Var::P, Var::R, Var::S}, "r = 1, swap p and q"},
        {Var::S, {Var::Q, Var::P, Var::R, Var::S}, "s = 1, swap p and q"},
    };
    for (const auto& rel : relations) {
        const MultiPoly specialised = poly.substitute_one(rel.fixed);
        const MultiPoly swapped = specialised.rename_vars(rel.rename);
        if (!(specialised == swapped)) {
            out.ce = fail("n=" + std::to_string(n) + " relation " + rel.label,
                          specialised.to_string(), swapped.to_string());
            return out;
        }
    }
    return out;
}

ScanResult engine_def_3_4_involution(int n, int workers) {
    return scan_histories(n, false, workers,
                          [n](const LaguerreHistory& w) -> std::optional<Counterexample> {
        const LaguerreHistory v = xi(w);
        if (n >= 1) {
            const int m = critical_step(w);
            if (critical_step(v) != n + 1 - m)
                return fail(hist_witness(n, w), "image critical step at n+1-m",
                            std::to_string(critical_step(v)));
            for (int j = 1; j <= n; ++j) {
                if (j == n + 1 - m) {
                    if (!is_up_class(v.steps[static_cast<std::size_t>(j - 1)]))
                        return fail(hist_witness(n, w), "up-class step at the image critical index",
                                    "down-class");
                    continue;
                }
                const bool vu = is_up_class(v.steps[static_cast<std::size_t>(j - 1)]);
                const bool wd = is_down_class(w.steps[static_cast<std::size_t>(n - j)]);
                if (vu != wd)
                    return fail(hist_witness(n, w),
                                "class flip at mirrored index " + std::to_string(j),
                                vu ? "up without mirror down" : "down without mirror up");
            }
        }
        if (!(xi(v) == w))
            return fail(hist_witness(n, w), "xi applied twice returns the input",
                        vinc::to_string(xi(v)));
        return std::nullopt;
    });
}

// The 14 case rows for the image construction: the applicable index category,
// the step classes of v_j, v_{j+1}, w_{n+1-j}, w_{n-j}, and the height
// offsets of g_j, g_{j+1} against h_{n+1-j}, h_{n-j}.
struct CaseRow {
    enum class Cat { AtCrit, AtCritMinus1, BelowCritMinus1, AboveCrit, LastM1, LastMgt1 };
    Cat cat;
    bool vj_up, vj1_up, wn1j_up, wnj_up;
    int dgj, dgj1;
};

constexpr CaseRow kCaseRows[14] = {
    {CaseRow::Cat::AtCrit, true, true, true, false, 0, 0},
    {CaseRow::Cat::AtCrit, true, false, true, true, 0, +1},
    {CaseRow::Cat::AtCritMinus1, true, true, false, true, -1, 0},
    {CaseRow::Cat::AtCritMinus1, false, true, true, true, 0, 0},
    {CaseRow::Cat::BelowCritMinus1, true, true, false, false, -1, -1},
    {CaseRow::Cat::BelowCritMinus1, true, false, false, true, -1, 0},
    {CaseRow::Cat::BelowCritMinus1, false, true, true, false, 0, -1},
    {CaseRow::Cat::BelowCritMinus1, false, false, true, true, 0, 0},
    {CaseRow::Cat::AboveCrit, true, true, false, false, 0, 0},
    {CaseRow::Cat::AboveCrit, true, false, false, true, 0, +1},
    {CaseRow::Cat::AboveCrit, false, true, true, false, +1, 0},
    {CaseRow::Cat::AboveCrit, false, false, true, true, +1, +1},
    {CaseRow::Cat::LastM1, true, false, true, false, 0, 0},
    {CaseRow::Cat::LastMgt1, false, false, true, false, 1, 0},
};

int matching_case_rows(const LaguerreHistory& w, const LaguerreHistory& v, int j) {
    const int n = w.size();
    const int m = critical_step(w);
    const int crit = n + 1 - m;
    int matches = 0;
    for (const CaseRow& row : kCaseRows) {
        if (row.cat == CaseRow::Cat::LastM1 || row.cat == CaseRow::Cat::LastMgt1) {
            if (j != n) continue;
            if (row.cat == CaseRow::Cat::LastM1 && m != 1) continue;
            if (row.cat == CaseRow::Cat::LastMgt1 && m <= 1) continue;
            // Exact step letters at the final index, absolute heights.
            const Step vn = v.steps[static_cast<std::size_t>(n - 1)];
            const Step expected = row.cat == CaseRow::Cat::LastM1 ? Step::Lr : Step::D;
            if (vn != expected) continue;
            if (!is_up_class(w.steps[0])) continue;
            if (v.heights[static_cast<std::size_t>(n - 1)] != row.dgj) continue;
            const int g_n1 = v.heights[static_cast<std::size_t>(n - 1)] +
                             (vn == Step::U ? 1 : vn == Step::D ? -1 : 0);
            if (g_n1 != row.dgj1) continue;
            ++matches;
            continue;
        }
        if (j >= n) continue;
        switch (row.cat) {
        case CaseRow::Cat::AtCrit:
            if (j != crit) continue;
            break;
        case CaseRow::Cat::AtCritMinus1:
            if (j != crit - 1) continue;
            break;
        case CaseRow::Cat::BelowCritMinus1:
            if (j >= crit - 1) continue;
            break;
        case CaseRow::Cat::AboveCrit:
            if (j <= crit) continue;
            break;
        default: continue;
        }
        if (is_up_class(v.steps[static_cast<std::size_t>(j - 1)]) != row.vj_up) continue;
        if (is_up_class(v.steps[static_cast<std::size_t>(j)]) != row.vj1_up) continue;
        if (is_up_class(w.steps[static_cast<std::size_t>(n - j)]) != row.wn1j_up) continue;
        if (is_up_class(w.steps[static_cast<std::size_t>(n - j - 1)]) != row.wnj_up) continue;
        if (v.heights[static_cast<std::size_t>(j - 1)] !=
            w.heights[static_cast<std::size_t>(n - j)] + row.dgj)
            continue;
        if (v.heights[static_cast<std::size_t>(j)] !=
            w.heights[static_cast<std::size_t>(n - j - 1)] + row.dgj1)
            continue;
        ++matches;
    }
    return matches;
}

ScanResult engine_table_1(int n, int workers) {
    return scan_histories(n, false, workers,
                          [n](const LaguerreHistory& w) -> std::optional<Counterexample> {
        const LaguerreHistory v = xi(w);
        for (int j = 1; j <= n; ++j) {
            const int matches = matching_case_rows(w, v, j);
            if (matches != 1)
                return fail(hist_witness(n, w) + " index " + std::to_string(j),
                            "exactly one matching case row", std::to_string(matches) + " rows");
        }
        return std::nullopt;
    });
}

ScanResult engine_lem_3_8(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& s) -> std::optional<Counterexample> {
        const bool baxter = is_baxter(s);
        const bool prudent = is_prudent(fv_forward(s));
        if (baxter != prudent)
            return fail(perm_witness(n, s), "Baxter iff the encoded history is prudent",
                        baxter ? "Baxter but imprudent" : "prudent but not Baxter");
        return std::nullopt;
    });
}

ScanResult engine_lem_3_10(int n, int workers) {
    return scan_histories(n, true, workers,
                          [n](const LaguerreHistory& w) -> std::optional<Counterexample> {
        if (!is_prudent(xi(w)))
            return fail(hist_witness(n, w), "prudent image under xi",
                        "imprudent " + vinc::to_string(xi(w)));
        return std::nullopt;
    });
}

ScanResult engine_prop_dual_baxter(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& s) -> std::optional<Counterexample> {
        const bool a = is_baxter(s);
        const bool b = is_baxter_dual(s);
        if (a != b)
            return fail(perm_witness(n, s), "position-adjacent and value-adjacent tests agree",
                        a ? "Baxter but dual says no" : "dual says yes but not Baxter");
        return std::nullopt;
    });
}

ScanResult engine_prop_hatphi_phi(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& s) -> std::optional<Counterexample> {
        const Permutation a = phi_hat(s);
        const Permutation b = phi_laguerre(s);
        if (a != b)
            return fail(perm_witness(n, s), "biword route equals history route",
                        vinc::to_string(a) + " vs " + vinc::to_string(b));
        if (phi_sz(b) != theta_hat(phi_sz(s)))
            return fail(perm_witness(n, s),
                        "phi-sz of the image equals theta-hat of phi-sz", "differs");
        return std::nullopt;
    });
}

ScanResult engine_eq_3_1_3_2(int n, int workers) {
    struct Block {
        ScanResult scan;
        std::vector<std::string> images;
    };
    const int parts = n >= 1 ? n : 1;
    std::vector<Block> blocks(static_cast<std::size_t>(parts));
    const bool track_images = n <= 8;
    std::atomic<int> first_failed{INT_MAX};
    detail::run_partitions(parts, workers, [&](int part) {
        Block& local = blocks[static_cast<std::size_t>(part)];
        auto visit = [&](const Permutation& pi) {
            ++local.scan.items;
            const LaguerreHistory image = phi_fz(pi);
            if (track_images) local.images.push_back(vinc::to_string(image));
            const Permutation got = phi_fz_inv(xi(image));
            if (got != theta(pi)) {
                local.scan.ce = fail(perm_witness(n, pi),
                                     "conjugated xi equals theta: " + vinc::to_string(theta(pi)),
                                     vinc::to_string(got));
                int cur = first_failed.load();
                while (part < cur && !first_failed.compare_exchange_weak(cur, part)) {
                }
                return false;
            }
            return first_failed.load(std::memory_order_relaxed) > part;
        };
        if (n == 0) visit(Permutation{});
        else for_each_perm_with_first(n, part + 1, visit);
    });
    ScanResult out;
    std::vector<std::string> all;
    for (auto& b : blocks) {
        out.items += b.scan.items;
        if (b.scan.ce) {
            out.ce = std::move(b.scan.ce);
            return out;
        }
        all.insert(all.end(), b.images.begin(), b.images.end());
    }
    if (track_images) {
        std::sort(all.begin(), all.end());
        const auto distinct = std::unique(all.begin(), all.end()) - all.begin();
        if (static_cast<std::uint64_t>(distinct) != factorial(n))
            out.ce = fail("n=" + std::to_string(n) + " composite image count",
                          std::to_string(factorial(n)) + " distinct histories",
                          std::to_string(distinct));
    }
    return out;
}

ScanResult engine_eq_hattheta(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& s) -> std::optional<Counterexample> {
        const Permutation lhs = theta_hat(s);
        const Permutation rhs = inverse(theta(inverse(s)));
        if (lhs != rhs)
            return fail(perm_witness(n, s), "theta-hat equals inversion-conjugated theta",
                        vinc::to_string(lhs) + " vs " + vinc::to_string(rhs));
        return std::nullopt;
    });
}

ScanResult engine_thm_4_2(int n, int workers) {
    struct Block {
        ScanResult scan;
        std::uint64_t fixed = 0;
    };
    const int parts = n >= 1 ? n : 1;
    std::vector<Block> blocks(static_cast<std::size_t>(parts));
    std::atomic<int> first_failed{INT_MAX};
    detail::run_partitions(parts, workers, [&](int part) {
        Block& local = blocks[static_cast<std::size_t>(part)];
        auto visit = [&](const Permutation& s) {
            ++local.scan.items;
            const Permutation image = phi_sz(s);
            const bool phi_fixed = phi_hat(s) == s;
            const bool theta_fixed = theta_hat(image) == image;
            if (phi_fixed != theta_fixed) {
                local.scan.ce =
                    fail(perm_witness(n, s), "fixed by phi-hat iff its biword image is "
                                             "fixed by theta-hat",
                         phi_fixed ? "fixed, image moves" : "moves, image fixed");
                int cur = first_failed.load();
                while (part < cur && !first_failed.compare_exchange_weak(cur, part)) {
                }
                return false;
            }
            if (phi_fixed) ++local.fixed;
            return first_failed.load(std::memory_order_relaxed) > part;
        };
        if (n == 0) visit(Permutation{});
        else for_each_perm_with_first(n, part + 1, visit);
    });
    ScanResult out;
    std::uint64_t fixed = 0;
    for (auto& b : blocks) {
        out.items += b.scan.items;
        if (b.scan.ce) {
            out.ce = std::move(b.scan.ce);
            return out;
        }
        fixed += b.fixed;
    }
    const std::uint64_t expected =
        n % 2 == 0 ? 0 : static_cast<std::uint64_t>(double_factorial_even((n - 1) / 2));
    if (fixed != expected)
        out.ce = fail("n=" + std::to_string(n) + " phi-hat fixed-point count",
                      std::to_string(expected), std::to_string(fixed));
    return out;
}

bool has_mirror_shape(const Permutation& s) {
    const int n = s.size();
    if (n % 2 == 0) return false;
    const int m = (n - 1) / 2;
    if (s(m + 1) != n) return false;
    for (int i = 1; i <= m; ++i)
        if (s(n + 1 - i) != n - s(i)) return false;
    return true;
}

ScanResult engine_fixpoint_shape(int n, int workers) {
    return scan_sn(n, workers, [n](const Permutation& s) -> std::optional<Counterexample> {
        const bool fixed = theta_hat(s) == s;
        const bool shape = has_mirror_shape(s);
        if (fixed != shape)
            return fail(perm_witness(n, s), "fixed by theta-hat iff mirror-complement shape",
                        fixed ? "fixed without the shape" : "shape but not fixed");
        return std::nullopt;
    });
}

ScanResult engine_qn_tables(int n, int workers) {
    struct Acc {
        MultiPoly poly;
        Acc& operator+=(Acc&& o) {
            poly += o.poly;
            return *this;
        }
    };
    auto [items, acc] = aggregate_histories<Acc>(
        n, true, workers, [](Acc& a, const LaguerreHistory& w) {
            const Permutation s = fv_inverse(w);
            MultiPoly::Exp e{0, 0, 0, 0};
            e[1] = static_cast<std::uint8_t>(vincular_total(VincularStat::V312, s));
            e[2] = static_cast<std::uint8_t>(vincular_total(VincularStat::V213, s));
            a.poly.add_term(e, 1);
        });
    ScanResult out;
    out.items = items;
    const std::string got = acc.poly.to_qr_grouped_string();
    if (got != qn_golden(n))
        out.ce = fail("n=" + std::to_string(n) + " bivariate Baxter distribution", qn_golden(n),
                      got);
    return out;
}

ScanResult engine_qn_catalan(int n, int workers) {
    struct Acc {
        std::uint64_t count = 0;
        Acc& operator+=(Acc&& o) {
            count += o.count;
            return *this;
        }
    };
    auto [items, acc] =
        aggregate_histories<Acc>(n, true, workers, [](Acc& a, const LaguerreHistory& w) {
            if (vincular_total(VincularStat::V213, fv_inverse(w)) == 0) ++a.count;
        });
    ScanResult out;
    out.items = items;
    const auto expected = static_cast<std::uint64_t>(catalan(n));
    if (acc.count != expected)
        out.ce = fail("n=" + std::to_string(n) + " Baxter permutations with no 213 occurrence",
                      std::to_string(expected), std::to_string(acc.count));
    return out;
}

ScanResult engine_baxter_counts(int n, int workers) {
    ScanResult out;
    const std::int64_t closed_form = baxter_number(n);

    std::uint64_t prudent = 0;
    {
        struct Acc {
            std::uint64_t count = 0;
            Acc& operator+=(Acc&& o) {
                count += o.count;
                return *this;
            }
        };
        auto [items, acc] =
            aggregate_histories<Acc>(n, true, workers,
                                     [](Acc& a, const LaguerreHistory&) { ++a.count; });
        out.items += items;
        prudent = acc.count;
    }
    if (prudent != static_cast<std::uint64_t>(closed_form)) {
        out.ce = fail("n=" + std::to_string(n) + " prudent history count",
                      std::to_string(closed_form), std::to_string(prudent));
        return out;
    }

    if (n <= 9) {
        struct Acc {
            std::uint64_t count = 0;
            Acc& operator+=(Acc&& o) {
                count += o.count;
                return *this;
            }
        };
        auto [items, acc] = aggregate_sn<Acc>(n, workers, [](Acc& a, const Permutation& s) {
            if (is_baxter(s)) ++a.count;
        });
        out.items += items;
        if (acc.count != static_cast<std::uint64_t>(closed_form)) {
            out.ce = fail("n=" + std::to_string(n) + " brute-force Baxter count",
                          std::to_string(closed_form), std::to_string(acc.count));
            return out;
        }
    }

    if (n <= 8) {
        struct Acc {
            std::uint64_t count = 0;
            Acc& operator+=(Acc&& o) {
                count += o.count;
                return *this;
            }
        };
        auto [items, acc] = aggregate_histories<Acc>(
            n, false, workers, [](Acc& a, const LaguerreHistory&) { ++a.count; });
        out.items += items;
        if (acc.count != factorial(n)) {
            out.ce = fail("n=" + std::to_string(n) + " history count",
                          std::to_string(factorial(n)), std::to_string(acc.count));
            return out;
        }
    }
    return out;
}

ScanResult engine_roundtrips(int n, int workers) {
    ScanResult out;
    if (n <= 8) {
        ScanResult r = scan_sn(n, workers,
                               [n](const Permutation& s) -> std::optional<Counterexample> {
                                   if (phi_sz_inv(phi_sz(s)) != s)
                                       return fail(perm_witness(n, s),
                                                   "phi-sz round trip returns the input",
                                                   vinc::to_string(phi_sz_inv(phi_sz(s))));
                                   return std::nullopt;
                               });
        out.items += r.items;
        if (r.ce) {
            out.ce = std::move(r.ce);
            return out;
        }
    }
    {
        ScanResult r = scan_sn(n, workers,
                               [n](const Permutation& s) -> std::optional<Counterexample> {
                                   if (fv_inverse(fv_forward(s)) != s)
                                       return fail(perm_witness(n, s),
                                                   "insertion round trip returns the input",
                                                   vinc::to_string(fv_inverse(fv_forward(s))));
                                   return std::nullopt;
                               });
        out.items += r.items;
        if (r.ce) {
            out.ce = std::move(r.ce);
            return out;
        }
    }
    if (n <= 8) {
        ScanResult r = scan_histories(
            n, false, workers, [n](const LaguerreHistory& w) -> std::optional<Counterexample> {
                if (!(fv_forward(fv_inverse(w)) == w))
                    return fail(hist_witness(n, w), "history round trip returns the input",
                                vinc::to_string(fv_forward(fv_inverse(w))));
                return std::nullopt;
            });
        out.items += r.items;
        if (r.ce) out.ce = std::move(r.ce);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------------

struct CheckDef {
    CheckInfo info;
    Engine engine;
};

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> v;
        auto add = [&](std::string id, std::string claim, int dlo, int dhi, int clo, int chi,
                       Engine engine) {
            v.push_back(CheckDef{CheckInfo{std::move(id), std::move(claim), dlo, dhi, clo, chi},
                                 std::move(engine)});
        };
        add("ex-2-2", "golden biword image and all four coordinate rows for 4 7 1 8 6 3 2 5",
            8, 8, 8, 8, engine_ex_2_2);
        add("thm-1-3", "phi-hat is an involution carrying (312, 231) to (312, 213)", 1, 9, 1, 10,
            engine_thm_1_3);
        add("eq-1-10", "phi-hat swaps the 213 and 231 totals while fixing 312", 1, 9, 1, 10,
            engine_eq_1_10);
        add("thm-1-5", "phi-hat maps Baxter permutations to Baxter permutations", 1, 9, 1, 10,
            engine_thm_1_5);
        add("cor-baxter-equidist",
            "Baxter joint distribution: double-swap symmetries and the four one-variable "
            "specialisation identities",
            1, 9, 1, 11, engine_cor_baxter_equidist);
        add("lem-2-1",
            "biword image: last entry n, coordinate cros/nest, Aba/Dtb sets, 213 = nest-tilde, "
            "ascent rule",
            1, 8, 1, 10, [](int n, int workers) {
                return engine_lem_2_1(n, workers, [](const Permutation& p) { return phi_sz(p); });
            });
        add("eq-2-9", "213 total = 231 total - |Aba| + |Dtb|", 1, 8, 1, 10, engine_eq_2_9);
        add("thm-2-3",
            "theta-hat fixes ecr, swaps ucr/lcr and une/lne, and sends ene to ene-tilde", 1, 8, 1,
            10, engine_thm_2_3);
        add("eq-2-13", "theta-hat preserves cros and carries nest to nest-tilde", 1, 8, 1, 10,
            engine_eq_2_13);
        add("stat-decompositions", "cros = ecr + ucr + lcr and nest = ene + une + lne", 1, 8, 1,
            10, engine_stat_decompositions);
        add("claesson", "the four vincular totals are equidistributed", 1, 8, 1, 10,
            engine_claesson);
        add("cf-expansion",
            "continued-fraction coefficients equal both bivariate sums and n! at p = q = 1", 0, 8,
            0, 10, engine_cf_expansion);
        add("pn-symmetry",
            "the full 4-variable distribution is invariant under (p q)(r s), (p s)(q r), "
            "(p r)(q s)",
            1, 8, 1, 10, engine_pn_symmetry);
        add("conj-1-2", "setting any one variable to 1 admits the complementary swap", 1, 8, 1,
            10, engine_conj_1_2);
        add("def-3-4-involution",
            "xi is an involution with mirrored critical step and flipped step classes", 1, 8, 1,
            10, engine_def_3_4_involution);
        add("table-1-conformance", "every index of (W, xi(W)) matches exactly one case row", 1, 8,
            1, 10, engine_table_1);
        add("lem-3-8", "a permutation is Baxter iff its encoded history is prudent", 1, 9, 1, 10,
            engine_lem_3_8);
        add("lem-3-10", "xi preserves prudence", 1, 9, 1, 12, engine_lem_3_10);
        add("prop-dual-baxter", "position-adjacent avoidance equals value-adjacent avoidance", 1,
            9, 1, 10, engine_prop_dual_baxter);
        add("prop-hatphi-phi", "the biword route and the history route give the same involution",
            1, 8, 1, 10, engine_prop_hatphi_phi);
        add("eq-3-1-3-2",
            "conjugating xi by the composite encoding realises theta (bijective image)", 1, 7, 1,
            10, engine_eq_3_1_3_2);
        add("eq-hattheta", "theta-hat equals theta conjugated by inversion", 1, 8, 1, 10,
            engine_eq_hattheta);
        add("thm-4-2",
            "phi-hat fixed points: none for even n, (2m)!! for n = 2m+1, matching its biword "
            "conjugate",
            1, 9, 1, 10, engine_thm_4_2);
        add("fixpoint-shape",
            "theta-hat fixed points are exactly the mirror-complement words around the peak n", 1,
            9, 1, 10, engine_fixpoint_shape);
        add("qn-tables", "bivariate Baxter distributions match the frozen tables", 3, 7, 3, 7,
            engine_qn_tables);
        add("qn-catalan", "Baxter permutations with no 213 occurrence are counted by Catalan", 1,
            9, 1, 11, engine_qn_catalan);
        add("baxter-counts",
            "closed form = prudent-history count; brute-force Baxter filter (n <= 9); full "
            "history count = n! (n <= 8)",
            1, 11, 1, 11, engine_baxter_counts);
        add("roundtrips",
            "biword (n <= 8) and insertion encodings invert exactly, histories included (n <= 8)",
            1, 9, 1, 10, engine_roundtrips);
        return v;
    }();
    return defs;
}

const CheckDef& find_check(const std::string& id) {
    for (const auto& def : registry())
        if (def.info.id == id) return def;
    throw std::invalid_argument("unknown check id '" + id + "'");
}

CheckReport run_engine_range(const CheckInfo& info, const Engine& engine, int n_lo, int n_hi,
                             int workers) {
    CheckReport report;
    report.check_id = info.id;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    const auto start = std::chrono::steady_clock::now();
    if (n_lo > n_hi) {
        report.status = CheckStatus::Skipped;
        report.skip_reason = "empty range";
        return report;
    }
    if (n_lo < info.cap_lo || n_hi > info.cap_hi) {
        report.status = CheckStatus::Skipped;
        report.skip_reason = "range " + std::to_string(n_lo) + ".." + std::to_string(n_hi) +
                             " outside the supported " + std::to_string(info.cap_lo) + ".." +
                             std::to_string(info.cap_hi);
        return report;
    }
    for (int n = n_lo; n <= n_hi; ++n) {
        ScanResult r = engine(n, workers);
        report.items_checked += r.items;
        if (r.ce) {
            report.status = CheckStatus::Fail;
            report.counterexample = std::move(r.ce);
            break;
        }
    }
    const auto end = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

} // namespace

const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
    }
    return "?";
}

const std::vector<CheckInfo>& list_checks() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> v;
        for (const auto& def : registry()) v.push_back(def.info);
        return v;
    }();
    return infos;
}

CheckReport run_check(const std::string& id, int n_lo, int n_hi, int workers) {
    const CheckDef& def = find_check(id);
    return run_engine_range(def.info, def.engine, n_lo, n_hi, workers);
}

std::vector<CheckReport> run_all(int workers) {
    std::vector<CheckReport> reports;
    for (const auto& def : registry())
        reports.push_back(run_engine_range(def.info, def.engine, def.info.default_lo,
                                           def.info.default_hi, workers));
    return reports;
}

std::string report_to_json(const CheckReport& report) {
    nlohmann::json j;
    j["check"] = report.check_id;
    j["range"] = {report.n_lo, report.n_hi};
    j["status"] = status_name(report.status);
    j["items"] = report.items_checked;
    if (report.counterexample) {
        j["counterexample"] = {{"witness", report.counterexample->witness},
                               {"expected", report.counterexample->expected},
                               {"actual", report.counterexample->actual}};
    }
    if (report.status == CheckStatus::Skipped) j["reason"] = report.skip_reason;
    j["ms"] = report.wall_ms;
    return j.dump();
}

std::string report_to_text(const CheckReport& report) {
    char line[160];
    std::snprintf(line, sizeof line, "%-22s %2d..%-2d  %-7s %12llu items  %9.1f ms",
                  report.check_id.c_str(), report.n_lo, report.n_hi,
                  status_name(report.status),
                  static_cast<unsigned long long>(report.items_checked), report.wall_ms);
    std::string out = line;
    if (report.counterexample) {
        out += "\n    witness:  " + report.counterexample->witness;
        out += "\n    expected: " + report.counterexample->expected;
        out += "\n    actual:   " + report.counterexample->actual;
    }
    if (report.status == CheckStatus::Skipped) out += "\n    reason: " + report.skip_reason;
    return out;
}

CheckReport run_lem_2_1_with(const std::function<Permutation(const Permutation&)>& sz_map,
                             int n_lo, int n_hi, int workers) {
    const CheckDef& def = find_check("lem-2-1");
    Engine engine = [&sz_map](int n, int workers_inner) {
        return engine_lem_2_1(n, workers_inner, sz_map);
    };
    return run_engine_range(def.info, engine, n_lo, n_hi, workers);
}

} // namespace vinc::verify
