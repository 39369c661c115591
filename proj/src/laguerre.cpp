#include "vinc/laguerre.hpp"

#include <charconv>

#include "vinc/checked.hpp"

namespace vinc {

char step_char(Step s) {
    switch (s) {
    case Step::U: return 'U';
    case Step::D: return 'D';
    case Step::Lr: return 'R';
    case Step::Lb: return 'B';
    }
    return '?';
}

namespace {

std::vector<int> derive_heights(const std::vector<Step>& steps) {
    std::vector<int> heights;
    heights.reserve(steps.size());
    int h = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        heights.push_back(h);
        h += steps[i] == Step::U ? 1 : steps[i] == Step::D ? -1 : 0;
        if (h < 0)
            throw HistoryError(HistoryError::Kind::PathNegative, static_cast<int>(i) + 1,
                               "path drops below zero after step " + std::to_string(i + 1));
    }
    if (h != 0)
        throw HistoryError(HistoryError::Kind::PathNotClosed, static_cast<int>(steps.size()),
                           "path ends at height " + std::to_string(h) + ", not 0");
    return heights;
}

void check_weights(const std::vector<Step>& steps, const std::vector<int>& heights,
                   const std::vector<int>& weights) {
    if (weights.size() != steps.size())
        throw HistoryError(HistoryError::Kind::BadFormat, 0,
                           "weight sequence length differs from step count");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const int floor = is_up_class(steps[i]) ? 0 : 1;
        if (weights[i] < floor)
            throw HistoryError(HistoryError::Kind::WeightBelowFloor, static_cast<int>(i) + 1,
                               "weight " + std::to_string(weights[i]) + " at step " +
                                   std::to_string(i + 1) + " is below its floor " +
                                   std::to_string(floor));
        if (weights[i] > heights[i])
            throw HistoryError(HistoryError::Kind::WeightAboveHeight, static_cast<int>(i) + 1,
                               "weight " + std::to_string(weights[i]) + " at step " +
                                   std::to_string(i + 1) + " exceeds the height " +
                                   std::to_string(heights[i]));
    }
}

} // namespace

LaguerreHistory make_history(std::vector<Step> steps, std::vector<int> weights) {
    std::vector<int> heights = derive_heights(steps);
    check_weights(steps, heights, weights);
    return LaguerreHistory{std::move(steps), std::move(heights), std::move(weights)};
}

LaguerreHistory make_history_checked(std::vector<Step> steps, std::vector<int> heights,
                                     std::vector<int> weights) {
    std::vector<int> derived = derive_heights(steps);
    if (heights != derived) {
        int bad = 0;
        for (std::size_t i = 0; i < derived.size(); ++i)
            if (i >= heights.size() || heights[i] != derived[i]) {
                bad = static_cast<int>(i) + 1;
                break;
            }
        throw HistoryError(HistoryError::Kind::HeightMismatch, bad,
                           "supplied height differs from the derived one at step " +
                               std::to_string(bad));
    }
    check_weights(steps, derived, weights);
    return LaguerreHistory{std::move(steps), std::move(derived), std::move(weights)};
}

int critical_step(const LaguerreHistory& w) {
    for (int i = w.size(); i >= 1; --i)
        if (w.weights[static_cast<std::size_t>(i - 1)] == 0) return i;
    throw std::logic_error("valid nonempty history has no zero weight");
}

bool is_prudent(const LaguerreHistory& w) {
    for (int i = 1; i < w.size(); ++i) {
        const int d = w.weights[static_cast<std::size_t>(i)] -
                      w.weights[static_cast<std::size_t>(i - 1)];
        if (is_up_class(w.steps[static_cast<std::size_t>(i - 1)])) {
            if (d != 0 && d != 1) return false;
        } else {
            if (d != 0 && d != -1) return false;
        }
    }
    return true;
}

Permutation fv_inverse(const LaguerreHistory& w) {
    const int n = w.size();
    // Cells are letters; 0 marks an open slot. Slots are counted right to
    // left starting at 0, so the target slot has weights[i] slots after it.
    std::vector<int> cells{0};
    for (int i = 1; i <= n; ++i) {
        const int c = w.weights[static_cast<std::size_t>(i - 1)];
        int seen = 0;
        int at = -1;
        for (int pos = static_cast<int>(cells.size()) - 1; pos >= 0; --pos) {
            if (cells[static_cast<std::size_t>(pos)] != 0) continue;
            if (seen == c) {
                at = pos;
                break;
            }
            ++seen;
        }
        internal_check(at >= 0, "fv_inverse: weight exceeds the number of open slots");
        switch (w.steps[static_cast<std::size_t>(i - 1)]) {
        case Step::U:
            cells[static_cast<std::size_t>(at)] = i;
            cells.insert(cells.begin() + at, 0);
            cells.insert(cells.begin() + at + 2, 0);
            break;
        case Step::Lr:
            cells[static_cast<std::size_t>(at)] = i;
            cells.insert(cells.begin() + at + 1, 0);
            break;
        case Step::Lb:
            cells[static_cast<std::size_t>(at)] = i;
            cells.insert(cells.begin() + at, 0);
            break;
        case Step::D:
            cells[static_cast<std::size_t>(at)] = i;
            break;
        }
    }
    internal_check(!cells.empty() && cells.back() == 0,
                   "fv_inverse: decoded word does not end with an open slot");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(n));
    for (int c : cells)
        if (c != 0) letters.push_back(c);
    internal_check(static_cast<int>(cells.size()) == n + 1,
                   "fv_inverse: more than one open slot remains");
    return Permutation(std::move(letters));
}

LaguerreHistory fv_forward(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<Step> steps(static_cast<std::size_t>(n));
    std::vector<int> weights(static_cast<std::size_t>(n));
    // Sentinels: position 0 holds -inf, position n+1 holds +inf.
    auto at = [&](int q) { return q == 0 ? 0 : q == n + 1 ? n + 1 : sigma(q); };
    for (int letter = 1; letter <= n; ++letter) {
        const int p = sigma.position_of(letter);
        const bool left_larger = at(p - 1) > letter;
        const bool right_larger = at(p + 1) > letter;
        Step s;
        if (left_larger && right_larger) s = Step::U;
        else if (!left_larger && right_larger) s = Step::Lr;
        else if (left_larger && !right_larger) s = Step::Lb;
        else s = Step::D;
        steps[static_cast<std::size_t>(letter - 1)] = s;
        int c = 0;
        for (int q = p + 1; q <= n + 1; ++q)
            if (at(q - 1) < letter && letter <= at(q)) ++c;
        weights[static_cast<std::size_t>(letter - 1)] = c;
    }
    return make_history(std::move(steps), std::move(weights));
}

LaguerreHistory xi(const LaguerreHistory& w) {
    const int n = w.size();
    if (n == 0) return w;
    const int m = critical_step(w);
    const int crit = n + 1 - m;

    std::vector<char> up_class(static_cast<std::size_t>(n + 1));
    for (int j = 1; j <= n; ++j) {
        if (j == crit) up_class[static_cast<std::size_t>(j)] = 1;
        else
            up_class[static_cast<std::size_t>(j)] =
                is_down_class(w.steps[static_cast<std::size_t>(n - j)]) ? 1 : 0;
    }

    std::vector<int> g(static_cast<std::size_t>(n + 2));
    for (int j = 1; j <= n; ++j) {
        int h = w.heights[static_cast<std::size_t>(n - j)];
        if (j > crit && !up_class[static_cast<std::size_t>(j)]) h += 1;
        if (j < crit && up_class[static_cast<std::size_t>(j)]) h -= 1;
        g[static_cast<std::size_t>(j)] = h;
    }
    g[static_cast<std::size_t>(n + 1)] = 0;

    std::vector<Step> v(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const int d = g[static_cast<std::size_t>(j + 1)] - g[static_cast<std::size_t>(j)];
        const bool up = up_class[static_cast<std::size_t>(j)] != 0;
        internal_check(d >= -1 && d <= 1, "xi: image heights differ by more than one");
        internal_check(d != 1 || up, "xi: rising step in the down class");
        internal_check(d != -1 || !up, "xi: falling step in the up class");
        v[static_cast<std::size_t>(j - 1)] = d == 1 ? Step::U : d == -1 ? Step::D
                                                  : up            ? Step::Lr
                                                                  : Step::Lb;
    }

    std::vector<int> b(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        b[static_cast<std::size_t>(j - 1)] = g[static_cast<std::size_t>(j)] -
                                             w.heights[static_cast<std::size_t>(n - j)] +
                                             w.weights[static_cast<std::size_t>(n - j)];

    LaguerreHistory out = make_history(std::move(v), std::move(b));
    internal_check(critical_step(out) == crit, "xi: image critical step is misplaced");
    return out;
}

std::string steps_to_string(const LaguerreHistory& w) {
    std::string s;
    s.reserve(w.steps.size());
    for (Step st : w.steps) s += step_char(st);
    return s;
}

std::string weights_to_string(const LaguerreHistory& w) {
    std::string s;
    for (std::size_t i = 0; i < w.weights.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.weights[i]);
    }
    return s;
}

std::string to_string(const LaguerreHistory& w) {
    return steps_to_string(w) + " / " + weights_to_string(w);
}

LaguerreHistory parse_history(std::string_view steps_text, std::string_view weights_text) {
    std::vector<Step> steps;
    for (char ch : steps_text) {
        switch (ch) {
        case 'U': steps.push_back(Step::U); break;
        case 'D': steps.push_back(Step::D); break;
        case 'R': steps.push_back(Step::Lr); break;
        case 'B': steps.push_back(Step::Lb); break;
        default:
            throw HistoryError(HistoryError::Kind::BadFormat, 0,
                               std::string("unknown step letter '") + ch +
                                   "' (expected U, D, R, or B)");
        }
    }
    std::vector<int> weights;
    std::size_t i = 0;
    while (i < weights_text.size()) {
        std::size_t j = i;
        while (j < weights_text.size() && weights_text[j] != ',') ++j;
        int value = 0;
        auto begin = weights_text.data() + i;
        auto end = weights_text.data() + j;
        while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        while (ptr < end && std::isspace(static_cast<unsigned char>(*ptr))) ++ptr;
        if (ec != std::errc() || ptr != end)
            throw HistoryError(HistoryError::Kind::BadFormat, 0,
                               "weights must be a comma-separated integer list");
        weights.push_back(value);
        i = j + (j < weights_text.size() ? 1 : 0);
    }
    return make_history(std::move(steps), std::move(weights));
}

void check_history_cap(int n, bool prudent_only) {
    const int cap = prudent_only ? kMaxPrudentHistoryN : kMaxHistoryN;
    if (n < 0 || n > cap)
        throw std::invalid_argument("history enumeration is capped at n <= " +
                                    std::to_string(cap) + (prudent_only ? " (prudent)" : "") +
                                    " (requested n = " + std::to_string(n) + ")");
}

std::uint64_t count_histories(int n, bool prudent_only) {
    std::uint64_t count = 0;
    for_each_history(n, prudent_only, [&](const LaguerreHistory&) {
        ++count;
        return true;
    });
    return count;
}

std::vector<HistoryPrefix> history_prefixes(int n, bool prudent_only) {
    check_history_cap(n, prudent_only);
    std::vector<HistoryPrefix> out;
    if (n < 2) {
        out.push_back(HistoryPrefix{});
        return out;
    }
    // Enumerate the first two (step, weight) pairs with the same candidate
    // filtering and ordering as history_dfs, so blocks are contiguous in
    // canonical order and tile the space exactly.
    for (Step s1 : {Step::U, Step::D, Step::Lr, Step::Lb}) {
        const int h2 = s1 == Step::U ? 1 : s1 == Step::D ? -1 : 0;
        if (h2 < 0 || h2 > n - 1) continue;
        const int lo1 = is_up_class(s1) ? 0 : 1;
        if (lo1 > 0) continue; // first step has height 0
        for (int c1 = lo1; c1 <= 0; ++c1) {
            for (Step s2 : {Step::U, Step::D, Step::Lr, Step::Lb}) {
                const int h3 = h2 + (s2 == Step::U ? 1 : s2 == Step::D ? -1 : 0);
                if (h3 < 0 || h3 > n - 2) continue;
                int lo2 = is_up_class(s2) ? 0 : 1;
                int hi2 = h2;
                if (prudent_only) {
                    if (is_up_class(s1)) {
                        lo2 = std::max(lo2, c1);
                        hi2 = std::min(hi2, c1 + 1);
                    } else {
                        lo2 = std::max(lo2, c1 - 1);
                        hi2 = std::min(hi2, c1);
                    }
                }
                for (int c2 = lo2; c2 <= hi2; ++c2)
                    out.push_back(HistoryPrefix{{s1, s2}, {c1, c2}});
            }
        }
    }
    return out;
}

} // namespace vinc
