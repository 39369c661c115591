#include "vinc/stats.hpp"

#include <stdexcept>

namespace vinc {

int vincular_coord(VincularStat stat, int letter, const Permutation& sigma) {
    const int n = sigma.size();
    if (letter < 1 || letter > n) throw std::out_of_range("letter out of range");
    const int pos = sigma.position_of(letter);
    int count = 0;
    switch (stat) {
    case VincularStat::V213:
        for (int j = pos + 1; j < n; ++j)
            if (sigma(j) < letter && letter < sigma(j + 1)) ++count;
        break;
    case VincularStat::V231:
        for (int j = pos + 1; j < n; ++j)
            if (sigma(j + 1) < letter && letter < sigma(j)) ++count;
        break;
    case VincularStat::V312:
        for (int j = 2; j < pos; ++j)
            if (sigma(j) < letter && letter < sigma(j - 1)) ++count;
        break;
    case VincularStat::V132:
        for (int j = 2; j < pos; ++j)
            if (sigma(j - 1) < letter && letter < sigma(j)) ++count;
        break;
    }
    return count;
}

long vincular_total(VincularStat stat, const Permutation& sigma) {
    long total = 0;
    for (int l = 1; l <= sigma.size(); ++l) total += vincular_coord(stat, l, sigma);
    return total;
}

int cros_coord(const Permutation& sigma, int i) {
    const int n = sigma.size();
    if (i < 1 || i > n) throw std::out_of_range("index out of range");
    const int si = sigma(i);
    int count = 0;
    for (int j = 1; j <= n; ++j) {
        const int sj = sigma(j);
        if ((j < i && i <= sj && sj < si) || (j > i && i > sj && sj > si)) ++count;
    }
    return count;
}

int nest_coord(const Permutation& sigma, int i) {
    const int n = sigma.size();
    if (i < 1 || i > n) throw std::out_of_range("index out of range");
    const int si = sigma(i);
    int count = 0;
    for (int j = 1; j <= n; ++j) {
        const int sj = sigma(j);
        if ((j < i && i <= si && si < sj) || (j > i && i > si && si > sj)) ++count;
    }
    return count;
}

long cros_total(const Permutation& sigma) {
    long total = 0;
    for (int i = 1; i <= sigma.size(); ++i) total += cros_coord(sigma, i);
    return total;
}

long nest_total(const Permutation& sigma) {
    long total = 0;
    for (int i = 1; i <= sigma.size(); ++i) total += nest_coord(sigma, i);
    return total;
}

namespace {

template <class Pred>
long count_pairs(const Permutation& sigma, Pred&& pred) {
    const int n = sigma.size();
    long count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (pred(i, j, sigma(i), sigma(j))) ++count;
    return count;
}

} // namespace

long ecr(const Permutation& s) {
    const int n = s.size();
    return count_pairs(s, [n](int i, int j, int si, int sj) {
        return i < j && j <= si && si < sj && sj == n;
    });
}

long ucr(const Permutation& s) {
    const int n = s.size();
    return count_pairs(s, [n](int i, int j, int si, int sj) {
        return i < j && j <= si && si < sj && sj < n;
    });
}

long lcr(const Permutation& s) {
    return count_pairs(s, [](int i, int j, int si, int sj) {
        return i > j && j > si && si > sj;
    });
}

long ene(const Permutation& s) {
    const int n = s.size();
    return count_pairs(s, [n](int i, int j, int si, int sj) {
        return i < j && j <= sj && sj < si && si == n;
    });
}

long une(const Permutation& s) {
    const int n = s.size();
    return count_pairs(s, [n](int i, int j, int si, int sj) {
        return i < j && j <= sj && sj < si && si < n;
    });
}

long lne(const Permutation& s) {
    return count_pairs(s, [](int i, int j, int si, int sj) {
        return i > j && j > sj && sj > si;
    });
}

long ene_tilde(const Permutation& s) {
    const int n = s.size();
    return count_pairs(s, [n](int i, int j, int si, int sj) {
        return sj < j && j < i && i <= si && si == n;
    });
}

long nest_tilde(const Permutation& s) { return ene_tilde(s) + une(s) + lne(s); }

std::vector<int> aba_set(const Permutation& s) {
    const int n = s.size();
    std::vector<int> out;
    for (int i = 1; i < n; ++i)
        if (s(n) < s(i) && s(i) < s(i + 1)) out.push_back(s(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> dtb_set(const Permutation& s) {
    const int n = s.size();
    std::vector<int> out;
    for (int i = 1; i < n; ++i)
        if (s(i + 1) < s(i) && s(i) < s(n)) out.push_back(s(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ene_set(const Permutation& s) {
    const int n = s.size();
    std::vector<int> out;
    for (int j = 1; j <= n; ++j) {
        bool found = false;
        for (int i = 1; i < j && !found; ++i)
            found = j <= s(j) && s(j) < s(i) && s(i) == n;
        if (found) out.push_back(j);
    }
    return out;
}

std::vector<int> ene_tilde_set(const Permutation& s) {
    const int n = s.size();
    std::vector<int> out;
    for (int j = 1; j <= n; ++j) {
        bool found = false;
        for (int i = j + 1; i <= n && !found; ++i)
            found = s(j) < j && i <= s(i) && s(i) == n;
        if (found) out.push_back(j);
    }
    return out;
}

long crossnest_total(CrossNestKind kind, const Permutation& sigma) {
    switch (kind) {
    case CrossNestKind::Cros: return cros_total(sigma);
    case CrossNestKind::Nest: return nest_total(sigma);
    case CrossNestKind::Ecr: return ecr(sigma);
    case CrossNestKind::Ucr: return ucr(sigma);
    case CrossNestKind::Lcr: return lcr(sigma);
    case CrossNestKind::Ene: return ene(sigma);
    case CrossNestKind::Une: return une(sigma);
    case CrossNestKind::Lne: return lne(sigma);
    case CrossNestKind::EneTilde: return ene_tilde(sigma);
    case CrossNestKind::NestTilde: return nest_tilde(sigma);
    }
    throw std::invalid_argument("unknown crossing/nesting kind");
}

int crossnest_coord(CrossNestKind kind, int i, const Permutation& sigma) {
    switch (kind) {
    case CrossNestKind::Cros: return cros_coord(sigma, i);
    case CrossNestKind::Nest: return nest_coord(sigma, i);
    default: throw std::invalid_argument("coordinate form exists only for cros and nest");
    }
}

std::vector<int> set_stat(SetStatKind kind, const Permutation& sigma) {
    switch (kind) {
    case SetStatKind::Aba: return aba_set(sigma);
    case SetStatKind::Dtb: return dtb_set(sigma);
    case SetStatKind::Ene: return ene_set(sigma);
    case SetStatKind::EneTilde: return ene_tilde_set(sigma);
    }
    throw std::invalid_argument("unknown set statistic");
}

const char* stat_name(VincularStat stat) {
    switch (stat) {
    case VincularStat::V213: return "213";
    case VincularStat::V231: return "231";
    case VincularStat::V312: return "312";
    case VincularStat::V132: return "132";
    }
    return "?";
}

const char* stat_name(CrossNestKind kind) {
    switch (kind) {
    case CrossNestKind::Cros: return "cros";
    case CrossNestKind::Nest: return "nest";
    case CrossNestKind::Ecr: return "ecr";
    case CrossNestKind::Ucr: return "ucr";
    case CrossNestKind::Lcr: return "lcr";
    case CrossNestKind::Ene: return "ene";
    case CrossNestKind::Une: return "une";
    case CrossNestKind::Lne: return "lne";
    case CrossNestKind::EneTilde: return "ene-tilde";
    case CrossNestKind::NestTilde: return "nest-tilde";
    }
    return "?";
}

const char* stat_name(SetStatKind kind) {
    switch (kind) {
    case SetStatKind::Aba: return "aba";
    case SetStatKind::Dtb: return "dtb";
    case SetStatKind::Ene: return "ene-set";
    case SetStatKind::EneTilde: return "ene-tilde-set";
    }
    return "?";
}

} // namespace vinc
