#pragma once

#include <string>
#include <vector>

#include "vinc/perm.hpp"

namespace vinc {

/**
 * The four vincular statistics. V213 counts occurrences of 2-13 (the "13"
 * adjacent in position), V231 of 2-31, V312 of 31-2, V132 of 13-2. The
 * coordinate statistic fixes which letter plays the role of the "2".
 */
enum class VincularStat { V213, V231, V312, V132 };

/// Coordinate statistic at a fixed letter, computed from its set-builder
/// definition:
///   V213: #{ j : pos(l) < j < n and s_j   < l < s_{j+1} }
///   V231: #{ j : pos(l) < j < n and s_{j+1} < l < s_j }
///   V312: #{ j : 1 < j < pos(l)  and s_j   < l < s_{j-1} }
///   V132: #{ j : 1 < j < pos(l)  and s_{j-1} < l < s_j }
int vincular_coord(VincularStat stat, int letter, const Permutation& sigma);

/// Sum of the coordinate statistic over all letters 1..n.
long vincular_total(VincularStat stat, const Permutation& sigma);

/// Crossing/nesting coordinate at index i (an index into one-line notation):
///   cros(i): #{ j : j < i <= s_j < s_i  or  j > i > s_j > s_i }
///   nest(i): #{ j : j < i <= s_i < s_j  or  j > i > s_i > s_j }
int cros_coord(const Permutation& sigma, int i);
int nest_coord(const Permutation& sigma, int i);

long cros_total(const Permutation& sigma); // sum of cros coordinates
long nest_total(const Permutation& sigma); // sum of nest coordinates

// Refined crossing/nesting kinds, literal pair counts over [n] x [n].
long ecr(const Permutation& sigma);       // i < j <= s_i < s_j = n
long ucr(const Permutation& sigma);       // i < j <= s_i < s_j < n
long lcr(const Permutation& sigma);       // i > j >  s_i > s_j
long ene(const Permutation& sigma);       // i < j <= s_j < s_i = n
long une(const Permutation& sigma);       // i < j <= s_j < s_i < n
long lne(const Permutation& sigma);       // i > j >  s_j > s_i
long ene_tilde(const Permutation& sigma); // s_j < j < i <= s_i = n
long nest_tilde(const Permutation& sigma); // ene_tilde + une + lne

// Set-valued statistics (returned sorted ascending).
std::vector<int> aba_set(const Permutation& sigma);       // { s_i : s_n < s_i < s_{i+1} }
std::vector<int> dtb_set(const Permutation& sigma);       // { s_i : s_{i+1} < s_i < s_n }
std::vector<int> ene_set(const Permutation& sigma);       // { j : exists i, i < j <= s_j < s_i = n }
std::vector<int> ene_tilde_set(const Permutation& sigma); // { j : exists i, s_j < j < i <= s_i = n }

// Enumeration-friendly dispatch used by the CLI and the check registry.
enum class CrossNestKind { Cros, Nest, Ecr, Ucr, Lcr, Ene, Une, Lne, EneTilde, NestTilde };
enum class SetStatKind { Aba, Dtb, Ene, EneTilde };

long crossnest_total(CrossNestKind kind, const Permutation& sigma);
/// Coordinate form exists only for Cros and Nest.
int crossnest_coord(CrossNestKind kind, int i, const Permutation& sigma);
std::vector<int> set_stat(SetStatKind kind, const Permutation& sigma);

const char* stat_name(VincularStat stat);       // "213", "231", "312", "132"
const char* stat_name(CrossNestKind kind);      // "cros", ..., "nest-tilde"
const char* stat_name(SetStatKind kind);        // "aba", "dtb", "ene-set", "ene-tilde-set"

} // namespace vinc
