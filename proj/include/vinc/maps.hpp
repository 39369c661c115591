#pragma once

#include "vinc/laguerre.hpp"
#include "vinc/perm.hpp"

namespace vinc {

/// theta_hat(s) = hat(s_n) hat(s_{n-1}) ... hat(s_1) with hat(a) = n-a for
/// a < n and hat(n) = n. An involution.
Permutation theta_hat(const Permutation& sigma);

/// theta(p) = p^c_{n-1} p^c_{n-2} ... p^c_1 p^c_n with p^c_i = n+1-p_i.
/// An involution; conjugating by inversion gives theta_hat.
Permutation theta(const Permutation& pi);

/**
 * The biword bijection. Descent tops F and bottoms F' (complements G, G') are
 * paired rank by rank: ascending j in F receives the (312coord(j)+1)-th
 * largest unused element of F' below j; descending j in G receives the
 * (312coord(j)+1)-th smallest unused element of G' not below j. The image is
 * the bottom row sorted by top row.
 */
Permutation phi_sz(const Permutation& sigma);

/// Constructive inverse of phi_sz: recovers the ranks from the biword pairs,
/// classifies every letter by its neighbour comparisons, and rebuilds the
/// preimage by slot insertion (slots counted from the left).
Permutation phi_sz_inv(const Permutation& tau);

/// phi_sz_inv . theta_hat . phi_sz, an involution.
Permutation phi_hat(const Permutation& sigma);

/// fv_inverse . xi . fv_forward, pointwise equal to phi_hat.
Permutation phi_laguerre(const Permutation& sigma);

/// Composite history encoding fv_forward . phi_sz_inv . inverse, and its
/// inverse. Conjugating xi by it realises theta.
LaguerreHistory phi_fz(const Permutation& pi);
Permutation phi_fz_inv(const LaguerreHistory& w);

} // namespace vinc
