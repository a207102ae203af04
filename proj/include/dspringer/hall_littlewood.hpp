#pragma once

#include "dspringer/partition.hpp"
#include "dspringer/schur.hpp"

namespace dspringer {

/// H_mu(x;q) = sum over SSYT of content mu of q^charge s_shape.
/// Throws GuardExceeded when |mu| exceeds the Hall-Littlewood size guard.
SchurPoly hl_transformed(const Partition& mu);
/// H~_mu(x;q) = sum over SSYT of content mu of q^cocharge s_shape.
SchurPoly hl_modified(const Partition& mu);

/// Coefficient of s_nu in H~_mu (modified) or H_mu.  Throws SizeMismatch.
QTPoly q_kostka(const Partition& nu, const Partition& mu, bool modified);

/// For every mu |- ab inside (a^(b+1)): exactly one SSYT of shape (a^b)
/// and content mu, with cocharge a*C(b,2).
bool rect_kostka_lemma_check(int a, int b);

/// s_rho^perp H~_mu computed from the q-Kostka polynomials of the shapes
/// containing rho only.  Subject to the skew size guard instead of the
/// Hall-Littlewood guard.
SchurPoly skewed_hl_modified(const Partition& rho, const Partition& mu);

/// Partitions of `size` with at most `max_len` parts containing `inner`,
/// reverse-lexicographic.  No enumeration guard; callers bound the size.
std::vector<Partition> partitions_containing(int size, int max_len, const Partition& inner);

}  // namespace dspringer
