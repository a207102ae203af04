#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dspringer/partition.hpp"
#include "dspringer/schur.hpp"

namespace dspringer {

/// omega Delta'_{e_{k-1}} e_n.
SchurPoly omega_delta(int n, int k);

/// One summand coeff * H_shape of a conjectured expression.  When the raw
/// tuple is not a partition the term is skipped and `skipped` says why.
struct ConjectureTerm {
  QTPoly coeff;
  std::vector<int> raw;
  std::optional<Partition> shape;
  std::string skipped;
};

struct ConjectureResult {
  int n = 0;
  int k = 0;
  int power = 0;
  std::vector<ConjectureTerm> terms;
  SchurPoly expected;
  SchurPoly observed;
  bool ok = false;
};

/// Terms of the t^1 and t^2 coefficient conjectures before skewing by
/// ((n-k)^(k-1)).
std::vector<ConjectureTerm> conjecture_terms(int n, int k, int power);
/// Requires 2 <= k <= n and power in {1, 2}.
ConjectureResult conjecture_result(int n, int k, int power);
bool conjecture_t1_check(int n, int k);
bool conjecture_t2_check(int n, int k);

/// -s_(n) + sum_i s_(n-i,i) sum_{p=i}^{n-i} [p]_{q,t}.
SchurPoly k2_closed_form(int n);
/// h_{n-2}^perp sum_i t^i H_(n-1+i, n-1-i).
SchurPoly k2_proposition_rhs(int n);
/// The same sum with omega applied to each H, skewed by (1^(n-2)).
SchurPoly k2_whittaker_rhs(int n);

struct K2Result {
  int n = 0;
  SchurPoly rhs;
  SchurPoly closed_form;
  std::optional<SchurPoly> macdonald;
  bool rhs_matches_closed_form = false;
  bool whittaker_matches = false;
  /// True when the Macdonald side was not computed.
  bool macdonald_matches = true;
  bool ok = false;
};

/// Compares with the Macdonald route when n is within the Macdonald guard.
K2Result k2_proposition(int n);
bool k2_proposition_check(int n);

/// A published expansion s_skew^perp sum coeff * H_shape of
/// omega Delta'_{e_{k-1}} e_n for a fixed (n, k).
struct HExpansion {
  int n = 0;
  int k = 0;
  Partition skew_by;
  std::vector<std::pair<QTPoly, Partition>> terms;
};

HExpansion expansion_4_3();
HExpansion expansion_5_3();
/// expansion_5_3 with t^3 (H_621 + H_63) replaced by t^3 ((q+2) H_63 + H_72).
HExpansion expansion_5_3_alternative();
SchurPoly evaluate_expansion(const HExpansion& d);
bool expansion_check(const HExpansion& d);

struct T0Result {
  SchurPoly reversed;      // omega rev_q(Delta'|_{t=0})
  SchurPoly skew_route;    // frobenius_via_skew(n, (1^k), k)
  SchurPoly specialized;   // omega Delta'|_{t=0}
  SchurPoly skew_transformed;  // s_R^perp H_((n-k+1)^k)
  SchurPoly charge_omega;  // omega of the charge form
  bool ok = false;
};

/// t = 0 specialization of Delta'_{e_{k-1}} e_n against the skew route,
/// the transformed skew expression and the charge form.
T0Result t0_result(int n, int k);
bool t0_check(int n, int k);

}  // namespace dspringer
