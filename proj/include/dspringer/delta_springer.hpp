#pragma once

#include <map>
#include <string>
#include <vector>

#include "dspringer/partition.hpp"
#include "dspringer/schur.hpp"

namespace dspringer {

enum class Route { Skew, Battery, HallLittlewood, Charge };

std::string route_name(Route r);
/// Accepts "skew", "battery", "hl", "charge"; throws DomainError otherwise.
Route parse_route(const std::string& name);

/// C(s-1, 2) * (n-k): the q-power removed from the unnormalized sums.
int normalization_exponent(const DeltaParams& p);
/// n(lambda) + (n-k)(s-1): top q-degree of the Frobenius series.
int top_degree(const DeltaParams& p);

/// s_((n-k)^(s-1))^perp H~_Lambda divided by q^normalization.
SchurPoly frobenius_via_skew(const DeltaParams& p);
/// Sum of q^cc(T) s_sh+(T) over battery tableaux, before normalization.
SchurPoly battery_cocharge_sum(const DeltaParams& p);
SchurPoly frobenius_via_battery(const DeltaParams& p);
/// rev_q of the alpha-sum of q^(n(alpha/lambda)+coinv(alpha)) H_sort(alpha).
SchurPoly frobenius_via_hl(const DeltaParams& p);
/// Sum of q^ch(T) s_sh+(T) over battery tableaux.
SchurPoly frobenius_charge_form(const DeltaParams& p);
SchurPoly frobenius(const DeltaParams& p, Route route);

struct RouteReport {
  DeltaParams params;
  std::map<Route, SchurPoly> results;
  std::map<Route, double> seconds;
  long long battery_tableaux = 0;
  long long compositions = 0;
  /// Skew, battery and Hall-Littlewood results are identical.
  bool agree = false;
  /// Charge form equals rev_q of the battery route at top_degree.
  bool charge_dual = false;
};

RouteReport route_report(const DeltaParams& p);

/// Every (n, lambda, s) with 1 <= n <= max_n, |lambda| <= n and
/// l(lambda) <= s <= n, including lambda empty.
std::vector<DeltaParams> sweep_params(int max_n);

/// sum_nu c^nu_{mu,((n-k)^(k-1))} K_{nu,((n-k+1)^k)}(q).  Throws SizeMismatch
/// unless |mu| = n.
QTPoly lr_kostka_coefficient(const Partition& mu, int n, int k);

struct TopDegreeResult {
  int expected_degree = 0;
  int actual_degree = 0;
  SchurPoly top_coefficient;
  SchurPoly strip_sum;
  SchurPoly skew_rectangle;
  bool ok = false;
};

TopDegreeResult top_degree_details(const DeltaParams& p);
bool top_degree_check(const DeltaParams& p);

/// Shapes nu |- n with l(nu) <= s and nu/lambda a horizontal strip.
std::vector<Partition> strip_extensions(const Partition& lambda, int n, int s);

}  // namespace dspringer
