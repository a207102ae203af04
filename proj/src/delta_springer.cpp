#include "dspringer/delta_springer.hpp"

#include <algorithm>
#include <chrono>

#include "dspringer/errors.hpp"
#include "dspringer/hall_littlewood.hpp"
#include "dspringer/tableau.hpp"

namespace dspringer {

namespace {

Partition battery_rectangle(const DeltaParams& p) { return rectangle(p.n - p.k(), p.s - 1); }

SchurPoly divide_q_power(const SchurPoly& f, int m) {
  if (m == 0) return f;
  return f.map_coefficients(
      [m](const QTPoly& c) { return exact_div_q_power(c, static_cast<std::uint32_t>(m)); });
}

QTPoly q_slice(const QTPoly& c, int degree) {
  std::vector<QTPoly::Term> kept;
  for (const auto& term : c.terms())
    if (static_cast<int>(term.mono.q) == degree) kept.push_back(term);
  return QTPoly::from_terms(std::move(kept));
}

}  // namespace

std::string route_name(Route r) {
  switch (r) {
    case Route::Skew: return "skew";
    case Route::Battery: return "battery";
    case Route::HallLittlewood: return "hl";
    case Route::Charge: return "charge";
  }
  return "?";
}

Route parse_route(const std::string& name) {
  if (name == "skew") return Route::Skew;
  if (name == "battery") return Route::Battery;
  if (name == "hl") return Route::HallLittlewood;
  if (name == "charge") return Route::Charge;
  throw DomainError("unknown route '" + name + "'");
}

int normalization_exponent(const DeltaParams& p) {
  return static_cast<int>(binomial(p.s - 1, 2)) * (p.n - p.k());
}

int top_degree(const DeltaParams& p) { return n_stat(p.lambda) + (p.n - p.k()) * (p.s - 1); }

SchurPoly frobenius_via_skew(const DeltaParams& p) {
  p.validate();
  return divide_q_power(skewed_hl_modified(battery_rectangle(p), lambda_rect(p)),
                        normalization_exponent(p));
}

SchurPoly battery_cocharge_sum(const DeltaParams& p) {
  p.validate();
  SchurPoly out;
  for_each_battery_tableau(p, [&](const BatteryTableau& t) {
    out.add(t.device.shape(), QTPoly::q(static_cast<std::uint32_t>(cc_battery(t))));
  });
  return out;
}

SchurPoly frobenius_via_battery(const DeltaParams& p) {
  return divide_q_power(battery_cocharge_sum(p), normalization_exponent(p));
}

SchurPoly frobenius_via_hl(const DeltaParams& p) {
  p.validate();
  SchurPoly sum;
  for (const Composition& alpha : compositions_over(p.n, p.lambda, p.s)) {
    const int e = skew_n_stat(alpha, p.lambda) + coinv(alpha);
    sum += QTPoly::q(static_cast<std::uint32_t>(e)) * hl_transformed(sort(alpha));
  }
  return rev_q_schur(sum);
}

SchurPoly frobenius_charge_form(const DeltaParams& p) {
  p.validate();
  SchurPoly out;
  for_each_battery_tableau(p, [&](const BatteryTableau& t) {
    out.add(t.device.shape(), QTPoly::q(static_cast<std::uint32_t>(ch_battery(t))));
  });
  return out;
}

SchurPoly frobenius(const DeltaParams& p, Route route) {
  switch (route) {
    case Route::Skew: return frobenius_via_skew(p);
    case Route::Battery: return frobenius_via_battery(p);
    case Route::HallLittlewood: return frobenius_via_hl(p);
    case Route::Charge: return frobenius_charge_form(p);
  }
  throw DomainError("unknown route");
}

RouteReport route_report(const DeltaParams& p) {
  p.validate();
  RouteReport report;
  report.params = p;
  for (Route r : {Route::Skew, Route::Battery, Route::HallLittlewood, Route::Charge}) {
    const auto start = std::chrono::steady_clock::now();
    report.results[r] = frobenius(p, r);
    report.seconds[r] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  for_each_battery_tableau(p, [&](const BatteryTableau&) { ++report.battery_tableaux; });
  report.compositions = static_cast<long long>(compositions_over(p.n, p.lambda, p.s).size());
  const SchurPoly& skew_result = report.results[Route::Skew];
  report.agree = skew_result == report.results[Route::Battery] &&
                 skew_result == report.results[Route::HallLittlewood];
  report.charge_dual =
      report.results[Route::Charge] ==
      rev_q_schur(report.results[Route::Battery], static_cast<std::uint32_t>(top_degree(p)));
  return report;
}

std::vector<DeltaParams> sweep_params(int max_n) {
  std::vector<DeltaParams> out;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Partition& lambda : enumerate_partitions(k))
        for (int s = std::max(lambda.length(), 1); s <= n; ++s) out.push_back({n, lambda, s});
  return out;
}

QTPoly lr_kostka_coefficient(const Partition& mu, int n, int k) {
  if (k < 1 || k > n) throw DomainError("lr_kostka_coefficient: need 1 <= k <= n");
  if (mu.size() != n) throw SizeMismatch("lr_kostka_coefficient: |mu| must equal n");
  const Partition rect = rectangle(n - k, k - 1);
  const Partition target = rectangle(n - k + 1, k);
  QTPoly out;
  for (const Partition& nu : partitions_containing(target.size(), k, rect)) {
    if (!contains(nu, mu)) continue;
    const long long c = lr_count(nu, rect, mu);
    if (c == 0) continue;
    out += QTPoly(BigInt(static_cast<long>(c))) * q_kostka(nu, target, false);
  }
  return out;
}

std::vector<Partition> strip_extensions(const Partition& lambda, int n, int s) {
  std::vector<Partition> out;
  for (const Partition& nu : enumerate_partitions(n, s))
    if (contains(nu, lambda) && is_horizontal_strip(nu, lambda)) out.push_back(nu);
  return out;
}

TopDegreeResult top_degree_details(const DeltaParams& p) {
  TopDegreeResult r;
  const SchurPoly f = frobenius_via_skew(p);
  r.expected_degree = top_degree(p);
  r.actual_degree = f.q_degree();
  r.top_coefficient = f.map_coefficients(
      [&](const QTPoly& c) { return exact_div_q_power(q_slice(c, r.expected_degree), static_cast<std::uint32_t>(r.expected_degree)); });
  for (const Partition& nu : strip_extensions(p.lambda, p.n, p.s)) r.strip_sum.add(nu, QTPoly(1));
  r.skew_rectangle = skew(battery_rectangle(p), SchurPoly::schur(lambda_rect(p)));
  r.ok = r.actual_degree == r.expected_degree && r.top_coefficient == r.strip_sum &&
         r.top_coefficient == r.skew_rectangle;
  return r;
}

bool top_degree_check(const DeltaParams& p) { return top_degree_details(p).ok; }

}  // namespace dspringer
