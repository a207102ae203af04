#include "dspringer/conjectures.hpp"

#include "dspringer/delta_springer.hpp"
#include "dspringer/errors.hpp"
#include "dspringer/guards.hpp"
#include "dspringer/hall_littlewood.hpp"
#include "dspringer/macdonald.hpp"

namespace dspringer {

namespace {

std::vector<int> repeat(int value, int times) {
  return std::vector<int>(static_cast<std::size_t>(times), value);
}

std::vector<int> concat(std::initializer_list<std::vector<int>> pieces) {
  std::vector<int> out;
  for (const auto& p : pieces) out.insert(out.end(), p.begin(), p.end());
  return out;
}

ConjectureTerm make_term(QTPoly coeff, std::vector<int> raw) {
  ConjectureTerm term{std::move(coeff), raw, std::nullopt, ""};
  while (!raw.empty() && raw.back() == 0) raw.pop_back();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) {
      term.skipped = "negative part";
      return term;
    }
    if (i > 0 && raw[i] > raw[i - 1]) {
      term.skipped = "not weakly decreasing";
      return term;
    }
  }
  term.shape = Partition(raw);
  return term;
}

ConjectureTerm undefined_term(QTPoly coeff, std::string why) {
  return ConjectureTerm{std::move(coeff), {}, std::nullopt, std::move(why)};
}

SchurPoly sum_transformed(const std::vector<std::pair<QTPoly, Partition>>& terms) {
  SchurPoly out;
  for (const auto& [c, shape] : terms) out += c * hl_transformed(shape);
  return out;
}

QTPoly qt(std::initializer_list<std::tuple<long, unsigned, unsigned>> monos) {
  QTPoly out;
  for (const auto& [c, qe, te] : monos) out += QTPoly::monomial(BigInt(c), qe, te);
  return out;
}

}  // namespace

SchurPoly omega_delta(int n, int k) { return omega(delta_prime_e(k - 1, n)); }

std::vector<ConjectureTerm> conjecture_terms(int n, int k, int power) {
  if (k < 2 || k > n) throw DomainError("conjecture terms need 2 <= k <= n");
  const int a = n - k;
  const auto ku = static_cast<unsigned>(k);
  const std::vector<int> first = concat({{a + 2}, repeat(a + 1, k - 2), {a}});
  std::vector<ConjectureTerm> out;
  if (power == 1) {
    out.push_back(make_term(q_integer(ku - 1), first));
  } else if (power == 2) {
    out.push_back(make_term(q_integer(ku - 2), first));
    if (k >= 4)
      out.push_back(make_term(q_binomial(ku - 2, 2), concat({{a + 2, a + 2}, repeat(a + 1, k - 4), {a, a}})));
    else
      out.push_back(undefined_term(q_binomial(ku - 2, 2), "k - 4 < 0"));
    out.push_back(make_term(q_integer(ku - 1), concat({{a + 3}, repeat(a + 1, k - 2), {a - 1}})));
  } else {
    throw DomainError("conjecture terms exist for t^1 and t^2 only");
  }
  return out;
}

ConjectureResult conjecture_result(int n, int k, int power) {
  ConjectureResult r;
  r.n = n;
  r.k = k;
  r.power = power;
  r.terms = conjecture_terms(n, k, power);
  SchurPoly inside;
  for (const auto& term : r.terms)
    if (term.shape) inside += term.coeff * hl_transformed(*term.shape);
  r.expected = skew(rectangle(n - k, k - 1), inside);
  r.observed = t_coefficient(omega_delta(n, k), static_cast<std::uint32_t>(power));
  r.ok = r.expected == r.observed;
  return r;
}

bool conjecture_t1_check(int n, int k) { return conjecture_result(n, k, 1).ok; }
bool conjecture_t2_check(int n, int k) { return conjecture_result(n, k, 2).ok; }

SchurPoly k2_closed_form(int n) {
  if (n < 2) throw DomainError("k2_closed_form needs n >= 2");
  SchurPoly out = -SchurPoly::schur(Partition{n});
  for (int i = 0; i <= n / 2; ++i) {
    QTPoly c;
    for (int p = i; p <= n - i; ++p) c += p_qt(static_cast<unsigned>(p));
    out += SchurPoly::schur(Partition{n - i, i}, c);
  }
  return out;
}

SchurPoly k2_proposition_rhs(int n) {
  if (n < 2) throw DomainError("k2_proposition_rhs needs n >= 2");
  SchurPoly sum;
  for (int i = 0; i < n; ++i)
    sum += QTPoly::t(static_cast<std::uint32_t>(i)) * hl_transformed(Partition{n - 1 + i, n - 1 - i});
  return skew(Partition{n - 2}, sum);
}

SchurPoly k2_whittaker_rhs(int n) {
  if (n < 2) throw DomainError("k2_whittaker_rhs needs n >= 2");
  SchurPoly sum;
  for (int i = 0; i < n; ++i)
    sum += QTPoly::t(static_cast<std::uint32_t>(i)) *
           omega(hl_transformed(Partition{n - 1 + i, n - 1 - i}));
  return skew(rectangle(1, n - 2), sum);
}

K2Result k2_proposition(int n) {
  K2Result r;
  r.n = n;
  r.rhs = k2_proposition_rhs(n);
  r.closed_form = k2_closed_form(n);
  r.rhs_matches_closed_form = r.rhs == r.closed_form;
  r.whittaker_matches = k2_whittaker_rhs(n) == omega(r.closed_form);
  if (n <= guards().max_macdonald_n) {
    r.macdonald = omega_delta(n, 2);
    r.macdonald_matches = *r.macdonald == r.rhs;
  }
  r.ok = r.rhs_matches_closed_form && r.whittaker_matches && r.macdonald_matches;
  return r;
}

bool k2_proposition_check(int n) { return k2_proposition(n).ok; }

HExpansion expansion_4_3() {
  return {4, 3, Partition{1, 1},
          {{QTPoly(1), Partition{2, 2, 2}},
           {qt({{1, 0, 1}, {1, 1, 1}, {1, 0, 2}}), Partition{3, 2, 1}},
           {qt({{1, 0, 2}, {1, 1, 2}, {2, 0, 3}, {1, 0, 4}}), Partition{4, 2}},
           {qt({{1, 0, 3}, {1, 0, 4}, {1, 0, 5}}), Partition{5, 1}}}};
}

HExpansion expansion_5_3() {
  return {5, 3, Partition{2, 2},
          {{QTPoly(1), Partition{3, 3, 3}},
           {qt({{1, 0, 1}, {1, 1, 1}}), Partition{4, 3, 2}},
           {qt({{1, 0, 2}, {1, 1, 2}, {1, 0, 3}, {1, 0, 4}}), Partition{5, 3, 1}},
           {qt({{1, 0, 3}}), Partition{4, 4, 1}},
           {qt({{1, 0, 3}, {1, 0, 4}, {1, 0, 5}}), Partition{5, 4}},
           {qt({{1, 0, 3}}), Partition{6, 2, 1}},
           {qt({{1, 0, 3}, {2, 0, 4}, {2, 0, 5}, {1, 0, 6}}), Partition{6, 3}},
           {qt({{1, 0, 4}, {2, 0, 5}, {1, 0, 6}, {1, 0, 7}}), Partition{7, 2}}}};
}

HExpansion expansion_5_3_alternative() {
  return {5, 3, Partition{2, 2},
          {{QTPoly(1), Partition{3, 3, 3}},
           {qt({{1, 0, 1}, {1, 1, 1}}), Partition{4, 3, 2}},
           {qt({{1, 0, 2}, {1, 1, 2}, {1, 0, 3}, {1, 0, 4}}), Partition{5, 3, 1}},
           {qt({{1, 0, 3}}), Partition{4, 4, 1}},
           {qt({{1, 0, 3}, {1, 0, 4}, {1, 0, 5}}), Partition{5, 4}},
           {qt({{2, 0, 3}, {1, 1, 3}, {2, 0, 4}, {2, 0, 5}, {1, 0, 6}}), Partition{6, 3}},
           {qt({{1, 0, 3}, {1, 0, 4}, {2, 0, 5}, {1, 0, 6}, {1, 0, 7}}), Partition{7, 2}}}};
}

SchurPoly evaluate_expansion(const HExpansion& d) { return skew(d.skew_by, sum_transformed(d.terms)); }

bool expansion_check(const HExpansion& d) { return evaluate_expansion(d) == omega_delta(d.n, d.k); }

T0Result t0_result(int n, int k) {
  if (k < 1 || k > n) throw DomainError("t0_result needs 1 <= k <= n");
  T0Result r;
  const DeltaParams p{n, Partition(repeat(1, k)), k};
  const SchurPoly at_zero = specialize_t0(delta_prime_e(k - 1, n));
  r.reversed = omega(rev_q_schur(at_zero));
  r.skew_route = frobenius_via_skew(p);
  r.specialized = omega(at_zero);
  r.skew_transformed = skew(rectangle(n - k, k - 1), hl_transformed(rectangle(n - k + 1, k)));
  r.charge_omega = omega(frobenius_charge_form(p));
  r.ok = r.reversed == r.skew_route && r.specialized == r.skew_transformed &&
         r.charge_omega == at_zero;
  return r;
}

bool t0_check(int n, int k) { return t0_result(n, k).ok; }

}  // namespace dspringer
