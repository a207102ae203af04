#include <doctest.h>

#include <random>

#include "dspringer/errors.hpp"
#include "dspringer/qt_poly.hpp"
#include "dspringer/qt_rational.hpp"

using namespace dspringer;

namespace {

QTPoly random_poly(std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coeff(-5, 5);
  std::vector<QTPoly::Term> out;
  for (int i = 0; i < terms; ++i)
    out.push_back({Monomial{static_cast<std::uint32_t>(deg(rng)), static_cast<std::uint32_t>(deg(rng))},
                   BigInt(coeff(rng))});
  return QTPoly::from_terms(std::move(out));
}

// Evaluation at integer points is an independent check of the ring laws.
BigInt eval(const QTPoly& f, long q, long t) {
  BigInt out = 0;
  for (const auto& term : f.terms()) {
    BigInt v = term.coeff;
    for (std::uint32_t i = 0; i < term.mono.q; ++i) v *= q;
    for (std::uint32_t i = 0; i < term.mono.t; ++i) v *= t;
    out += v;
  }
  return out;
}

}  // namespace

TEST_CASE("text form uses canonical term order") {
  CHECK(QTPoly(0).to_string() == "0");
  CHECK((QTPoly::q() + QTPoly::t()).to_string() == "t+q");
  CHECK((QTPoly(1) + QTPoly::q()).to_string() == "1+q");
  CHECK((QTPoly::q(2) * QTPoly::t(1) * QTPoly(-3)).to_string() == "-3*q^2*t");
}

TEST_CASE("from_terms merges duplicates and drops zeros") {
  const QTPoly f = QTPoly::from_terms({{Monomial{1, 0}, 2}, {Monomial{1, 0}, -2}, {Monomial{0, 1}, 1}});
  CHECK(f == QTPoly::t());
  CHECK(QTPoly::from_terms({}).is_zero());
}

TEST_CASE("ring laws agree with evaluation at integer points") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    const QTPoly a = random_poly(rng, 4, 5), b = random_poly(rng, 4, 5);
    for (long q : {-2L, 3L})
      for (long t : {-1L, 2L}) {
        CHECK(eval(a * b, q, t) == eval(a, q, t) * eval(b, q, t));
        CHECK(eval(a + b, q, t) == eval(a, q, t) + eval(b, q, t));
        CHECK(eval(a - b, q, t) == eval(a, q, t) - eval(b, q, t));
      }
  }
}

TEST_CASE("exact division recovers factors") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    const QTPoly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 3);
    if (b.is_zero()) continue;
    const auto quotient = try_divide(a * b, b);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == a);
  }
  CHECK_FALSE(try_divide(QTPoly::q() + QTPoly(1), QTPoly::t() + QTPoly(1)).has_value());
}

TEST_CASE("gcd of products contains the common factor") {
  const QTPoly common = QTPoly::q() - QTPoly::t();
  const QTPoly a = common * (QTPoly::q() + QTPoly(1));
  const QTPoly b = common * (QTPoly::t(2) + QTPoly(3));
  const QTPoly g = gcd(a, b);
  CHECK((g == common || g == -common));
  CHECK(gcd(QTPoly(), QTPoly()).is_zero());
}

TEST_CASE("q-integers, q-binomials and the two-variable integers") {
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(3) == QTPoly(1) + QTPoly::q() + QTPoly::q(2));
  CHECK(q_binomial(4, 2) == QTPoly::from_terms({{Monomial{0, 0}, 1}, {Monomial{1, 0}, 1}, {Monomial{2, 0}, 2},
                                                {Monomial{3, 0}, 1}, {Monomial{4, 0}, 1}}));
  CHECK(q_binomial(1, 2).is_zero());
  CHECK(q_binomial(0, 2).is_zero());
  CHECK(p_qt(0).is_zero());
  CHECK(p_qt(1) == QTPoly(1));
  CHECK(p_qt(2) == QTPoly::q() + QTPoly::t());
  CHECK(p_qt(3) == QTPoly::q(2) + QTPoly::q() * QTPoly::t() + QTPoly::t(2));
  // q-Pascal recurrence.
  for (unsigned n = 1; n <= 7; ++n)
    for (unsigned m = 1; m < n; ++m)
      CHECK(q_binomial(n, m) == q_binomial(n - 1, m - 1) + QTPoly::q(m) * q_binomial(n - 1, m));
}

TEST_CASE("rev_q reverses at the requested degree") {
  const QTPoly f = QTPoly(1) + QTPoly::q() * QTPoly::t() * QTPoly(2);
  CHECK(rev_q(f) == QTPoly::q() + QTPoly::t() * QTPoly(2));
  CHECK(rev_q(f, 3) == QTPoly::q(3) + QTPoly::q(2) * QTPoly::t() * QTPoly(2));
  CHECK_THROWS_AS(rev_q(QTPoly::q(4), 2), DomainError);
  CHECK(rev_q(rev_q(f, 5), 5) == f);
}

TEST_CASE("exact q-power division") {
  CHECK(exact_div_q_power(QTPoly::q(3) + QTPoly::q(5), 3) == QTPoly(1) + QTPoly::q(2));
  CHECK_THROWS_AS(exact_div_q_power(QTPoly::q(1) + QTPoly(1), 1), NonDivisible);
}

TEST_CASE("coefficients are arbitrary precision") {
  QTPoly f(1);
  const QTPoly two_q = QTPoly(2) * QTPoly::q();
  for (int i = 0; i < 70; ++i) f *= QTPoly(1) + two_q;  // (1+2q)^70
  CHECK(f.value_at_one().get_str() == "2503155504993241601315571986085849");
  CHECK(f.coeff(70, 0).get_str() == "1180591620717411303424");
}

TEST_CASE("rational arithmetic reduces to lowest terms") {
  const QTRational a(QTPoly::q() * QTPoly::q() - QTPoly::t() * QTPoly::t(), QTPoly::q() - QTPoly::t());
  CHECK(a.is_polynomial());
  CHECK(a.num() == QTPoly::q() + QTPoly::t());
  const QTRational half_sum = QTRational(1) / QTRational(QTPoly::q() - QTPoly::t());
  CHECK((half_sum * QTRational(QTPoly::q() - QTPoly::t())) == QTRational(1));
  CHECK_THROWS_AS(QTRational(QTPoly(1), QTPoly()), DomainError);
  CHECK((QTRational(1) / QTRational(QTPoly::q())).to_string() == "(1)/(q)");
}

TEST_CASE("rational solve on a small system") {
  // [[1, q], [t, 1]] x = [1 + q t, 2 t] has the solution x = [1, t].
  const RationalMatrix m{{QTRational(1), QTRational(QTPoly::q())}, {QTRational(QTPoly::t()), QTRational(1)}};
  const std::vector<QTRational> rhs{QTRational(QTPoly(1) + QTPoly::q() * QTPoly::t()),
                                    QTRational(QTPoly::t() + QTPoly::t())};
  const auto x = rational_solve(m, rhs);
  REQUIRE(x.size() == 2);
  CHECK(x[0] == QTRational(1));
  CHECK(x[1] == QTRational(QTPoly::t()));
  CHECK_THROWS_AS(rational_solve({{QTRational(1), QTRational(1)}, {QTRational(2), QTRational(2)}},
                                 {QTRational(1), QTRational(2)}),
                  SingularMatrix);
}
