#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dspringer {

using BigInt = mpz_class;

/// Exponent pair of a monomial q^q t^t.  Ordered lexicographically by
/// (q, t), which is the canonical term order everywhere in the library.
struct Monomial {
  std::uint32_t q = 0;
  std::uint32_t t = 0;

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in two commuting indeterminates q and t with
/// arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by Monomial order and no stored coefficient is
/// zero, so structural equality is polynomial equality.
class QTPoly {
 public:
  struct Term {
    Monomial mono;
    BigInt coeff;
  };

  QTPoly() = default;
  QTPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit QTPoly(const BigInt& constant);

  static QTPoly monomial(const BigInt& coeff, std::uint32_t q_exp,
                         std::uint32_t t_exp);
  static QTPoly q(std::uint32_t e = 1) { return monomial(1, e, 0); }
  static QTPoly t(std::uint32_t e = 1) { return monomial(1, 0, e); }
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static QTPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  /// Highest q exponent, or -1 for the zero polynomial.
  int q_degree() const;
  int t_degree() const;
  /// Smallest q exponent among the terms, or -1 for zero.
  int min_q_exp() const;

  BigInt coeff(std::uint32_t q_exp, std::uint32_t t_exp) const;
  /// Leading term under the canonical order (largest (q,t)).
  const Term& leading() const { return terms_.back(); }

  /// Coefficient of t^j, returned as a polynomial in q alone.
  QTPoly t_coefficient(std::uint32_t j) const;
  QTPoly swap_qt() const;
  QTPoly times_monomial(std::uint32_t q_exp, std::uint32_t t_exp) const;
  /// Evaluates at q=1, t=1.
  BigInt value_at_one() const;
  bool all_nonnegative() const;

  QTPoly& operator+=(const QTPoly& other);
  QTPoly& operator-=(const QTPoly& other);
  QTPoly& operator*=(const QTPoly& other);
  QTPoly operator-() const;

  friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
  friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
  friend bool operator==(const QTPoly& a, const QTPoly& b);

  /// Canonical text form, e.g. "1+2*q-q^2*t"; "0" for zero.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// q-reversal: q^d f(1/q).  With no degree given, d is the q-degree of f.
/// Throws DomainError when d is below the q-degree.
QTPoly rev_q(const QTPoly& f, std::optional<std::uint32_t> degree = {});

/// [n]_q = 1 + q + ... + q^{n-1}.
QTPoly q_integer(unsigned n);
/// Gaussian binomial coefficient; zero when m > n.
QTPoly q_binomial(unsigned n, unsigned m);
/// [p]_{q,t} = sum_{j<p} q^j t^{p-1-j}.
QTPoly p_qt(unsigned p);

/// f / q^m.  Throws NonDivisible if some term has q exponent below m.
QTPoly exact_div_q_power(const QTPoly& f, std::uint32_t m);

/// Exact quotient a / b in Z[q,t], or nullopt when b does not divide a.
std::optional<QTPoly> try_divide(const QTPoly& a, const QTPoly& b);
/// Greatest common divisor in Z[q,t], normalized to a positive leading
/// coefficient.  gcd(0, 0) = 0.
QTPoly gcd(const QTPoly& a, const QTPoly& b);

}  // namespace dspringer
