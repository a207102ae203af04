#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "dspringer/partition.hpp"
#include "dspringer/qt_poly.hpp"

namespace dspringer {

/// Symmetric function in the Schur basis with Z[q,t] coefficients.  Zero
/// coefficients are never stored.
class SchurPoly {
 public:
  using Terms = std::map<Partition, QTPoly>;

  SchurPoly() = default;
  /// coeff * s_p.
  static SchurPoly schur(const Partition& p, const QTPoly& coeff = QTPoly(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QTPoly coeff(const Partition& p) const;

  /// Adds c * s_p, dropping the key if the sum vanishes.
  void add(const Partition& p, const QTPoly& c);

  /// Largest q (resp. t) exponent over all coefficients; -1 for zero.
  int q_degree() const;
  int t_degree() const;
  /// Applies fn to every coefficient, dropping zero results.
  SchurPoly map_coefficients(const std::function<QTPoly(const QTPoly&)>& fn) const;

  SchurPoly& operator+=(const SchurPoly& other);
  SchurPoly& operator-=(const SchurPoly& other);
  SchurPoly operator-() const;
  friend SchurPoly operator+(SchurPoly a, const SchurPoly& b) { return a += b; }
  friend SchurPoly operator-(SchurPoly a, const SchurPoly& b) { return a -= b; }
  friend SchurPoly operator*(const QTPoly& c, const SchurPoly& f);
  friend bool operator==(const SchurPoly&, const SchurPoly&);

  /// "(1+q)*s[2] + q*s[1,1]", largest partition first; "0" for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Product via Littlewood-Richardson chains of horizontal strips.
SchurPoly schur_mul(const SchurPoly& f, const SchurPoly& g);
/// s_mu^perp f via Littlewood-Richardson fillings of nu/mu.
SchurPoly skew(const Partition& mu, const SchurPoly& f);
/// c^nu_{eta,rho} computed on the product side (independent of lr_count).
long long lr_coefficient_product_side(const Partition& nu, const Partition& eta,
                                      const Partition& rho);
SchurPoly omega(const SchurPoly& f);
QTPoly hall_inner(const SchurPoly& f, const SchurPoly& g);
/// q-reversal of every coefficient with one global degree (default: the
/// largest q-degree over all terms).
SchurPoly rev_q_schur(const SchurPoly& f, std::optional<std::uint32_t> degree = {});
SchurPoly e_n(int n);
SchurPoly h_n(int n);

/// Number of SSYT of shape nu and content mu (cached).
long long kostka_number(const Partition& nu, const Partition& mu);
/// Monomial-basis coefficients (keyed by partition) of f.
std::map<Partition, QTPoly> schur_to_monomial(const SchurPoly& f);
/// Inverts the unitriangular Kostka system.  Throws InconsistentSystem if
/// a residue survives.
SchurPoly monomial_to_schur(const std::map<Partition, QTPoly>& coeffs);

/// Drops every term with a positive power of t.
SchurPoly specialize_t0(const SchurPoly& f);
/// Coefficient of t^j, as a q-only symmetric function.
SchurPoly t_coefficient(const SchurPoly& f, std::uint32_t j);
/// Exchanges q and t in every coefficient.
SchurPoly swap_qt(const SchurPoly& f);
/// Sets q = 1 and t = 1 in every coefficient.
std::map<Partition, BigInt> evaluate_at_one(const SchurPoly& f);

}  // namespace dspringer
