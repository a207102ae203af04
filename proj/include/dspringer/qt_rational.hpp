#pragma once

#include <string>
#include <vector>

#include "dspringer/qt_poly.hpp"

namespace dspringer {

/// Element of the fraction field Q(q,t), stored as numerator/denominator in
/// lowest terms with the denominator's leading coefficient positive.
class QTRational {
 public:
  QTRational() : den_(1) {}
  QTRational(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QTRational(QTPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError on a zero denominator.
  QTRational(QTPoly num, QTPoly den);

  const QTPoly& num() const { return num_; }
  const QTPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == QTPoly(1); }

  QTRational operator-() const;
  QTRational inverse() const;

  friend QTRational operator+(const QTRational& a, const QTRational& b);
  friend QTRational operator-(const QTRational& a, const QTRational& b);
  friend QTRational operator*(const QTRational& a, const QTRational& b);
  friend QTRational operator/(const QTRational& a, const QTRational& b);
  friend bool operator==(const QTRational& a, const QTRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  QTPoly num_;
  QTPoly den_;
};

using RationalMatrix = std::vector<std::vector<QTRational>>;

/// Solves matrix * x = rhs exactly by Gaussian elimination over Q(q,t).
/// Throws SingularMatrix when no solution is unique, SizeMismatch on bad shapes.
std::vector<QTRational> rational_solve(const RationalMatrix& matrix,
                                       const std::vector<QTRational>& rhs);

}  // namespace dspringer
