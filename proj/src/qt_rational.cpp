#include "dspringer/qt_rational.hpp"

#include "dspringer/errors.hpp"

namespace dspringer {

namespace {

QTPoly divide_or_throw(const QTPoly& a, const QTPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error("internal: gcd does not divide operand");
  return *std::move(q);
}

}  // namespace

QTRational::QTRational(QTPoly num, QTPoly den) {
  if (den.is_zero()) throw DomainError("QTRational with zero denominator");
  if (num.is_zero()) {
    den_ = QTPoly(1);
    return;
  }
  const QTPoly g = gcd(num, den);
  if (!(g == QTPoly(1))) {
    num = divide_or_throw(num, g);
    den = divide_or_throw(den, g);
  }
  if (den.leading().coeff < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

QTRational QTRational::operator-() const {
  QTRational out = *this;
  out.num_ = -out.num_;
  return out;
}

QTRational QTRational::inverse() const {
  if (num_.is_zero()) throw DomainError("inverse of zero");
  return QTRational(den_, num_);
}

QTRational operator+(const QTRational& a, const QTRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return QTRational(a.num_ + b.num_, a.den_);
  return QTRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QTRational operator-(const QTRational& a, const QTRational& b) { return a + (-b); }

QTRational operator*(const QTRational& a, const QTRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return QTRational(a.num_ * b.num_, a.den_ * b.den_);
}

QTRational operator/(const QTRational& a, const QTRational& b) {
  return a * b.inverse();
}

std::string QTRational::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::vector<QTRational> rational_solve(const RationalMatrix& matrix,
                                       const std::vector<QTRational>& rhs) {
  const std::size_t n = matrix.size();
  if (rhs.size() != n) throw SizeMismatch("rational_solve: rhs length differs from row count");
  for (const auto& row : matrix)
    if (row.size() != n) throw SizeMismatch("rational_solve: matrix is not square");

  RationalMatrix a = matrix;
  std::vector<QTRational> b = rhs;
  for (std::size_t col = 0; col < n; ++col) {
    // Prefer the pivot with the fewest terms to limit growth.
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      if (pivot == n || a[r][col].num().size() + a[r][col].den().size() <
                            a[pivot][col].num().size() + a[pivot][col].den().size())
        pivot = r;
    }
    if (pivot == n) throw SingularMatrix("rational_solve: matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const QTRational inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const QTRational factor = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c)
        if (!a[col][c].is_zero()) a[r][c] = a[r][c] - factor * a[col][c];
      b[r] = b[r] - factor * b[col];
    }
  }
  std::vector<QTRational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    QTRational acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c)
      if (!a[i][c].is_zero()) acc = acc - a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace dspringer
