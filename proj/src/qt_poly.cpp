#include "dspringer/qt_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "dspringer/errors.hpp"

namespace dspringer {

namespace {

std::uint64_t pack(Monomial m) {
  return (static_cast<std::uint64_t>(m.q) << 32) | m.t;
}

Monomial unpack(std::uint64_t key) {
  return {static_cast<std::uint32_t>(key >> 32),
          static_cast<std::uint32_t>(key & 0xffffffffu)};
}

}  // namespace

QTPoly::QTPoly(long constant) {
  if (constant != 0) terms_.push_back({{0, 0}, BigInt(constant)});
}

QTPoly::QTPoly(const BigInt& constant) {
  if (constant != 0) terms_.push_back({{0, 0}, constant});
}

QTPoly QTPoly::monomial(const BigInt& coeff, std::uint32_t q_exp,
                        std::uint32_t t_exp) {
  QTPoly p;
  if (coeff != 0) p.terms_.push_back({{q_exp, t_exp}, coeff});
  return p;
}

QTPoly QTPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  QTPoly p;
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == term.mono) {
      p.terms_.back().coeff += term.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool QTPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

int QTPoly::q_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.q);
}

int QTPoly::t_degree() const {
  int d = -1;
  for (const auto& term : terms_) d = std::max(d, static_cast<int>(term.mono.t));
  return d;
}

int QTPoly::min_q_exp() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.q);
}

BigInt QTPoly::coeff(std::uint32_t q_exp, std::uint32_t t_exp) const {
  const Monomial m{q_exp, t_exp};
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& term, const Monomial& key) { return term.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

QTPoly QTPoly::t_coefficient(std::uint32_t j) const {
  QTPoly out;
  for (const auto& term : terms_)
    if (term.mono.t == j) out.terms_.push_back({{term.mono.q, 0}, term.coeff});
  return out;
}

QTPoly QTPoly::swap_qt() const {
  std::vector<Term> swapped;
  swapped.reserve(terms_.size());
  for (const auto& term : terms_)
    swapped.push_back({{term.mono.t, term.mono.q}, term.coeff});
  return from_terms(std::move(swapped));
}

QTPoly QTPoly::times_monomial(std::uint32_t q_exp, std::uint32_t t_exp) const {
  QTPoly out = *this;
  for (auto& term : out.terms_) {
    term.mono.q += q_exp;
    term.mono.t += t_exp;
  }
  return out;
}

BigInt QTPoly::value_at_one() const {
  BigInt sum = 0;
  for (const auto& term : terms_) sum += term.coeff;
  return sum;
}

bool QTPoly::all_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& term) { return term.coeff > 0; });
}

QTPoly& QTPoly::operator+=(const QTPoly& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      merged.push_back(*b++);
    } else {
      BigInt c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& other) { return *this += -other; }

QTPoly QTPoly::operator-() const {
  QTPoly out = *this;
  for (auto& term : out.terms_) term.coeff = -term.coeff;
  return out;
}

QTPoly& QTPoly::operator*=(const QTPoly& other) {
  *this = *this * other;
  return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() * b.size() <= 64) {
    std::vector<QTPoly::Term> products;
    products.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_)
        products.push_back(
            {{x.mono.q + y.mono.q, x.mono.t + y.mono.t}, x.coeff * y.coeff});
    return QTPoly::from_terms(std::move(products));
  }
  std::unordered_map<std::uint64_t, BigInt> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      acc[pack({x.mono.q + y.mono.q, x.mono.t + y.mono.t})] += x.coeff * y.coeff;
  std::vector<QTPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [key, c] : acc)
    if (c != 0) terms.push_back({unpack(key), std::move(c)});
  return QTPoly::from_terms(std::move(terms));
}

bool operator==(const QTPoly& a, const QTPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::string QTPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& term : terms_) {
    BigInt c = term.coeff;
    if (c < 0) {
      out << '-';
      c = -c;
    } else if (!first) {
      out << '+';
    }
    first = false;
    const bool unit_mono = term.mono == Monomial{};
    if (c != 1 || unit_mono) {
      out << c.get_str();
      if (!unit_mono) out << '*';
    }
    bool need_star = false;
    if (term.mono.q > 0) {
      out << 'q';
      if (term.mono.q > 1) out << '^' << term.mono.q;
      need_star = true;
    }
    if (term.mono.t > 0) {
      if (need_star) out << '*';
      out << 't';
      if (term.mono.t > 1) out << '^' << term.mono.t;
    }
  }
  return out.str();
}

QTPoly rev_q(const QTPoly& f, std::optional<std::uint32_t> degree) {
  if (f.is_zero()) return {};
  const int qdeg = f.q_degree();
  const std::uint32_t d = degree.value_or(static_cast<std::uint32_t>(qdeg));
  if (static_cast<int>(d) < qdeg)
    throw DomainError("rev_q: degree " + std::to_string(d) +
                      " below q-degree " + std::to_string(qdeg));
  std::vector<QTPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& term : f.terms())
    terms.push_back({{d - term.mono.q, term.mono.t}, term.coeff});
  return QTPoly::from_terms(std::move(terms));
}

QTPoly q_integer(unsigned n) {
  std::vector<QTPoly::Term> terms;
  for (unsigned j = 0; j < n; ++j) terms.push_back({{j, 0}, 1});
  return QTPoly::from_terms(std::move(terms));
}

QTPoly q_binomial(unsigned n, unsigned m) {
  if (m > n) return {};
  // Pascal recursion: [n,m] = [n-1,m-1] + q^m [n-1,m].
  std::vector<std::vector<QTPoly>> table(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    table[i].resize(std::min(i, m) + 1);
    table[i][0] = QTPoly(1);
    for (unsigned j = 1; j <= std::min(i, m); ++j) {
      QTPoly value = table[i - 1][j - 1];
      if (j <= i - 1) value += table[i - 1][j].times_monomial(j, 0);
      table[i][j] = std::move(value);
    }
  }
  return table[n][m];
}

QTPoly p_qt(unsigned p) {
  std::vector<QTPoly::Term> terms;
  for (unsigned j = 0; j < p; ++j) terms.push_back({{j, p - 1 - j}, 1});
  return QTPoly::from_terms(std::move(terms));
}

QTPoly exact_div_q_power(const QTPoly& f, std::uint32_t m) {
  if (f.is_zero() || m == 0) return f;
  if (f.min_q_exp() < static_cast<int>(m))
    throw NonDivisible("polynomial " + f.to_string() + " is not divisible by q^" +
                       std::to_string(m));
  std::vector<QTPoly::Term> terms = f.terms();
  for (auto& term : terms) term.mono.q -= m;
  return QTPoly::from_terms(std::move(terms));
}

std::optional<QTPoly> try_divide(const QTPoly& a, const QTPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return QTPoly{};
  const auto& lead_b = b.leading();
  std::map<Monomial, BigInt> rem;
  for (const auto& term : a.terms()) rem.emplace(term.mono, term.coeff);
  std::vector<QTPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Monomial m = top->first;
    if (m.q < lead_b.mono.q || m.t < lead_b.mono.t) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead_b.coeff.get_mpz_t()))
      return std::nullopt;
    BigInt c = top->second / lead_b.coeff;
    const Monomial shift{m.q - lead_b.mono.q, m.t - lead_b.mono.t};
    for (const auto& term : b.terms()) {
      const Monomial target{term.mono.q + shift.q, term.mono.t + shift.t};
      auto it = rem.find(target);
      if (it == rem.end()) {
        rem.emplace(target, -c * term.coeff);
      } else {
        it->second -= c * term.coeff;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.push_back({shift, std::move(c)});
  }
  return QTPoly::from_terms(std::move(quotient));
}

}  // namespace dspringer
