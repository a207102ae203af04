// GCD in Z[q,t] by recursive primitive polynomial remainder sequences:
// Z[q,t] is treated as (Z[q])[t], and Z[q] gcds use the same scheme over Z.

#include <algorithm>

#include "dspringer/errors.hpp"
#include "dspringer/qt_poly.hpp"

namespace dspringer {

namespace {

using ZPoly = std::vector<BigInt>;   // dense in q, index = exponent
using ZQTPoly = std::vector<ZPoly>;  // dense in t over Z[q]

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(ZQTPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly scale_div(const ZPoly& p, const BigInt& d) {
  ZPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(out[i].get_mpz_t(), p[i].get_mpz_t(), d.get_mpz_t());
  return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Exact division in Z[q]; the caller guarantees divisibility.
ZPoly exact_div(ZPoly a, const ZPoly& b) {
  if (a.empty()) return {};
  ZPoly quotient(a.size() - b.size() + 1);
  const BigInt& lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) continue;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), a[i].get_mpz_t(), lead.get_mpz_t());
    const std::size_t shift = i - (b.size() - 1);
    quotient[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(quotient);
  return quotient;
}

// Pseudo-remainder of a by b in Z[q].
ZPoly prem(ZPoly a, const ZPoly& b) {
  const BigInt& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const BigInt top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lead;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= top * b[j];
    trim(a);
  }
  return a;
}

ZPoly primitive(const ZPoly& p) {
  if (p.empty()) return p;
  BigInt c = content(p);
  if (p.back() < 0) c = -c;
  return scale_div(p, c);
}

ZPoly gcd_zq(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) {
    ZPoly out = a.empty() ? b : a;
    if (!out.empty() && out.back() < 0)
      for (auto& c : out) c = -c;
    return out;
  }
  BigInt g;
  const BigInt ca = content(a), cb = content(b);
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZPoly x = primitive(a), y = primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = prem(x, y);
    x = std::move(y);
    y = primitive(r);
  }
  for (auto& c : x) c *= g;
  return x;
}

ZPoly content_t(const ZQTPoly& p) {
  ZPoly g;
  for (const auto& c : p) {
    g = gcd_zq(g, c);
    if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) break;
  }
  if (!g.empty() && g.back() < 0)
    for (auto& c : g) c = -c;
  return g;
}

ZQTPoly primitive_t(const ZQTPoly& p) {
  if (p.empty()) return p;
  ZPoly c = content_t(p);
  ZQTPoly out;
  out.reserve(p.size());
  for (const auto& coeff : p) out.push_back(exact_div(coeff, c));
  return out;
}

ZQTPoly prem_t(ZQTPoly a, const ZQTPoly& b) {
  const ZPoly& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const ZPoly top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = mul(c, lead);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(a[shift + j], mul(top, b[j]));
    trim(a);
  }
  return a;
}

ZQTPoly to_dense(const QTPoly& p) {
  ZQTPoly out(static_cast<std::size_t>(p.t_degree() + 1));
  for (const auto& term : p.terms()) {
    auto& coeff = out[term.mono.t];
    if (coeff.size() <= term.mono.q) coeff.resize(term.mono.q + 1);
    coeff[term.mono.q] = term.coeff;
  }
  for (auto& c : out) trim(c);
  trim(out);
  return out;
}

QTPoly from_dense(const ZQTPoly& p) {
  std::vector<QTPoly::Term> terms;
  for (std::size_t t = 0; t < p.size(); ++t)
    for (std::size_t q = 0; q < p[t].size(); ++q)
      if (p[t][q] != 0)
        terms.push_back({{static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(t)}, p[t][q]});
  return QTPoly::from_terms(std::move(terms));
}

Monomial min_monomial(const QTPoly& p) {
  Monomial m{~0u, ~0u};
  for (const auto& term : p.terms()) {
    m.q = std::min(m.q, term.mono.q);
    m.t = std::min(m.t, term.mono.t);
  }
  return m;
}

QTPoly strip_monomial(const QTPoly& p, Monomial m) {
  std::vector<QTPoly::Term> terms = p.terms();
  for (auto& term : terms) {
    term.mono.q -= m.q;
    term.mono.t -= m.t;
  }
  return QTPoly::from_terms(std::move(terms));
}

QTPoly normalize_sign(const QTPoly& p) {
  if (!p.is_zero() && p.leading().coeff < 0) return -p;
  return p;
}

BigInt integer_content(const QTPoly& p) {
  BigInt g = 0;
  for (const auto& term : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coeff.get_mpz_t());
  return g;
}

}  // namespace

QTPoly gcd(const QTPoly& a, const QTPoly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const Monomial ma = min_monomial(a), mb = min_monomial(b);
  const Monomial shared{std::min(ma.q, mb.q), std::min(ma.t, mb.t)};
  const QTPoly x = strip_monomial(a, ma), y = strip_monomial(b, mb);
  QTPoly core;
  if (x.is_constant() || y.is_constant()) {
    BigInt g;
    const BigInt cx = integer_content(x), cy = integer_content(y);
    mpz_gcd(g.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
    core = QTPoly(g);
  } else {
    const ZQTPoly dx = to_dense(x), dy = to_dense(y);
    ZPoly cont = gcd_zq(content_t(dx), content_t(dy));
    ZQTPoly u = primitive_t(dx), v = primitive_t(dy);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
      ZQTPoly r = prem_t(u, v);
      u = std::move(v);
      v = primitive_t(r);
    }
    for (auto& c : u) c = mul(c, cont);
    core = from_dense(u);
  }
  return normalize_sign(core.times_monomial(shared.q, shared.t));
}

}  // namespace dspringer
