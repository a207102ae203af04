#include "dspringer/schur.hpp"

#include <algorithm>

#include "dspringer/errors.hpp"
#include "dspringer/memo.hpp"
#include "dspringer/tableau.hpp"

namespace dspringer {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

using Expansion = std::vector<std::pair<Partition, long long>>;

Memo<std::pair<Partition, Partition>, Expansion>& skew_memo() {
  static Memo<std::pair<Partition, Partition>, Expansion> memo;
  return memo;
}

Memo<std::pair<Partition, Partition>, Expansion>& product_memo() {
  static Memo<std::pair<Partition, Partition>, Expansion> memo;
  return memo;
}

Memo<std::pair<Partition, Partition>, long long>& kostka_memo() {
  static Memo<std::pair<Partition, Partition>, long long> memo;
  return memo;
}

/// s_{nu/mu} in the Schur basis.
Expansion skew_schur(const Partition& nu, const Partition& mu) {
  return skew_memo().get({nu, mu}, [&] {
    std::map<Partition, long long> counts;
    if (contains(nu, mu)) {
      for_each_lr_tableau(nu, mu, std::nullopt, [&](const SkewTableau& t) {
        ++counts[Partition(t.content())];
      });
    }
    return Expansion(counts.begin(), counts.end());
  });
}

/// Adds rho_1 ones, rho_2 twos, ... as horizontal strips on eta and keeps
/// the fillings whose reverse reading word is a lattice word.
class ProductChains {
 public:
  ProductChains(const Partition& eta, const Partition& rho) : rho_(rho) {
    for (int r = 0; r < eta.length(); ++r) grid_.emplace_back(idx(eta[r]), 0);
  }

  std::map<Partition, long long> run() {
    add_letter(1);
    return counts_;
  }

 private:
  int len(int r) const {
    return r < static_cast<int>(grid_.size()) ? static_cast<int>(grid_[idx(r)].size()) : 0;
  }

  void add_letter(int letter) {
    if (letter > rho_.length()) {
      if (lattice()) {
        std::vector<int> parts;
        for (const auto& row : grid_) parts.push_back(static_cast<int>(row.size()));
        ++counts_[Partition(std::move(parts))];
      }
      return;
    }
    std::vector<int> old;
    for (int r = 0; r < static_cast<int>(grid_.size()); ++r) old.push_back(len(r));
    add_row(letter, old, 0, rho_[letter - 1]);
  }

  void add_row(int letter, const std::vector<int>& old, int r, int remaining) {
    const int rows = static_cast<int>(old.size());
    if (r > rows) return;
    const int old_r = r < rows ? old[idx(r)] : 0;
    const int cap = r == 0 ? remaining : std::min(remaining, old[idx(r - 1)] - old_r);
    if (r == rows) {
      if (remaining > cap) return;
      extend(r, letter, remaining);
      add_letter(letter + 1);
      shrink(r, remaining);
      return;
    }
    for (int a = cap; a >= 0; --a) {
      extend(r, letter, a);
      add_row(letter, old, r + 1, remaining - a);
      shrink(r, a);
    }
  }

  void extend(int r, int letter, int count) {
    if (count == 0) return;
    if (r == static_cast<int>(grid_.size())) grid_.emplace_back();
    grid_[idx(r)].insert(grid_[idx(r)].end(), idx(count), letter);
  }
  void shrink(int r, int count) {
    if (count == 0) return;
    grid_[idx(r)].resize(grid_[idx(r)].size() - idx(count));
    if (grid_[idx(r)].empty()) grid_.pop_back();
  }

  bool lattice() const {
    std::vector<int> seen(idx(rho_.length()) + 2, 0);
    for (const auto& row : grid_)
      for (auto it = row.rbegin(); it != row.rend(); ++it) {
        if (*it == 0) continue;
        const int v = *it;
        ++seen[idx(v)];
        if (v > 1 && seen[idx(v)] > seen[idx(v - 1)]) return false;
      }
    return true;
  }

  const Partition& rho_;
  Tableau::Rows grid_;
  std::map<Partition, long long> counts_;
};

Expansion schur_product(const Partition& eta, const Partition& rho) {
  return product_memo().get({eta, rho}, [&] {
    auto counts = ProductChains(eta, rho).run();
    return Expansion(counts.begin(), counts.end());
  });
}

std::string coeff_prefix(const QTPoly& c) {
  if (c == QTPoly(1)) return "";
  if (c == QTPoly(-1)) return "-";
  const std::string text = c.to_string();
  if (c.size() == 1) return text + "*";
  return "(" + text + ")*";
}

}  // namespace

SchurPoly SchurPoly::schur(const Partition& p, const QTPoly& coeff) {
  SchurPoly out;
  out.add(p, coeff);
  return out;
}

QTPoly SchurPoly::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? QTPoly() : it->second;
}

void SchurPoly::add(const Partition& p, const QTPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int SchurPoly::q_degree() const {
  int d = -1;
  for (const auto& [p, c] : terms_) d = std::max(d, c.q_degree());
  return d;
}

int SchurPoly::t_degree() const {
  int d = -1;
  for (const auto& [p, c] : terms_) d = std::max(d, c.t_degree());
  return d;
}

SchurPoly SchurPoly::map_coefficients(const std::function<QTPoly(const QTPoly&)>& fn) const {
  SchurPoly out;
  for (const auto& [p, c] : terms_) out.add(p, fn(c));
  return out;
}

SchurPoly& SchurPoly::operator+=(const SchurPoly& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

SchurPoly& SchurPoly::operator-=(const SchurPoly& other) {
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

SchurPoly SchurPoly::operator-() const {
  SchurPoly out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
  return out;
}

SchurPoly operator*(const QTPoly& c, const SchurPoly& f) {
  if (c.is_zero()) return {};
  SchurPoly out;
  for (const auto& [p, x] : f.terms_) out.terms_.emplace(p, c * x);
  return out;
}

bool operator==(const SchurPoly& a, const SchurPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (!(i->first == j->first) || !(i->second == j->second)) return false;
  return true;
}

std::string SchurPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += coeff_prefix(it->second) + "s[";
    const auto& parts = it->first.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
    out += "]";
  }
  return out;
}

SchurPoly schur_mul(const SchurPoly& f, const SchurPoly& g) {
  SchurPoly out;
  for (const auto& [eta, a] : f.terms())
    for (const auto& [rho, b] : g.terms()) {
      const QTPoly ab = a * b;
      for (const auto& [nu, c] : schur_product(eta, rho))
        out.add(nu, QTPoly(BigInt(static_cast<long>(c))) * ab);
    }
  return out;
}

long long lr_coefficient_product_side(const Partition& nu, const Partition& eta,
                                      const Partition& rho) {
  for (const auto& [p, c] : schur_product(eta, rho))
    if (p == nu) return c;
  return 0;
}

SchurPoly skew(const Partition& mu, const SchurPoly& f) {
  SchurPoly out;
  for (const auto& [nu, c] : f.terms())
    for (const auto& [eta, count] : skew_schur(nu, mu)) out.add(eta, QTPoly(BigInt(static_cast<long>(count))) * c);
  return out;
}

SchurPoly omega(const SchurPoly& f) {
  SchurPoly out;
  for (const auto& [p, c] : f.terms()) out.add(conjugate(p), c);
  return out;
}

QTPoly hall_inner(const SchurPoly& f, const SchurPoly& g) {
  QTPoly out;
  for (const auto& [p, c] : f.terms()) {
    auto it = g.terms().find(p);
    if (it != g.terms().end()) out += c * it->second;
  }
  return out;
}

SchurPoly rev_q_schur(const SchurPoly& f, std::optional<std::uint32_t> degree) {
  if (f.is_zero()) return {};
  const std::uint32_t d = degree.value_or(static_cast<std::uint32_t>(f.q_degree()));
  return f.map_coefficients([d](const QTPoly& c) { return rev_q(c, d); });
}

SchurPoly e_n(int n) {
  if (n < 0) throw DomainError("e_n: negative n");
  return SchurPoly::schur(Partition(std::vector<int>(idx(n), 1)));
}

SchurPoly h_n(int n) {
  if (n < 0) throw DomainError("h_n: negative n");
  return SchurPoly::schur(n == 0 ? Partition{} : Partition{n});
}

long long kostka_number(const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size()) return 0;
  return kostka_memo().get({nu, mu}, [&] {
    long long count = 0;
    for_each_ssyt_with_content(mu.parts(), nu, [&](const Tableau& t) {
      if (t.shape() == nu) ++count;
    });
    return count;
  });
}

std::map<Partition, QTPoly> schur_to_monomial(const SchurPoly& f) {
  std::map<Partition, QTPoly> out;
  for (const auto& [nu, c] : f.terms())
    for (const Partition& lam : enumerate_partitions(nu.size())) {
      const long long k = kostka_number(nu, lam);
      if (k == 0) continue;
      QTPoly& slot = out[lam];
      slot += QTPoly(BigInt(static_cast<long>(k))) * c;
      if (slot.is_zero()) out.erase(lam);
    }
  return out;
}

SchurPoly monomial_to_schur(const std::map<Partition, QTPoly>& coeffs) {
  std::map<Partition, QTPoly> residue;
  for (const auto& [p, c] : coeffs)
    if (!c.is_zero()) residue[p] = c;
  SchurPoly out;
  // Largest partition first in lexicographic order refines dominance, so
  // each leading residue is a Schur coefficient.
  while (!residue.empty()) {
    const auto top = std::prev(residue.end());
    const Partition nu = top->first;
    const QTPoly a = top->second;
    out.add(nu, a);
    for (const Partition& lam : enumerate_partitions(nu.size())) {
      if (!(lam <= nu)) continue;
      const long long k = kostka_number(nu, lam);
      if (k == 0) continue;
      QTPoly& slot = residue[lam];
      slot -= QTPoly(BigInt(static_cast<long>(k))) * a;
      if (slot.is_zero()) residue.erase(lam);
    }
    if (residue.count(nu))
      throw InconsistentSystem("monomial_to_schur: residue at " + nu.to_string());
  }
  return out;
}

SchurPoly specialize_t0(const SchurPoly& f) { return t_coefficient(f, 0); }

SchurPoly t_coefficient(const SchurPoly& f, std::uint32_t j) {
  return f.map_coefficients([j](const QTPoly& c) { return c.t_coefficient(j); });
}

SchurPoly swap_qt(const SchurPoly& f) {
  return f.map_coefficients([](const QTPoly& c) { return c.swap_qt(); });
}

std::map<Partition, BigInt> evaluate_at_one(const SchurPoly& f) {
  std::map<Partition, BigInt> out;
  for (const auto& [p, c] : f.terms()) {
    BigInt v = c.value_at_one();
    if (v != 0) out.emplace(p, std::move(v));
  }
  return out;
}

}  // namespace dspringer
