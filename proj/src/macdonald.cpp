#include "dspringer/macdonald.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "dspringer/errors.hpp"
#include "dspringer/guards.hpp"
#include "dspringer/memo.hpp"
#include "dspringer/parallel.hpp"

namespace dspringer {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }
std::uint32_t u32(int i) { return static_cast<std::uint32_t>(i); }

void check_macdonald_guard(int n) {
  if (n > guards().max_macdonald_n)
    throw GuardExceeded("Macdonald size " + std::to_string(n) + " exceeds guard " +
                        std::to_string(guards().max_macdonald_n.load()));
}

/// Monomial coefficients of H~_mu from fillings weighted q^inv t^maj.
std::map<Partition, QTPoly> htilde_monomial(const Partition& mu) {
  const std::vector<CellStats> stats = cell_stats(mu);
  // Reading order: rows top to bottom, each left to right.
  std::vector<std::size_t> order(stats.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (stats[a].row != stats[b].row) return stats[a].row > stats[b].row;
    return stats[a].col < stats[b].col;
  });
  std::vector<CellStats> cells;
  for (std::size_t i : order) cells.push_back(stats[i]);
  const std::size_t m = cells.size();

  std::vector<std::pair<std::size_t, std::size_t>> attacks;  // (earlier, later)
  std::vector<std::pair<std::size_t, std::size_t>> below;    // (cell, cell directly below)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto& u = cells[i];
      const auto& v = cells[j];
      if (i < j && u.row == v.row) attacks.emplace_back(i, j);
      if (u.row == v.row + 1 && u.col > v.col) attacks.emplace_back(i, j);
      if (u.row == v.row + 1 && u.col == v.col) below.emplace_back(i, j);
    }

  std::map<Partition, QTPoly> out;
  for (const Partition& content : enumerate_partitions(mu.size())) {
    std::vector<int> filling;
    for (int letter = 1; letter <= content.length(); ++letter)
      filling.insert(filling.end(), idx(content[letter - 1]), letter);
    std::unordered_map<std::uint64_t, long long> weights;
    do {
      int inv = 0, maj = 0;
      for (const auto& [a, b] : attacks)
        if (filling[a] > filling[b]) ++inv;
      for (const auto& [a, b] : below)
        if (filling[a] > filling[b]) {
          inv -= cells[a].arm;
          maj += cells[a].leg + 1;
        }
      ++weights[(static_cast<std::uint64_t>(inv) << 32) | static_cast<std::uint32_t>(maj)];
    } while (std::next_permutation(filling.begin(), filling.end()));
    std::vector<QTPoly::Term> terms;
    for (const auto& [key, count] : weights)
      terms.push_back({{static_cast<std::uint32_t>(key >> 32), static_cast<std::uint32_t>(key)},
                       BigInt(static_cast<long>(count))});
    out.emplace(content, QTPoly::from_terms(std::move(terms)));
  }
  return out;
}

Memo<Partition, SchurPoly>& htilde_memo() {
  static Memo<Partition, SchurPoly> memo;
  return memo;
}

// ------------------------------------------------ irreducible denominators

/// Irreducible factor Phi_d(X, Y) homogenized, with X = q^a, Y = t^b and
/// gcd(a, b) = 1.
struct FactorKey {
  int a = 0, b = 0, d = 0;
  friend auto operator<=>(const FactorKey&, const FactorKey&) = default;
};

using FactorCounts = std::map<FactorKey, int>;

std::vector<long long> cyclotomic(int d) {
  static Memo<int, std::vector<long long>> memo;
  return memo.get(d, [d] {
    std::vector<long long> num(idx(d) + 1, 0);  // z^d - 1, low degree first
    num[0] = -1;
    num[idx(d)] = 1;
    for (int e = 1; e < d; ++e) {
      if (d % e) continue;
      const std::vector<long long> div = cyclotomic(e);
      // Exact division by a monic polynomial.
      std::vector<long long> quot(num.size() - div.size() + 1, 0);
      for (std::size_t i = quot.size(); i-- > 0;) {
        const long long c = num[i + div.size() - 1];
        quot[i] = c;
        for (std::size_t j = 0; j < div.size(); ++j) num[i + j] -= c * div[j];
      }
      num = quot;
    }
    return num;
  });
}

QTPoly factor_poly(const FactorKey& f) {
  const std::vector<long long> phi = cyclotomic(f.d);
  const int deg = static_cast<int>(phi.size()) - 1;
  std::vector<QTPoly::Term> terms;
  for (int i = 0; i <= deg; ++i)
    if (phi[idx(i)] != 0)
      terms.push_back({{u32(f.a * i), u32(f.b * (deg - i))}, BigInt(static_cast<long>(phi[idx(i)]))});
  return QTPoly::from_terms(std::move(terms));
}

/// q^x - t^y = prod over d | gcd(x, y) of Phi_d(q^(x/g), t^(y/g)).
void add_binomial(FactorCounts& counts, int x, int y) {
  const int g = std::gcd(x, y);
  for (int d = 1; d <= g; ++d)
    if (g % d == 0) ++counts[{x / g, y / g, d}];
}

/// Factors of w_mu = prod (q^arm - t^(leg+1)) (t^leg - q^(arm+1)); the sign
/// (-1)^|mu| is returned separately.
FactorCounts w_factors(const Partition& mu) {
  FactorCounts counts;
  for (const CellStats& c : cell_stats(mu)) {
    add_binomial(counts, c.arm, c.leg + 1);
    add_binomial(counts, c.arm + 1, c.leg);
  }
  return counts;
}

QTPoly w_numerator_part(const Partition& mu) {
  // (1-q)(1-t) B_mu Pi_mu
  QTPoly b, pi(1);
  for (const CellStats& c : cell_stats(mu)) {
    b += QTPoly::monomial(1, u32(c.coarm), u32(c.coleg));
    if (c.row == 0 && c.col == 0) continue;
    pi *= QTPoly(1) - QTPoly::monomial(1, u32(c.coarm), u32(c.coleg));
  }
  return (QTPoly(1) - QTPoly::q()) * (QTPoly(1) - QTPoly::t()) * b * pi;
}

QTPoly w_product(const Partition& mu) {
  QTPoly w(1);
  for (const CellStats& c : cell_stats(mu)) {
    w *= QTPoly::q(u32(c.arm)) - QTPoly::t(u32(c.leg + 1));
    w *= QTPoly::t(u32(c.leg)) - QTPoly::q(u32(c.arm + 1));
  }
  return w;
}

Memo<std::pair<int, int>, SchurPoly>& delta_memo() {
  static Memo<std::pair<int, int>, SchurPoly> memo;
  return memo;
}

}  // namespace

std::vector<CellStats> cell_stats(const Partition& mu) {
  const Partition conj = conjugate(mu);
  std::vector<CellStats> out;
  for (int r = 0; r < mu.length(); ++r)
    for (int c = 0; c < mu[r]; ++c)
      out.push_back({r, c, mu[r] - c - 1, conj[c] - r - 1, c, r});
  return out;
}

SchurPoly macdonald_htilde(const Partition& mu) {
  check_macdonald_guard(mu.size());
  return htilde_memo().get(mu, [&] { return monomial_to_schur(htilde_monomial(mu)); });
}

MacdonaldTable macdonald_table(int n) {
  check_macdonald_guard(n);
  const std::vector<Partition> parts = enumerate_partitions(n);
  std::vector<SchurPoly> polys(parts.size());
  parallel_for(parts.size(), [&](std::size_t i) { polys[i] = macdonald_htilde(parts[i]); });
  MacdonaldTable table{n, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) table.polys.emplace(parts[i], std::move(polys[i]));
  return table;
}

QTPoly delta_eigenvalue(int k, const Partition& mu) {
  if (k < 0) throw DomainError("delta_eigenvalue: negative k");
  std::vector<QTPoly> e(idx(k) + 1);
  e[0] = QTPoly(1);
  for (const CellStats& c : cell_stats(mu)) {
    if (c.row == 0 && c.col == 0) continue;
    const QTPoly x = QTPoly::monomial(1, u32(c.coarm), u32(c.coleg));
    for (int j = k; j >= 1; --j) e[idx(j)] += e[idx(j - 1)] * x;
  }
  return e[idx(k)];
}

std::map<Partition, QTRational> expand_en_in_macdonald(int n) {
  check_macdonald_guard(n);
  std::map<Partition, QTRational> out;
  for (const Partition& mu : enumerate_partitions(n))
    out.emplace(mu, QTRational(w_numerator_part(mu), w_product(mu)));
  return out;
}

std::map<Partition, QTRational> expand_en_by_solve(int n) {
  const MacdonaldTable table = macdonald_table(n);
  const std::vector<Partition> parts = enumerate_partitions(n);
  RationalMatrix matrix(parts.size(), std::vector<QTRational>(parts.size()));
  std::vector<QTRational> rhs(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j)
      matrix[i][j] = QTRational(table.polys.at(parts[j]).coeff(parts[i]));
    if (parts[i] == Partition(std::vector<int>(idx(n), 1))) rhs[i] = QTRational(1);
  }
  const std::vector<QTRational> x = rational_solve(matrix, rhs);
  std::map<Partition, QTRational> out;
  for (std::size_t j = 0; j < parts.size(); ++j) out.emplace(parts[j], x[j]);
  return out;
}

SchurPoly delta_prime_e(int k, int n) {
  if (n < 1 || k < 0 || k > n - 1) throw DomainError("delta_prime_e requires 0 <= k <= n-1");
  check_macdonald_guard(n);
  return delta_memo().get({k, n}, [&] {
    const MacdonaldTable table = macdonald_table(n);
    std::map<Partition, FactorCounts> factors;
    FactorCounts lcm;
    for (const auto& [mu, poly] : table.polys) {
      FactorCounts f = w_factors(mu);
      for (const auto& [key, mult] : f) lcm[key] = std::max(lcm[key], mult);
      factors.emplace(mu, std::move(f));
    }
    std::map<FactorKey, QTPoly> factor_polys;
    for (const auto& [key, mult] : lcm) factor_polys.emplace(key, factor_poly(key));

    // Numerator of each summand over the common denominator.
    std::map<Partition, QTPoly> scaled;
    for (const auto& [mu, poly] : table.polys) {
      const QTPoly eig = delta_eigenvalue(k, mu);
      if (eig.is_zero()) continue;
      QTPoly a = w_numerator_part(mu) * eig;
      if (mu.size() % 2) a = -a;
      for (const auto& [key, mult] : lcm) {
        auto it = factors.at(mu).find(key);
        const int have = it == factors.at(mu).end() ? 0 : it->second;
        for (int i = have; i < mult; ++i) a *= factor_polys.at(key);
      }
      scaled.emplace(mu, std::move(a));
    }

    std::map<Partition, QTPoly> numer;
    for (const auto& [mu, a] : scaled)
      for (const auto& [lam, c] : table.polys.at(mu).terms()) numer[lam] += a * c;

    std::vector<std::pair<Partition, QTPoly>> jobs(numer.begin(), numer.end());
    std::vector<QTPoly> results(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
      QTPoly value = jobs[i].second;
      for (const auto& [key, mult] : lcm)
        for (int m = 0; m < mult && !value.is_zero(); ++m) {
          auto q = try_divide(value, factor_polys.at(key));
          if (!q)
            throw DenominatorResidue("Delta'_{e_" + std::to_string(k) + "} e_" + std::to_string(n) +
                                     ": coefficient of " + jobs[i].first.to_string() +
                                     " is not a polynomial");
          value = *std::move(q);
        }
      results[i] = std::move(value);
    });
    SchurPoly out;
    for (std::size_t i = 0; i < jobs.size(); ++i) out.add(jobs[i].first, results[i]);
    return out;
  });
}

}  // namespace dspringer
