#include "dspringer/hall_littlewood.hpp"

#include <functional>

#include "dspringer/errors.hpp"
#include "dspringer/guards.hpp"
#include "dspringer/memo.hpp"
#include "dspringer/tableau.hpp"

namespace dspringer {

namespace {

void check_hl_guard(const Partition& mu) {
  if (mu.size() > guards().max_hl_size)
    throw GuardExceeded("Hall-Littlewood size " + std::to_string(mu.size()) + " exceeds guard " +
                        std::to_string(guards().max_hl_size.load()));
}

SchurPoly hl_by_statistic(const Partition& mu, int (*stat)(const Word&)) {
  check_hl_guard(mu);
  SchurPoly out;
  for_each_ssyt_with_content(mu.parts(), std::nullopt, [&](const Tableau& t) {
    out.add(t.shape(), QTPoly::q(static_cast<std::uint32_t>(stat(reading_word(t)))));
  });
  return out;
}

Memo<Partition, SchurPoly>& modified_memo() {
  static Memo<Partition, SchurPoly> memo;
  return memo;
}

Memo<Partition, SchurPoly>& transformed_memo() {
  static Memo<Partition, SchurPoly> memo;
  return memo;
}

Memo<std::pair<Partition, Partition>, QTPoly>& kostka_poly_memo(bool modified) {
  static Memo<std::pair<Partition, Partition>, QTPoly> cc_memo, ch_memo;
  return modified ? cc_memo : ch_memo;
}

}  // namespace

SchurPoly hl_transformed(const Partition& mu) {
  return transformed_memo().get(mu, [&] { return hl_by_statistic(mu, &charge); });
}

SchurPoly hl_modified(const Partition& mu) {
  return modified_memo().get(mu, [&] { return hl_by_statistic(mu, &cocharge); });
}

QTPoly q_kostka(const Partition& nu, const Partition& mu, bool modified) {
  if (nu.size() != mu.size())
    throw SizeMismatch("q_kostka: |" + nu.to_string() + "| != |" + mu.to_string() + "|");
  if (!dominates_leq(mu, nu)) return {};
  return kostka_poly_memo(modified).get({nu, mu}, [&] {
    QTPoly out;
    for_each_ssyt_with_content(mu.parts(), nu, [&](const Tableau& t) {
      if (!(t.shape() == nu)) return;
      const Word w = reading_word(t);
      out += QTPoly::q(static_cast<std::uint32_t>(modified ? cocharge(w) : charge(w)));
    });
    return out;
  });
}

bool rect_kostka_lemma_check(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("rect_kostka_lemma_check: a, b must be positive");
  const Partition rect = rectangle(a, b);
  const Partition box = rectangle(a, b + 1);
  const QTPoly expected = QTPoly::q(static_cast<std::uint32_t>(a * b * (b - 1) / 2));
  for (const Partition& mu : enumerate_partitions(a * b, b + 1)) {
    if (!contains(box, mu)) continue;
    if (enumerate_ssyt_shape_content(rect, mu).size() != 1) return false;
    if (!(q_kostka(rect, mu, true) == expected)) return false;
  }
  return true;
}

std::vector<Partition> partitions_containing(int size, int max_len, const Partition& inner) {
  std::vector<Partition> out;
  if (inner.length() > max_len || inner.size() > size) return out;
  std::vector<int> parts;
  // Suffix sums of inner bound how small the remaining parts may get.
  std::vector<int> tail(static_cast<std::size_t>(max_len) + 1, 0);
  for (int i = max_len - 1; i >= 0; --i) tail[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i) + 1] + inner[i];
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    const int i = static_cast<int>(parts.size());
    if (remaining == 0) {
      if (i >= inner.length()) out.emplace_back(parts);
      return;
    }
    if (i == max_len) return;
    const int hi = std::min(max_part, remaining - tail[static_cast<std::size_t>(i) + 1]);
    for (int p = hi; p >= std::max(inner[i], 1); --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(size, size);
  return out;
}

SchurPoly skewed_hl_modified(const Partition& rho, const Partition& mu) {
  if (mu.size() > guards().max_skew_size)
    throw GuardExceeded("skewed Hall-Littlewood size " + std::to_string(mu.size()) +
                        " exceeds guard " + std::to_string(guards().max_skew_size.load()));
  SchurPoly out;
  for (const Partition& nu : partitions_containing(mu.size(), mu.length(), rho)) {
    if (!dominates_leq(mu, nu)) continue;
    const QTPoly k = q_kostka(nu, mu, true);
    if (k.is_zero()) continue;
    out += skew(rho, SchurPoly::schur(nu, k));
  }
  return out;
}

}  // namespace dspringer
