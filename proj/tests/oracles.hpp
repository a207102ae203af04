#pragma once

// Independent reference computations used only by the tests.  None of these
// call into the library's enumerators.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;  // coefficients in q, index = exponent

inline std::vector<int> conjugate(const std::vector<int>& p) {
  std::vector<int> out;
  for (int c = 0; !p.empty() && c < p[0]; ++c) {
    int h = 0;
    for (int x : p) h += x > c;
    out.push_back(h);
  }
  return out;
}

inline std::vector<int> hooks(const std::vector<int>& p) {
  const auto pc = conjugate(p);
  std::vector<int> out;
  for (std::size_t r = 0; r < p.size(); ++r)
    for (int c = 0; c < p[r]; ++c) out.push_back((p[r] - c - 1) + (pc[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1);
  return out;
}

/// Standard Young tableaux of shape p (hook length formula).
inline long long syt_count(const std::vector<int>& p) {
  const int n = std::accumulate(p.begin(), p.end(), 0);
  // Multiply and divide in an order that keeps the value integral.
  std::vector<int> num(static_cast<std::size_t>(n));
  std::iota(num.begin(), num.end(), 1);
  std::vector<int> den = hooks(p);
  long double v = 1;
  for (int x : num) v *= x;
  for (int h : den) v /= h;
  return static_cast<long long>(v + 0.5L);
}

/// SSYT of shape p with entries at most m (hook content formula).
inline long long ssyt_count(const std::vector<int>& p, int m) {
  long double v = 1;
  std::size_t i = 0;
  const auto h = hooks(p);
  for (std::size_t r = 0; r < p.size(); ++r)
    for (int c = 0; c < p[r]; ++c) v *= static_cast<long double>(m + c - static_cast<int>(r)) / h[i++];
  return static_cast<long long>(v + 0.5L);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly q_int(int n) { return Poly(static_cast<std::size_t>(n), 1); }

/// Exact division by a monic polynomial.
inline Poly div_exact(Poly a, const Poly& b) {
  Poly out(a.size() - b.size() + 1, 0);
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = a[i + b.size() - 1];
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= out[i] * b[j];
  }
  return out;
}

/// Charge Kostka-Foulkes polynomial K_{p,(1^n)}(q) from the q-hook formula.
inline Poly kostka_one_column(const std::vector<int>& p) {
  const int n = std::accumulate(p.begin(), p.end(), 0);
  Poly f{1};
  for (int i = 1; i <= n; ++i) f = mul(f, q_int(i));
  for (int h : hooks(p)) f = div_exact(f, q_int(h));
  const auto pc = conjugate(p);
  int shift = 0;
  for (std::size_t i = 0; i < pc.size(); ++i) shift += static_cast<int>(i) * pc[i];
  Poly out(static_cast<std::size_t>(shift), 0);
  out.insert(out.end(), f.begin(), f.end());
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

/// q,t-Catalan number as a map (q_exp, t_exp) -> coefficient, from area
/// sequences with the dinv statistic.
inline std::vector<std::vector<long long>> qt_catalan(int n) {
  std::vector<std::vector<long long>> table(static_cast<std::size_t>(n * n + 1),
                                            std::vector<long long>(static_cast<std::size_t>(n * n + 1), 0));
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      int area = 0, dinv = 0;
      for (int x : a) area += x;
      for (int p = 0; p < n; ++p)
        for (int r = p + 1; r < n; ++r)
          dinv += (a[static_cast<std::size_t>(p)] == a[static_cast<std::size_t>(r)]) +
                  (a[static_cast<std::size_t>(p)] == a[static_cast<std::size_t>(r)] + 1);
      ++table[static_cast<std::size_t>(dinv)][static_cast<std::size_t>(area)];
      return;
    }
    for (int v = 0; v <= a[static_cast<std::size_t>(i - 1)] + 1; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return table;
}

/// Ordered set partitions of {1..n} into k blocks, as block-index
/// assignments (every surjection [n] -> [k]).
inline std::vector<std::vector<std::vector<int>>> all_osps(int n, int k) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
      for (int x = 0; x < n; ++x) blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(x)])].push_back(x + 1);
      for (const auto& b : blocks)
        if (b.empty()) return;
      out.push_back(blocks);
      return;
    }
    for (int j = 0; j < k; ++j) {
      assign[static_cast<std::size_t>(i)] = j;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Reading word of an OSP: block minima right to left, then the remaining
/// entries left to right.
inline std::vector<int> osp_word(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> w;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) w.push_back(*std::min_element(it->begin(), it->end()));
  for (auto b : blocks) {
    std::sort(b.begin(), b.end());
    w.insert(w.end(), b.begin() + 1, b.end());
  }
  return w;
}

inline int osp_minimaj(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> w;
  for (auto b : blocks) {
    std::sort(b.begin(), b.end());
    w.insert(w.end(), b.begin(), b.end());
  }
  int m = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) m += static_cast<int>(i) + 1;
  return m;
}

/// Charge of a standard-content word by direct index labelling: read
/// 1, 2, ..., and add the running index that increases when the next
/// letter sits to the right.  Applies to permutations only.
inline int permutation_charge(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = i;
  int index = 0, total = 0;
  for (int letter = 2; letter <= n; ++letter) {
    if (pos[static_cast<std::size_t>(letter)] > pos[static_cast<std::size_t>(letter) - 1]) ++index;
    total += index;
  }
  return total;
}

}  // namespace oracle
