#include <doctest.h>

#include <functional>
#include <set>

#include "dspringer/errors.hpp"
#include "dspringer/partition.hpp"

using namespace dspringer;

namespace {

// Partition counts by the pentagonal recurrence.
long long partition_count(int n) {
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > m) break;
      const long long sign = (j % 2) ? 1 : -1;
      p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g2)];
    }
  return p[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("construction validates and strips trailing zeros") {
  CHECK(Partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, -1}), DomainError);
  CHECK(Partition{}.to_string() == "()");
  CHECK(Partition({5, 4, 3, 3}).to_string() == "(5,4,3,3)");
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition{3, 2, 1, 1}) == Partition{4, 2, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : enumerate_partitions(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("dominance order") {
  CHECK(dominates_leq(Partition{2, 1, 1}, Partition{2, 2}));
  CHECK_FALSE(dominates_leq(Partition{3, 3}, Partition{4, 1, 1}));
  CHECK_FALSE(dominates_leq(Partition{4, 1, 1}, Partition{3, 3}));
  CHECK_THROWS_AS(dominates_leq(Partition{2}, Partition{1}), SizeMismatch);
  // Dominance reverses under conjugation.
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : enumerate_partitions(n))
      for (const auto& b : enumerate_partitions(n))
        CHECK(dominates_leq(a, b) == dominates_leq(conjugate(b), conjugate(a)));
}

TEST_CASE("n statistic and the enlarged shape") {
  CHECK(n_stat(Partition{3, 2, 1, 1}) == 7);
  CHECK(n_stat(Partition{}) == 0);
  const DeltaParams p{9, Partition{3, 2, 1, 1}, 4};
  CHECK(lambda_rect(p) == Partition{5, 4, 3, 3});
  CHECK(lambda_rect(DeltaParams{2, Partition{}, 3}) == Partition{2, 2, 2});
  CHECK_THROWS_AS(lambda_rect(DeltaParams{2, Partition{3}, 1}), DomainError);
  CHECK_THROWS_AS((DeltaParams{3, Partition{1, 1}, 1}.validate()), DomainError);
  CHECK(rectangle(0, 3) == Partition{});
  CHECK(rectangle(2, 3) == Partition{2, 2, 2});
}

TEST_CASE("horizontal strips") {
  CHECK(is_horizontal_strip(Partition{3, 1}, Partition{1}));
  CHECK_FALSE(is_horizontal_strip(Partition{2, 2}, Partition{1}));
  CHECK_THROWS_AS(is_horizontal_strip(Partition{2}, Partition{1, 1}), ContainmentViolation);
}

TEST_CASE("coinversions and skew n statistic") {
  CHECK(coinv(Composition{{5, 6}}) == 1);
  CHECK(coinv(Composition{{2, 0, 3, 1}}) == 3);
  CHECK(skew_n_stat(Composition{{5, 6}}, Partition{3, 1}) == 2);
  CHECK(skew_n_stat(Partition{3, 3}, Partition{3, 3}) == 0);
  CHECK(skew_n_stat(Partition{2, 2, 2}, Partition{}) == n_stat(Partition{2, 2, 2}));
}

TEST_CASE("partition enumeration matches the pentagonal recurrence") {
  for (int n = 0; n <= 20; ++n) CHECK(static_cast<long long>(enumerate_partitions(n).size()) == partition_count(n));
  const auto p5 = enumerate_partitions(5);
  CHECK(p5.front() == Partition{5});
  CHECK(p5.back() == Partition{1, 1, 1, 1, 1});
  for (std::size_t i = 0; i + 1 < p5.size(); ++i) CHECK(p5[i + 1] < p5[i]);
  for (const auto& p : enumerate_partitions(8, 3)) CHECK(p.length() <= 3);
}

TEST_CASE("compositions containing a partition") {
  // Brute force over all weak compositions with s parts.
  for (int n = 0; n <= 7; ++n)
    for (int s = 1; s <= 3; ++s)
      for (int k = 0; k <= n; ++k)
        for (const auto& lambda : enumerate_partitions(k, s)) {
          std::set<std::vector<int>> expected;
          std::vector<int> c(static_cast<std::size_t>(s), 0);
          std::function<void(int, int)> rec = [&](int i, int rem) {
            if (i == s - 1) {
              c[static_cast<std::size_t>(i)] = rem;
              bool ok = true;
              for (int j = 0; j < s; ++j) ok = ok && c[static_cast<std::size_t>(j)] >= lambda[j];
              if (ok) expected.insert(c);
              return;
            }
            for (int v = 0; v <= rem; ++v) {
              c[static_cast<std::size_t>(i)] = v;
              rec(i + 1, rem - v);
            }
          };
          rec(0, n);
          const auto got = compositions_over(n, lambda, s);
          std::set<std::vector<int>> got_set;
          for (const auto& a : got) got_set.insert(a.parts);
          CHECK(got.size() == expected.size());
          CHECK(got_set == expected);
        }
}

TEST_CASE("parsing") {
  CHECK(parse_partition("3,2,1") == Partition{3, 2, 1});
  CHECK(parse_partition("(3, 2,1)") == Partition{3, 2, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition("()") == Partition{});
  CHECK_THROWS_AS(parse_partition("3,x"), DomainError);
  CHECK_THROWS_AS(parse_partition("1,2"), DomainError);
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, 2) == 0);
}
