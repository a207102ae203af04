#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dspringer {

/// Integer partition: strictly positive, weakly decreasing parts.  Trailing
/// zeros passed to the constructor are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part (0-based); zero past the end.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  /// "(5,4,3,3)", or "()" for the empty partition.
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Weak composition with an explicit number of parts (zeros significant).
struct Composition {
  std::vector<int> parts;

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const {
    return i < length() ? parts[static_cast<std::size_t>(i)] : 0;
  }
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
  std::string to_string() const;
};

/// Parameters (n, lambda, s) of a Delta-Springer module; k = |lambda|.
struct DeltaParams {
  int n = 0;
  Partition lambda;
  int s = 0;

  int k() const { return lambda.size(); }
  /// Throws DomainError unless n >= 1, s >= 1, k <= n and l(lambda) <= s.
  void validate() const;
  std::string to_string() const;
};

Partition conjugate(const Partition& p);
/// Dominance mu <= nu.  Throws SizeMismatch when |mu| != |nu|.
bool dominates_leq(const Partition& mu, const Partition& nu);
bool contains(const Partition& outer, const Partition& inner);
bool contains(const Composition& outer, const Partition& inner);
/// n(lambda) = sum (i-1) lambda_i.
int n_stat(const Partition& p);
/// Lambda_{n,lambda,s}: lambda plus an s x (n-k) rectangle on the left.
Partition lambda_rect(const DeltaParams& params);
/// The rectangle (a^b).
Partition rectangle(int a, int b);
/// Throws ContainmentViolation when inner is not inside outer.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);
/// Pairs i < j with a_i < a_j.
int coinv(const Composition& a);
Partition sort(const Composition& a);
/// n(mu/lambda) = sum_i C(mu'_i - lambda'_i, 2) with mu = sort(a).
int skew_n_stat(const Partition& mu, const Partition& lambda);
int skew_n_stat(const Composition& a, const Partition& lambda);

/// Weak compositions of n with s parts containing lambda, reverse-lex order.
std::vector<Composition> compositions_over(int n, const Partition& lambda, int s);
/// Partitions of n with at most max_len parts, reverse-lex order.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_len = {});

/// Accepts "3,2,1", "(3,2,1)", "" and "()".
Partition parse_partition(std::string_view text);

long long binomial(int n, int k);

}  // namespace dspringer
