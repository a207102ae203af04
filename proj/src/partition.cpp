#include "dspringer/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "dspringer/errors.hpp"
#include "dspringer/guards.hpp"

namespace dspringer {

Guards& guards() {
  static Guards instance;
  return instance;
}

void load_guards_from_env() {
  const auto read = [](const char* name, std::atomic<int>& slot) {
    if (const char* value = std::getenv(name)) {
      int parsed = 0;
      const char* end = value + std::char_traits<char>::length(value);
      auto [ptr, ec] = std::from_chars(value, end, parsed);
      if (ec == std::errc() && ptr == end && parsed > 0) slot = parsed;
    }
  };
  read("DSPRINGER_MAX_ENUM_N", guards().max_enum_n);
  read("DSPRINGER_MAX_HL_SIZE", guards().max_hl_size);
  read("DSPRINGER_MAX_SKEW_SIZE", guards().max_skew_size);
  read("DSPRINGER_MAX_MACDONALD_N", guards().max_macdonald_n);
}

namespace {

void check_enum_guard(int n) {
  if (n > guards().max_enum_n)
    throw GuardExceeded("enumeration size " + std::to_string(n) + " exceeds guard " +
                        std::to_string(guards().max_enum_n.load()));
}

std::string join_parts(const std::vector<int>& parts) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
  out << ')';
  return out.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw DomainError("not a partition: " + join_parts(parts_));
    size_ += parts_[i];
  }
}

std::string Partition::to_string() const { return join_parts(parts_); }

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::to_string() const { return join_parts(parts); }

void DeltaParams::validate() const {
  if (n < 1) throw DomainError("n must be positive");
  if (s < 1) throw DomainError("s must be positive");
  if (k() > n) throw DomainError("|lambda| = " + std::to_string(k()) + " exceeds n");
  if (lambda.length() > s) throw DomainError("l(lambda) exceeds s");
}

std::string DeltaParams::to_string() const {
  return "n=" + std::to_string(n) + " lambda=" + lambda.to_string() +
         " s=" + std::to_string(s);
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts())
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

bool dominates_leq(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size())
    throw SizeMismatch("dominance between " + mu.to_string() + " and " + nu.to_string());
  int a = 0, b = 0;
  for (int i = 0; i < std::max(mu.length(), nu.length()); ++i) {
    a += mu[i];
    b += nu[i];
    if (a > b) return false;
  }
  return true;
}

bool contains(const Partition& outer, const Partition& inner) {
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

bool contains(const Composition& outer, const Partition& inner) {
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

int n_stat(const Partition& p) {
  int total = 0;
  for (int i = 0; i < p.length(); ++i) total += i * p[i];
  return total;
}

Partition lambda_rect(const DeltaParams& params) {
  params.validate();
  std::vector<int> parts(static_cast<std::size_t>(params.s));
  for (int i = 0; i < params.s; ++i)
    parts[static_cast<std::size_t>(i)] = params.n - params.k() + params.lambda[i];
  return Partition(std::move(parts));
}

Partition rectangle(int a, int b) {
  if (a <= 0 || b <= 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(b), a));
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner))
    throw ContainmentViolation(inner.to_string() + " is not contained in " + outer.to_string());
  for (int i = 0; i + 1 < outer.length(); ++i)
    if (outer[i + 1] > inner[i]) return false;
  return true;
}

int coinv(const Composition& a) {
  int count = 0;
  for (int i = 0; i < a.length(); ++i)
    for (int j = i + 1; j < a.length(); ++j)
      if (a[i] < a[j]) ++count;
  return count;
}

Partition sort(const Composition& a) {
  std::vector<int> parts = a.parts;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int skew_n_stat(const Partition& mu, const Partition& lambda) {
  if (!contains(mu, lambda))
    throw ContainmentViolation(lambda.to_string() + " is not contained in " + mu.to_string());
  const Partition mc = conjugate(mu), lc = conjugate(lambda);
  int total = 0;
  for (int i = 0; i < mc.length(); ++i) {
    const int d = mc[i] - lc[i];
    total += d * (d - 1) / 2;
  }
  return total;
}

int skew_n_stat(const Composition& a, const Partition& lambda) {
  return skew_n_stat(sort(a), lambda);
}

std::vector<Composition> compositions_over(int n, const Partition& lambda, int s) {
  check_enum_guard(n);
  if (lambda.size() > n || lambda.length() > s) return {};
  std::vector<Composition> out;
  std::vector<int> current(static_cast<std::size_t>(s), 0);
  // suffix_min[i] = sum of lambda parts from position i on.
  std::vector<int> suffix_min(static_cast<std::size_t>(s) + 1, 0);
  for (int i = s - 1; i >= 0; --i)
    suffix_min[static_cast<std::size_t>(i)] = suffix_min[static_cast<std::size_t>(i) + 1] + lambda[i];
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == s - 1) {
      if (remaining >= lambda[pos]) {
        current[static_cast<std::size_t>(pos)] = remaining;
        out.push_back({current});
      }
      return;
    }
    const int upper = remaining - suffix_min[static_cast<std::size_t>(pos) + 1];
    for (int v = upper; v >= lambda[pos]; --v) {
      current[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, remaining - v);
    }
  };
  if (s > 0) rec(0, n);
  return out;
}

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_len) {
  check_enum_guard(n);
  if (n < 0) throw DomainError("enumerate_partitions: negative n");
  const int limit = max_len.value_or(n);
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) >= limit) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition parse_partition(std::string_view text) {
  std::string cleaned;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ' && c != '[' && c != ']') cleaned.push_back(c);
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    std::size_t comma = cleaned.find(',', pos);
    if (comma == std::string::npos) comma = cleaned.size();
    int value = 0;
    const char* first = cleaned.data() + pos;
    const char* last = cleaned.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 0)
      throw DomainError("cannot parse partition '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace dspringer
