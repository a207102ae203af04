#pragma once

#include <string>
#include <vector>

#include "dspringer/partition.hpp"
#include "dspringer/tableau.hpp"

namespace dspringer {

// ---------------------------------------------------------------- s = 2

/// Element (alpha, U) of the index set of the two-row Hall-Littlewood
/// expansion: alpha has two parts and contains lambda, U has content
/// sort(alpha).
struct AlphaPair {
  Composition alpha;
  Tableau u;

  friend bool operator==(const AlphaPair&, const AlphaPair&) = default;
};

/// n(alpha/lambda) + coinv(alpha).
int alpha_weight(const Composition& alpha, const Partition& lambda);

/// Moves alpha_weight boxes from the first to the second coordinate of
/// sort(alpha).  Throws ContainmentViolation unless alpha has two parts and
/// contains lambda.
Composition phi(const Composition& alpha, const Partition& lambda);
Composition phi_inv(const Composition& beta, const Partition& lambda);

/// Changes the rightmost 1s of the bottom row of U to 2s until the content
/// is phi(alpha).  The result need not be semistandard.
Tableau psi(const Composition& alpha, const Tableau& u, const Partition& lambda);

/// Throws DomainViolation when the pair is outside the index set.
BatteryTableau Phi_map(const AlphaPair& pair, const Partition& lambda, int n);
AlphaPair Phi_inv(const BatteryTableau& t);

/// Every (alpha, U) for the given n and two-row lambda.
std::vector<AlphaPair> enumerate_alpha_pairs(int n, const Partition& lambda);

// ---------------------------------------------------------------- OSPs

/// Ordered set partition of {1..n}; each block is kept sorted.
struct OrderedSetPartition {
  std::vector<std::vector<int>> blocks;

  int size() const;
  /// "(45|367|28|19)"; entries are comma separated when any exceeds 9.
  std::string to_string() const;
  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;
};

/// Accepts the to_string form.  Throws DomainError on malformed input.
OrderedSetPartition parse_osp(const std::string& text);

/// Major index of the word formed by concatenating the sorted blocks.
int minimaj(const OrderedSetPartition& p);
/// Block minima right to left, then the remaining entries left to right.
Word osp_reading_word(const OrderedSetPartition& p);
bool is_highest_weight(const OrderedSetPartition& p);
/// All OSPs of {1..n} into k blocks whose reading word is 1 2 ... n.
std::vector<OrderedSetPartition> enumerate_highest_weight_osps(int n, int k);

/// Domain: lambda = (1^k), s = k and a one-row device.  Throws
/// DomainViolation otherwise.
OrderedSetPartition f_map(const BatteryTableau& t);
BatteryTableau f_inv(const OrderedSetPartition& p);

/// The battery tableaux of T+(n, (1^k), k) with a one-row device.
std::vector<BatteryTableau> one_row_battery_tableaux(int n, int k);

/// sum q^minimaj over highest-weight OSPs, sum q^ch over one-row battery
/// tableaux and the s_(n) coefficient of the charge form all agree.
bool sn_coefficient_check(int n, int k);
/// Charge labels of the battery are 0 or 1 (1 exactly when the entry
/// exceeds its row index) and device labels vanish outside the final
/// subword, which reads 1 2 ... k.
bool battery_charge_labels_check(const BatteryTableau& t);
bool battery_charge_labels_check(int n, int k);

}  // namespace dspringer
