#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dspringer/partition.hpp"

namespace dspringer {

/// A word in the positive integers.
using Word = std::vector<int>;

/// Semistandard Young tableau in French convention: rows()[0] is the
/// bottom (longest) row.  Rows weakly increase left to right and columns
/// strictly increase bottom to top.
class Tableau {
 public:
  using Rows = std::vector<std::vector<int>>;

  Tableau() = default;
  /// Validates shape and semistandardness; throws DomainError otherwise.
  explicit Tableau(Rows rows);
  /// Skips validation; for enumerators that build valid tableaux by
  /// construction.
  static Tableau unchecked(Rows rows);

  const Rows& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  int at(int row, int col) const {
    return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }
  /// Letter multiplicities; entry i counts the letter i+1.  The result has
  /// at least `min_length` entries.
  std::vector<int> content(int min_length = 0) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

  /// Rows bottom to top separated by '/', e.g. "111222/33/4".
  std::string to_string() const;

 private:
  Rows rows_;
};

/// Filling of outer/inner.  rows()[r] lists the entries of row r from
/// column inner[r] onward.
class SkewTableau {
 public:
  SkewTableau() = default;
  /// Validates; throws DomainError on a bad shape or non-semistandard filling.
  SkewTableau(Partition inner, Tableau::Rows rows);
  static SkewTableau unchecked(Partition inner, Tableau::Rows rows);

  const Partition& inner() const { return inner_; }
  const Tableau::Rows& rows() const { return rows_; }
  Partition outer() const;
  /// Letter multiplicities as in Tableau::content.
  std::vector<int> content(int min_length = 0) const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  Partition inner_;
  Tableau::Rows rows_;
};

/// Device plus rectangular battery of shape ((n-k)^(s-1)) with joint
/// content Lambda(n, lambda, s).
struct BatteryTableau {
  Tableau device;
  Tableau battery;
  DeltaParams params;

  /// Throws DomainError if the battery shape or joint content is wrong.
  void validate() const;
  friend bool operator==(const BatteryTableau& a, const BatteryTableau& b) {
    return a.device == b.device && a.battery == b.battery;
  }
};

/// Device plus battery of arbitrary fixed shape with joint content `content`.
struct GeneralizedBatteryTableau {
  Tableau device;
  Tableau battery;
  Partition content;
};

// ---------------------------------------------------------------- words

Word reading_word(const Tableau& t);
Word reading_word(const SkewTableau& t);
/// Device word followed by battery word.
Word reading_word(const BatteryTableau& t);

/// Per-position charge or cocharge labels and the index of the subword
/// each position was assigned to.
struct WordLabels {
  std::vector<int> label;
  std::vector<int> subword;
};

/// Throws NonPartitionContent unless letter multiplicities weakly decrease.
WordLabels cocharge_labels(const Word& w);
WordLabels charge_labels(const Word& w);
int cocharge(const Word& w);
int charge(const Word& w);

int cc_battery(const BatteryTableau& t);
int ch_battery(const BatteryTableau& t);

/// Renders digits when every letter is at most 9, otherwise comma-separated.
std::string word_to_string(const Word& w);

// ---------------------------------------------------------------- insertion

struct InsertResult {
  Tableau tableau;
  int row = 0;
  int col = 0;
};

InsertResult rsk_insert_letter(const Tableau& t, int x);
/// In-place row insertion; returns the row of the new cell.
int rsk_insert_in_place(Tableau::Rows& rows, int x);
Tableau rsk_insert_word(const Tableau& t, const Word& w);
/// The product D.B: inserts the reading word of B into D.
Tableau rsk_insert_tableau(const Tableau& d, const Tableau& b);

/// Reverse-bumps the cells of shape(s)/target from right to left.  Returns
/// the tableau of shape `target` and the ejected letters in weakly
/// increasing order.  Throws NotHorizontalStrip (or ContainmentViolation).
std::pair<Tableau, Word> unbump_horizontal_strip(const Tableau& s, const Partition& target);

/// B drawn down-and-right of D as one skew tableau.
SkewTableau skew_placement(const Tableau& device, const Tableau& battery);
SkewTableau skew_placement(const BatteryTableau& t);
Tableau jdt_rectify(const SkewTableau& st);

// ---------------------------------------------------------------- enumeration

using TableauVisitor = std::function<void(const Tableau&)>;

/// Visits every SSYT whose letter i+1 occurs content[i] times (zeros
/// allowed), optionally restricted to shapes inside `bound`.
void for_each_ssyt_with_content(const std::vector<int>& content,
                                const std::optional<Partition>& bound,
                                const TableauVisitor& visit);
/// Visits every SSYT of the given shape with entries in 1..max_entry.
void for_each_ssyt_of_shape(const Partition& shape, int max_entry, const TableauVisitor& visit);

std::vector<Tableau> enumerate_ssyt_content(const Partition& mu);
/// Throws SizeMismatch when |nu| != |mu|.
std::vector<Tableau> enumerate_ssyt_shape_content(const Partition& nu, const Partition& mu);

void for_each_generalized_battery_tableau(
    const Partition& battery_shape, const Partition& content,
    const std::function<void(const Tableau& device, const Tableau& battery)>& visit);
void for_each_battery_tableau(const DeltaParams& params,
                              const std::function<void(const BatteryTableau&)>& visit);
std::vector<BatteryTableau> enumerate_battery_tableaux(const DeltaParams& params);

using SkewVisitor = std::function<void(const SkewTableau&)>;
/// Littlewood-Richardson fillings of outer/inner: semistandard with a
/// lattice reverse reading word.  With `content` set only fillings of that
/// content are visited.  Throws ContainmentViolation or SizeMismatch.
void for_each_lr_tableau(const Partition& outer, const Partition& inner,
                         const std::optional<Partition>& content, const SkewVisitor& visit);
std::vector<SkewTableau> enumerate_lr_tableaux(const Partition& outer, const Partition& inner,
                                               const Partition& content);
long long lr_count(const Partition& outer, const Partition& inner, const Partition& content);

/// For each admissible nu, the unique battery tableau of maximal cocharge.
std::vector<std::pair<Partition, BatteryTableau>> max_cocharge_tableaux(const DeltaParams& params);

}  // namespace dspringer
