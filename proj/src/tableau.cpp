#include "dspringer/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "dspringer/errors.hpp"

namespace dspringer {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_rows_semistandard(const Partition& inner, const Tableau::Rows& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty() && inner[static_cast<int>(r)] == 0)
      throw DomainError("tableau has an empty row");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) throw DomainError("tableau entries must be positive");
      if (c > 0 && rows[r][c - 1] > rows[r][c]) throw DomainError("row is not weakly increasing");
    }
  }
  std::vector<int> outer;
  for (std::size_t r = 0; r < rows.size(); ++r)
    outer.push_back(inner[static_cast<int>(r)] + static_cast<int>(rows[r].size()));
  for (std::size_t r = 1; r < outer.size(); ++r)
    if (outer[r] > outer[r - 1]) throw DomainError("row lengths increase upward");
  if (inner.length() > static_cast<int>(rows.size()))
    throw DomainError("inner shape has more rows than the filling");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const int off = inner[static_cast<int>(r)];
    const int below_off = inner[static_cast<int>(r) - 1];
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int col = off + static_cast<int>(c);
      if (col < below_off) continue;
      if (rows[r][c] <= rows[r - 1][idx(col - below_off)])
        throw DomainError("column is not strictly increasing");
    }
  }
}

std::vector<int> count_letters(const Tableau::Rows& rows, int min_length) {
  std::vector<int> out(idx(std::max(min_length, 0)), 0);
  for (const auto& row : rows)
    for (int x : row) {
      if (x > static_cast<int>(out.size())) out.resize(idx(x), 0);
      ++out[idx(x - 1)];
    }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Tableau

Tableau::Tableau(Rows rows) : rows_(std::move(rows)) {
  check_rows_semistandard(Partition{}, rows_);
}

Tableau Tableau::unchecked(Rows rows) {
  Tableau t;
  t.rows_ = std::move(rows);
  return t;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

std::vector<int> Tableau::content(int min_length) const { return count_letters(rows_, min_length); }

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '/';
    Word w(rows_[r].begin(), rows_[r].end());
    out += word_to_string(w);
  }
  return out;
}

SkewTableau::SkewTableau(Partition inner, Tableau::Rows rows)
    : inner_(std::move(inner)), rows_(std::move(rows)) {
  check_rows_semistandard(inner_, rows_);
}

SkewTableau SkewTableau::unchecked(Partition inner, Tableau::Rows rows) {
  SkewTableau t;
  t.inner_ = std::move(inner);
  t.rows_ = std::move(rows);
  return t;
}

Partition SkewTableau::outer() const {
  std::vector<int> parts;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    parts.push_back(inner_[static_cast<int>(r)] + static_cast<int>(rows_[r].size()));
  return Partition(std::move(parts));
}

std::vector<int> SkewTableau::content(int min_length) const {
  return count_letters(rows_, min_length);
}

void BatteryTableau::validate() const {
  params.validate();
  const int width = params.n - params.k();
  if (!(battery.shape() == rectangle(width, params.s - 1)))
    throw DomainError("battery shape is not ((n-k)^(s-1))");
  const Partition lam = lambda_rect(params);
  std::vector<int> total = device.content(lam.length());
  const std::vector<int> b = battery.content(lam.length());
  if (total.size() < b.size()) total.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) total[i] += b[i];
  std::vector<int> expected(lam.parts());
  expected.resize(total.size(), 0);
  if (total != expected) throw DomainError("battery tableau content differs from Lambda");
}

// ---------------------------------------------------------------- words

Word reading_word(const Tableau& t) {
  Word w;
  w.reserve(idx(t.size()));
  for (auto r = t.rows().rbegin(); r != t.rows().rend(); ++r) w.insert(w.end(), r->begin(), r->end());
  return w;
}

Word reading_word(const SkewTableau& t) {
  Word w;
  for (auto r = t.rows().rbegin(); r != t.rows().rend(); ++r) w.insert(w.end(), r->begin(), r->end());
  return w;
}

Word reading_word(const BatteryTableau& t) {
  Word w = reading_word(t.device);
  const Word b = reading_word(t.battery);
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

namespace {

WordLabels label_word(const Word& w, bool charge_mode) {
  std::vector<int> counts;
  for (int x : w) {
    if (x < 1) throw NonPartitionContent("word letters must be positive");
    if (x > static_cast<int>(counts.size())) counts.resize(idx(x), 0);
    ++counts[idx(x - 1)];
  }
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > counts[i - 1])
      throw NonPartitionContent("word content is not a partition: " + word_to_string(w));

  const int len = static_cast<int>(w.size());
  WordLabels out{std::vector<int>(w.size(), 0), std::vector<int>(w.size(), -1)};
  std::vector<int> remaining = counts;
  int placed = 0;
  for (int sub = 0; placed < len; ++sub) {
    int height = 0;
    while (height < static_cast<int>(remaining.size()) && remaining[idx(height)] > 0) ++height;
    int prev = len;  // scanning for the 1 starts at the right end
    int label = 0;
    for (int letter = 1; letter <= height; ++letter) {
      int pos = prev;
      int found = -1;
      for (int step = 0; step < len; ++step) {
        pos = pos == 0 ? len - 1 : pos - 1;
        if (out.subword[idx(pos)] < 0 && w[idx(pos)] == letter) {
          found = pos;
          break;
        }
      }
      if (letter > 1) {
        const bool wrapped = found > prev;
        if (wrapped == charge_mode) ++label;
      }
      out.label[idx(found)] = label;
      out.subword[idx(found)] = sub;
      prev = found;
      --remaining[idx(letter - 1)];
      ++placed;
    }
  }
  return out;
}

int sum_labels(const WordLabels& labels) {
  int total = 0;
  for (int x : labels.label) total += x;
  return total;
}

}  // namespace

WordLabels cocharge_labels(const Word& w) { return label_word(w, false); }
WordLabels charge_labels(const Word& w) { return label_word(w, true); }
int cocharge(const Word& w) { return sum_labels(cocharge_labels(w)); }
int charge(const Word& w) { return sum_labels(charge_labels(w)); }
int cc_battery(const BatteryTableau& t) { return cocharge(reading_word(t)); }
int ch_battery(const BatteryTableau& t) { return charge(reading_word(t)); }

std::string word_to_string(const Word& w) {
  const bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 9; });
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i) out << ',';
    out << w[i];
  }
  return out.str();
}

// ---------------------------------------------------------------- insertion

int rsk_insert_in_place(Tableau::Rows& rows, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return static_cast<int>(r);
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return static_cast<int>(r);
    }
    std::swap(x, *it);
  }
}

InsertResult rsk_insert_letter(const Tableau& t, int x) {
  if (x < 1) throw DomainError("inserted letter must be positive");
  Tableau::Rows rows = t.rows();
  const int row = rsk_insert_in_place(rows, x);
  const int col = static_cast<int>(rows[idx(row)].size()) - 1;
  return {Tableau::unchecked(std::move(rows)), row, col};
}

Tableau rsk_insert_word(const Tableau& t, const Word& w) {
  Tableau::Rows rows = t.rows();
  for (int x : w) rsk_insert_in_place(rows, x);
  return Tableau::unchecked(std::move(rows));
}

Tableau rsk_insert_tableau(const Tableau& d, const Tableau& b) {
  return rsk_insert_word(d, reading_word(b));
}

std::pair<Tableau, Word> unbump_horizontal_strip(const Tableau& s, const Partition& target) {
  const Partition shape = s.shape();
  if (!is_horizontal_strip(shape, target))
    throw NotHorizontalStrip(shape.to_string() + "/" + target.to_string() +
                             " is not a horizontal strip");
  std::vector<std::pair<int, int>> cells;  // (column, row)
  for (int r = 0; r < shape.length(); ++r)
    for (int c = target[r]; c < shape[r]; ++c) cells.emplace_back(c, r);
  std::sort(cells.begin(), cells.end(), std::greater<>());

  Tableau::Rows rows = s.rows();
  Word ejected;
  for (const auto& [col, row] : cells) {
    auto& top = rows[idx(row)];
    int y = top.back();
    top.pop_back();
    for (int r = row - 1; r >= 0; --r) {
      auto& below = rows[idx(r)];
      auto it = std::lower_bound(below.begin(), below.end(), y);
      // The column below a removed corner always holds a smaller entry.
      --it;
      std::swap(y, *it);
    }
    ejected.push_back(y);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  std::reverse(ejected.begin(), ejected.end());
  return {Tableau::unchecked(std::move(rows)), std::move(ejected)};
}

SkewTableau skew_placement(const Tableau& device, const Tableau& battery) {
  const int width = device.empty() ? 0 : static_cast<int>(device.rows()[0].size());
  const int height = static_cast<int>(battery.rows().size());
  Tableau::Rows rows = battery.rows();
  rows.insert(rows.end(), device.rows().begin(), device.rows().end());
  return SkewTableau::unchecked(rectangle(width, height), std::move(rows));
}

SkewTableau skew_placement(const BatteryTableau& t) { return skew_placement(t.device, t.battery); }

Tableau jdt_rectify(const SkewTableau& st) {
  // Full rows with 0 marking inner (empty) cells.
  Tableau::Rows grid;
  std::vector<int> inner;
  for (std::size_t r = 0; r < st.rows().size(); ++r) {
    const int off = st.inner()[static_cast<int>(r)];
    std::vector<int> row(idx(off), 0);
    row.insert(row.end(), st.rows()[r].begin(), st.rows()[r].end());
    grid.push_back(std::move(row));
    inner.push_back(off);
  }
  const auto len = [&](int r) {
    return r < static_cast<int>(grid.size()) ? static_cast<int>(grid[idx(r)].size()) : 0;
  };
  for (;;) {
    // Topmost inner corner.
    int r0 = -1;
    for (int r = static_cast<int>(inner.size()) - 1; r >= 0; --r)
      if (inner[idx(r)] > 0 &&
          (r + 1 >= static_cast<int>(inner.size()) || inner[idx(r + 1)] < inner[idx(r)])) {
        r0 = r;
        break;
      }
    if (r0 < 0) break;
    int r = r0;
    int c = --inner[idx(r0)];
    for (;;) {
      const bool has_right = c + 1 < len(r);
      const bool has_above = c < len(r + 1) && grid[idx(r + 1)][idx(c)] != 0;
      if (!has_right && !has_above) break;
      const bool take_above =
          has_above && (!has_right || grid[idx(r + 1)][idx(c)] <= grid[idx(r)][idx(c + 1)]);
      if (take_above) {
        grid[idx(r)][idx(c)] = grid[idx(r + 1)][idx(c)];
        ++r;
      } else {
        grid[idx(r)][idx(c)] = grid[idx(r)][idx(c + 1)];
        ++c;
      }
    }
    grid[idx(r)].pop_back();
    while (!grid.empty() && grid.back().empty()) {
      grid.pop_back();
      if (inner.size() > grid.size()) inner.resize(grid.size());
    }
  }
  return Tableau::unchecked(std::move(grid));
}

// ---------------------------------------------------------------- enumeration

namespace {

/// Builds tableaux letter by letter, each letter contributing a horizontal
/// strip appended to the ends of rows.
class StripBuilder {
 public:
  StripBuilder(std::optional<Partition> bound, int letters)
      : bound_(std::move(bound)), letters_(letters), old_lengths_(idx(letters)) {}

  /// sizes[i] = size of the strip of letter i+1, or -1 for any size.
  /// Visits only tableaux whose final shape equals the bound when
  /// `must_fill` is set.
  void run(const std::vector<int>& sizes, bool must_fill, const TableauVisitor& visit) {
    sizes_ = &sizes;
    must_fill_ = must_fill;
    visit_ = &visit;
    rows_.clear();
    place_letter(0);
  }

 private:
  int row_len(int r) const {
    return r < static_cast<int>(rows_.size()) ? static_cast<int>(rows_[idx(r)].size()) : 0;
  }
  int bound_len(int r) const { return bound_ ? (*bound_)[r] : 1 << 29; }

  bool column_room(int letter) const {
    // Each column still to be completed needs distinct letters above `letter`.
    if (!must_fill_ || !bound_) return true;
    const int spare = letters_ - letter;
    for (int c = 0; c < (*bound_)[0]; ++c) {
      int target = 0, filled = 0;
      while ((*bound_)[target] > c) ++target;
      while (row_len(filled) > c) ++filled;
      if (target - filled > spare) return false;
    }
    return true;
  }

  void place_letter(int letter) {
    if (letter == letters_) {
      if (must_fill_ && bound_ && !(shape_now() == *bound_)) return;
      (*visit_)(Tableau::unchecked(rows_));
      return;
    }
    if (!column_room(letter)) return;
    auto& old = old_lengths_[idx(letter)];
    old.clear();
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) old.push_back(row_len(r));
    place_row(letter, 0, (*sizes_)[idx(letter)]);
  }

  // Chooses how many copies of `letter` to append to row r and above;
  // remaining < 0 means the strip size is free.
  void place_row(int letter, int r, int remaining) {
    const auto& old = old_lengths_[idx(letter)];
    const int old_r = r < static_cast<int>(old.size()) ? old[idx(r)] : 0;
    const int cap_strip = r == 0 ? (1 << 29) : (old[idx(r - 1)] - old_r);
    const int cap = std::min(cap_strip, bound_len(r) - old_r);
    if (r == static_cast<int>(old.size())) {
      // Topmost row the strip can reach (possibly a new row).
      if (remaining >= 0) {
        if (remaining <= cap) finish_with(letter, r, remaining);
        return;
      }
      for (int a = cap; a >= 0; --a) finish_with(letter, r, a);
      return;
    }
    const int hi = remaining < 0 ? cap : std::min(cap, remaining);
    for (int a = hi; a >= 0; --a) {
      append(r, letter, a);
      place_row(letter, r + 1, remaining < 0 ? -1 : remaining - a);
      remove(r, a);
    }
  }

  void finish_with(int letter, int r, int amount) {
    append(r, letter, amount);
    place_letter(letter + 1);
    remove(r, amount);
  }

  void append(int r, int letter, int count) {
    if (count == 0) return;
    if (r == static_cast<int>(rows_.size())) rows_.emplace_back();
    rows_[idx(r)].insert(rows_[idx(r)].end(), idx(count), letter + 1);
  }
  void remove(int r, int count) {
    if (count == 0) return;
    auto& row = rows_[idx(r)];
    row.resize(row.size() - idx(count));
    if (row.empty() && r + 1 == static_cast<int>(rows_.size())) rows_.pop_back();
  }

  Partition shape_now() const {
    std::vector<int> parts;
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
  }

  std::optional<Partition> bound_;
  int letters_;
  const std::vector<int>* sizes_ = nullptr;
  bool must_fill_ = false;
  const TableauVisitor* visit_ = nullptr;
  Tableau::Rows rows_;
  std::vector<std::vector<int>> old_lengths_;
};

}  // namespace

void for_each_ssyt_with_content(const std::vector<int>& content,
                                const std::optional<Partition>& bound,
                                const TableauVisitor& visit) {
  for (int x : content)
    if (x < 0) throw DomainError("negative content");
  StripBuilder builder(bound, static_cast<int>(content.size()));
  builder.run(content, false, visit);
}

void for_each_ssyt_of_shape(const Partition& shape, int max_entry, const TableauVisitor& visit) {
  if (shape.empty()) {
    visit(Tableau{});
    return;
  }
  if (max_entry < shape.length()) return;
  StripBuilder builder(shape, max_entry);
  const std::vector<int> sizes(idx(max_entry), -1);
  builder.run(sizes, true, visit);
}

std::vector<Tableau> enumerate_ssyt_content(const Partition& mu) {
  std::vector<Tableau> out;
  for_each_ssyt_with_content(mu.parts(), std::nullopt, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::vector<Tableau> enumerate_ssyt_shape_content(const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size())
    throw SizeMismatch("SSYT(" + nu.to_string() + ", " + mu.to_string() + "): sizes differ");
  std::vector<Tableau> out;
  for_each_ssyt_with_content(mu.parts(), nu, [&](const Tableau& t) {
    if (t.shape() == nu) out.push_back(t);
  });
  return out;
}

void for_each_generalized_battery_tableau(
    const Partition& battery_shape, const Partition& content,
    const std::function<void(const Tableau&, const Tableau&)>& visit) {
  const int letters = content.length();
  for_each_ssyt_of_shape(battery_shape, letters, [&](const Tableau& battery) {
    const std::vector<int> used = battery.content(letters);
    std::vector<int> rest(idx(letters));
    for (int i = 0; i < letters; ++i) {
      rest[idx(i)] = content[i] - used[idx(i)];
      if (rest[idx(i)] < 0) return;
    }
    for_each_ssyt_with_content(rest, std::nullopt,
                               [&](const Tableau& device) { visit(device, battery); });
  });
}

void for_each_battery_tableau(const DeltaParams& params,
                              const std::function<void(const BatteryTableau&)>& visit) {
  params.validate();
  const Partition shape = rectangle(params.n - params.k(), params.s - 1);
  for_each_generalized_battery_tableau(shape, lambda_rect(params),
                                       [&](const Tableau& device, const Tableau& battery) {
                                         visit(BatteryTableau{device, battery, params});
                                       });
}

std::vector<BatteryTableau> enumerate_battery_tableaux(const DeltaParams& params) {
  std::vector<BatteryTableau> out;
  for_each_battery_tableau(params, [&](const BatteryTableau& t) { out.push_back(t); });
  return out;
}

namespace {

class LrFiller {
 public:
  LrFiller(const Partition& outer, const Partition& inner, const std::optional<Partition>& content,
           const SkewVisitor& visit)
      : outer_(outer), inner_(inner), content_(content), visit_(visit) {
    for (int r = 0; r < outer.length(); ++r) {
      grid_.emplace_back(idx(outer[r]), 0);
      for (int c = outer[r] - 1; c >= inner[r]; --c) order_.emplace_back(r, c);
    }
    counts_.assign(idx(order_.size()) + 2, 0);
  }

  void run() { fill(0); }

 private:
  void fill(std::size_t pos) {
    if (pos == order_.size()) {
      Tableau::Rows rows;
      for (int r = 0; r < outer_.length(); ++r)
        rows.emplace_back(grid_[idx(r)].begin() + inner_[r], grid_[idx(r)].end());
      visit_(SkewTableau::unchecked(inner_, std::move(rows)));
      return;
    }
    const auto [r, c] = order_[pos];
    int lo = 1;
    if (r > 0 && c >= inner_[r - 1]) lo = grid_[idx(r - 1)][idx(c)] + 1;
    int hi = static_cast<int>(order_.size());
    if (c + 1 < outer_[r]) hi = grid_[idx(r)][idx(c + 1)];
    if (content_) hi = std::min(hi, content_->length());
    for (int v = lo; v <= hi; ++v) {
      if (v > 1 && counts_[idx(v)] + 1 > counts_[idx(v - 1)]) continue;
      if (content_ && counts_[idx(v)] + 1 > (*content_)[v - 1]) continue;
      ++counts_[idx(v)];
      grid_[idx(r)][idx(c)] = v;
      fill(pos + 1);
      --counts_[idx(v)];
    }
    grid_[idx(r)][idx(c)] = 0;
  }

  const Partition& outer_;
  const Partition& inner_;
  const std::optional<Partition>& content_;
  const SkewVisitor& visit_;
  std::vector<std::vector<int>> grid_;
  std::vector<std::pair<int, int>> order_;
  std::vector<int> counts_;  // counts_[v] = copies of v placed so far
};

}  // namespace

void for_each_lr_tableau(const Partition& outer, const Partition& inner,
                         const std::optional<Partition>& content, const SkewVisitor& visit) {
  if (!contains(outer, inner))
    throw ContainmentViolation(inner.to_string() + " is not contained in " + outer.to_string());
  if (content && outer.size() - inner.size() != content->size())
    throw SizeMismatch("LR content size differs from the skew shape size");
  LrFiller(outer, inner, content, visit).run();
}

std::vector<SkewTableau> enumerate_lr_tableaux(const Partition& outer, const Partition& inner,
                                               const Partition& content) {
  std::vector<SkewTableau> out;
  for_each_lr_tableau(outer, inner, content, [&](const SkewTableau& t) { out.push_back(t); });
  return out;
}

long long lr_count(const Partition& outer, const Partition& inner, const Partition& content) {
  long long count = 0;
  for_each_lr_tableau(outer, inner, content, [&](const SkewTableau&) { ++count; });
  return count;
}

std::vector<std::pair<Partition, BatteryTableau>> max_cocharge_tableaux(const DeltaParams& params) {
  params.validate();
  const int n = params.n, s = params.s, width = n - params.k();
  const Partition& lam = params.lambda;
  Tableau::Rows battery_rows;
  for (int i = 0; i + 1 < s && width > 0; ++i) battery_rows.emplace_back(idx(width), i + 1);
  const Tableau battery = Tableau::unchecked(battery_rows);

  std::vector<std::pair<Partition, BatteryTableau>> out;
  for (const Partition& nu : enumerate_partitions(n, s)) {
    if (!contains(nu, lam) || !is_horizontal_strip(nu, lam)) continue;
    Tableau::Rows rows;
    for (int r = 0; r < nu.length(); ++r) {
      std::vector<int> row(idx(lam[r]), r + 1);
      row.insert(row.end(), idx(nu[r] - lam[r]), s);
      rows.push_back(std::move(row));
    }
    out.emplace_back(nu, BatteryTableau{Tableau::unchecked(std::move(rows)), battery, params});
  }
  return out;
}

}  // namespace dspringer
