#include "dspringer/bijections.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dspringer/delta_springer.hpp"
#include "dspringer/errors.hpp"

namespace dspringer {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_alpha(const Composition& alpha, const Partition& lambda) {
  if (alpha.length() != 2 || lambda.length() > 2)
    throw ContainmentViolation("expected a two-part composition and a two-row lambda");
  if (alpha[0] < 0 || alpha[1] < 0 || !contains(alpha, lambda))
    throw ContainmentViolation(alpha.to_string() + " does not contain " + lambda.to_string());
}

int count_letter(const std::vector<int>& row, int letter) {
  return static_cast<int>(std::count(row.begin(), row.end(), letter));
}

Tableau make_tableau(Tableau::Rows rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  try {
    return Tableau(std::move(rows));
  } catch (const DomainError& e) {
    throw DomainViolation(e.what());
  }
}

Partition one_column(int k) { return Partition(std::vector<int>(idx(k), 1)); }

}  // namespace

int alpha_weight(const Composition& alpha, const Partition& lambda) {
  return skew_n_stat(alpha, lambda) + coinv(alpha);
}

Composition phi(const Composition& alpha, const Partition& lambda) {
  check_alpha(alpha, lambda);
  const Partition sorted = sort(alpha);
  const int m = alpha_weight(alpha, lambda);
  return Composition{{sorted[0] - m, sorted[1] + m}};
}

Composition phi_inv(const Composition& beta, const Partition& lambda) {
  check_alpha(beta, lambda);
  const int n = beta.size();
  const int l1 = lambda[0];
  if (beta[1] < l1) return beta;
  const int d = beta[1] - l1;
  const int r = d / 2;
  if (d % 2 == 0) return Composition{{n - l1 - r, l1 + r}};
  return Composition{{l1 + r, n - l1 - r}};
}

Tableau psi(const Composition& alpha, const Tableau& u, const Partition& lambda) {
  check_alpha(alpha, lambda);
  const int m = alpha_weight(alpha, lambda);
  Tableau::Rows rows = u.rows();
  if (rows.empty()) return u;
  auto& bottom = rows[0];
  int changed = 0;
  for (int c = static_cast<int>(bottom.size()) - 1; c >= 0 && changed < m; --c) {
    if (bottom[idx(c)] == 1) {
      bottom[idx(c)] = 2;
      ++changed;
    }
  }
  if (changed < m) throw DomainViolation("psi: not enough 1s in the bottom row");
  return Tableau::unchecked(std::move(rows));
}

BatteryTableau Phi_map(const AlphaPair& pair, const Partition& lambda, int n) {
  const Composition& alpha = pair.alpha;
  try {
    check_alpha(alpha, lambda);
  } catch (const ContainmentViolation& e) {
    throw DomainViolation(e.what());
  }
  if (alpha.size() != n) throw DomainViolation("Phi: alpha is not a composition of n");
  const Partition sorted = sort(alpha);
  const std::vector<int> content = pair.u.content(2);
  if (content.size() != 2 || content[0] != sorted[0] || content[1] != sorted[1])
    throw DomainViolation("Phi: U must have content sort(alpha)");

  const DeltaParams params{n, lambda, 2};
  const Partition big = lambda_rect(params);
  const Composition target = phi(alpha, lambda);
  const Tableau shifted = psi(alpha, pair.u, lambda);

  const int pad1 = big[0] - target[0];
  const int pad2 = big[1] - target[1];
  if (pad1 < 0 || pad2 < 0) throw DomainViolation("Phi: content exceeds Lambda");
  Tableau::Rows rows(2);
  rows[0].assign(idx(pad1), 1);
  rows[1].assign(idx(pad2), 2);
  for (std::size_t r = 0; r < shifted.rows().size(); ++r)
    rows[r].insert(rows[r].end(), shifted.rows()[r].begin(), shifted.rows()[r].end());
  const Tableau full = make_tableau(std::move(rows));

  auto [device, ejected] = unbump_horizontal_strip(full, pair.u.shape());
  Tableau battery = ejected.empty() ? Tableau() : Tableau(Tableau::Rows{ejected});
  BatteryTableau out{std::move(device), std::move(battery), params};
  out.validate();
  return out;
}

AlphaPair Phi_inv(const BatteryTableau& t) {
  const DeltaParams& p = t.params;
  if (p.s != 2) throw DomainViolation("Phi_inv: s must be 2");
  t.validate();
  const Partition shape = t.device.shape();
  Tableau::Rows rows = rsk_insert_tableau(t.device, t.battery).rows();
  rows.resize(2);
  const auto strip = [&](int r, int letter) {
    auto& row = rows[idx(r)];
    const int excess = static_cast<int>(row.size()) - shape[r];
    if (excess < 0 || count_letter(row, letter) < excess ||
        !std::all_of(row.begin(), row.begin() + excess, [&](int x) { return x == letter; }))
      throw DomainViolation("Phi_inv: cannot strip the padding letters");
    row.erase(row.begin(), row.begin() + excess);
  };
  strip(0, 1);
  strip(1, 2);
  const int ones = count_letter(rows[0], 1);
  const Composition beta{{ones, shape.size() - ones}};
  const Composition alpha = phi_inv(beta, p.lambda);
  const Partition sorted = sort(alpha);
  int to_change = sorted[0] - ones;
  if (to_change < 0) throw DomainViolation("Phi_inv: negative content change");
  for (int& x : rows[0]) {
    if (to_change == 0) break;
    if (x == 2) {
      x = 1;
      --to_change;
    }
  }
  if (to_change != 0) throw DomainViolation("Phi_inv: not enough 2s in the bottom row");
  return AlphaPair{alpha, make_tableau(std::move(rows))};
}

std::vector<AlphaPair> enumerate_alpha_pairs(int n, const Partition& lambda) {
  std::vector<AlphaPair> out;
  for (const Composition& alpha : compositions_over(n, lambda, 2))
    for (Tableau& u : enumerate_ssyt_content(sort(alpha))) out.push_back({alpha, std::move(u)});
  return out;
}

// ---------------------------------------------------------------- OSPs

int OrderedSetPartition::size() const {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  return total;
}

std::string OrderedSetPartition::to_string() const {
  bool digits = true;
  for (const auto& b : blocks)
    for (int x : b) digits = digits && x <= 9;
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out << '|';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j && !digits) out << ',';
      out << blocks[i][j];
    }
  }
  out << ')';
  return out.str();
}

OrderedSetPartition parse_osp(const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  const bool commas = body.find(',') != std::string::npos;
  OrderedSetPartition out;
  std::stringstream blocks(body);
  std::string block;
  while (std::getline(blocks, block, '|')) {
    std::vector<int> entries;
    if (commas) {
      std::stringstream items(block);
      std::string item;
      while (std::getline(items, item, ',')) {
        if (item.empty()) throw DomainError("parse_osp: empty entry in '" + text + "'");
        entries.push_back(std::stoi(item));
      }
    } else {
      for (char c : block) {
        if (c < '0' || c > '9') throw DomainError("parse_osp: bad character in '" + text + "'");
        entries.push_back(c - '0');
      }
    }
    if (entries.empty()) throw DomainError("parse_osp: empty block in '" + text + "'");
    std::sort(entries.begin(), entries.end());
    out.blocks.push_back(std::move(entries));
  }
  std::vector<int> all;
  for (const auto& b : out.blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) throw DomainError("parse_osp: blocks must partition 1..n");
  return out;
}

int minimaj(const OrderedSetPartition& p) {
  Word w;
  for (auto block : p.blocks) {
    std::sort(block.begin(), block.end());
    w.insert(w.end(), block.begin(), block.end());
  }
  int total = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) total += static_cast<int>(i) + 1;
  return total;
}

Word osp_reading_word(const OrderedSetPartition& p) {
  Word w;
  for (auto it = p.blocks.rbegin(); it != p.blocks.rend(); ++it)
    w.push_back(*std::min_element(it->begin(), it->end()));
  for (auto block : p.blocks) {
    std::sort(block.begin(), block.end());
    w.insert(w.end(), block.begin() + 1, block.end());
  }
  return w;
}

bool is_highest_weight(const OrderedSetPartition& p) {
  const Word w = osp_reading_word(p);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<OrderedSetPartition> enumerate_highest_weight_osps(int n, int k) {
  if (k < 1 || k > n) throw DomainError("enumerate_highest_weight_osps: need 1 <= k <= n");
  std::vector<OrderedSetPartition> out;
  // Each block size is fixed first, then the letters 1..n are placed in
  // order.  The reading word forces the letter x <= k to open block k - x
  // and the later letters to fill blocks from left to right.
  std::vector<int> sizes(idx(k));
  OrderedSetPartition current;
  current.blocks.assign(idx(k), {});
  std::function<void(int, int)> place = [&](int x, int last_block) {
    if (x > n) {
      if (is_highest_weight(current)) out.push_back(current);
      return;
    }
    for (int j = 0; j < k; ++j) {
      auto& block = current.blocks[idx(j)];
      if (static_cast<int>(block.size()) >= sizes[idx(j)]) continue;
      const bool opens = block.empty();
      if (opens != (x <= k)) continue;
      if (opens && j != k - x) continue;
      if (!opens && j < last_block) continue;
      block.push_back(x);
      place(x + 1, opens ? last_block : j);
      block.pop_back();
    }
  };
  std::function<void(int, int)> choose_sizes = [&](int j, int remaining) {
    if (j == k) {
      if (remaining == 0) place(1, 0);
      return;
    }
    for (int sz = 1; sz <= remaining - (k - j - 1); ++sz) {
      sizes[idx(j)] = sz;
      choose_sizes(j + 1, remaining - sz);
    }
  };
  choose_sizes(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

OrderedSetPartition f_map(const BatteryTableau& t) {
  const DeltaParams& p = t.params;
  const int k = p.k();
  if (k < 1 || !(p.lambda == one_column(k)) || p.s != k)
    throw DomainViolation("f: expected lambda = (1^k) and s = k");
  if (t.device.rows().size() > 1) throw DomainViolation("f: device must be a single row");
  t.validate();
  const std::vector<int> mult = t.device.content(k);
  OrderedSetPartition out;
  int next = k + 1;
  for (int i = 1; i <= k; ++i) {
    const int m = mult[idx(i - 1)];
    if (m < 1) throw DomainViolation("f: letter " + std::to_string(i) + " missing from the device");
    std::vector<int> block{k + 1 - i};
    for (int j = 1; j < m; ++j) block.push_back(next++);
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

BatteryTableau f_inv(const OrderedSetPartition& p) {
  const int n = p.size();
  const int k = static_cast<int>(p.blocks.size());
  if (k < 1 || !is_highest_weight(p)) throw DomainViolation("f_inv: not a highest-weight OSP");
  const DeltaParams params{n, one_column(k), k};
  std::vector<int> device;
  std::vector<int> battery_content(idx(k));
  for (int i = 1; i <= k; ++i) {
    const int m = static_cast<int>(p.blocks[idx(i - 1)].size());
    device.insert(device.end(), idx(m), i);
    battery_content[idx(i - 1)] = n - k + 1 - m;
    if (battery_content[idx(i - 1)] < 0) throw DomainViolation("f_inv: block too large");
  }
  const Partition shape = rectangle(n - k, k - 1);
  std::vector<Tableau> fillings;
  for_each_ssyt_with_content(battery_content, shape, [&](const Tableau& b) {
    if (b.shape() == shape) fillings.push_back(b);
  });
  if (fillings.size() != 1)
    throw DomainViolation("f_inv: expected a unique battery, found " + std::to_string(fillings.size()));
  BatteryTableau out{Tableau(Tableau::Rows{device}), fillings.front(), params};
  out.validate();
  return out;
}

std::vector<BatteryTableau> one_row_battery_tableaux(int n, int k) {
  std::vector<BatteryTableau> out;
  for_each_battery_tableau(DeltaParams{n, one_column(k), k}, [&](const BatteryTableau& t) {
    if (t.device.rows().size() <= 1) out.push_back(t);
  });
  return out;
}

bool sn_coefficient_check(int n, int k) {
  QTPoly by_osp;
  for (const auto& p : enumerate_highest_weight_osps(n, k))
    by_osp += QTPoly::q(static_cast<std::uint32_t>(minimaj(p)));
  QTPoly by_charge;
  for (const auto& t : one_row_battery_tableaux(n, k))
    by_charge += QTPoly::q(static_cast<std::uint32_t>(ch_battery(t)));
  const QTPoly by_form = frobenius_charge_form(DeltaParams{n, one_column(k), k}).coeff(Partition{n});
  return by_osp == by_charge && by_charge == by_form;
}

bool battery_charge_labels_check(const BatteryTableau& t) {
  const int k = t.params.k();
  const Word device = reading_word(t.device);
  const Word word = reading_word(t);
  const WordLabels labels = charge_labels(word);
  std::vector<int> row_index;
  for (int r = static_cast<int>(t.battery.rows().size()) - 1; r >= 0; --r)
    row_index.insert(row_index.end(), t.battery.rows()[idx(r)].size(), r + 1);

  const int last = word.empty() ? 0 : *std::max_element(labels.subword.begin(), labels.subword.end());
  int expected_letter = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const bool in_device = i < device.size();
    if (labels.subword[i] == last) {
      if (!in_device || word[i] != expected_letter || labels.label[i] != expected_letter - 1) return false;
      ++expected_letter;
    } else if (in_device) {
      if (labels.label[i] != 0) return false;
    } else {
      const int expected = word[i] > row_index[i - device.size()] ? 1 : 0;
      if (labels.label[i] != expected) return false;
    }
  }
  return expected_letter == k + 1;
}

bool battery_charge_labels_check(int n, int k) {
  for (const auto& t : one_row_battery_tableaux(n, k))
    if (!battery_charge_labels_check(t)) return false;
  return true;
}

}  // namespace dspringer
