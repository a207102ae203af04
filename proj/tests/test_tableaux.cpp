#include <doctest.h>

#include <map>
#include <random>

#include "dspringer/errors.hpp"
#include "dspringer/schur.hpp"
#include "dspringer/tableau.hpp"
#include "oracles.hpp"

using namespace dspringer;

namespace {

Word parse_word(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(c - '0');
  return w;
}

BatteryTableau cocharge_example() {
  return {Tableau({{1, 1, 1, 2, 2, 2}, {3, 3}, {4}}), Tableau({{1, 1}, {2, 3}, {4, 4}}),
          DeltaParams{9, Partition{3, 2, 1, 1}, 4}};
}

BatteryTableau one_row_example() {
  return {Tableau({{1, 1, 2, 2, 2, 3, 3, 4, 4}}), Tableau({{1, 1, 1, 1, 2}, {2, 2, 3, 3, 3}, {3, 4, 4, 4, 4}}),
          DeltaParams{9, Partition{1, 1, 1, 1}, 4}};
}

// Every word with the given content, in lexicographic order.
void for_each_word(std::vector<int> content, const std::function<void(const Word&)>& visit) {
  Word w;
  for (std::size_t i = 0; i < content.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(content[i]), static_cast<int>(i) + 1);
  do visit(w);
  while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace

TEST_CASE("tableau validation and rendering") {
  CHECK(Tableau({{1, 1, 2}, {2}}).to_string() == "112/2");
  CHECK_THROWS_AS(Tableau({{1, 2}, {1}}), DomainError);
  CHECK_THROWS_AS(Tableau({{2, 1}}), DomainError);
  CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), DomainError);
  CHECK(Tableau({{1, 1, 2}, {2}}).content() == std::vector<int>{2, 2});
  CHECK(Tableau({{1, 1}}).content(3) == std::vector<int>{2, 0, 0});
}

TEST_CASE("reading words go top row first") {
  CHECK(word_to_string(reading_word(cocharge_example())) == "433111222442311");
  CHECK(word_to_string(Word{1, 12, 3}) == "1,12,3");
}

TEST_CASE("worked cocharge and charge values") {
  const Word w = parse_word("433111222442311");
  CHECK(cocharge(w) == 12);
  CHECK(charge(w) == 7);
  CHECK(cc_battery(cocharge_example()) == 12);
  CHECK(ch_battery(one_row_example()) == 14);
  CHECK_THROWS_AS(cocharge(Word{2, 2, 1}), NonPartitionContent);
}

TEST_CASE("charge agrees with the permutation index labelling") {
  for (int n = 1; n <= 6; ++n)
    for_each_word(std::vector<int>(static_cast<std::size_t>(n), 1),
                  [&](const Word& w) { CHECK(charge(w) == oracle::permutation_charge(w)); });
}

TEST_CASE("charge plus cocharge is n of the content") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : enumerate_partitions(n))
      for_each_word(mu.parts(), [&](const Word& w) { CHECK(charge(w) + cocharge(w) == n_stat(mu)); });
}

TEST_CASE("subword labels partition the word") {
  const WordLabels labels = charge_labels(parse_word("433111222442311"));
  std::map<int, std::vector<int>> letters;
  const Word w = parse_word("433111222442311");
  for (std::size_t i = 0; i < w.size(); ++i) letters[labels.subword[i]].push_back(w[i]);
  for (const auto& [id, ls] : letters) {
    std::vector<int> sorted = ls;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j) CHECK(sorted[j] == static_cast<int>(j) + 1);
  }
}

TEST_CASE("SSYT counts match the hook content formula") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : enumerate_partitions(n))
      for (int m = shape.length(); m <= 4; ++m) {
        long long count = 0;
        for_each_ssyt_of_shape(shape, m, [&](const Tableau&) { ++count; });
        CHECK(count == oracle::ssyt_count(shape.parts(), m));
      }
  long long rect = 0;
  for_each_ssyt_of_shape(Partition{6, 6, 6, 6, 6}, 6, [&](const Tableau&) { ++rect; });
  CHECK(rect == oracle::ssyt_count({6, 6, 6, 6, 6}, 6));
}

TEST_CASE("standard tableaux counts match the hook length formula") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : enumerate_partitions(n))
      CHECK(kostka_number(shape, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
            oracle::syt_count(shape.parts()));
}

TEST_CASE("content enumeration covers every shape once") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      std::map<Partition, long long> by_shape;
      for (const auto& t : enumerate_ssyt_content(mu)) {
        CHECK(t.content(mu.length()) == mu.parts());
        ++by_shape[t.shape()];
      }
      for (const auto& [shape, c] : by_shape) CHECK(c == kostka_number(shape, mu));
    }
  CHECK(enumerate_ssyt_shape_content(Partition{2, 1}, Partition{1, 1, 1}).size() == 2);
  CHECK(enumerate_ssyt_shape_content(Partition{2, 2}, Partition{2, 1, 1}).size() == 1);
  CHECK_THROWS_AS(enumerate_ssyt_shape_content(Partition{2}, Partition{1}), SizeMismatch);
}

TEST_CASE("insertion and rectification agree on the worked example") {
  const BatteryTableau t = cocharge_example();
  const Tableau product = rsk_insert_tableau(t.device, t.battery);
  CHECK(product == jdt_rectify(skew_placement(t)));
  CHECK(cocharge(reading_word(product)) == 12);
}

TEST_CASE("unbumping a horizontal strip inverts row insertion") {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<int> letter(1, 4), len(0, 6);
    Word base(static_cast<std::size_t>(len(rng)));
    for (int& x : base) x = letter(rng);
    const Tableau t = rsk_insert_word(Tableau(), base);
    Word strip(static_cast<std::size_t>(len(rng) % 4));
    for (int& x : strip) x = letter(rng);
    std::sort(strip.begin(), strip.end());
    const Tableau grown = rsk_insert_word(t, strip);
    auto [back, ejected] = unbump_horizontal_strip(grown, t.shape());
    CHECK(back == t);
    CHECK(ejected == strip);
  }
  CHECK_THROWS_AS(unbump_horizontal_strip(Tableau({{1, 1}, {2, 2}}), Partition{1, 1}), NotHorizontalStrip);
}

TEST_CASE("insertion keeps cocharge on random battery pairs") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto lambdas = enumerate_partitions(static_cast<int>(rng() % static_cast<unsigned>(n + 1)));
    const Partition lambda = lambdas[rng() % lambdas.size()];
    const int s = std::max(lambda.length(), 1) + static_cast<int>(rng() % 2);
    if (s > n) continue;
    const auto all = enumerate_battery_tableaux(DeltaParams{n, lambda, s});
    const BatteryTableau& t = all[rng() % all.size()];
    const int cc = cc_battery(t);
    CHECK(cocharge(reading_word(rsk_insert_tableau(t.device, t.battery))) == cc);
    CHECK(cocharge(reading_word(jdt_rectify(skew_placement(t)))) == cc);
  }
}

TEST_CASE("battery tableaux for the smallest nontrivial parameters") {
  const auto all = enumerate_battery_tableaux(DeltaParams{2, Partition{1}, 2});
  CHECK(all.size() == 3);
  for (const auto& t : all) CHECK_NOTHROW(t.validate());
  BatteryTableau bad{Tableau({{1, 1}}), Tableau({{2, 2}}), DeltaParams{2, Partition{1}, 2}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("Littlewood-Richardson counts agree with the product side") {
  for (int total = 0; total <= 6; ++total)
    for (int a = 0; a <= total; ++a)
      for (const auto& eta : enumerate_partitions(a))
        for (const auto& rho : enumerate_partitions(total - a))
          for (const auto& nu : enumerate_partitions(total)) {
            if (!contains(nu, eta)) continue;
            CHECK(lr_count(nu, eta, rho) == lr_coefficient_product_side(nu, eta, rho));
          }
  CHECK(lr_count(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
  CHECK(lr_count(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
}

TEST_CASE("maximal cocharge tableaux are unique per shape") {
  for (const DeltaParams& p : {DeltaParams{4, Partition{1}, 2}, DeltaParams{5, Partition{2, 1}, 3},
                               DeltaParams{4, Partition{}, 3}, DeltaParams{5, Partition{1, 1}, 2}}) {
    const int top = n_stat(p.lambda) + static_cast<int>(binomial(p.s, 2)) * (p.n - p.k());
    std::map<Partition, int> at_top;
    for (const auto& t : enumerate_battery_tableaux(p)) {
      const int cc = cc_battery(t);
      CHECK(cc <= top);
      if (cc == top) ++at_top[t.device.shape()];
    }
    const auto best = max_cocharge_tableaux(p);
    CHECK(best.size() == at_top.size());
    for (const auto& [nu, t] : best) {
      CHECK_NOTHROW(t.validate());
      CHECK(t.device.shape() == nu);
      CHECK(cc_battery(t) == top);
      CHECK(at_top[nu] == 1);
    }
  }
}
