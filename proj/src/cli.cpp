#include "dspringer/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dspringer/bijections.hpp"
#include "dspringer/conjectures.hpp"
#include "dspringer/delta_springer.hpp"
#include "dspringer/errors.hpp"
#include "dspringer/guards.hpp"
#include "dspringer/hall_littlewood.hpp"
#include "dspringer/macdonald.hpp"
#include "dspringer/parallel.hpp"
#include "dspringer/serialize.hpp"
#include "dspringer/tableau.hpp"

namespace dspringer::cli {

using nlohmann::ordered_json;

namespace {

Partition one_column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

std::string diff_text(const SchurPoly& expected, const SchurPoly& actual) {
  return "expected " + expected.to_string() + "; got " + actual.to_string() + "; diff " +
         (actual - expected).to_string();
}

// A sweep is a list of independent cases, each returning an empty string on
// success or a failure description.
using Case = std::function<std::string()>;

std::vector<Case> route_cases(int max_n) {
  std::vector<Case> cases;
  for (const DeltaParams& p : sweep_params(max_n)) {
    cases.push_back([p] {
      const RouteReport r = route_report(p);
      const SchurPoly& skew_result = r.results.at(Route::Skew);
      std::string msg;
      if (!r.agree)
        msg += " routes disagree: skew " + skew_result.to_string() + "; battery " +
               r.results.at(Route::Battery).to_string() + "; hl " +
               r.results.at(Route::HallLittlewood).to_string();
      if (!r.charge_dual)
        msg += " charge form: " +
               diff_text(rev_q_schur(r.results.at(Route::Battery),
                                     static_cast<std::uint32_t>(top_degree(p))),
                         r.results.at(Route::Charge));
      if (p.k() == p.n && !(skew_result == hl_modified(p.lambda)))
        msg += " k=n specialization: " + diff_text(hl_modified(p.lambda), skew_result);
      for (const auto& [shape, c] : skew_result.terms())
        if (!c.all_nonnegative()) msg += " negative coefficient at " + shape.to_string();
      return msg.empty() ? msg : p.to_string() + ":" + msg;
    });
  }
  return cases;
}

std::vector<Case> topdeg_cases(int max_n) {
  std::vector<Case> cases;
  for (const DeltaParams& p : sweep_params(max_n)) {
    cases.push_back([p]() -> std::string {
      const TopDegreeResult r = top_degree_details(p);
      if (r.ok) return {};
      return p.to_string() + ": degree " + std::to_string(r.actual_degree) + " vs " +
             std::to_string(r.expected_degree) + "; top " + r.top_coefficient.to_string() +
             "; strips " + r.strip_sum.to_string() + "; skew " + r.skew_rectangle.to_string();
    });
  }
  return cases;
}

std::vector<Case> t0_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k)
      cases.push_back([n, k]() -> std::string {
        const T0Result r = t0_result(n, k);
        if (r.ok) return {};
        return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + "): reversed " +
               diff_text(r.skew_route, r.reversed) + "; specialized " +
               diff_text(r.skew_transformed, r.specialized);
      });
  return cases;
}

std::vector<Case> lrk_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k)
      cases.push_back([n, k]() -> std::string {
        const SchurPoly form = frobenius_charge_form(DeltaParams{n, one_column(k), k});
        std::string msg;
        for (const Partition& mu : enumerate_partitions(n)) {
          const QTPoly lhs = lr_kostka_coefficient(mu, n, k);
          const QTPoly rhs = hall_inner(SchurPoly::schur(mu), form);
          if (!(lhs == rhs)) msg += " mu=" + mu.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string();
        }
        return msg.empty() ? msg : "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + "):" + msg;
      });
  return cases;
}

std::vector<Case> conjecture_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 2; n <= max_n; ++n)
    for (int k = 2; k <= n; ++k)
      for (int power : {1, 2})
        cases.push_back([n, k, power]() -> std::string {
          const ConjectureResult r = conjecture_result(n, k, power);
          if (r.ok) return {};
          return "t^" + std::to_string(power) + " (n,k)=(" + std::to_string(n) + "," + std::to_string(k) +
                 "): " + diff_text(r.expected, r.observed);
        });
  return cases;
}

std::vector<Case> k2_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 2; n <= max_n; ++n)
    cases.push_back([n]() -> std::string {
      const K2Result r = k2_proposition(n);
      if (r.ok) return {};
      std::string msg = "n=" + std::to_string(n) + ":";
      if (!r.rhs_matches_closed_form) msg += " closed form " + diff_text(r.closed_form, r.rhs);
      if (!r.whittaker_matches) msg += " q-Whittaker form differs";
      if (!r.macdonald_matches) msg += " Macdonald " + diff_text(*r.macdonald, r.rhs);
      return msg;
    });
  return cases;
}

std::vector<Case> expansion_cases() {
  std::vector<Case> cases;
  const auto add = [&](const std::string& name, HExpansion (*make)()) {
    cases.push_back([name, make]() -> std::string {
      const HExpansion d = make();
      const SchurPoly value = evaluate_expansion(d);
      const SchurPoly truth = omega_delta(d.n, d.k);
      return value == truth ? std::string() : name + ": " + diff_text(truth, value);
    });
  };
  add("expansion (4,3)", &expansion_4_3);
  add("expansion (5,3)", &expansion_5_3);
  add("expansion (5,3) alternative", &expansion_5_3_alternative);
  cases.push_back([]() -> std::string {
    return evaluate_expansion(expansion_5_3()) == evaluate_expansion(expansion_5_3_alternative())
               ? std::string()
               : "alternative replacement changes the (5,3) expression";
  });
  return cases;
}

std::vector<Case> s2_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Partition& lambda : enumerate_partitions(k, 2))
        cases.push_back([n, lambda]() -> std::string {
          const std::string tag = DeltaParams{n, lambda, 2}.to_string() + ": ";
          const std::vector<AlphaPair> pairs = enumerate_alpha_pairs(n, lambda);
          for (const AlphaPair& pair : pairs) {
            const Composition image = phi(pair.alpha, lambda);
            if (!(phi_inv(image, lambda) == pair.alpha))
              return tag + "phi_inv(phi(" + pair.alpha.to_string() + ")) != id";
            const BatteryTableau t = Phi_map(pair, lambda, n);
            if (ch_battery(t) != charge(reading_word(pair.u)) + alpha_weight(pair.alpha, lambda))
              return tag + "charge not additive for U=" + pair.u.to_string();
            if (!(t.device.shape() == pair.u.shape())) return tag + "shape not preserved";
            if (!(Phi_inv(t) == pair)) return tag + "Phi_inv(Phi) != id for U=" + pair.u.to_string();
          }
          const std::vector<BatteryTableau> all = enumerate_battery_tableaux(DeltaParams{n, lambda, 2});
          if (all.size() != pairs.size())
            return tag + std::to_string(pairs.size()) + " pairs vs " + std::to_string(all.size()) + " tableaux";
          for (const BatteryTableau& t : all)
            if (!(Phi_map(Phi_inv(t), lambda, n) == t)) return tag + "Phi(Phi_inv) != id";
          return {};
        });
  return cases;
}

std::vector<Case> osp_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k)
      cases.push_back([n, k]() -> std::string {
        const std::string tag = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + "): ";
        const auto tableaux = one_row_battery_tableaux(n, k);
        const auto osps = enumerate_highest_weight_osps(n, k);
        std::vector<OrderedSetPartition> images;
        for (const BatteryTableau& t : tableaux) {
          const OrderedSetPartition p = f_map(t);
          if (minimaj(p) != ch_battery(t)) return tag + "ch != minimaj for " + p.to_string();
          if (!(f_inv(p) == t)) return tag + "f_inv(f) != id for " + p.to_string();
          images.push_back(p);
        }
        std::sort(images.begin(), images.end());
        if (images != osps) return tag + "image of f is not the highest-weight set";
        if (!battery_charge_labels_check(n, k)) return tag + "battery charge labels";
        if (!sn_coefficient_check(n, k)) return tag + "s_(n) coefficient identity";
        return {};
      });
  return cases;
}

std::vector<Case> cases_for(const std::string& check, int max_n) {
  if (check == "routes") return route_cases(max_n);
  if (check == "topdeg") return topdeg_cases(max_n);
  if (check == "t0") return t0_cases(max_n);
  if (check == "lrk") return lrk_cases(max_n);
  if (check == "conjectures") return conjecture_cases(max_n);
  if (check == "k2") return k2_cases(max_n);
  if (check == "expansions") return expansion_cases();
  if (check == "s2") return s2_cases(max_n);
  if (check == "osp") return osp_cases(max_n);
  throw DomainError("unknown verification '" + check + "'");
}

ordered_json poly_json_field(const QTPoly& f) { return poly_to_json(f); }

Tableau::Rows rows_of(std::initializer_list<std::vector<int>> rows) { return Tableau::Rows(rows); }

ordered_json golden_fig1() {
  const DeltaParams p{9, Partition{3, 2, 1, 1}, 4};
  const BatteryTableau t{Tableau(rows_of({{1, 1, 1, 2, 2, 2}, {3, 3}, {4}})),
                         Tableau(rows_of({{1, 1}, {2, 3}, {4, 4}})), p};
  t.validate();
  const Tableau by_rsk = rsk_insert_tableau(t.device, t.battery);
  const Tableau by_jdt = jdt_rectify(skew_placement(t));
  const int cc = cc_battery(t);
  const int shift = normalization_exponent(p);
  const SchurPoly series = frobenius_via_skew(p);
  const Partition shape = t.device.shape();
  const QTPoly coeff = series.coeff(shape);
  return {{"example", "fig1"},
          {"params", p.to_string()},
          {"device", t.device.to_string()},
          {"battery", t.battery.to_string()},
          {"reading_word", word_to_string(reading_word(t))},
          {"cocharge", cc},
          {"normalization", shift},
          {"normalized_power", cc - shift},
          {"sh_plus", shape.to_string()},
          {"rsk_product", by_rsk.to_string()},
          {"jdt_rectification", by_jdt.to_string()},
          {"coefficient_of_sh_plus", coeff.to_string()}};
}

ordered_json golden_fig3() {
  const DeltaParams p{9, Partition{1, 1, 1, 1}, 4};
  const BatteryTableau t{Tableau(rows_of({{1, 1, 2, 2, 2, 3, 3, 4, 4}})),
                         Tableau(rows_of({{1, 1, 1, 1, 2}, {2, 2, 3, 3, 3}, {3, 4, 4, 4, 4}})), p};
  t.validate();
  const OrderedSetPartition osp = f_map(t);
  return {{"example", "fig3"},
          {"params", p.to_string()},
          {"device", t.device.to_string()},
          {"battery", t.battery.to_string()},
          {"reading_word", word_to_string(reading_word(t))},
          {"charge", ch_battery(t)},
          {"osp", osp.to_string()},
          {"minimaj", minimaj(osp)},
          {"osp_reading_word", word_to_string(osp_reading_word(osp))},
          {"charge_labels_hold", battery_charge_labels_check(t)}};
}

ordered_json golden_s2() {
  const int n = 11;
  const Partition lambda{3, 1};
  const Composition alpha{{5, 6}};
  const Tableau u(rows_of({{1, 1, 1, 1, 1, 1, 2, 2}, {2, 2, 2}}));
  const BatteryTableau t = Phi_map(AlphaPair{alpha, u}, lambda, n);
  const AlphaPair back = Phi_inv(t);
  return {{"example", "s2"},
          {"params", DeltaParams{n, lambda, 2}.to_string()},
          {"alpha", alpha.to_string()},
          {"U", u.to_string()},
          {"charge_U", charge(reading_word(u))},
          {"n_alpha_over_lambda", skew_n_stat(alpha, lambda)},
          {"coinv_alpha", coinv(alpha)},
          {"phi_alpha", phi(alpha, lambda).to_string()},
          {"psi", psi(alpha, u, lambda).to_string()},
          {"device", t.device.to_string()},
          {"battery", t.battery.to_string()},
          {"charge_T", ch_battery(t)},
          {"inverse_recovers_input", back == AlphaPair{alpha, u}}};
}

std::string text_of_document(const ordered_json& doc) {
  std::ostringstream out;
  for (const auto& [key, value] : doc.items())
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  return out.str();
}

std::string csv_of_document(const ordered_json& doc) {
  std::ostringstream out;
  out << "key;value\n";
  for (const auto& [key, value] : doc.items())
    out << key << ';' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  return out.str();
}

std::string render_document(const ordered_json& doc, Format format) {
  switch (format) {
    case Format::Text: return text_of_document(doc);
    case Format::Json: return doc.dump(2) + "\n";
    case Format::Csv: return csv_of_document(doc);
  }
  return {};
}

ordered_json outcome_json(const VerifyOutcome& o) {
  return {{"check", o.check}, {"max_n", o.max_n}, {"cases", o.cases}, {"failures", o.failures}, {"ok", o.ok()}};
}

std::string render_outcome(const VerifyOutcome& o, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: return outcome_json(o).dump(2) + "\n";
    case Format::Csv:
      out << "check;max_n;cases;failures;ok\n"
          << o.check << ';' << o.max_n << ';' << o.cases << ';' << o.failures.size() << ';'
          << (o.ok() ? "true" : "false") << '\n';
      return out.str();
    case Format::Text:
      out << o.check << ": " << o.cases << " cases up to n=" << o.max_n << ", " << o.failures.size()
          << " failures\n";
      for (const auto& f : o.failures) out << "  FAIL " << f << '\n';
      return out.str();
  }
  return {};
}

}  // namespace

const std::vector<std::string>& verification_names() {
  static const std::vector<std::string> names{"routes", "topdeg", "t0", "lrk", "conjectures",
                                              "k2",     "expansions", "s2", "osp"};
  return names;
}

VerifyOutcome run_verification(const std::string& check, int max_n) {
  const std::vector<Case> cases = cases_for(check, max_n);
  std::vector<std::string> results(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    try {
      results[i] = cases[i]();
    } catch (const std::exception& e) {
      results[i] = "case " + std::to_string(i) + " threw: " + e.what();
    }
  });
  VerifyOutcome out{check, max_n, static_cast<long long>(cases.size()), {}};
  for (auto& r : results)
    if (!r.empty()) out.failures.push_back(std::move(r));
  return out;
}

const std::vector<std::string>& golden_names() {
  static const std::vector<std::string> names{"fig1", "fig3", "s2"};
  return names;
}

ordered_json golden_document(const std::string& name) {
  if (name == "fig1") return golden_fig1();
  if (name == "fig3") return golden_fig3();
  if (name == "s2") return golden_s2();
  throw DomainError("unknown golden example '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  load_guards_from_env();
  CLI::App app{"Frobenius characteristics of Delta-Springer modules"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "text";
  int jobs = 1;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::Range(1, 1000));

  // frobenius
  auto* frob = app.add_subcommand("frobenius", "Graded Frobenius characteristic in the Schur basis");
  int n = 0;
  std::string lambda_text;
  int s = 0;
  int rnk = 0;
  std::string route_text = "skew";
  frob->add_option("--n", n, "Size n")->required()->check(CLI::Range(1, 1000));
  auto* lambda_opt = frob->add_option("--lambda", lambda_text, "Partition lambda, e.g. 3,2,1");
  frob->add_option("--s", s, "Number of rows s (default l(lambda))");
  frob->add_option("--rnk", rnk, "Shorthand for lambda=(1^K), s=K")->excludes(lambda_opt);
  frob->add_option("--route", route_text, "skew, battery, hl or charge")
      ->check(CLI::IsMember({"skew", "battery", "hl", "charge"}));

  // kostka
  auto* kostka = app.add_subcommand("kostka", "q-Kostka polynomial K_{nu,mu}(q)");
  std::string nu_text, mu_text;
  bool modified = false;
  kostka->add_option("--nu", nu_text, "Shape")->required();
  kostka->add_option("--mu", mu_text, "Content")->required();
  kostka->add_flag("--modified", modified, "Cocharge version");

  // delta
  auto* delta = app.add_subcommand("delta", "Delta'_{e_{k-1}} e_n from Macdonald polynomials");
  int delta_n = 0, delta_k = 0;
  bool at_t0 = false, apply_omega = false, reverse_q = false;
  delta->add_option("--n", delta_n, "Size n")->required()->check(CLI::Range(1, 1000));
  delta->add_option("--k", delta_k, "Number of blocks k (operator index k-1)")->required();
  delta->add_flag("--t0", at_t0, "Set t = 0");
  delta->add_flag("--revq", reverse_q, "Reverse q at the largest degree");
  delta->add_flag("--omega", apply_omega, "Apply omega last");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  std::string check;
  int max_n = 5;
  verify->add_option("check", check, "Sweep name")->required()->check(CLI::IsMember(verification_names()));
  verify->add_option("--max-n", max_n, "Largest n in the sweep")->check(CLI::Range(1, 1000));

  // golden
  auto* golden = app.add_subcommand("golden", "Render a worked example");
  std::string golden_name;
  golden->add_option("example", golden_name, "fig1, fig3 or s2")->required()->check(CLI::IsMember(golden_names()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Format format = parse_format(format_name);
    set_parallelism(jobs);
    if (frob->parsed()) {
      Partition lambda = rnk > 0 ? one_column(rnk) : parse_partition(lambda_text);
      const int rows = s > 0 ? s : (rnk > 0 ? rnk : std::max(lambda.length(), 1));
      const DeltaParams p{n, std::move(lambda), rows};
      p.validate();
      out << render(frobenius(p, parse_route(route_text)), format);
      return kOk;
    }
    if (kostka->parsed()) {
      const Partition nu = parse_partition(nu_text);
      const Partition mu = parse_partition(mu_text);
      const QTPoly k = q_kostka(nu, mu, modified);
      if (format == Format::Json)
        out << ordered_json{{"nu", nu.parts()}, {"mu", mu.parts()}, {"modified", modified}, {"coeff", poly_json_field(k)}}.dump(2)
            << '\n';
      else if (format == Format::Csv) {
        out << "q_exp;t_exp;coeff\n";
        for (const auto& term : k.terms()) out << term.mono.q << ';' << term.mono.t << ';' << term.coeff.get_str() << '\n';
      } else {
        out << k.to_string() << '\n';
      }
      return kOk;
    }
    if (delta->parsed()) {
      if (delta_k < 1 || delta_k > delta_n) throw DomainError("delta: need 1 <= k <= n");
      SchurPoly f = delta_prime_e(delta_k - 1, delta_n);
      if (at_t0) f = specialize_t0(f);
      if (reverse_q) f = rev_q_schur(f);
      if (apply_omega) f = omega(f);
      out << render(f, format);
      return kOk;
    }
    if (verify->parsed()) {
      const VerifyOutcome o = run_verification(check, max_n);
      out << render_outcome(o, format);
      return o.ok() ? kOk : kAssertionFailed;
    }
    if (golden->parsed()) {
      out << render_document(golden_document(golden_name), format);
      return kOk;
    }
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << " (raise it with the matching DSPRINGER_MAX_* variable)\n";
    return kGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dspringer::cli
