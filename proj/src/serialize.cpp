#include "dspringer/serialize.hpp"

#include <sstream>

#include "dspringer/errors.hpp"

namespace dspringer {

using nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw DomainError("unknown format '" + name + "'");
}

ordered_json poly_to_json(const QTPoly& f) {
  ordered_json out = ordered_json::array();
  for (const auto& term : f.terms())
    out.push_back(ordered_json::array({term.mono.q, term.mono.t, term.coeff.get_str()}));
  return out;
}

QTPoly poly_from_json(const ordered_json& j) {
  if (!j.is_array()) throw DomainError("coefficient must be an array");
  std::vector<QTPoly::Term> terms;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_unsigned() ||
        !item[1].is_number_unsigned() || !item[2].is_string())
      throw DomainError("coefficient term must be [q_exp, t_exp, \"coeff\"]");
    BigInt c;
    if (c.set_str(item[2].get<std::string>(), 10) != 0) throw DomainError("bad integer in coefficient");
    terms.push_back({Monomial{item[0].get<std::uint32_t>(), item[1].get<std::uint32_t>()}, c});
  }
  return QTPoly::from_terms(std::move(terms));
}

ordered_json schur_to_json(const SchurPoly& f) {
  ordered_json terms = ordered_json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({{"partition", it->first.parts()}, {"coeff", poly_to_json(it->second)}});
  return {{"basis", "schur"}, {"terms", terms}};
}

SchurPoly schur_from_json(const ordered_json& j) {
  if (!j.is_object() || j.value("basis", "") != "schur" || !j.contains("terms") || !j["terms"].is_array())
    throw DomainError("expected {\"basis\":\"schur\",\"terms\":[...]}");
  SchurPoly out;
  for (const auto& term : j["terms"]) {
    if (!term.contains("partition") || !term.contains("coeff")) throw DomainError("term needs partition and coeff");
    out.add(Partition(term["partition"].get<std::vector<int>>()), poly_from_json(term["coeff"]));
  }
  return out;
}

std::string schur_to_csv(const SchurPoly& f) {
  std::ostringstream out;
  out << "partition;q_exp;t_exp;coeff\n";
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::string parts;
    for (int p : it->first.parts()) parts += (parts.empty() ? "" : ",") + std::to_string(p);
    for (const auto& term : it->second.terms())
      out << parts << ';' << term.mono.q << ';' << term.mono.t << ';' << term.coeff.get_str() << '\n';
  }
  return out.str();
}

std::string render(const SchurPoly& f, Format format) {
  switch (format) {
    case Format::Text: return f.to_string() + "\n";
    case Format::Json: return schur_to_json(f).dump(2) + "\n";
    case Format::Csv: return schur_to_csv(f);
  }
  return {};
}

}  // namespace dspringer
