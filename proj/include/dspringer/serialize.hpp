#pragma once

#include <string>

#include <json.hpp>

#include "dspringer/qt_poly.hpp"
#include "dspringer/schur.hpp"

namespace dspringer {

enum class Format { Text, Json, Csv };

/// Accepts "text", "json", "csv"; throws DomainError otherwise.
Format parse_format(const std::string& name);

/// [[q_exp, t_exp, "coeff"], ...] in canonical term order.  Coefficients
/// are strings so arbitrary precision survives the round trip.
nlohmann::ordered_json poly_to_json(const QTPoly& f);
QTPoly poly_from_json(const nlohmann::ordered_json& j);

/// {"basis":"schur","terms":[{"partition":[...],"coeff":[...]}, ...]} with
/// the largest partition first.
nlohmann::ordered_json schur_to_json(const SchurPoly& f);
/// Throws DomainError on a document that does not follow the schema.
SchurPoly schur_from_json(const nlohmann::ordered_json& j);

/// Header "partition;q_exp;t_exp;coeff", then one row per monomial of
/// every Schur term, partitions written as "3,2,1".
std::string schur_to_csv(const SchurPoly& f);

/// Text, indented JSON or CSV, always newline terminated.
std::string render(const SchurPoly& f, Format format);

}  // namespace dspringer
