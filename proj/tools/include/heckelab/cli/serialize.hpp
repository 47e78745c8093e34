#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "heckelab/hecke.hpp"
#include "heckelab/klbasis.hpp"
#include "heckelab/projective.hpp"

namespace heckelab::io {

using nlohmann::json;

/// [[exponent, coefficient], ...] sorted by exponent. Coefficients outside
/// the int64 range are written as decimal strings.
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

/// 1-based generator indices.
json word_to_json(const Word& w);
Word word_from_json(const json& j);

/// { "basis": "H", "terms": [ { "word": [...], "poly": [...] } ] }, terms in
/// (length, ShortLex) order.
json element_to_json(const GroupContext& ctx, const HeckeElement& a);
/// Throws Error unless every word is the canonical word of a registered element.
HeckeElement element_from_json(const GroupContext& ctx, const json& j);

enum class TableKind { KL, Mu, Projective };
const char* table_name(TableKind kind);

/// One table row as rendered in either output format.
struct TableRow {
  Word y;
  Word x;
  LaurentPoly value;  // mu tables hold a constant polynomial

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Rows ordered by x, then y. KL: (y, x, h_{y,x}) for every nonzero h.
/// Mu: (y, x, mu(y,x)) for y < x with mu nonzero. Projective: (y, x, coordinate
/// of P_x at H_y).
std::vector<TableRow> kl_table(const KLBasis& kl);
std::vector<TableRow> mu_table(const KLBasis& kl);
std::vector<TableRow> projective_table(const ProjectiveBasis& proj);

std::string table_to_json(TableKind kind, const std::string& group, const std::vector<TableRow>& rows);
std::string table_to_csv(TableKind kind, const std::vector<TableRow>& rows);
std::vector<TableRow> table_from_json(const std::string& text);
std::vector<TableRow> table_from_csv(const std::string& text);

}  // namespace heckelab::io
