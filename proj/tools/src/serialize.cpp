#include "heckelab/cli/serialize.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include "heckelab/errors.hpp"

namespace heckelab::io {

namespace {

json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return c.convert_to<std::int64_t>();
  return c.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error("expected an integer coefficient");
}

const char* value_key(TableKind kind) {
  switch (kind) {
    case TableKind::KL: return "h";
    case TableKind::Mu: return "mu";
    case TableKind::Projective: return "p";
  }
  return "";
}

}  // namespace

json poly_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [k, c] : p.terms()) out.push_back(json::array({k, integer_to_json(c)}));
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw Error("polynomial must be a list of [exponent, coefficient] pairs");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer())
      throw Error("polynomial term must be [exponent, coefficient]");
    terms.emplace_back(pair[0].get<int>(), integer_from_json(pair[1]));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json word_to_json(const Word& w) {
  json out = json::array();
  for (Generator s : w) out.push_back(s + 1);
  return out;
}

Word word_from_json(const json& j) {
  if (!j.is_array()) throw Error("word must be a list of generator indices");
  Word out;
  for (const auto& g : j) {
    if (!g.is_number_integer() || g.get<int>() < 1) throw Error("generator indices are 1-based integers");
    out.push_back(g.get<int>() - 1);
  }
  return out;
}

json element_to_json(const GroupContext& ctx, const HeckeElement& a) {
  json terms = json::array();
  for (const auto& [x, h] : a.terms())
    terms.push_back({{"word", word_to_json(ctx.word(x))}, {"poly", poly_to_json(h)}});
  return {{"basis", "H"}, {"terms", std::move(terms)}};
}

HeckeElement element_from_json(const GroupContext& ctx, const json& j) {
  if (!j.is_object() || j.value("basis", "") != "H" || !j.contains("terms"))
    throw Error("element must be an object with basis \"H\" and terms");
  HeckeElement out;
  for (const auto& term : j.at("terms")) {
    Word w = word_from_json(term.at("word"));
    auto x = ctx.find_canonical(w);
    if (!x) throw Error("word " + format_word(w) + " is not a canonical element word");
    out.add_term(*x, poly_from_json(term.at("poly")));
  }
  return out;
}

const char* table_name(TableKind kind) {
  switch (kind) {
    case TableKind::KL: return "kl";
    case TableKind::Mu: return "mu";
    case TableKind::Projective: return "proj";
  }
  return "";
}

std::vector<TableRow> kl_table(const KLBasis& kl) {
  const GroupContext& ctx = kl.context();
  std::vector<TableRow> rows;
  for (ElementId x : ctx.enumerate())
    for (const auto& [y, h] : kl.kl_element(x).terms()) rows.push_back({ctx.word(y), ctx.word(x), h});
  return rows;
}

std::vector<TableRow> mu_table(const KLBasis& kl) {
  const GroupContext& ctx = kl.context();
  std::vector<TableRow> rows;
  for (ElementId x : ctx.enumerate())
    for (const auto& [y, m] : kl.mu_row(x)) rows.push_back({ctx.word(y), ctx.word(x), LaurentPoly(m)});
  return rows;
}

std::vector<TableRow> projective_table(const ProjectiveBasis& proj) {
  const GroupContext& ctx = proj.context();
  std::vector<TableRow> rows;
  for (ElementId x : ctx.enumerate())
    for (const auto& [y, p] : proj.proj_element(x).terms()) rows.push_back({ctx.word(y), ctx.word(x), p});
  return rows;
}

std::string table_to_json(TableKind kind, const std::string& group, const std::vector<TableRow>& rows) {
  json out_rows = json::array();
  for (const auto& r : rows) {
    json value = kind == TableKind::Mu ? integer_to_json(r.value.coeff(0)) : poly_to_json(r.value);
    out_rows.push_back({{"y", word_to_json(r.y)}, {"x", word_to_json(r.x)}, {value_key(kind), std::move(value)}});
  }
  json doc = {{"group", group}, {"table", table_name(kind)}, {"rows", std::move(out_rows)}};
  return doc.dump(2) + "\n";
}

std::string table_to_csv(TableKind kind, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "y,x," << value_key(kind) << '\n';
  for (const auto& r : rows) os << format_word(r.y) << ',' << format_word(r.x) << ',' << r.value.to_string() << '\n';
  return os.str();
}

std::vector<TableRow> table_from_json(const std::string& text) {
  json doc = json::parse(text);
  std::string name = doc.at("table").get<std::string>();
  TableKind kind = name == "kl" ? TableKind::KL : name == "mu" ? TableKind::Mu : TableKind::Projective;
  std::vector<TableRow> rows;
  for (const auto& r : doc.at("rows")) {
    const json& value = r.at(value_key(kind));
    LaurentPoly p = kind == TableKind::Mu ? LaurentPoly(integer_from_json(value)) : poly_from_json(value);
    rows.push_back({word_from_json(r.at("y")), word_from_json(r.at("x")), std::move(p)});
  }
  return rows;
}

std::vector<TableRow> table_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error("empty CSV table");
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto a = line.find(',');
    auto b = a == std::string::npos ? a : line.find(',', a + 1);
    if (b == std::string::npos) throw Error("malformed CSV row '" + line + "'");
    rows.push_back({parse_word(line.substr(0, a)), parse_word(line.substr(a + 1, b - a - 1)),
                    LaurentPoly::parse(line.substr(b + 1))});
  }
  return rows;
}

}  // namespace heckelab::io
