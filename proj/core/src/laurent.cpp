#include "heckelab/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "heckelab/errors.hpp"

namespace heckelab {

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) terms_.emplace_back(0, std::move(c));
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, int>> terms) {
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (const auto& [k, c] : terms) raw.emplace_back(k, Integer(c));
  *this = from_terms(std::move(raw));
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else if (t.second != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

LaurentPoly LaurentPoly::monomial(Integer c, int k) {
  LaurentPoly out;
  if (c != 0) out.terms_.emplace_back(k, std::move(c));
  return out;
}

int LaurentPoly::valuation() const {
  if (terms_.empty()) throw Error("valuation of the zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::degree() const {
  if (terms_.empty()) throw Error("degree of the zero polynomial");
  return terms_.back().first;
}

Integer LaurentPoly::coeff(int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == k) return it->second;
  return 0;
}

bool LaurentPoly::in_strict_positive() const noexcept {
  return terms_.empty() || terms_.front().first >= 1;
}

bool LaurentPoly::in_nonnegative() const noexcept {
  return terms_.empty() || terms_.front().first >= 0;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.terms_.emplace_back(-it->first, it->second);
  return out;
}

LaurentPoly LaurentPoly::twist() const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    // (-v^-1)^k = (-1)^k v^-k
    if (it->first % 2 == 0)
      out.terms_.emplace_back(-it->first, it->second);
    else
      out.terms_.emplace_back(-it->first, -it->second);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.first += k;
  return out;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, int sign) {
  if (other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, sign > 0 ? b->second : Integer(-b->second));
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->second + b->second) : Integer(a->second - b->second);
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly out;
    out.terms_.reserve(a.terms_.size());
    const auto& [kb, cb] = b.terms_.front();
    for (const auto& [k, c] : a.terms_) out.terms_.emplace_back(k + kb, c * cb);
    return out;
  }
  std::map<int, Integer> acc;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) acc[ka + kb] += ca * cb;
  LaurentPoly out;
  out.terms_.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) out.terms_.emplace_back(k, std::move(c));
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'v';
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto fail = [&]() -> LaurentPoly {
    throw Error("cannot parse Laurent polynomial: '" + text + "'");
  };
  if (s.empty()) return fail();
  if (s == "0") return {};

  std::vector<Term> terms;
  std::size_t i = 0;
  auto read_digits = [&](std::string& out) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
  };
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!terms.empty()) {
      return fail();
    }
    std::string digits;
    read_digits(digits);
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    int k = 0;
    bool has_v = false;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) return fail();
      ++i;
      if (i >= s.size() || s[i] != 'v') return fail();
    } else if (!digits.empty() && i < s.size() && s[i] == 'v') {
      return fail();
    }
    if (i < s.size() && s[i] == 'v') {
      has_v = true;
      ++i;
      k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool neg_exp = false;
        if (i < s.size() && s[i] == '-') {
          neg_exp = true;
          ++i;
        }
        std::string exp;
        read_digits(exp);
        if (exp.empty()) return fail();
        k = std::stoi(exp);
        if (neg_exp) k = -k;
      }
    }
    if (digits.empty() && !has_v) return fail();
    terms.emplace_back(k, negative ? Integer(-c) : c);
  }
  return from_terms(std::move(terms));
}

}  // namespace heckelab
