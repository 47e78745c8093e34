#include "heckelab/hecke.hpp"

#include <mutex>

namespace heckelab {

namespace {
const LaurentPoly kZero;
}

HeckeElement HeckeElement::basis(ElementId x, LaurentPoly c) {
  HeckeElement out;
  if (!c.is_zero()) out.terms_.emplace(x, std::move(c));
  return out;
}

HeckeElement HeckeElement::from_terms(Terms terms) {
  HeckeElement out;
  for (auto& [x, c] : terms)
    if (!c.is_zero()) out.terms_.emplace(x, std::move(c));
  return out;
}

const LaurentPoly& HeckeElement::coeff(ElementId x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? kZero : it->second;
}

void HeckeElement::add_term(ElementId x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  for (const auto& [x, c] : other.terms_) add_term(x, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  for (const auto& [x, c] : other.terms_) add_term(x, -c);
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& a) {
  HeckeElement out;
  if (c.is_zero()) return out;
  for (const auto& [x, h] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), x, c * h);
  return out;
}

HeckeElement operator-(const HeckeElement& a) {
  HeckeElement out;
  for (const auto& [x, h] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), x, -h);
  return out;
}

HeckeAlgebra::HeckeAlgebra(const GroupContext& ctx) : ctx_(&ctx), inverse_memo_(ctx.size()) {}

HeckeElement HeckeAlgebra::c_generator(Generator s) const {
  HeckeElement out = h_basis(ctx_->generator(s));
  out.add_term(kIdentity, v());
  return out;
}

HeckeElement HeckeAlgebra::mul_Hs(const HeckeElement& a, Generator s, Side side) const {
  static const LaurentPoly kQuadratic = v_inv() - v();
  HeckeElement out;
  for (const auto& [x, h] : a.terms()) {
    ElementId y = ctx_->mult_gen(x, s, side);
    out.add_term(y, h);
    if (ctx_->length(y) < ctx_->length(x)) out.add_term(x, kQuadratic * h);
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_Cs(const HeckeElement& a, Generator s, Side side) const {
  HeckeElement out;
  for (const auto& [x, h] : a.terms()) {
    ElementId y = ctx_->mult_gen(x, s, side);
    out.add_term(y, h);
    out.add_term(x, h.shifted(ctx_->length(y) > ctx_->length(x) ? 1 : -1));
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_bCs(const HeckeElement& a, Generator s, Side side) const {
  HeckeElement out = mul_Hs(a, s, side);
  out -= v_inv() * a;
  return out;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [y, q] : b.terms()) {
    HeckeElement partial = a;
    for (Generator s : ctx_->word(y)) partial = mul_Hs(partial, s, Side::Right);
    out += q * partial;
  }
  return out;
}

const HeckeElement& HeckeAlgebra::inverse_h(ElementId x) const {
  {
    std::shared_lock lock(memo_mutex_);
    if (const auto& slot = inverse_memo_[x.index()]) return *slot;
  }
  HeckeElement value;
  if (x == kIdentity) {
    value = unit();
  } else {
    // x = x' t with t the last letter of the canonical word, so
    // H_x^-1 = H_t^-1 H_x'^-1 = (H_t + v - v^-1) H_x'^-1.
    Generator t = ctx_->word(x).back();
    const HeckeElement& prefix_inv = inverse_h(ctx_->mult_gen(x, t, Side::Right));
    value = mul_Hs(prefix_inv, t, Side::Left);
    value += (v() - v_inv()) * prefix_inv;
  }
  std::unique_lock lock(memo_mutex_);
  auto& slot = inverse_memo_[x.index()];
  if (!slot) slot = std::make_unique<const HeckeElement>(std::move(value));
  return *slot;
}

HeckeElement HeckeAlgebra::dualize(const HeckeElement& a) const {
  HeckeElement out;
  for (const auto& [x, h] : a.terms()) out += h.bar() * inverse_h(ctx_->inverse(x));
  return out;
}

HeckeElement HeckeAlgebra::b_twist(const HeckeElement& a) {
  HeckeElement::Terms terms;
  for (const auto& [x, h] : a.terms()) terms.emplace_hint(terms.end(), x, h.twist());
  return HeckeElement::from_terms(std::move(terms));
}

LaurentPoly HeckeAlgebra::ext_form(const HeckeElement& a, const HeckeElement& b) {
  const HeckeElement& small = a.size() <= b.size() ? a : b;
  const HeckeElement& large = a.size() <= b.size() ? b : a;
  LaurentPoly out;
  for (const auto& [x, h] : small.terms()) {
    const LaurentPoly& g = large.coeff(x);
    if (!g.is_zero()) out += h * g;
  }
  return out;
}

std::map<ElementId, LaurentPoly> HeckeAlgebra::to_T_basis(const HeckeElement& a) const {
  std::map<ElementId, LaurentPoly> out;
  for (const auto& [x, h] : a.terms()) out.emplace_hint(out.end(), x, h.shifted(ctx_->length(x)));
  return out;
}

HeckeElement HeckeAlgebra::from_T_basis(const std::map<ElementId, LaurentPoly>& t) const {
  HeckeElement out;
  for (const auto& [x, h] : t) out.add_term(x, h.shifted(-ctx_->length(x)));
  return out;
}

}  // namespace heckelab
