#include "heckelab/klbasis.hpp"

#include <bit>
#include <mutex>

#include "heckelab/errors.hpp"

namespace heckelab {

KLBasis::KLBasis(const HeckeAlgebra& algebra, GeneratorChoice choice)
    : algebra_(&algebra), choice_(choice), memo_(algebra.context().size()) {}

bool KLBasis::is_cached(ElementId x) const {
  std::shared_lock lock(mutex_);
  return memo_[x.index()] != nullptr;
}

const KLBasis::Entry& KLBasis::entry(ElementId x) const {
  {
    std::shared_lock lock(mutex_);
    if (const auto& slot = memo_[x.index()]) return *slot;
  }
  Entry value = compute(x);
  std::unique_lock lock(mutex_);
  auto& slot = memo_[x.index()];
  if (!slot) slot = std::make_unique<const Entry>(std::move(value));
  return *slot;
}

void KLBasis::preload(ElementId x, HeckeElement element) const {
  Entry value = make_entry(x, std::move(element));
  std::unique_lock lock(mutex_);
  auto& slot = memo_[x.index()];
  if (!slot) slot = std::make_unique<const Entry>(std::move(value));
}

KLBasis::Entry KLBasis::make_entry(ElementId x, HeckeElement element) const {
  Entry out{std::move(element), {}};
  for (const auto& [y, h] : out.element.terms()) {
    if (y == x) continue;
    Integer m = h.coeff(1);
    if (m != 0) out.mu.emplace_back(y, std::move(m));
  }
  return out;
}

KLBasis::Entry KLBasis::compute(ElementId x) const {
  const GroupContext& ctx = context();
  if (x == kIdentity) return make_entry(x, algebra_->unit());

  DescentSet d = ctx.descents(x, Side::Left);
  auto s = static_cast<Generator>(choice_ == GeneratorChoice::Least ? std::countr_zero(d)
                                                                    : 63 - std::countl_zero(d));
  ElementId sx = ctx.mult_gen(x, s, Side::Left);
  const Entry& lower = entry(sx);

  HeckeElement c = algebra_->mul_Cs(lower.element, s, Side::Left);
  for (const auto& [y, m] : lower.mu) {
    if (ctx.is_descent(y, s, Side::Left)) c -= LaurentPoly(m) * kl_element(y);
  }
  return make_entry(x, std::move(c));
}

const HeckeElement& KLBasis::kl_element(ElementId x) const { return entry(x).element; }

const LaurentPoly& KLBasis::kl_poly(ElementId y, ElementId x) const { return kl_element(x).coeff(y); }

Integer KLBasis::mu(ElementId y, ElementId x) const { return kl_poly(y, x).coeff(1); }

const KLBasis::MuRow& KLBasis::mu_row(ElementId x) const { return entry(x).mu; }

HeckeElement KLBasis::cs_times_c(Generator s, ElementId x) const {
  const GroupContext& ctx = context();
  const HeckeElement& cx = kl_element(x);
  HeckeElement direct = algebra_->mul_Cs(cx, s, Side::Left);

  HeckeElement formula;
  if (ctx.is_descent(x, s, Side::Left)) {
    formula = (v() + v_inv()) * cx;
  } else {
    formula = kl_element(ctx.mult_gen(x, s, Side::Left));
    for (const auto& [y, m] : mu_row(x))
      if (ctx.is_descent(y, s, Side::Left)) formula += LaurentPoly(m) * kl_element(y);
  }
  if (direct != formula)
    throw ConsistencyError("C_s C_x disagrees with the mu-formula for s=" + std::to_string(s + 1) +
                           ", x=" + format_word(ctx.word(x)));
  return direct;
}

HeckeElement KLBasis::c_longest() const {
  const GroupContext& ctx = context();
  ElementId w0 = ctx.longest_element();
  const int top = ctx.length(w0);
  HeckeElement closed;
  for (ElementId x : ctx.enumerate()) closed.add_term(x, LaurentPoly::v_pow(top - ctx.length(x)));
  const HeckeElement& computed = kl_element(w0);
  if (computed != closed)
    throw ConsistencyError("C_w0 differs from sum_x v^(l(w0)-l(x)) H_x");
  return computed;
}

bool is_unitriangular(const HeckeElement& c, ElementId x) {
  if (c.coeff(x) != LaurentPoly(1)) return false;
  for (const auto& [y, h] : c.terms())
    if (y != x && !h.in_strict_positive()) return false;
  return true;
}

}  // namespace heckelab
