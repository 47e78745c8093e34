#include "heckelab/projective.hpp"

#include <algorithm>
#include <mutex>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

const GroupContext& require_complete(const KLBasis& kl) {
  if (!kl.context().complete()) throw IncompleteGroup("projective basis requires finite W");
  return kl.context();
}

}  // namespace

ProjectiveBasis::ProjectiveBasis(const KLBasis& kl, GeneratorChoice choice)
    : kl_(&kl),
      choice_(choice),
      w0_(require_complete(kl).longest_element()),
      memo_(kl.context().size()) {}

bool ProjectiveBasis::is_cached(ElementId x) const {
  std::shared_lock lock(mutex_);
  return memo_[x.index()] != nullptr;
}

void ProjectiveBasis::preload(ElementId x, HeckeElement element, Corrections corrections) const {
  auto value = std::make_unique<const Entry>(Entry{std::move(element), std::move(corrections)});
  std::unique_lock lock(mutex_);
  auto& slot = memo_[x.index()];
  if (!slot) slot = std::move(value);
}

const ProjectiveBasis::Entry& ProjectiveBasis::entry(ElementId x) const {
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

ProjectiveBasis::Entry ProjectiveBasis::compute(ElementId x) const {
  const GroupContext& ctx = context();
  if (x == w0_) return {algebra().h_basis(w0_), {}};

  std::vector<Generator> ascents;
  for (Generator s = 0; s < ctx.rank(); ++s)
    if (!ctx.is_descent(x, s, Side::Left)) ascents.push_back(s);
  Generator s = choice_ == GeneratorChoice::Least ? ascents.front() : ascents.back();

  const HeckeElement& upper = proj_element(ctx.mult_gen(x, s, Side::Left));
  HeckeElement e = algebra().mul_bCs(upper, s, Side::Left);

  std::vector<ElementId> above;
  for (ElementId y : ctx.enumerate())
    if (y != x && ctx.bruhat_leq(x, y)) above.push_back(y);
  std::stable_sort(above.begin(), above.end(),
                   [&](ElementId a, ElementId b) { return ctx.length(a) > ctx.length(b); });

  Entry out{e, {}};
  for (ElementId y : above) {
    LaurentPoly p = HeckeAlgebra::ext_form(e, kl_->kl_element(y));
    if (p.is_zero()) continue;
    out.element -= p * proj_element(y);
    out.corrections.emplace_back(y, std::move(p));
  }
  return out;
}

const HeckeElement& ProjectiveBasis::proj_element(ElementId x) const { return entry(x).element; }

const ProjectiveBasis::Corrections& ProjectiveBasis::corrections(ElementId x) const {
  return entry(x).corrections;
}

std::vector<std::vector<LaurentPoly>> ProjectiveBasis::pairing_matrix() const {
  const std::size_t n = context().size();
  std::vector<std::vector<LaurentPoly>> out(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const HeckeElement& p = proj_element(ElementId(static_cast<std::uint32_t>(i)));
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = HeckeAlgebra::ext_form(p, kl_->kl_element(ElementId(static_cast<std::uint32_t>(j))));
  }
  return out;
}

HeckeElement ProjectiveBasis::self_dual_quotient(ElementId x) const {
  HeckeElement q = algebra().mul(proj_element(x), algebra().inverse_h(w0_));
  if (!algebra().is_self_dual(q))
    throw ConsistencyError("P_x H_w0^-1 is not self-dual for x=" + format_word(context().word(x)));
  return q;
}

HeckeElement ProjectiveBasis::tilting_lhs(ElementId x) const {
  return algebra().mul(HeckeAlgebra::b_twist(kl_->kl_element(x)), algebra().h_basis(w0_));
}

bool ProjectiveBasis::tilting_duality(ElementId x) const {
  return tilting_lhs(x) == proj_element(context().multiply(x, w0_));
}

}  // namespace heckelab
