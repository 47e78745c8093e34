#pragma once

#include <memory>
#include <random>
#include <string>

#include "heckelab/heckelab.hpp"

namespace heckelab::testing {

/// A group with its algebra and bases, kept at a stable address.
struct Setup {
  GroupContext ctx;
  HeckeAlgebra alg;
  KLBasis kl;

  explicit Setup(GroupContext c) : ctx(std::move(c)), alg(ctx), kl(alg) {}
};

inline std::unique_ptr<Setup> make(const std::string& type, BuildOptions options = {}) {
  return std::make_unique<Setup>(GroupContext::build(CoxeterMatrix::from_type(type), options));
}

inline ElementId elem(const GroupContext& ctx, std::initializer_list<int> one_based) {
  Word w;
  for (int g : one_based) w.push_back(g - 1);
  return ctx.evaluate(w);
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4, int span = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms), exponent(-span, span), coeff(-5, 5);
  LaurentPoly p;
  for (int i = nterms(rng); i > 0; --i) p += LaurentPoly::monomial(coeff(rng), exponent(rng));
  return p;
}

inline HeckeElement random_element(const GroupContext& ctx, std::mt19937_64& rng, int max_support = 4) {
  std::uniform_int_distribution<std::size_t> pick(0, ctx.size() - 1);
  std::uniform_int_distribution<int> support(1, max_support);
  HeckeElement out;
  for (int i = support(rng); i > 0; --i)
    out.add_term(ElementId(static_cast<std::uint32_t>(pick(rng))), random_poly(rng, 3, 3));
  return out;
}

}  // namespace heckelab::testing
