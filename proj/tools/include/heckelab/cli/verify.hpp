#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "heckelab/projective.hpp"

namespace heckelab::verify {

struct TheoremResult {
  std::string theorem;
  std::string group;
  std::size_t checked = 0;
  /// Counterexamples, each naming the offending elements by canonical word.
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct Options {
  std::string group_label;
  std::uint64_t seed = 1;
  std::size_t adjointness_samples = 200;
};

/// Registry order: self-duality, longest, cs-mult, adjointness, pairing,
/// self-dual-quotient, tilting-duality.
const std::vector<std::string>& theorem_names();

/// Expands "all" and removes duplicates, keeping registry order.
/// Throws Error for an unknown name.
std::vector<std::string> resolve(const std::vector<std::string>& selection);

/// Runs one named check against a complete group.
TheoremResult run(const std::string& theorem, const ProjectiveBasis& proj, const Options& options);

/// Random sparse element: 1-4 support elements, each coordinate with 1-3
/// terms, exponents in [-3, 3] and coefficients in [-3, 3] \ {0}.
template <typename Rng>
HeckeElement random_element(const GroupContext& ctx, Rng& rng);

nlohmann::json report_json(const std::vector<TheoremResult>& results, const GroupContext& ctx,
                           const std::string& group_label);
std::string report_csv(const std::vector<TheoremResult>& results);

}  // namespace heckelab::verify

#include <random>

namespace heckelab::verify {

template <typename Rng>
HeckeElement random_element(const GroupContext& ctx, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, ctx.size() - 1);
  std::uniform_int_distribution<int> support(1, 4), nterms(1, 3), exponent(-3, 3), coeff(1, 3), sign(0, 1);
  HeckeElement out;
  for (int i = support(rng); i > 0; --i) {
    LaurentPoly p;
    for (int k = nterms(rng); k > 0; --k) {
      int c = coeff(rng) * (sign(rng) ? 1 : -1);
      p += LaurentPoly::monomial(c, exponent(rng));
    }
    out.add_term(ElementId(static_cast<std::uint32_t>(pick(rng))), p);
  }
  return out;
}

}  // namespace heckelab::verify
