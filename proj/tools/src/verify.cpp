#include "heckelab/cli/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "heckelab/errors.hpp"

namespace heckelab::verify {

namespace {

std::string w(const GroupContext& ctx, ElementId x) { return format_word(ctx.word(x)); }

void check_self_duality(const ProjectiveBasis& proj, TheoremResult& r) {
  const KLBasis& kl = proj.kl();
  const GroupContext& ctx = kl.context();
  for (ElementId x : ctx.enumerate()) {
    ++r.checked;
    const HeckeElement& c = kl.kl_element(x);
    if (!kl.algebra().is_self_dual(c)) r.failures.push_back("C_" + w(ctx, x) + " is not self-dual");
    if (!is_unitriangular(c, x)) r.failures.push_back("C_" + w(ctx, x) + " is not unitriangular");
  }
}

void check_longest(const ProjectiveBasis& proj, TheoremResult& r) {
  ++r.checked;
  try {
    proj.kl().c_longest();
  } catch (const ConsistencyError&) {
    r.failures.push_back("C_" + w(proj.context(), proj.longest()) + " differs from the closed form");
  }
}

void check_cs_mult(const ProjectiveBasis& proj, TheoremResult& r) {
  const GroupContext& ctx = proj.context();
  for (ElementId x : ctx.enumerate())
    for (Generator s = 0; s < ctx.rank(); ++s) {
      ++r.checked;
      try {
        proj.kl().cs_times_c(s, x);
      } catch (const ConsistencyError&) {
        r.failures.push_back("s=" + std::to_string(s + 1) + " x=" + w(ctx, x));
      }
    }
}

void check_adjointness(const ProjectiveBasis& proj, const Options& options, TheoremResult& r) {
  const HeckeAlgebra& alg = proj.algebra();
  const GroupContext& ctx = proj.context();
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.adjointness_samples; ++i) {
    HeckeElement a = random_element(ctx, rng);
    HeckeElement b = random_element(ctx, rng);
    ++r.checked;
    for (Generator s = 0; s < ctx.rank(); ++s) {
      if (HeckeAlgebra::ext_form(alg.mul_Cs(a, s, Side::Left), b) !=
          HeckeAlgebra::ext_form(a, alg.mul_Cs(b, s, Side::Left)))
        r.failures.push_back("C_s pair #" + std::to_string(i) + " s=" + std::to_string(s + 1));
      if (HeckeAlgebra::ext_form(alg.mul_bCs(a, s, Side::Left), b) !=
          HeckeAlgebra::ext_form(a, alg.mul_bCs(b, s, Side::Left)))
        r.failures.push_back("b(C_s) pair #" + std::to_string(i) + " s=" + std::to_string(s + 1));
    }
  }
}

void check_pairing(const ProjectiveBasis& proj, TheoremResult& r) {
  const GroupContext& ctx = proj.context();
  auto m = proj.pairing_matrix();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      ++r.checked;
      if (m[i][j] != LaurentPoly(i == j ? 1 : 0))
        r.failures.push_back("<P_" + w(ctx, ElementId(static_cast<std::uint32_t>(i))) + ", C_" +
                             w(ctx, ElementId(static_cast<std::uint32_t>(j))) + "> = " + m[i][j].to_string());
    }
}

void check_self_dual_quotient(const ProjectiveBasis& proj, TheoremResult& r) {
  const GroupContext& ctx = proj.context();
  for (ElementId x : ctx.enumerate()) {
    ++r.checked;
    try {
      proj.self_dual_quotient(x);
    } catch (const ConsistencyError&) {
      r.failures.push_back("P_" + w(ctx, x) + " H_w0^-1 is not self-dual");
    }
  }
}

void check_tilting(const ProjectiveBasis& proj, TheoremResult& r) {
  const GroupContext& ctx = proj.context();
  for (ElementId x : ctx.enumerate()) {
    ++r.checked;
    if (!proj.tilting_duality(x)) r.failures.push_back("b(C_" + w(ctx, x) + ") H_w0 != P_x.w0");
  }
}

}  // namespace

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = {"self-duality", "longest",  "cs-mult",        "adjointness",
                                                 "pairing",      "self-dual-quotient", "tilting-duality"};
  return names;
}

std::vector<std::string> resolve(const std::vector<std::string>& selection) {
  const auto& names = theorem_names();
  std::vector<bool> chosen(names.size(), false);
  for (const auto& s : selection) {
    if (s == "all") {
      std::fill(chosen.begin(), chosen.end(), true);
      continue;
    }
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw Error("unknown theorem '" + s + "'");
    chosen[static_cast<std::size_t>(it - names.begin())] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (chosen[i]) out.push_back(names[i]);
  return out;
}

TheoremResult run(const std::string& theorem, const ProjectiveBasis& proj, const Options& options) {
  TheoremResult r{theorem, options.group_label, 0, {}};
  if (theorem == "self-duality") check_self_duality(proj, r);
  else if (theorem == "longest") check_longest(proj, r);
  else if (theorem == "cs-mult") check_cs_mult(proj, r);
  else if (theorem == "adjointness") check_adjointness(proj, options, r);
  else if (theorem == "pairing") check_pairing(proj, r);
  else if (theorem == "self-dual-quotient") check_self_dual_quotient(proj, r);
  else if (theorem == "tilting-duality") check_tilting(proj, r);
  else throw Error("unknown theorem '" + theorem + "'");
  return r;
}

nlohmann::json report_json(const std::vector<TheoremResult>& results, const GroupContext& ctx,
                           const std::string& group_label) {
  nlohmann::json items = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    items.push_back({{"theorem", r.theorem},
                     {"group", r.group},
                     {"checked", r.checked},
                     {"failures", r.failures},
                     {"passed", r.passed()}});
  }
  return {{"group", group_label},
          {"engine", ctx.engine_name()},
          {"order", ctx.size()},
          {"results", std::move(items)},
          {"passed", all}};
}

std::string report_csv(const std::vector<TheoremResult>& results) {
  std::ostringstream os;
  os << "theorem,group,checked,passed,failures\n";
  for (const auto& r : results) {
    os << r.theorem << ',' << r.group << ',' << r.checked << ',' << (r.passed() ? "true" : "false") << ",\"";
    for (std::size_t i = 0; i < r.failures.size(); ++i) os << (i ? ";" : "") << r.failures[i];
    os << "\"\n";
  }
  return os.str();
}

}  // namespace heckelab::verify
