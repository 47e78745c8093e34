// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heckelab/cli/cli.hpp"
#include "heckelab/cli/verify.hpp"
#include "heckelab/heckelab.hpp"
#include "oracles.hpp"

using namespace heckelab;

namespace {

struct Group {
  GroupContext ctx;
  HeckeAlgebra alg;
  KLBasis kl;
  explicit Group(GroupContext c) : ctx(std::move(c)), alg(ctx), kl(alg) {}
};

std::unique_ptr<Group> make(const std::string& type, BuildOptions options = {}) {
  return std::make_unique<Group>(GroupContext::build(CoxeterMatrix::from_type(type), options));
}

// Collects failures of one criterion.
struct Check {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() >= 5) failures.back() = what + " (and more)";
  }
};

std::string where(const std::string& group, const GroupContext& ctx, ElementId x) {
  return group + " x=" + format_word(ctx.word(x));
}

Check longest() {
  Check c;
  std::vector<std::string> groups{"A:1", "A:2", "A:3", "B:2", "B:3"};
  for (int m = 3; m <= 8; ++m) groups.push_back("I2:" + std::to_string(m));
  for (const auto& t : groups) {
    auto g = make(t);
    ElementId w0 = g->ctx.longest_element();
    HeckeElement closed;
    for (ElementId x : g->ctx.enumerate()) closed.add_term(x, LaurentPoly::v_pow(g->ctx.length(w0) - g->ctx.length(x)));
    c.expect(g->kl.kl_element(w0) == closed, t);
  }
  return c;
}

Check kl_basis() {
  Check c;
  struct Case {
    std::string type;
    BuildOptions options;
    std::size_t order;
  };
  std::vector<Case> cases{{"A:3", {}, 24},
                          {"B:3", {}, 48},
                          {"A:4", {}, 120},
                          {"H:3", {.engine = EnginePreference::Generic}, 120},
                          {"I2:inf", {.length_bound = 8}, 17}};
  for (const auto& k : cases) {
    auto g = make(k.type, k.options);
    c.expect(g->ctx.size() == k.order, k.type + " order");
    for (ElementId x : g->ctx.enumerate()) {
      const HeckeElement& cx = g->kl.kl_element(x);
      c.expect(g->alg.is_self_dual(cx), where(k.type, g->ctx, x) + " not self-dual");
      c.expect(is_unitriangular(cx, x), where(k.type, g->ctx, x) + " not unitriangular");
    }
  }
  return c;
}

Check through_wall() {
  Check c;
  for (const char* t : {"A:3", "B:2"}) {
    auto g = make(t);
    for (ElementId x : g->ctx.enumerate())
      for (Generator s = 0; s < g->ctx.rank(); ++s) {
        const GroupContext& ctx = g->ctx;
        HeckeElement direct = g->alg.mul_Cs(g->kl.kl_element(x), s, Side::Left);
        HeckeElement formula;
        ElementId sx = ctx.mult_gen(x, s, Side::Left);
        if (ctx.length(sx) < ctx.length(x)) {
          formula = (v() + v_inv()) * g->kl.kl_element(x);
        } else {
          formula = g->kl.kl_element(sx);
          for (const auto& [y, m] : g->kl.mu_row(x))
            if (ctx.is_descent(y, s, Side::Left)) formula += LaurentPoly(m) * g->kl.kl_element(y);
        }
        c.expect(direct == formula, where(t, ctx, x) + " s=" + std::to_string(s + 1));
      }
  }
  return c;
}

Check adjointness() {
  Check c;
  auto g = make("A:3");
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    HeckeElement a = verify::random_element(g->ctx, rng);
    HeckeElement b = verify::random_element(g->ctx, rng);
    for (Generator s = 0; s < g->ctx.rank(); ++s) {
      c.expect(HeckeAlgebra::ext_form(g->alg.mul_Cs(a, s, Side::Left), b) ==
                   HeckeAlgebra::ext_form(a, g->alg.mul_Cs(b, s, Side::Left)),
               "C_s pair " + std::to_string(i));
      c.expect(HeckeAlgebra::ext_form(g->alg.mul_bCs(a, s, Side::Left), b) ==
                   HeckeAlgebra::ext_form(a, g->alg.mul_bCs(b, s, Side::Left)),
               "b(C_s) pair " + std::to_string(i));
    }
  }
  return c;
}

Check pairing() {
  Check c;
  for (const char* t : {"A:1", "A:2", "A:3", "B:2", "B:3"}) {
    auto g = make(t);
    ProjectiveBasis proj(g->kl);
    auto m = proj.pairing_matrix();
    c.expect(m.size() == g->ctx.size(), std::string(t) + " size");
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        c.expect(m[i][j] == LaurentPoly(i == j ? 1 : 0), std::string(t) + " entry (" + std::to_string(i) + "," +
                                                             std::to_string(j) + ")");
  }
  return c;
}

Check self_dual_quotient() {
  Check c;
  for (const char* t : {"A:3", "B:2"}) {
    auto g = make(t);
    ProjectiveBasis proj(g->kl);
    ElementId w0 = proj.longest();
    for (ElementId x : g->ctx.enumerate()) {
      HeckeElement q = g->alg.mul(proj.proj_element(x), g->alg.inverse_h(w0));
      c.expect(g->alg.is_self_dual(q), where(t, g->ctx, x));
    }
  }
  return c;
}

Check tilting() {
  Check c;
  for (const char* t : {"A:1", "A:2", "A:3", "B:2", "B:3", "I2:5", "I2:7"}) {
    auto g = make(t);
    ProjectiveBasis proj(g->kl);
    for (ElementId x : g->ctx.enumerate()) c.expect(proj.tilting_duality(x), where(t, g->ctx, x));
  }
  return c;
}

Check known_value() {
  Check c;
  auto g = make("A:3");
  Word w{1, 0, 2, 1};
  ElementId x = g->ctx.evaluate(w);
  ElementId s2 = g->ctx.generator(1);
  LaurentPoly expected = v() + LaurentPoly::v_pow(3);
  c.expect(g->kl.kl_poly(s2, x) == expected, "recursion gives " + g->kl.kl_poly(s2, x).to_string());
  HeckeElement brute = oracle::brute_force_kl(g->alg, x);
  c.expect(brute.coeff(s2) == expected, "oracle gives " + brute.coeff(s2).to_string());
  c.expect(brute == g->kl.kl_element(x), "full element differs from oracle");
  return c;
}

Check cross_engine() {
  Check c;
  for (const char* t : {"A:3", "B:3"}) {
    auto matrix = CoxeterMatrix::from_type(t);
    auto gen = GroupContext::build(matrix, {.engine = EnginePreference::Generic});
    auto perm = GroupContext::build(matrix, {.engine = EnginePreference::Permutation});
    c.expect(gen.engine() == EngineKind::Generic && perm.engine() == EngineKind::Permutation, std::string(t) + " engines");
    c.expect(gen.size() == perm.size(), std::string(t) + " order");
    if (gen.size() != perm.size()) continue;
    // Identify elements through their canonical words.
    std::vector<ElementId> phi(gen.size());
    for (ElementId x : gen.enumerate()) {
      auto y = perm.find_canonical(gen.word(x));
      c.expect(y.has_value(), where(t, gen, x) + " missing");
      phi[x.index()] = y.value_or(kIdentity);
    }
    for (ElementId x : gen.enumerate()) {
      ElementId y = phi[x.index()];
      c.expect(gen.length(x) == perm.length(y), where(t, gen, x) + " length");
      c.expect(gen.descents(x, Side::Left) == perm.descents(y, Side::Left), where(t, gen, x) + " left descents");
      c.expect(gen.descents(x, Side::Right) == perm.descents(y, Side::Right), where(t, gen, x) + " right descents");
      for (Generator s = 0; s < gen.rank(); ++s)
        for (Side side : {Side::Left, Side::Right})
          c.expect(phi[gen.mult_gen(x, s, side).index()] == perm.mult_gen(y, s, side), where(t, gen, x) + " edge");
    }
    c.expect(phi[gen.longest_element().index()] == perm.longest_element(), std::string(t) + " w0");
  }
  return c;
}

Check determinism() {
  Check c;
  cli::JobConfig config;
  config.command = cli::Command::Verify;
  config.type = "B:3";
  config.theorems = {"all"};
  std::string reports[2];
  for (auto& report : reports) {
    std::ostringstream out, err;
    int code = cli::run(config, out, err);
    c.expect(code == cli::kExitOk, "exit code " + std::to_string(code));
    report = out.str();
  }
  c.expect(!reports[0].empty() && reports[0] == reports[1], "reports differ");
  return c;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Check()> run;
  double limit_seconds;  // 0: no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "C_w0 closed form in A1-A3, B2, B3, I2(3..8)", longest, 5},
      {2, "KL basis self-dual and unitriangular in A3, B3, A4, H3, I2(inf)<=8", kl_basis, 60},
      {3, "C_s C_x mu-formula in A3, B2", through_wall, 0},
      {4, "adjointness of C_s and b(C_s), 200 random pairs in A3", adjointness, 0},
      {5, "pairing matrix is the identity in A1, A2, A3, B2, B3", pairing, 30},
      {6, "P_x H_w0^-1 self-dual in A3, B2", self_dual_quotient, 0},
      {7, "b(C_x) H_w0 = P_{x w0} in A1, A2, A3, B2, B3, I2(5), I2(7)", tilting, 0},
      {8, "h_{s2,s2s1s3s2} = v + v^3 by recursion and brute force", known_value, 0},
      {9, "generic and permutation engines agree on A3, B3", cross_engine, 0},
      {10, "verify B:3 all is byte-identical across runs", determinism, 0},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check result;
    std::string error;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = cr.limit_seconds == 0 || seconds < cr.limit_seconds;
    bool ok = error.empty() && result.failures.empty() && result.checked > 0 && in_time;
    if (!ok) ++failed;

    char timing[64];
    if (cr.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2fs (limit %.0fs)", seconds, cr.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::printf("AC%-2d %s  %s: %zu checks, exact, %s\n", cr.number, ok ? "PASS" : "FAIL", cr.name, result.checked,
                timing);
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
    if (!in_time) std::printf("      exceeded time limit\n");
    for (const auto& f : result.failures) std::printf("      failure: %s\n", f.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
