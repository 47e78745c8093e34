#include "heckelab/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

using State = std::vector<int>;
using VecHash = boost::hash<std::vector<int>>;

enum class PermFamily { A, B, D, I2 };

/// A faithful permutation model of a Coxeter group of type A, B, D or I2,
/// together with the relabeling of matrix generators onto model generators.
struct PermModel {
  PermFamily family;
  int rank;
  int dihedral_m = 0;
  std::vector<int> to_model;  // matrix generator -> model generator

  State identity() const {
    switch (family) {
      case PermFamily::A: {
        State s(rank + 1);
        std::iota(s.begin(), s.end(), 0);
        return s;
      }
      case PermFamily::B:
      case PermFamily::D: {
        State s(rank);
        std::iota(s.begin(), s.end(), 1);
        return s;
      }
      case PermFamily::I2:
        return {0, 0};
    }
    return {};
  }

  // Right multiplication by model generator g.
  void act(State& w, int g) const {
    switch (family) {
      case PermFamily::A:
        std::swap(w[g], w[g + 1]);
        return;
      case PermFamily::B:
        if (g == 0)
          w[0] = -w[0];
        else
          std::swap(w[g - 1], w[g]);
        return;
      case PermFamily::D:
        if (g == 0) {
          int a = w[0];
          w[0] = -w[1];
          w[1] = -a;
        } else {
          std::swap(w[g - 1], w[g]);
        }
        return;
      case PermFamily::I2:
        // state (k, f) is rho^k sigma^f; generators sigma and rho*sigma
        if (g == 0) {
          w[1] ^= 1;
        } else if (w[1] == 0) {
          w[0] = (w[0] + 1) % dihedral_m;
          w[1] = 1;
        } else {
          w[0] = (w[0] + dihedral_m - 1) % dihedral_m;
          w[1] = 0;
        }
        return;
    }
  }

  // Coxeter matrix entry between model generators.
  int model_entry(int g, int h) const {
    if (g == h) return 1;
    switch (family) {
      case PermFamily::A:
        return std::abs(g - h) == 1 ? 3 : 2;
      case PermFamily::B:
        if (std::min(g, h) == 0 && std::max(g, h) == 1) return 4;
        return std::abs(g - h) == 1 ? 3 : 2;
      case PermFamily::D: {
        int lo = std::min(g, h), hi = std::max(g, h);
        if (lo == 0) return hi == 2 ? 3 : 2;
        return hi - lo == 1 ? 3 : 2;
      }
      case PermFamily::I2:
        return dihedral_m;
    }
    return 2;
  }

  const char* name() const {
    switch (family) {
      case PermFamily::A: return "permutation:A";
      case PermFamily::B: return "permutation:B";
      case PermFamily::D: return "permutation:D";
      case PermFamily::I2: return "permutation:I2";
    }
    return "";
  }
};

bool is_edge(const CoxeterMatrix& m, int i, int j) {
  return i != j && (m(i, j) == CoxeterMatrix::kInfinity || m(i, j) >= 3);
}

std::vector<std::vector<int>> coxeter_graph(const CoxeterMatrix& m) {
  std::vector<std::vector<int>> adj(m.rank());
  for (int i = 0; i < m.rank(); ++i)
    for (int j = 0; j < m.rank(); ++j)
      if (is_edge(m, i, j)) adj[i].push_back(j);
  return adj;
}

// Vertices of a path-shaped graph from one end to the other.
std::optional<std::vector<int>> path_order(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  int start = -1;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 2) return std::nullopt;
    if (adj[i].size() <= 1 && start < 0) start = i;
  }
  if (start < 0) return std::nullopt;
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int u : adj[cur])
      if (u != prev) next = u;
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

bool model_matches(const CoxeterMatrix& m, const PermModel& model) {
  for (int i = 0; i < m.rank(); ++i)
    for (int j = 0; j < m.rank(); ++j)
      if (m(i, j) != model.model_entry(model.to_model[i], model.to_model[j])) return false;
  return true;
}

std::optional<PermModel> detect_permutation_model(const CoxeterMatrix& m) {
  const int r = m.rank();
  auto accept = [&](PermModel model) -> std::optional<PermModel> {
    if (model_matches(m, model)) return model;
    return std::nullopt;
  };

  if (r == 2) {
    int e = m(0, 1);
    if (e == CoxeterMatrix::kInfinity) return std::nullopt;
    if (e == 3) return accept({PermFamily::A, 2, 0, {0, 1}});
    if (e == 4) return accept({PermFamily::B, 2, 0, {0, 1}});
    return accept({PermFamily::I2, 2, e, {0, 1}});
  }

  auto adj = coxeter_graph(m);
  if (r == 1) return accept({PermFamily::A, 1, 0, {0}});

  if (auto order = path_order(adj)) {
    auto& o = *order;
    if (m(o[r - 2], o[r - 1]) == 4) std::reverse(o.begin(), o.end());
    PermModel model{m(o[0], o[1]) == 4 ? PermFamily::B : PermFamily::A, r, 0,
                    std::vector<int>(r)};
    for (int k = 0; k < r; ++k) model.to_model[o[k]] = k;
    return accept(std::move(model));
  }

  // Type D: one branch vertex with at least two leaf neighbours and a tail.
  if (r < 4) return std::nullopt;
  int branch = -1;
  for (int i = 0; i < r; ++i)
    if (adj[i].size() == 3) {
      if (branch >= 0) return std::nullopt;
      branch = i;
    }
  if (branch < 0) return std::nullopt;
  std::vector<int> leaves, others;
  for (int u : adj[branch]) (adj[u].size() == 1 ? leaves : others).push_back(u);
  if (leaves.size() < 2) return std::nullopt;
  std::sort(leaves.begin(), leaves.end());
  if (leaves.size() == 3) others.push_back(leaves[2]);
  if (others.size() != 1) return std::nullopt;

  PermModel model{PermFamily::D, r, 0, std::vector<int>(r, -1)};
  model.to_model[leaves[0]] = 0;
  model.to_model[leaves[1]] = 1;
  model.to_model[branch] = 2;
  int prev = branch, cur = others[0], k = 3;
  while (cur >= 0) {
    if (model.to_model[cur] >= 0) return std::nullopt;
    model.to_model[cur] = k++;
    int next = -1;
    for (int u : adj[cur])
      if (u != prev) {
        if (next >= 0) return std::nullopt;
        next = u;
      }
    prev = cur;
    cur = next;
  }
  if (k != r) return std::nullopt;
  return accept(std::move(model));
}

constexpr std::uint32_t kNone = 0xffffffffU;

}  // namespace

/// Level-by-level BFS that assigns ids in (length, ShortLex) order.
class GroupBuilder {
 public:
  GroupBuilder(const CoxeterMatrix& m, const BuildOptions& opt) : opt_(opt) {
    ctx_.matrix_ = m;
    ctx_.bound_ = opt.length_bound;
    rank_ = m.rank();
    full_ = rank_ == 64 ? ~DescentSet{0} : ((DescentSet{1} << rank_) - 1);
  }

  GroupContext run() {
    const CoxeterMatrix& m = ctx_.matrix_;
    std::optional<PermModel> model;
    if (opt_.engine != EnginePreference::Generic) model = detect_permutation_model(m);
    if (opt_.engine == EnginePreference::Permutation && !model)
      throw Error("no permutation engine for this Coxeter matrix");
    if (model) {
      model_ = std::move(model);
      ctx_.engine_ = EngineKind::Permutation;
      ctx_.engine_name_ = model_->name();
      states_.push_back(model_->identity());
    } else {
      ctx_.engine_ = EngineKind::Generic;
      ctx_.engine_name_ = "generic";
    }

    // identity
    ctx_.words_.emplace_back();
    ctx_.length_.push_back(0);
    ctx_.rdesc_.push_back(0);
    ctx_.right_.assign(rank_, kNone);
    ctx_.level_begin_ = {0, 1};

    for (int l = 0;; ++l) {
      std::size_t begin = ctx_.level_begin_[l], end = ctx_.level_begin_[l + 1];
      if (ctx_.bound_ && l == *ctx_.bound_) {
        for (std::size_t x = begin; x < end; ++x)
          if (ctx_.rdesc_[x] == full_) ctx_.complete_ = true;
        break;
      }
      std::size_t added = model_ ? next_level_permutation(begin, end) : next_level_generic(begin, end);
      if (added == 0) {
        ctx_.complete_ = true;
        break;
      }
      ctx_.level_begin_.push_back(ctx_.length_.size());
    }

    finish_tables();
    return std::move(ctx_);
  }

 private:
  struct Pending {
    Word nf;
    DescentSet rdesc = 0;
  };
  struct Edge {
    std::uint32_t from;
    Generator s;
    std::size_t pending;
  };

  std::uint32_t right(std::size_t x, Generator s) const { return ctx_.right_[x * rank_ + s]; }

  // Canonical words are stored per element, so both the element count and
  // the total number of stored letters are budgeted.
  void check_cap(std::size_t pending_count) const {
    const std::size_t next_length = ctx_.length_.back() + 1;
    const std::size_t letters = letters_ + pending_count * next_length;
    const bool elements_ok = ctx_.length_.size() + pending_count <= opt_.element_cap;
    if (elements_ok && letters <= opt_.letter_cap) return;
    std::string what = elements_ok ? "letter cap of " + std::to_string(opt_.letter_cap)
                                   : "element cap of " + std::to_string(opt_.element_cap);
    if (ctx_.bound_) throw Error(what + " exceeded below length bound");
    throw UnboundedGroup("unbounded group, bound required (" + what + " reached without closure)");
  }

  // Strips x by right multiplication with count letters alternating t, s, t, ...
  // Returns the remainder when every letter is a right descent.
  std::optional<std::uint32_t> strip(std::uint32_t x, Generator t, Generator s, int count) const {
    for (int i = 0; i < count; ++i) {
      Generator letter = (i % 2 == 0) ? t : s;
      if (!((ctx_.rdesc_[x] >> letter) & 1U)) return std::nullopt;
      x = right(x, letter);
    }
    return x;
  }

  // Generic engine. For an ascent s of x, y = xs has t != s as a right
  // descent iff x has a reduced expression ending in the alternating word
  // of length m(s,t)-1 whose last letter is t. Then y = u*w_st and
  // yt = u*(alternating word of length m-1 ending in s). The canonical word
  // of y is the least of word(yt)+t over its right descents t.
  std::size_t next_level_generic(std::size_t begin, std::size_t end) {
    const CoxeterMatrix& m = ctx_.matrix_;
    std::unordered_map<Word, std::size_t, VecHash> index;
    std::vector<Pending> pending;
    std::vector<Edge> edges;

    for (std::size_t x = begin; x < end; ++x) {
      for (Generator s = 0; s < rank_; ++s) {
        if ((ctx_.rdesc_[x] >> s) & 1U) continue;
        DescentSet desc = DescentSet{1} << s;
        Word best = ctx_.words_[x];
        best.push_back(s);
        for (Generator t = 0; t < rank_; ++t) {
          if (t == s || m.is_infinite(s, t)) continue;
          int mst = m(s, t);
          auto u = strip(static_cast<std::uint32_t>(x), t, s, mst - 1);
          if (!u) continue;
          desc |= DescentSet{1} << t;
          std::uint32_t yt = *u;
          for (int j = 0; j < mst - 1; ++j) {
            Generator letter = ((mst - 2 - j) % 2 == 0) ? s : t;
            yt = right(yt, letter);
          }
          Word cand = ctx_.words_[yt];
          cand.push_back(t);
          if (cand < best) best = std::move(cand);
        }
        auto [it, inserted] = index.try_emplace(best, pending.size());
        if (inserted) {
          pending.push_back({std::move(best), desc});
          check_cap(pending.size());
        }
        edges.push_back({static_cast<std::uint32_t>(x), s, it->second});
      }
    }
    commit(pending, edges);
    return pending.size();
  }

  std::size_t next_level_permutation(std::size_t begin, std::size_t end) {
    std::unordered_map<State, std::size_t, VecHash> index;
    std::vector<Pending> pending;
    std::vector<State> pending_states;
    std::vector<Edge> edges;

    for (std::size_t x = begin; x < end; ++x) {
      for (Generator s = 0; s < rank_; ++s) {
        if ((ctx_.rdesc_[x] >> s) & 1U) continue;
        State y = states_[x];
        model_->act(y, model_->to_model[s]);
        Word cand = ctx_.words_[x];
        cand.push_back(s);
        auto [it, inserted] = index.try_emplace(y, pending.size());
        if (inserted) {
          pending.push_back({std::move(cand), 0});
          pending_states.push_back(std::move(y));
          check_cap(pending.size());
        } else if (cand < pending[it->second].nf) {
          pending[it->second].nf = std::move(cand);
        }
        pending[it->second].rdesc |= DescentSet{1} << s;
        edges.push_back({static_cast<std::uint32_t>(x), s, it->second});
      }
    }
    std::vector<std::size_t> order = commit(pending, edges);
    states_.resize(ctx_.length_.size());
    std::size_t base = ctx_.length_.size() - pending.size();
    for (std::size_t p = 0; p < pending.size(); ++p) states_[base + order[p]] = std::move(pending_states[p]);
    return pending.size();
  }

  // Appends the pending level sorted by canonical word and wires its edges.
  // Returns the rank of each pending entry within the level.
  std::vector<std::size_t> commit(std::vector<Pending>& pending, const std::vector<Edge>& edges) {
    std::vector<std::size_t> perm(pending.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return pending[a].nf < pending[b].nf; });
    std::vector<std::size_t> rank_of(pending.size());
    for (std::size_t i = 0; i < perm.size(); ++i) rank_of[perm[i]] = i;

    const std::size_t base = ctx_.length_.size();
    const int level_length = base == 0 ? 0 : ctx_.length_.back() + 1;
    ctx_.right_.resize((base + pending.size()) * rank_, kNone);
    letters_ += pending.size() * static_cast<std::size_t>(level_length);
    for (std::size_t p : perm) {
      ctx_.words_.push_back(std::move(pending[p].nf));
      ctx_.length_.push_back(level_length);
      ctx_.rdesc_.push_back(pending[p].rdesc);
    }
    for (const Edge& e : edges) {
      auto y = static_cast<std::uint32_t>(base + rank_of[e.pending]);
      ctx_.right_[e.from * rank_ + e.s] = y;
      ctx_.right_[static_cast<std::size_t>(y) * rank_ + e.s] = e.from;
    }
    return rank_of;
  }

  void finish_tables() {
    const std::size_t n = ctx_.length_.size();
    ctx_.left_.assign(n * rank_, kNone);
    ctx_.inverse_.assign(n, kIdentity);
    ctx_.ldesc_.assign(n, 0);
    ctx_.ids_.resize(n);
    for (std::size_t x = 0; x < n; ++x) ctx_.ids_[x] = ElementId(static_cast<std::uint32_t>(x));

    for (Generator s = 0; s < rank_; ++s) ctx_.left_[s] = right(0, s);
    for (std::size_t x = 1; x < n; ++x) {
      Generator t = ctx_.words_[x].back();
      std::uint32_t prefix = right(x, t);
      for (Generator s = 0; s < rank_; ++s) {
        std::uint32_t sp = ctx_.left_[prefix * rank_ + s];
        ctx_.left_[x * rank_ + s] = sp == kNone ? kNone : right(sp, t);
      }
      ctx_.inverse_[x] = ElementId(ctx_.left_[ctx_.inverse_[prefix].index() * rank_ + t]);
    }
    for (std::size_t x = 0; x < n; ++x) {
      DescentSet d = 0;
      for (Generator s = 0; s < rank_; ++s) {
        std::uint32_t y = ctx_.left_[x * rank_ + s];
        if (y != kNone && ctx_.length_[y] < ctx_.length_[x]) d |= DescentSet{1} << s;
      }
      ctx_.ldesc_[x] = d;
    }
  }

  GroupContext ctx_;
  BuildOptions opt_;
  int rank_ = 0;
  DescentSet full_ = 0;
  std::size_t letters_ = 0;
  std::optional<PermModel> model_;
  std::vector<State> states_;
};

GroupContext GroupContext::build(const CoxeterMatrix& matrix, BuildOptions options) {
  if (options.length_bound && *options.length_bound < 0) throw Error("length bound must be non-negative");
  return GroupBuilder(matrix, options).run();
}

ElementId GroupContext::generator(Generator s) const {
  if (s < 0 || s >= rank()) throw Error("generator index out of range");
  return mult_gen(kIdentity, s, Side::Left);
}

std::optional<ElementId> GroupContext::try_mult_gen(ElementId x, Generator s, Side side) const noexcept {
  const auto& table = side == Side::Left ? left_ : right_;
  std::uint32_t y = table[x.index() * rank() + s];
  if (y == kNone) return std::nullopt;
  return ElementId(y);
}

ElementId GroupContext::mult_gen(ElementId x, Generator s, Side side) const {
  if (auto y = try_mult_gen(x, s, side)) return *y;
  throw OutOfWindow("product leaves the length window of the truncated context");
}

std::vector<Generator> GroupContext::descent_list(ElementId x, Side side) const {
  std::vector<Generator> out;
  DescentSet d = descents(x, side);
  for (Generator s = 0; s < rank(); ++s)
    if ((d >> s) & 1U) out.push_back(s);
  return out;
}

std::optional<Generator> GroupContext::first_ascent(ElementId x, Side side) const {
  DescentSet d = descents(x, side);
  for (Generator s = 0; s < rank(); ++s)
    if (!((d >> s) & 1U)) return s;
  return std::nullopt;
}

ElementId GroupContext::multiply(ElementId x, ElementId y) const {
  for (Generator s : word(y)) x = mult_gen(x, s, Side::Right);
  return x;
}

ElementId GroupContext::evaluate(std::span<const Generator> w) const {
  ElementId x = kIdentity;
  for (Generator s : w) {
    if (s < 0 || s >= rank()) throw Error("generator index out of range");
    x = mult_gen(x, s, Side::Right);
  }
  return x;
}

std::optional<ElementId> GroupContext::find_canonical(std::span<const Generator> w) const {
  for (Generator s : w)
    if (s < 0 || s >= rank()) return std::nullopt;
  ElementId x = kIdentity;
  for (Generator s : w) {
    auto y = try_mult_gen(x, s, Side::Right);
    if (!y || length(*y) < length(x)) return std::nullopt;
    x = *y;
  }
  if (!std::equal(w.begin(), w.end(), word(x).begin(), word(x).end())) return std::nullopt;
  return x;
}

bool GroupContext::bruhat_leq(ElementId y, ElementId x) const {
  while (true) {
    if (length(y) > length(x)) return false;
    if (length(y) == length(x)) return y == x;
    if (y == kIdentity) return true;
    auto s = static_cast<Generator>(std::countr_zero(ldesc_[x.index()]));
    x = ElementId(left_[x.index() * rank() + s]);
    if (is_descent(y, s, Side::Left)) y = ElementId(left_[y.index() * rank() + s]);
  }
}

ElementId GroupContext::longest_element() const {
  if (!complete_) throw IncompleteGroup("longest element undefined for infinite/truncated W");
  return ElementId(static_cast<std::uint32_t>(size() - 1));
}

std::vector<ElementId> GroupContext::enumerate() const { return ids_; }

std::span<const ElementId> GroupContext::level(int l) const {
  if (l < 0 || l > max_length()) return {};
  return std::span<const ElementId>(ids_).subspan(level_begin_[l], level_begin_[l + 1] - level_begin_[l]);
}

}  // namespace heckelab
