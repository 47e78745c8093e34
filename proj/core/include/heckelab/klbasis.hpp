#pragma once

#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "heckelab/hecke.hpp"

namespace heckelab {

/// Which descent (or ascent) the basis recursions use when several exist.
/// The result never depends on it; the alternative exists to test that.
enum class GeneratorChoice { Least, Greatest };

/// Memoized Kazhdan-Lusztig basis: the self-dual elements
/// C_x in H_x + sum_y vZ[v] H_y, built from C_e = 1 by
///
///   C_x = C_s C_sx - sum_{y < sx, sy < y} mu(y, sx) C_y     (sx < x)
///
/// with s the least (or greatest) left descent of x. Works on truncated
/// contexts too, since the recursion only touches Bruhat-smaller elements.
///
/// Fill-once memo: concurrent kl_element calls are safe.
class KLBasis {
 public:
  using MuRow = std::vector<std::pair<ElementId, Integer>>;

  explicit KLBasis(const HeckeAlgebra& algebra, GeneratorChoice choice = GeneratorChoice::Least);
  KLBasis(const KLBasis&) = delete;
  KLBasis& operator=(const KLBasis&) = delete;

  const HeckeAlgebra& algebra() const noexcept { return *algebra_; }
  const GroupContext& context() const noexcept { return algebra_->context(); }

  const HeckeElement& kl_element(ElementId x) const;
  /// h_{y,x}, the coordinate of C_x at H_y.
  const LaurentPoly& kl_poly(ElementId y, ElementId x) const;
  /// Coefficient of v in h_{y,x}.
  Integer mu(ElementId y, ElementId x) const;
  /// Nonzero mu(y, x) for y < x, ordered by y.
  const MuRow& mu_row(ElementId x) const;

  /// C_s C_x, computed directly and checked against
  ///   C_sx + sum_{y < x, sy < y} mu(y,x) C_y   if sx > x,
  ///   (v + v^-1) C_x                          if sx < x.
  /// Throws ConsistencyError if the two disagree.
  HeckeElement cs_times_c(Generator s, ElementId x) const;

  /// C_{w0}, checked against sum_x v^{l(w0)-l(x)} H_x. Throws
  /// IncompleteGroup on truncated contexts and ConsistencyError on mismatch.
  HeckeElement c_longest() const;

  bool is_cached(ElementId x) const;
  /// Seeds the memo with a value loaded from disk.
  void preload(ElementId x, HeckeElement element) const;

 private:
  struct Entry {
    HeckeElement element;
    MuRow mu;
  };
  const Entry& entry(ElementId x) const;
  Entry compute(ElementId x) const;
  Entry make_entry(ElementId x, HeckeElement element) const;

  const HeckeAlgebra* algebra_;
  GeneratorChoice choice_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::unique_ptr<const Entry>> memo_;
};

/// True iff C = H_x + (terms with coordinates in vZ[v]).
bool is_unitriangular(const HeckeElement& c, ElementId x);

}  // namespace heckelab
