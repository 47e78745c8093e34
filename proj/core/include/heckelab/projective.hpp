#pragma once

#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "heckelab/klbasis.hpp"

namespace heckelab {

/// The basis {P_x} dual to the Kazhdan-Lusztig basis under the Ext form,
/// <P_x, C_y> = delta_xy. Requires a finite (complete) group.
///
/// Built downward from P_{w0} = H_{w0}: for x != w0 pick a left ascent s
/// (sx > x), set E = b(C_s) P_sx and
///
///   P_x = E - sum_{y > x} <E, C_y> P_y.
///
/// All correction coefficients are read off the fixed element E.
class ProjectiveBasis {
 public:
  using Corrections = std::vector<std::pair<ElementId, LaurentPoly>>;

  /// Throws IncompleteGroup for truncated contexts.
  explicit ProjectiveBasis(const KLBasis& kl, GeneratorChoice choice = GeneratorChoice::Least);
  ProjectiveBasis(const ProjectiveBasis&) = delete;
  ProjectiveBasis& operator=(const ProjectiveBasis&) = delete;

  const KLBasis& kl() const noexcept { return *kl_; }
  const HeckeAlgebra& algebra() const noexcept { return kl_->algebra(); }
  const GroupContext& context() const noexcept { return kl_->context(); }
  ElementId longest() const noexcept { return w0_; }

  const HeckeElement& proj_element(ElementId x) const;
  /// The nonzero p_y = <b(C_s) P_sx, C_y> subtracted when building P_x,
  /// in decreasing length order.
  const Corrections& corrections(ElementId x) const;

  /// Row x, column y holds <P_x, C_y>.
  std::vector<std::vector<LaurentPoly>> pairing_matrix() const;

  /// C^x = P_x H_{w0}^-1, checked to be self-dual. Throws ConsistencyError.
  HeckeElement self_dual_quotient(ElementId x) const;

  /// b(C_x) H_{w0}
  HeckeElement tilting_lhs(ElementId x) const;
  /// b(C_x) H_{w0} == P_{x w0}, the two sides computed independently.
  bool tilting_duality(ElementId x) const;

  bool is_cached(ElementId x) const;
  void preload(ElementId x, HeckeElement element, Corrections corrections = {}) const;

 private:
  struct Entry {
    HeckeElement element;
    Corrections corrections;
  };
  const Entry& entry(ElementId x) const;
  Entry compute(ElementId x) const;

  const KLBasis* kl_;
  GeneratorChoice choice_;
  ElementId w0_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::unique_ptr<const Entry>> memo_;
};

}  // namespace heckelab
