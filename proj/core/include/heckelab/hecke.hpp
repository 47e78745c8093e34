#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "heckelab/coxeter.hpp"
#include "heckelab/laurent.hpp"

namespace heckelab {

/// A finitely supported element sum_x h_x H_x of the Hecke algebra,
/// written in the standard basis {H_x}. No zero coordinate is stored.
///
/// Elements carry no context pointer; ids only make sense together with
/// the GroupContext they were produced in.
class HeckeElement {
 public:
  using Terms = std::map<ElementId, LaurentPoly>;

  HeckeElement() = default;
  static HeckeElement basis(ElementId x, LaurentPoly c = 1);
  static HeckeElement from_terms(Terms terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Coordinate at H_x (zero polynomial when x is not in the support).
  const LaurentPoly& coeff(ElementId x) const;

  /// Adds c to the coordinate at x.
  void add_term(ElementId x, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& a);
  friend HeckeElement operator-(const HeckeElement& a);

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  Terms terms_;
};

/// Arithmetic in the Hecke algebra of one GroupContext, with
/// H_s^2 = 1 + (v^-1 - v) H_s and H_x H_y = H_xy when lengths add.
///
/// Holds a fill-once memo of the expansions of H_x^-1: lookups may run
/// concurrently, and an entry computed twice is simply discarded.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const GroupContext& ctx);
  HeckeAlgebra(const HeckeAlgebra&) = delete;
  HeckeAlgebra& operator=(const HeckeAlgebra&) = delete;

  const GroupContext& context() const noexcept { return *ctx_; }

  HeckeElement unit() const { return HeckeElement::basis(kIdentity); }
  HeckeElement h_basis(ElementId x) const { return HeckeElement::basis(x); }
  /// C_s = H_s + v
  HeckeElement c_generator(Generator s) const;

  /// H_s * a (left) or a * H_s (right). Throws OutOfWindow.
  HeckeElement mul_Hs(const HeckeElement& a, Generator s, Side side) const;
  /// C_s * a or a * C_s.
  HeckeElement mul_Cs(const HeckeElement& a, Generator s, Side side) const;
  /// b(C_s) * a or a * b(C_s), where b(C_s) = H_s - v^-1.
  HeckeElement mul_bCs(const HeckeElement& a, Generator s, Side side) const;

  /// General product. Each H_y of the right factor is expanded along the
  /// canonical word of y and applied to `a` one generator at a time.
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;

  /// Expansion of (H_x)^-1 in the H-basis.
  const HeckeElement& inverse_h(ElementId x) const;

  /// The bar involution: v -> v^-1, H_x -> (H_{x^-1})^-1.
  HeckeElement dualize(const HeckeElement& a) const;
  bool is_self_dual(const HeckeElement& a) const { return dualize(a) == a; }

  /// The involution v -> -v^-1 fixing every H_x.
  static HeckeElement b_twist(const HeckeElement& a);

  /// Symmetric bilinear form with <H_x, H_y> = delta_xy.
  static LaurentPoly ext_form(const HeckeElement& a, const HeckeElement& b);

  /// Coordinates in the basis T_x = v^-l(x) H_x.
  std::map<ElementId, LaurentPoly> to_T_basis(const HeckeElement& a) const;
  HeckeElement from_T_basis(const std::map<ElementId, LaurentPoly>& t) const;

 private:
  const GroupContext* ctx_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::vector<std::unique_ptr<const HeckeElement>> inverse_memo_;
};

}  // namespace heckelab
