#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace heckelab {

using Integer = boost::multiprecision::cpp_int;

/// An element of Z[v, v^-1].
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal exactly when their term lists are equal. Every
/// operation returns a value in this canonical form.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  /// The constant polynomial c.
  LaurentPoly(Integer c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT
  /// Builds from (exponent, coefficient) pairs in any order; repeated
  /// exponents are summed.
  LaurentPoly(std::initializer_list<std::pair<int, int>> terms);
  static LaurentPoly from_terms(std::vector<Term> terms);

  /// c * v^k
  static LaurentPoly monomial(Integer c, int k);
  /// v^k
  static LaurentPoly v_pow(int k) { return monomial(1, k); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Lowest and highest exponent. Precondition: nonzero.
  int valuation() const;
  int degree() const;

  /// Coefficient of v^k, zero if absent.
  Integer coeff(int k) const;

  /// True iff every exponent is >= 1, i.e. the polynomial lies in vZ[v].
  /// The zero polynomial qualifies.
  bool in_strict_positive() const noexcept;
  /// True iff every exponent is >= 0.
  bool in_nonnegative() const noexcept;

  /// v -> v^-1
  LaurentPoly bar() const;
  /// v -> -v^-1
  LaurentPoly twist() const;
  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form with ascending exponents, e.g. "v^-1 + 2*v^3".
  /// Zero renders as "0". This is also the CSV cell format.
  std::string to_string() const;
  /// Inverse of to_string.
  static LaurentPoly parse(const std::string& text);

 private:
  void add_scaled(const LaurentPoly& other, int sign);

  std::vector<Term> terms_;
};

/// The element v (convenience constant).
inline LaurentPoly v() { return LaurentPoly::v_pow(1); }
inline LaurentPoly v_inv() { return LaurentPoly::v_pow(-1); }

}  // namespace heckelab
