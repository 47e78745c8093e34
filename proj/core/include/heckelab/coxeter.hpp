#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace heckelab {

/// Zero-based generator index. Text formats (CLI, JSON, CSV) use 1-based
/// indices; conversion happens at the I/O boundary.
using Generator = int;
using Word = std::vector<Generator>;
/// Bitset over generators, bit s set iff s is in the set.
using DescentSet = std::uint64_t;

inline constexpr int kMaxRank = 64;

/// Coxeter datum: a symmetric matrix with ones on the diagonal and
/// off-diagonal entries >= 2, where 0 encodes infinity.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = 0;

  /// `entries` is row-major, rank*rank long. Throws InvalidMatrix.
  CoxeterMatrix(int rank, std::vector<int> entries);

  /// Type shorthands `A:n`, `B:n`, `D:n`, `I2:m` (m may be `inf` or 0),
  /// `H:3`, `H:4`, `F:4`. Throws InvalidMatrix for anything else.
  static CoxeterMatrix from_type(std::string_view shorthand);

  /// Text form: rank on the first line, then rank rows of rank integers.
  static CoxeterMatrix parse(std::istream& in);
  static CoxeterMatrix parse(const std::string& text);
  std::string to_text() const;

  int rank() const noexcept { return rank_; }
  int operator()(Generator s, Generator t) const { return entries_[s * rank_ + t]; }
  bool is_infinite(Generator s, Generator t) const { return (*this)(s, t) == kInfinity; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  int rank_;
  std::vector<int> entries_;
};

/// Dense handle of a group element inside one GroupContext. Index 0 is the
/// identity; indices are ordered by length, then ShortLex on canonical words.
struct ElementId {
  std::uint32_t value = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t v) : value(v) {}
  constexpr std::size_t index() const noexcept { return value; }

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

inline constexpr ElementId kIdentity{0};

enum class Side { Left, Right };

enum class EngineKind { Generic, Permutation };
enum class EnginePreference { Auto, Generic, Permutation };

struct BuildOptions {
  std::optional<int> length_bound;
  std::size_t element_cap = 1'000'000;
  /// Budget for the letters of all stored canonical words. Infinite groups
  /// of slow growth (such as I2(inf)) hit this long before element_cap.
  std::size_t letter_cap = 64'000'000;
  EnginePreference engine = EnginePreference::Auto;
};

/// A Coxeter system enumerated by BFS over generator multiplication.
///
/// Stores for each element its ShortLex-minimal reduced word, its length,
/// the left and right Cayley tables and both descent sets. A context is
/// either complete (W finite and fully enumerated) or truncated at a length
/// bound; truncated contexts are Bruhat order ideals and refuse products
/// that would leave the window.
///
/// Built once, then immutable; every query is const and thread-safe.
class GroupContext {
 public:
  /// Throws UnboundedGroup if the element cap is reached without closure
  /// and no length bound was supplied. Throws Error if a permutation
  /// engine was requested but the matrix is not of type A, B, D or I2.
  static GroupContext build(const CoxeterMatrix& matrix, BuildOptions options = {});

  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  int rank() const noexcept { return matrix_.rank(); }
  EngineKind engine() const noexcept { return engine_; }
  /// "generic", "permutation:A", "permutation:B", "permutation:D" or
  /// "permutation:I2".
  const std::string& engine_name() const noexcept { return engine_name_; }
  bool complete() const noexcept { return complete_; }
  std::optional<int> length_bound() const noexcept { return bound_; }

  std::size_t size() const noexcept { return length_.size(); }
  int max_length() const noexcept { return static_cast<int>(level_begin_.size()) - 2; }
  ElementId generator(Generator s) const;

  int length(ElementId x) const { return length_[x.index()]; }
  /// ShortLex-minimal reduced word.
  const Word& word(ElementId x) const { return words_[x.index()]; }

  /// Product x*s (right) or s*x (left). Throws OutOfWindow.
  ElementId mult_gen(ElementId x, Generator s, Side side) const;
  std::optional<ElementId> try_mult_gen(ElementId x, Generator s, Side side) const noexcept;

  DescentSet descents(ElementId x, Side side) const {
    return side == Side::Left ? ldesc_[x.index()] : rdesc_[x.index()];
  }
  bool is_descent(ElementId x, Generator s, Side side) const {
    return (descents(x, side) >> s) & 1U;
  }
  std::vector<Generator> descent_list(ElementId x, Side side) const;
  /// Least generator that is not a descent on `side`, if any.
  std::optional<Generator> first_ascent(ElementId x, Side side) const;

  ElementId inverse(ElementId x) const { return inverse_[x.index()]; }

  /// Group product x*y. Throws OutOfWindow.
  ElementId multiply(ElementId x, ElementId y) const;
  /// Evaluates an arbitrary (not necessarily reduced) word. Throws OutOfWindow.
  ElementId evaluate(std::span<const Generator> word) const;
  /// Element whose canonical word is exactly `word`, if registered.
  std::optional<ElementId> find_canonical(std::span<const Generator> word) const;

  /// y <= x in the Bruhat order.
  bool bruhat_leq(ElementId y, ElementId x) const;

  /// Throws IncompleteGroup on truncated contexts.
  ElementId longest_element() const;

  /// All elements ordered by length, ties by ShortLex word. Because ids are
  /// assigned in this order the result is 0, 1, ..., size()-1.
  std::vector<ElementId> enumerate() const;
  /// Elements of exactly length l.
  std::span<const ElementId> level(int l) const;

 private:
  GroupContext() = default;
  friend class GroupBuilder;

  static constexpr std::uint32_t kNone = 0xffffffffU;

  CoxeterMatrix matrix_{1, {1}};
  EngineKind engine_ = EngineKind::Generic;
  std::string engine_name_;
  bool complete_ = false;
  std::optional<int> bound_;

  std::vector<Word> words_;
  std::vector<int> length_;
  std::vector<std::uint32_t> right_;  // size() * rank()
  std::vector<std::uint32_t> left_;
  std::vector<ElementId> inverse_;
  std::vector<DescentSet> rdesc_;
  std::vector<DescentSet> ldesc_;
  std::vector<std::size_t> level_begin_;  // level l is [level_begin_[l], level_begin_[l+1])
  std::vector<ElementId> ids_;
};

/// Number of elements of the finite Coxeter group named by a type
/// shorthand, or nullopt for infinite or unknown types.
std::optional<std::uint64_t> known_order(std::string_view shorthand);

// Word problem utilities built directly on braid moves. They do not use a
// GroupContext and serve as an independent check of the enumeration engines.

/// All words reachable from `word` by braid moves. For a reduced word these
/// are exactly the reduced words of the same element.
std::vector<Word> braid_class(const CoxeterMatrix& matrix, const Word& word);

/// ShortLex-minimal reduced word for the element represented by `word`,
/// found by alternating braid-move closure and deletion of adjacent pairs ss.
Word tits_normal_form(const CoxeterMatrix& matrix, Word word);

/// Every reduced word of x, read off the Cayley graph (sorted ShortLex).
std::vector<Word> reduced_words(const GroupContext& ctx, ElementId x);

/// "e" for the empty word, otherwise 1-based indices joined by '.'.
std::string format_word(std::span<const Generator> word);
/// Inverse of format_word. Throws Error on malformed input.
Word parse_word(std::string_view text);

}  // namespace heckelab

template <>
struct std::hash<heckelab::ElementId> {
  std::size_t operator()(heckelab::ElementId x) const noexcept { return x.value; }
};
