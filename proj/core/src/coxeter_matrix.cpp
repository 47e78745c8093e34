#include <charconv>
#include <istream>
#include <sstream>
#include <string>

#include "heckelab/coxeter.hpp"
#include "heckelab/errors.hpp"

namespace heckelab {

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank < 1 || rank > kMaxRank)
    throw InvalidMatrix("rank must be between 1 and " + std::to_string(kMaxRank));
  if (entries_.size() != static_cast<std::size_t>(rank) * rank)
    throw InvalidMatrix("expected " + std::to_string(rank * rank) + " entries");
  for (int i = 0; i < rank; ++i) {
    if ((*this)(i, i) != 1) throw InvalidMatrix("diagonal entries must be 1");
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      int m = (*this)(i, j);
      if (m != (*this)(j, i)) throw InvalidMatrix("matrix is not symmetric");
      if (m != kInfinity && m < 2)
        throw InvalidMatrix("off-diagonal entries must be >= 2 or 0 (infinity)");
    }
  }
}

namespace {

struct MatrixSketch {
  int rank;
  std::vector<int> entries;

  explicit MatrixSketch(int r) : rank(r), entries(static_cast<std::size_t>(r) * r, 2) {
    for (int i = 0; i < r; ++i) entries[i * r + i] = 1;
  }
  void set(int i, int j, int m) {
    entries[i * rank + j] = m;
    entries[j * rank + i] = m;
  }
  CoxeterMatrix finish() && { return CoxeterMatrix(rank, std::move(entries)); }
};

int parse_positive(std::string_view text, std::string_view shorthand) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0)
    throw InvalidMatrix("bad type shorthand '" + std::string(shorthand) + "'");
  return value;
}

}  // namespace

CoxeterMatrix CoxeterMatrix::from_type(std::string_view shorthand) {
  auto colon = shorthand.find(':');
  if (colon == std::string_view::npos)
    throw InvalidMatrix("type shorthand must look like 'A:3', got '" + std::string(shorthand) + "'");
  std::string_view family = shorthand.substr(0, colon);
  std::string_view arg = shorthand.substr(colon + 1);
  auto bad = [&]() -> CoxeterMatrix {
    throw InvalidMatrix("unknown type shorthand '" + std::string(shorthand) + "'");
  };

  if (family == "I2") {
    int m = (arg == "inf" || arg == "oo") ? kInfinity : parse_positive(arg, shorthand);
    if (m == 1) return bad();
    MatrixSketch sk(2);
    sk.set(0, 1, m);
    return std::move(sk).finish();
  }

  int n = parse_positive(arg, shorthand);
  if (family == "A") {
    if (n < 1) return bad();
    MatrixSketch sk(n);
    for (int i = 0; i + 1 < n; ++i) sk.set(i, i + 1, 3);
    return std::move(sk).finish();
  }
  if (family == "B") {
    if (n < 2) return bad();
    MatrixSketch sk(n);
    for (int i = 0; i + 2 < n; ++i) sk.set(i, i + 1, 3);
    sk.set(n - 2, n - 1, 4);
    return std::move(sk).finish();
  }
  if (family == "D") {
    if (n < 3) return bad();
    MatrixSketch sk(n);
    for (int i = 0; i + 2 < n; ++i) sk.set(i, i + 1, 3);
    sk.set(n - 3, n - 1, 3);
    return std::move(sk).finish();
  }
  if (family == "H" && (n == 3 || n == 4)) {
    MatrixSketch sk(n);
    sk.set(0, 1, 5);
    for (int i = 1; i + 1 < n; ++i) sk.set(i, i + 1, 3);
    return std::move(sk).finish();
  }
  if (family == "F" && n == 4) {
    MatrixSketch sk(4);
    sk.set(0, 1, 3);
    sk.set(1, 2, 4);
    sk.set(2, 3, 3);
    return std::move(sk).finish();
  }
  return bad();
}

CoxeterMatrix CoxeterMatrix::parse(std::istream& in) {
  long rank = 0;
  if (!(in >> rank)) throw InvalidMatrix("matrix file: missing rank");
  if (rank < 1 || rank > kMaxRank) throw InvalidMatrix("matrix file: bad rank");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(rank * rank));
  for (long i = 0; i < rank * rank; ++i) {
    long m = 0;
    if (!(in >> m)) throw InvalidMatrix("matrix file: expected " + std::to_string(rank * rank) + " entries");
    entries.push_back(static_cast<int>(m));
  }
  std::string trailing;
  if (in >> trailing) throw InvalidMatrix("matrix file: trailing data '" + trailing + "'");
  return CoxeterMatrix(static_cast<int>(rank), std::move(entries));
}

CoxeterMatrix CoxeterMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string CoxeterMatrix::to_text() const {
  std::ostringstream os;
  os << rank_ << '\n';
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

std::optional<std::uint64_t> known_order(std::string_view shorthand) {
  CoxeterMatrix m = CoxeterMatrix::from_type(shorthand);
  auto colon = shorthand.find(':');
  std::string_view family = shorthand.substr(0, colon);
  auto factorial = [](std::uint64_t k) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  std::uint64_t n = static_cast<std::uint64_t>(m.rank());
  if (family == "A") return factorial(n + 1);
  if (family == "B") return (std::uint64_t{1} << n) * factorial(n);
  if (family == "D") return (std::uint64_t{1} << (n - 1)) * factorial(n);
  if (family == "I2") {
    if (m(0, 1) == CoxeterMatrix::kInfinity) return std::nullopt;
    return 2 * static_cast<std::uint64_t>(m(0, 1));
  }
  if (family == "H") return n == 3 ? 120 : 14400;
  if (family == "F") return 1152;
  return std::nullopt;
}

}  // namespace heckelab
