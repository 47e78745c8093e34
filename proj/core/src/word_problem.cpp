#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <set>

#include "heckelab/coxeter.hpp"
#include "heckelab/errors.hpp"

namespace heckelab {

std::vector<Word> braid_class(const CoxeterMatrix& matrix, const Word& word) {
  std::set<Word> seen{word};
  std::deque<Word> queue{word};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      Generator s = w[i], t = w[i + 1];
      if (s == t || matrix.is_infinite(s, t)) continue;
      auto m = static_cast<std::size_t>(matrix(s, t));
      if (i + m > w.size()) continue;
      bool alternating = true;
      for (std::size_t j = 0; j < m && alternating; ++j)
        alternating = w[i + j] == (j % 2 == 0 ? s : t);
      if (!alternating) continue;
      Word moved = w;
      for (std::size_t j = 0; j < m; ++j) moved[i + j] = (j % 2 == 0 ? t : s);
      if (seen.insert(moved).second) queue.push_back(std::move(moved));
    }
  }
  return {seen.begin(), seen.end()};
}

Word tits_normal_form(const CoxeterMatrix& matrix, Word word) {
  while (true) {
    std::vector<Word> cls = braid_class(matrix, word);
    bool shortened = false;
    for (const Word& w : cls) {
      auto it = std::adjacent_find(w.begin(), w.end());
      if (it == w.end()) continue;
      Word shorter(w.begin(), it);
      shorter.insert(shorter.end(), it + 2, w.end());
      word = std::move(shorter);
      shortened = true;
      break;
    }
    if (!shortened) return cls.front();
  }
}

std::vector<Word> reduced_words(const GroupContext& ctx, ElementId x) {
  std::map<ElementId, std::vector<Word>> memo;
  auto rec = [&](auto&& self, ElementId y) -> const std::vector<Word>& {
    if (auto it = memo.find(y); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (y == kIdentity) {
      out.emplace_back();
    } else {
      for (Generator t : ctx.descent_list(y, Side::Right)) {
        for (Word w : self(self, ctx.mult_gen(y, t, Side::Right))) {
          w.push_back(t);
          out.push_back(std::move(w));
        }
      }
      std::sort(out.begin(), out.end());
    }
    return memo.emplace(y, std::move(out)).first->second;
  };
  return rec(rec, x);
}

std::string format_word(std::span<const Generator> word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back('.');
    out += std::to_string(word[i] + 1);
  }
  return out;
}

Word parse_word(std::string_view text) {
  if (text == "e") return {};
  Word out;
  while (true) {
    auto dot = text.find('.');
    std::string_view piece = text.substr(0, dot);
    int g = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), g);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size() || g < 1)
      throw Error("malformed word '" + std::string(text) + "'");
    out.push_back(g - 1);
    if (dot == std::string_view::npos) break;
    text.remove_prefix(dot + 1);
  }
  return out;
}

}  // namespace heckelab
