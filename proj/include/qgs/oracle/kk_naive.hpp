#pragma once

// Slow reference enumeration of factor-avoiding words, sharing nothing with
// the automaton in kkalg.hpp beyond the Word type: every candidate is checked
// against every forbidden word by plain substring search.

#include <qgs/kkalg.hpp>

#include <vector>

namespace qgs::oracle {

inline bool avoids_all(const std::vector<int>& word, const std::vector<std::vector<int>>& forbidden) {
  for (const auto& f : forbidden)
    if (contains_factor(word, f)) return false;
  return true;
}

inline std::vector<std::vector<int>> flatten(const std::vector<Word>& words) {
  std::vector<std::vector<int>> out;
  for (const auto& w : words) out.push_back(w.letters());
  return out;
}

/// Breadth-first generation: extend every surviving word of length n by each
/// letter and keep the extensions with no forbidden factor. Stops at the
/// first empty level or after `max_length` levels.
inline WordBasis naive_basis(const MonomialPresentation& p, int max_length = 1 << 20) {
  const auto forbidden = flatten(p.forbidden);
  WordBasis out;
  std::vector<std::vector<int>> level{{}};
  for (int n = 0; !level.empty() && n <= max_length; ++n) {
    out.hilbert.emplace_back(level.size());
    for (const auto& w : level) out.words.push_back(Word::from_letters(w));
    std::vector<std::vector<int>> next;
    for (const auto& w : level)
      for (int x = 1; x <= p.generator_count; ++x) {
        auto candidate = w;
        candidate.push_back(x);
        if (avoids_all(candidate, forbidden)) next.push_back(std::move(candidate));
      }
    level = std::move(next);
  }
  out.dimension = out.words.size();
  return out;
}

/// Every word of length <= max_length (no pruning) that avoids the forbidden set.
inline std::vector<std::vector<int>> filter_all_words(int letters, const std::vector<Word>& forbidden_words,
                                                      int max_length) {
  const auto forbidden = flatten(forbidden_words);
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> level{{}};
  for (int n = 0; n <= max_length; ++n) {
    for (const auto& w : level)
      if (avoids_all(w, forbidden)) out.push_back(w);
    if (n == max_length) break;
    std::vector<std::vector<int>> next;
    for (const auto& w : level)
      for (int x = 1; x <= letters; ++x) {
        auto candidate = w;
        candidate.push_back(x);
        next.push_back(std::move(candidate));
      }
    level = std::move(next);
  }
  return out;
}

}  // namespace qgs::oracle
