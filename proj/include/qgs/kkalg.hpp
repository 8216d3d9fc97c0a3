#pragma once

// Kalck-Karmazyn algebras k<z_1..z_l>/I as monomial algebras.
//
// For exponents c_1..c_l (all >= 2) the ideal I is generated by
//
//   z_j^{c_j}                                         for every j,
//   z_j z_k                                           for j < k,
//   z_j^{c_j-1} z_{j-1}^{c_{j-1}-2} ... z_{k+1}^{c_{k+1}-2} z_k^{c_k-1}   for k < j.
//
// Since I is monomial, the words avoiding every generator as a contiguous
// factor form a basis of the quotient. The basis is enumerated by walking a
// factor-avoidance automaton (Aho-Corasick over the reduced generator set).

#include <qgs/cfrac.hpp>
#include <qgs/core.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qgs {

/// A word in z_1..z_l stored as runs z_letter^exponent. Letters are 1-based.
/// Adjacent runs always carry distinct letters and positive exponents.
class Word {
 public:
  struct Run {
    int letter;
    int exponent;
    friend bool operator==(const Run&, const Run&) = default;
  };

  Word() = default;

  static Word from_letters(std::span<const int> letters) {
    Word w;
    for (int x : letters) w.push_back(x);
    return w;
  }

  void push_back(int letter, int exponent = 1) {
    if (exponent <= 0) return;
    if (!runs_.empty() && runs_.back().letter == letter)
      runs_.back().exponent += exponent;
    else
      runs_.push_back({letter, exponent});
    length_ += exponent;
  }

  void pop_back() {
    if (runs_.empty()) return;
    if (--runs_.back().exponent == 0) runs_.pop_back();
    --length_;
  }

  const std::vector<Run>& runs() const { return runs_; }
  int length() const { return length_; }
  bool empty() const { return length_ == 0; }

  std::vector<int> letters() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(length_));
    for (const auto& run : runs_) out.insert(out.end(), static_cast<std::size_t>(run.exponent), run.letter);
    return out;
  }

  /// Length first, then lexicographic with z_1 < z_2 < ...
  friend bool operator<(const Word& a, const Word& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    // walk both run lists in step; the first differing letter decides
    std::size_t i = 0, j = 0;
    int used_a = 0, used_b = 0;
    while (i < a.runs_.size() && j < b.runs_.size()) {
      const Run& x = a.runs_[i];
      const Run& y = b.runs_[j];
      if (x.letter != y.letter) return x.letter < y.letter;
      int step = std::min(x.exponent - used_a, y.exponent - used_b);
      used_a += step;
      used_b += step;
      if (used_a == x.exponent) ++i, used_a = 0;
      if (used_b == y.exponent) ++j, used_b = 0;
    }
    return false;
  }
  friend bool operator==(const Word& a, const Word& b) { return a.runs_ == b.runs_; }

 private:
  std::vector<Run> runs_;
  int length_ = 0;
};

/// "1" for the empty word, otherwise e.g. "z4^2*z1".
inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& run : w.runs()) {
    if (!out.empty()) out += "*";
    out += "z" + std::to_string(run.letter);
    if (run.exponent != 1) out += "^" + std::to_string(run.exponent);
  }
  return out;
}

/// True when `needle` occurs as a contiguous factor of `hay`.
inline bool contains_factor(std::span<const int> hay, std::span<const int> needle) {
  if (needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

struct MonomialPresentation {
  int generator_count = 0;
  std::vector<int> exponents;
  std::vector<Word> forbidden;  // length-lex sorted
};

/// The three relation families, before reduction. Relations are listed in
/// the order: powers, ascending pairs, long descending relations.
inline std::vector<Word> kk_relation_words(std::span<const int> exponents) {
  const int l = static_cast<int>(exponents.size());
  if (l == 0) throw InvalidInput("kk_relations: need at least one generator");
  for (int c : exponents)
    if (c <= 1) throw InvalidInput("kk_relations: every exponent must be >= 2, got " + std::to_string(c));

  auto c = [&](int j) { return exponents[static_cast<std::size_t>(j - 1)]; };
  std::vector<Word> out;
  for (int j = 1; j <= l; ++j) {
    Word w;
    w.push_back(j, c(j));
    out.push_back(w);
  }
  for (int j = 1; j <= l; ++j)
    for (int k = j + 1; k <= l; ++k) {
      Word w;
      w.push_back(j);
      w.push_back(k);
      out.push_back(w);
    }
  for (int j = 2; j <= l; ++j)
    for (int k = 1; k < j; ++k) {
      Word w;
      w.push_back(j, c(j) - 1);
      for (int i = j - 1; i > k; --i) w.push_back(i, c(i) - 2);
      w.push_back(k, c(k) - 1);
      out.push_back(w);
    }
  return out;
}

/// Presentation over `generator_count` letters with an arbitrary forbidden set
/// (kept as given, no reduction).
inline MonomialPresentation monomial_presentation(int generator_count, std::vector<Word> forbidden) {
  if (generator_count <= 0) throw InvalidInput("monomial_presentation: need at least one generator");
  for (const auto& w : forbidden) {
    if (w.empty()) throw InvalidInput("monomial_presentation: empty forbidden word");
    for (const auto& run : w.runs())
      if (run.letter < 1 || run.letter > generator_count)
        throw InvalidInput("monomial_presentation: letter z" + std::to_string(run.letter) + " out of range");
  }
  std::sort(forbidden.begin(), forbidden.end());
  return {generator_count, {}, std::move(forbidden)};
}

/// Aho-Corasick automaton recognising words that contain a forbidden factor.
/// State 0 is the root. A state is `dead` when the text read so far ends with
/// a forbidden word.
class FactorAutomaton {
 public:
  explicit FactorAutomaton(const MonomialPresentation& p) : FactorAutomaton(p.generator_count, p.forbidden) {}

  FactorAutomaton(int letters, const std::vector<Word>& words) : letters_(letters) {
    nodes_.emplace_back();
    for (const auto& w : words) insert(w.letters());
    link();
  }

  /// True when a forbidden word occurs in `word` other than as the whole of it.
  /// Only meaningful for words that were inserted.
  bool has_proper_factor(std::span<const int> word) const {
    int state = 0;
    for (std::size_t k = 0; k < word.size(); ++k) {
      state = step(state, word[k]);
      if (k + 1 < word.size() && dead(state)) return true;
    }
    return dead(nodes_[static_cast<std::size_t>(state)].fail);
  }

  int step(int state, int letter) const {
    for (;;) {
      if (int child = find_child(state, letter); child >= 0) return child;
      if (state == 0) return 0;
      state = nodes_[static_cast<std::size_t>(state)].fail;
    }
  }

  bool dead(int state) const { return nodes_[static_cast<std::size_t>(state)].dead; }
  int state_count() const { return static_cast<int>(nodes_.size()); }
  int letter_count() const { return letters_; }

 private:
  struct Node {
    std::vector<std::pair<int, int>> children;  // (letter, node), sorted by letter
    int fail = 0;
    bool dead = false;
  };

  int find_child(int state, int letter) const {
    const auto& ch = nodes_[static_cast<std::size_t>(state)].children;
    auto it = std::lower_bound(ch.begin(), ch.end(), std::pair<int, int>{letter, -1});
    return (it != ch.end() && it->first == letter) ? it->second : -1;
  }

  void insert(const std::vector<int>& word) {
    int state = 0;
    for (int x : word) {
      int child = find_child(state, x);
      if (child < 0) {
        child = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
        auto& ch = nodes_[static_cast<std::size_t>(state)].children;
        ch.insert(std::lower_bound(ch.begin(), ch.end(), std::pair<int, int>{x, -1}), {x, child});
      }
      state = child;
    }
    nodes_[static_cast<std::size_t>(state)].dead = true;
  }

  void link() {
    std::deque<int> queue;
    for (auto [x, child] : nodes_[0].children) {
      nodes_[static_cast<std::size_t>(child)].fail = 0;
      queue.push_back(child);
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [x, v] : nodes_[static_cast<std::size_t>(u)].children) {
        int f = nodes_[static_cast<std::size_t>(u)].fail;
        int target = 0;
        for (;;) {
          if (int c = find_child(f, x); c >= 0 && c != v) {
            target = c;
            break;
          }
          if (f == 0) break;
          f = nodes_[static_cast<std::size_t>(f)].fail;
        }
        auto& node = nodes_[static_cast<std::size_t>(v)];
        node.fail = target;
        node.dead = node.dead || nodes_[static_cast<std::size_t>(target)].dead;
        queue.push_back(v);
      }
    }
  }

  int letters_;
  std::vector<Node> nodes_;
};

/// Drop duplicates and every word containing another listed word as a factor.
inline std::vector<Word> reduce_forbidden(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  int letters = 0;
  for (const auto& w : words)
    for (const auto& run : w.runs()) letters = std::max(letters, run.letter);
  FactorAutomaton automaton(letters, words);
  std::vector<Word> kept;
  for (auto& w : words)
    if (!automaton.has_proper_factor(w.letters())) kept.push_back(std::move(w));
  return kept;
}

inline MonomialPresentation kk_relations(std::span<const int> exponents) {
  MonomialPresentation p;
  p.generator_count = static_cast<int>(exponents.size());
  p.exponents.assign(exponents.begin(), exponents.end());
  p.forbidden = reduce_forbidden(kk_relation_words(exponents));
  return p;
}

struct WordBasis {
  std::vector<Word> words;  // length-lex order
  Integer dimension;
  std::vector<Integer> hilbert;  // hilbert[n] = number of basis words of length n
};

/// Basis of k<z>/I: all factor-avoiding words, by depth-first traversal of the
/// automaton. Throws InvalidInput if the language is infinite.
inline WordBasis kk_basis(const MonomialPresentation& p) {
  FactorAutomaton automaton(p);
  const int l = p.generator_count;
  const int max_depth = automaton.state_count();

  std::vector<std::vector<Word>> by_length(1);
  Word current;
  // frames of (state, next letter to try)
  std::vector<std::pair<int, int>> stack{{0, 1}};
  by_length[0].push_back(current);
  while (!stack.empty()) {
    auto& [state, next] = stack.back();
    if (next > l) {
      stack.pop_back();
      current.pop_back();
      continue;
    }
    int letter = next++;
    int target = automaton.step(state, letter);
    if (automaton.dead(target)) continue;
    current.push_back(letter);
    if (current.length() > max_depth)
      throw InvalidInput("kk_basis: forbidden set does not define a finite-dimensional algebra");
    auto len = static_cast<std::size_t>(current.length());
    if (by_length.size() <= len) by_length.resize(len + 1);
    by_length[len].push_back(current);
    stack.push_back({target, 1});
  }

  WordBasis basis;
  for (auto& level : by_length) {
    // depth-first order over letters 1..l is lexicographic within a length
    basis.hilbert.emplace_back(level.size());
    for (auto& w : level) basis.words.push_back(std::move(w));
  }
  basis.dimension = basis.words.size();
  return basis;
}

/// Counts of basis words by length via the automaton transfer map (no words
/// are materialised).
inline std::vector<Integer> hilbert_series(const MonomialPresentation& p) {
  FactorAutomaton automaton(p);
  const int l = p.generator_count;
  std::vector<Integer> out;
  std::map<int, Integer> layer{{0, Integer(1)}};
  while (!layer.empty()) {
    Integer total = 0;
    for (const auto& [state, count] : layer) total += count;
    out.push_back(total);
    if (static_cast<int>(out.size()) > automaton.state_count() + 1)
      throw InvalidInput("hilbert_series: forbidden set does not define a finite-dimensional algebra");
    std::map<int, Integer> next;
    for (const auto& [state, count] : layer)
      for (int x = 1; x <= l; ++x) {
        int target = automaton.step(state, x);
        if (!automaton.dead(target)) next[target] += count;
      }
    layer = std::move(next);
  }
  return out;
}

/// Exponents c_1..c_l of the algebra attached to 1/r(1,a): r/(r-a) = [c_1..c_l].
inline std::vector<int> kk_exponents_for_singularity(const Integer& r, const Integer& a) {
  if (r < 2 || a <= 0 || a >= r || gcd(r, a) != 1)
    throw InvalidInput("kk: need 2 <= r, 0 < a < r, gcd(r, a) = 1; got r = " + r.str() + ", a = " + a.str());
  auto expansion = hj_expand(r, r - a);
  std::vector<int> c;
  c.reserve(expansion.terms.size());
  for (const auto& t : expansion.terms) c.push_back(to_int(t, "continued fraction term"));
  return c;
}

inline Integer kk_dimension_for_singularity(const Integer& r, const Integer& a) {
  auto c = kk_exponents_for_singularity(r, a);
  return kk_basis(kk_relations(c)).dimension;
}

}  // namespace qgs
