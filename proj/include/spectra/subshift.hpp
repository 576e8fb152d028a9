#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "spectra/cf.hpp"
#include "spectra/numeric.hpp"

namespace spectra {

/// Finite set of forbidden factors over the alphabet {1, ..., alphabet_max}.
class ForbiddenSet {
 public:
  /// Throws ConstructionError when a word contains another member as a
  /// factor, or uses a digit outside the alphabet.
  explicit ForbiddenSet(std::vector<DigitWord> words, Digit alphabet_max = 2);

  const std::vector<DigitWord>& words() const { return words_; }
  Digit alphabet_max() const { return alphabet_max_; }
  bool empty() const { return words_.empty(); }

  /// Naive factor scan.
  bool admits(const DigitWord& w) const;

 private:
  std::vector<DigitWord> words_;
  Digit alphabet_max_;
};

bool contains_factor(const DigitWord& w, const DigitWord& factor);

/// Deterministic automaton over {1, ..., alphabet_max} with a reject sink.
/// Built either as a factor-avoidance (Aho-Corasick) automaton or as the trie
/// of a prefix-free block alphabet whose accepted words are prefixes of
/// block concatenations.
class Automaton {
 public:
  using State = std::size_t;

  static Automaton factor(const ForbiddenSet& forbidden);
  static Automaton blocks(const std::vector<DigitWord>& blocks);

  std::size_t size() const { return next_.size(); }
  State initial() const { return 0; }
  Digit alphabet_max() const { return alphabet_max_; }
  std::optional<State> step(State s, Digit d) const;
  std::optional<State> run(State s, const DigitWord& w) const;
  bool accepts(const DigitWord& w) const { return run(initial(), w).has_value(); }
  /// Whether some infinite path leaves s.
  bool live(State s) const { return live_[s]; }
  std::size_t live_count() const;
  /// True at states lying on a block boundary (always true for factor automata).
  bool boundary(State s) const { return boundary_[s]; }

 private:
  void compute_liveness();

  Digit alphabet_max_{2};
  std::vector<std::vector<std::optional<State>>> next_;
  std::vector<bool> live_;
  std::vector<bool> boundary_;
};

/// Number of length-n words avoiding the forbidden set.
Integer count_admissible(const ForbiddenSet& forbidden, std::size_t n);
Integer count_admissible(const Automaton& automaton, std::size_t n);

/// Length-n admissible words in lexicographic order, passed to `emit`.
void enumerate_admissible(const Automaton& automaton, std::size_t n,
                          const std::function<void(const DigitWord&)>& emit);
std::vector<DigitWord> enumerate_admissible(const ForbiddenSet& forbidden, std::size_t n);

enum class Sense { Min, Max };

/// The admissible infinite continuation x_1, x_2, ... from `from` that makes
/// an expansion [..; .., x_1, x_2, ...] smallest or largest, where x_1 sits at
/// index `first_index` (only the parity matters; 1 extremizes [0; x_1, ...]
/// itself).  Greedy by the alternating rule restricted to live states; the
/// period closes at the first repeated (state, index parity).  Throws
/// DeadStateError when `from` is not live.
CFTail extremal_tail(const Automaton& automaton, Automaton::State from, Sense sense,
                     std::size_t first_index = 1);

}  // namespace spectra
