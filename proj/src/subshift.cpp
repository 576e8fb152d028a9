#include "spectra/subshift.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace spectra {

bool contains_factor(const DigitWord& w, const DigitWord& factor) {
  if (factor.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), factor.begin(), factor.end()) != w.end();
}

ForbiddenSet::ForbiddenSet(std::vector<DigitWord> words, Digit alphabet_max)
    : words_(std::move(words)), alphabet_max_(alphabet_max) {
  if (alphabet_max_ < 1) throw ConstructionError("empty alphabet");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  for (const auto& w : words_) {
    if (w.empty()) throw ConstructionError("empty forbidden word");
    for (Digit d : w)
      if (d > alphabet_max_)
        throw ConstructionError("forbidden word " + w.to_plain() + " leaves the alphabet");
  }
  for (const auto& a : words_)
    for (const auto& b : words_)
      if (a != b && contains_factor(b, a))
        throw ConstructionError("forbidden set is not minimal: " + a.to_plain() + " is a factor of " +
                                b.to_plain());
}

bool ForbiddenSet::admits(const DigitWord& w) const {
  return std::none_of(words_.begin(), words_.end(), [&](const DigitWord& f) { return contains_factor(w, f); });
}

namespace {

struct TrieNode {
  std::vector<long> child;
  long fail = 0;
  bool terminal = false;
};

std::vector<TrieNode> build_trie(const std::vector<DigitWord>& words, Digit alphabet_max) {
  const auto k = static_cast<std::size_t>(alphabet_max);
  std::vector<TrieNode> trie(1);
  trie[0].child.assign(k + 1, -1);
  for (const auto& w : words) {
    long node = 0;
    for (Digit d : w) {
      auto& slot = trie[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(d)];
      if (slot < 0) {
        slot = static_cast<long>(trie.size());
        TrieNode fresh;
        fresh.child.assign(k + 1, -1);
        trie.push_back(fresh);
      }
      node = trie[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(d)];
    }
    trie[static_cast<std::size_t>(node)].terminal = true;
  }
  return trie;
}

}  // namespace

Automaton Automaton::factor(const ForbiddenSet& forbidden) {
  const Digit k = forbidden.alphabet_max();
  std::vector<TrieNode> trie = build_trie(forbidden.words(), k);
  // Aho-Corasick: complete the goto function along failure links.
  std::vector<std::vector<long>> go(trie.size(), std::vector<long>(static_cast<std::size_t>(k) + 1, 0));
  std::deque<long> queue;
  for (Digit d = 1; d <= k; ++d) {
    long c = trie[0].child[static_cast<std::size_t>(d)];
    go[0][static_cast<std::size_t>(d)] = c < 0 ? 0 : c;
    if (c >= 0) {
      trie[static_cast<std::size_t>(c)].fail = 0;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    long u = queue.front();
    queue.pop_front();
    for (Digit d = 1; d <= k; ++d) {
      auto ud = static_cast<std::size_t>(d);
      long c = trie[static_cast<std::size_t>(u)].child[ud];
      long via_fail = go[static_cast<std::size_t>(trie[static_cast<std::size_t>(u)].fail)][ud];
      if (c < 0) {
        go[static_cast<std::size_t>(u)][ud] = via_fail;
      } else {
        go[static_cast<std::size_t>(u)][ud] = c;
        trie[static_cast<std::size_t>(c)].fail = via_fail;
        queue.push_back(c);
      }
    }
  }
  std::vector<long> index(trie.size(), -1);
  std::size_t count = 0;
  for (std::size_t i = 0; i < trie.size(); ++i)
    if (!trie[i].terminal) index[i] = static_cast<long>(count++);

  Automaton out;
  out.alphabet_max_ = k;
  out.next_.assign(count, std::vector<std::optional<State>>(static_cast<std::size_t>(k) + 1));
  for (std::size_t i = 0; i < trie.size(); ++i) {
    if (index[i] < 0) continue;
    for (Digit d = 1; d <= k; ++d) {
      long target = go[i][static_cast<std::size_t>(d)];
      if (!trie[static_cast<std::size_t>(target)].terminal)
        out.next_[static_cast<std::size_t>(index[i])][static_cast<std::size_t>(d)] =
            static_cast<State>(index[static_cast<std::size_t>(target)]);
    }
  }
  out.boundary_.assign(count, true);
  out.compute_liveness();
  return out;
}

Automaton Automaton::blocks(const std::vector<DigitWord>& blocks) {
  if (blocks.empty()) throw ConstructionError("empty block alphabet");
  Digit k = 1;
  for (const auto& b : blocks) {
    if (b.empty()) throw ConstructionError("empty block");
    k = std::max(k, *std::max_element(b.begin(), b.end()));
  }
  for (const auto& a : blocks)
    for (const auto& b : blocks)
      if (a != b && a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin()))
        throw ConstructionError("block " + a.to_string() + " is a prefix of block " + b.to_string());
  std::vector<TrieNode> trie = build_trie(blocks, k);
  std::vector<long> index(trie.size(), -1);
  std::size_t count = 0;
  for (std::size_t i = 0; i < trie.size(); ++i)
    if (!trie[i].terminal) index[i] = static_cast<long>(count++);

  Automaton out;
  out.alphabet_max_ = k;
  out.next_.assign(count, std::vector<std::optional<State>>(static_cast<std::size_t>(k) + 1));
  for (std::size_t i = 0; i < trie.size(); ++i) {
    if (index[i] < 0) continue;
    for (Digit d = 1; d <= k; ++d) {
      long c = trie[i].child[static_cast<std::size_t>(d)];
      if (c < 0) continue;
      State target = trie[static_cast<std::size_t>(c)].terminal ? 0 : static_cast<State>(index[static_cast<std::size_t>(c)]);
      out.next_[static_cast<std::size_t>(index[i])][static_cast<std::size_t>(d)] = target;
    }
  }
  out.boundary_.assign(count, false);
  out.boundary_[0] = true;
  out.compute_liveness();
  return out;
}

void Automaton::compute_liveness() {
  live_.assign(next_.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < next_.size(); ++s) {
      if (!live_[s]) continue;
      bool any = false;
      for (const auto& t : next_[s])
        if (t && live_[*t]) any = true;
      if (!any) {
        live_[s] = false;
        changed = true;
      }
    }
  }
}

std::size_t Automaton::live_count() const {
  return static_cast<std::size_t>(std::count(live_.begin(), live_.end(), true));
}

std::optional<Automaton::State> Automaton::step(State s, Digit d) const {
  if (d < 1 || d > alphabet_max_) return std::nullopt;
  return next_[s][static_cast<std::size_t>(d)];
}

std::optional<Automaton::State> Automaton::run(State s, const DigitWord& w) const {
  std::optional<State> cur = s;
  for (Digit d : w) {
    cur = step(*cur, d);
    if (!cur) return std::nullopt;
  }
  return cur;
}

Integer count_admissible(const Automaton& automaton, std::size_t n) {
  std::vector<Integer> ways(automaton.size(), 0);
  ways[automaton.initial()] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Integer> next(automaton.size(), 0);
    for (std::size_t s = 0; s < ways.size(); ++s) {
      if (ways[s] == 0) continue;
      for (Digit d = 1; d <= automaton.alphabet_max(); ++d)
        if (auto t = automaton.step(s, d)) next[*t] += ways[s];
    }
    ways = std::move(next);
  }
  Integer total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

Integer count_admissible(const ForbiddenSet& forbidden, std::size_t n) {
  return count_admissible(Automaton::factor(forbidden), n);
}

void enumerate_admissible(const Automaton& automaton, std::size_t n,
                          const std::function<void(const DigitWord&)>& emit) {
  std::vector<Digit> word;
  word.reserve(n);
  std::function<void(Automaton::State)> dfs = [&](Automaton::State s) {
    if (word.size() == n) {
      emit(DigitWord(word));
      return;
    }
    for (Digit d = 1; d <= automaton.alphabet_max(); ++d) {
      if (auto t = automaton.step(s, d)) {
        word.push_back(d);
        dfs(*t);
        word.pop_back();
      }
    }
  };
  dfs(automaton.initial());
}

std::vector<DigitWord> enumerate_admissible(const ForbiddenSet& forbidden, std::size_t n) {
  std::vector<DigitWord> out;
  enumerate_admissible(Automaton::factor(forbidden), n, [&](const DigitWord& w) { out.push_back(w); });
  return out;
}

CFTail extremal_tail(const Automaton& automaton, Automaton::State from, Sense sense, std::size_t first_index) {
  if (from >= automaton.size() || !automaton.live(from))
    throw DeadStateError("no infinite admissible continuation from state " + std::to_string(from));
  std::map<std::pair<Automaton::State, int>, std::size_t> seen;
  std::vector<Digit> digits;
  Automaton::State s = from;
  std::size_t index = first_index;
  for (;;) {
    int parity = static_cast<int>(index % 2);
    auto key = std::make_pair(s, parity);
    if (auto it = seen.find(key); it != seen.end()) {
      std::size_t start = it->second;
      DigitWord pre(std::vector<Digit>(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start)));
      DigitWord per(std::vector<Digit>(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end()));
      return CFTail(pre, per);
    }
    seen.emplace(key, digits.size());
    // A larger digit at an even index makes the value larger.
    bool prefer_large = (parity == 0) == (sense == Sense::Max);
    std::optional<Digit> choice;
    for (Digit i = 1; i <= automaton.alphabet_max(); ++i) {
      Digit d = prefer_large ? automaton.alphabet_max() + 1 - i : i;
      auto t = automaton.step(s, d);
      if (t && automaton.live(*t)) {
        choice = d;
        s = *t;
        break;
      }
    }
    digits.push_back(*choice);
    ++index;
  }
}

}  // namespace spectra
