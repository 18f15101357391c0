#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ans {

using State = std::int32_t;
inline constexpr State kNoState = -1;

/// A finite alphabet of single printable ASCII characters together with the
/// total order used by every genealogic comparison: the declaration order.
class OrderedAlphabet {
 public:
  OrderedAlphabet();
  explicit OrderedAlphabet(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  char letter(std::size_t i) const { return letters_[i]; }
  const std::string& letters() const noexcept { return letters_; }
  std::optional<std::size_t> index_of(char c) const noexcept;
  bool contains(char c) const noexcept { return index_of(c).has_value(); }

  /// Concatenation with every letter of `this` ordered below every letter of
  /// `other`. Throws if the alphabets intersect.
  OrderedAlphabet disjoint_concat(const OrderedAlphabet& other) const;

  bool operator==(const OrderedAlphabet& other) const noexcept { return letters_ == other.letters_; }

 private:
  std::string letters_;
  std::array<std::int16_t, 256> index_;
};

/// Deterministic automaton with a partial transition table. Letters are
/// addressed by their index in the ordered alphabet.
///
/// A Dfa with zero states denotes the empty language; its initial state is
/// kNoState.
class Dfa {
 public:
  Dfa() = default;
  Dfa(OrderedAlphabet alphabet, std::size_t num_states, State initial);

  const OrderedAlphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return finals_.size(); }
  std::size_t num_letters() const noexcept { return alphabet_.size(); }
  State initial() const noexcept { return initial_; }
  bool empty() const noexcept { return finals_.empty(); }

  State next(State s, std::size_t letter) const { return table_[index(s, letter)]; }
  bool is_final(State s) const { return finals_[static_cast<std::size_t>(s)] != 0; }

  void set_transition(State from, std::size_t letter, State to);
  void set_final(State s, bool final = true);
  void set_initial(State s);

  /// State reached on `word`, or nullopt when a letter is undefined or not
  /// in the alphabet.
  std::optional<State> run(std::string_view word) const;
  bool accepts(std::string_view word) const;
  bool is_complete() const noexcept;

  /// Pair provenance for automata built by `product`; empty otherwise.
  const std::vector<std::pair<State, State>>& origins() const noexcept { return origins_; }
  void set_origins(std::vector<std::pair<State, State>> origins) { origins_ = std::move(origins); }

  /// Structural equality (same numbering); combined with the canonical
  /// numbering of `minimize` this decides isomorphism of minimal automata.
  bool operator==(const Dfa& other) const noexcept;

 private:
  std::size_t index(State s, std::size_t letter) const {
    return static_cast<std::size_t>(s) * alphabet_.size() + letter;
  }

  OrderedAlphabet alphabet_;
  std::vector<State> table_;
  std::vector<std::uint8_t> finals_;
  State initial_ = kNoState;
  std::vector<std::pair<State, State>> origins_;
};

/// Automaton with output over {0,1}. The transition table is always complete.
struct Dfao {
  Dfa automaton;
  std::vector<std::uint8_t> output;

  /// Completes `d` with a sink of output 0 when needed; `output` is indexed
  /// by the states of `d`.
  static Dfao from_partial(const Dfa& d, std::vector<std::uint8_t> output);

  std::uint8_t evaluate(std::string_view word) const;
};

using PairRule = std::function<bool(bool, bool)>;

/// Accessible and co-accessible restriction. Surviving states keep their
/// relative order. The result has no states iff the language is empty.
Dfa trim(const Dfa& d);

/// Minimal trim automaton of L(d) with canonical numbering (breadth-first
/// from the initial state, letters in alphabet order).
Dfa minimize(const Dfa& d);

/// Adds an explicit non-final sink when some transition is undefined. An
/// empty automaton becomes a single rejecting sink.
Dfa complete(const Dfa& d);

/// Accessible part of the pair automaton. A pair transition exists iff both
/// components define it. Each result state records its pair in `origins()`.
Dfa product(const Dfa& a, const Dfa& b, const PairRule& final_rule);
inline bool both_final(bool x, bool y) { return x && y; }

/// L(a) ∪ L(b) and the shuffle of L(a) and L(b) over disjoint alphabets; the
/// result alphabet lists a's letters below b's. Results are minimal.
Dfa disjoint_union(const Dfa& a, const Dfa& b);
Dfa disjoint_shuffle(const Dfa& a, const Dfa& b);

/// L(a) ⊆ L(b), decided on the pair automaton. Alphabets must be identical.
bool is_subset(const Dfa& a, const Dfa& b);

/// True iff the language is infinite (the trim automaton has a cycle).
bool is_infinite(const Dfa& d);

/// Same transition graph as `d`, every state final.
Dfa all_final(const Dfa& d);

/// Re-expresses `d` over `alphabet`, which must contain every letter of d's
/// alphabet; letters absent from d get no transitions.
Dfa widen_alphabet(const Dfa& d, const OrderedAlphabet& alphabet);

}  // namespace ans
