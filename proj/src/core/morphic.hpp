#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/automata.hpp"
#include "core/bigint.hpp"
#include "core/numeration.hpp"

namespace ans {

class Morphism {
 public:
  Morphism() = default;
  Morphism(std::vector<std::string> names, std::vector<std::vector<int>> images);

  /// One line per letter, `x -> image`, `eps` for the empty image. Images
  /// are read letter by letter unless they contain spaces, in which case
  /// they are space-separated letter names.
  static Morphism parse(std::string_view text);
  std::string to_text() const;

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(int letter) const { return names_[static_cast<std::size_t>(letter)]; }
  std::optional<int> index_of(std::string_view name) const;
  const std::vector<int>& image(int letter) const { return images_[static_cast<std::size_t>(letter)]; }

  bool is_prolongable(int a) const;
  /// μ prolongable on a and μ^n(a) unbounded: some letter after the
  /// leading a in μ(a) is not mortal.
  bool has_infinite_fixed_point(int a) const;
  /// Letters b with μ^k(b) = ε for some k.
  std::vector<bool> mortal_letters() const;

  std::vector<int> apply(const std::vector<int>& word) const;
  /// Letter-occurrence vector of μ(w) from that of w.
  std::vector<BigInt> step(const std::vector<BigInt>& occurrences) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> images_;
};

/// Letter-to-{0,1,ε} morphism; -1 stands for ε.
struct Coding {
  std::vector<int> image;
};

/// μ^ω(a), optionally seen through a coding, generated on demand.
class MorphicWord {
 public:
  /// Throws InvalidArgument when μ is not prolongable on `seed`, and
  /// FiniteFixedPoint when the fixed point is finite.
  MorphicWord(Morphism m, int seed, std::optional<Coding> coding = std::nullopt);
  MorphicWord(const MorphicWord&) = delete;
  MorphicWord& operator=(const MorphicWord&) = delete;

  std::vector<int> prefix(std::size_t n) const;
  /// First n symbols of the coded word (0/1 values); needs a coding.
  std::vector<int> coded_prefix(std::size_t n) const;

 private:
  void grow(std::size_t n) const;
  void grow_coded(std::size_t n) const;

  Morphism morphism_;
  std::optional<Coding> coding_;
  mutable std::mutex mutex_;
  mutable std::vector<int> letters_;
  mutable std::size_t expanded_ = 1;
  mutable std::vector<int> coded_;
  mutable std::size_t coded_upto_ = 0;
};

/// μ_A over the states of d plus a fresh letter α (the last letter).
/// Undefined transitions contribute nothing to an image.
struct AssociatedMorphism {
  Morphism morphism;
  int alpha = 0;
};
AssociatedMorphism associated_morphism(const Dfa& d);

/// Product of the trim minimal A_L with the complete minimal A_X, its
/// morphism μ_A, and the coding g (1 both final, 0 only p final, ε else).
struct MorphicPipeline {
  Dfa automaton;
  Dfa language_dfa;
  Dfa set_dfa;
  AssociatedMorphism mu;
  Coding g;

  /// Occurrence vectors of μ^k(α) for k = 0..n.
  std::vector<std::vector<BigInt>> occurrences(std::size_t n) const;
  /// |μ^k(α)|, |g(μ^k(α))| and F(k) for k = 0..n.
  struct Counts {
    std::vector<BigInt> length, coded_length, F;
  };
  Counts counts(std::size_t n) const;
};
MorphicPipeline build_pipeline(const RecognizableSet& x);

/// B: states of μ plus α, all final, letter 0 looping on α, letter i+1
/// following position i of each image. K drops the words of L(B) that
/// begin with the loop letter.
struct CanonicalAutomaton {
  Dfa b;
  Dfa k;
};
CanonicalAutomaton canonical_automaton(const Morphism& m, int alpha);

struct LemmaReport {
  bool ok = true;
  long first_bad = -1;
  std::string detail;
};

/// |g(μ^n(α))| = v_L(n) and F(n) = v_{rep_S(X)}(n) for n <= n_max.
LemmaReport verify_lemma_L(const RecognizableSet& x, std::size_t n_max);
/// For each sampled n and every k with F(k+1) defined in range:
/// |g(μ^k(α))| <= t_X(n) < |g(μ^(k+1)(α))|  <=>  F(k) <= n < F(k+1).
LemmaReport verify_lemma_equiv(const RecognizableSet& x, const std::vector<BigInt>& samples);

/// X = { n : τ(δ(q0, rep_S(n))) = 1 }.
RecognizableSet set_from_dfao(const NumerationSystem& s, const Dfao& a);
/// Complete product of A_L and A_X with output 1 on pairs final in both.
Dfao dfao_from_set(const RecognizableSet& x);

}  // namespace ans
