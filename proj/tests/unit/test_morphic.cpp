#include "doctest.h"

#include "core/error.hpp"
#include "core/families.hpp"
#include "core/morphic.hpp"
#include "core/regex.hpp"
#include "support/oracle.hpp"

using namespace ans;
using namespace ans::testing;

namespace {

std::string spell(const Morphism& m, const std::vector<int>& w) {
  std::string s;
  for (int x : w) s += m.name(x);
  return s;
}

int letter(const Morphism& m, const char* name) { return *m.index_of(name); }

const std::vector<std::string> kSix = {"pansiot", "base4_13", "base4_123", "base4_fibonacci", "base4_K",
                                       "base2_10star"};

}  // namespace

TEST_CASE("morphism text round-trips") {
  Morphism h = Morphism::parse("1 -> 1010\n0 -> 00\n");
  CHECK(h.size() == 2);
  CHECK(Morphism::parse(h.to_text()).to_text() == h.to_text());
  Morphism e = Morphism::parse("a -> ab\nb -> eps\n");
  CHECK(e.image(letter(e, "b")).empty());
  CHECK_THROWS_AS(Morphism::parse("a -> ax\n"), Error);
}

TEST_CASE("prolongability and infinite fixed points") {
  Morphism h = Morphism::parse("1 -> 1010\n0 -> 00\n");
  CHECK(h.is_prolongable(letter(h, "1")));
  CHECK(h.has_infinite_fixed_point(letter(h, "1")));
  Morphism f = Morphism::parse("a -> ab\nb -> eps\n");
  CHECK(f.is_prolongable(letter(f, "a")));
  CHECK_FALSE(f.has_infinite_fixed_point(letter(f, "a")));
  CHECK(f.mortal_letters()[static_cast<std::size_t>(letter(f, "b"))]);
  Morphism g = Morphism::parse("a -> ba\nb -> b\n");
  CHECK_FALSE(g.is_prolongable(letter(g, "a")));
  CHECK_THROWS_AS(MorphicWord(g, letter(g, "a")), Error);
  CHECK_THROWS_AS(MorphicWord(f, letter(f, "a")), Error);
}

TEST_CASE("fixed point prefixes") {
  Morphism h = Morphism::parse("1 -> 1010\n0 -> 00\n");
  MorphicWord w(h, letter(h, "1"));
  CHECK(spell(h, w.prefix(12)) == "101000101000");
  Morphism ab = Morphism::parse("a -> ab\nb -> b\n");
  MorphicWord u(ab, letter(ab, "a"));
  CHECK(spell(ab, u.prefix(6)) == "abbbbb");
  Morphism tm = Morphism::parse("0 -> 01\n1 -> 10\n");
  MorphicWord t(tm, letter(tm, "0"));
  CHECK(spell(tm, t.prefix(8)) == "01101001");
}

TEST_CASE("prefix stability") {
  Morphism tm = Morphism::parse("0 -> 01\n1 -> 10\n");
  Morphism h = Morphism::parse("1 -> 1010\n0 -> 00\n");
  for (const Morphism* m : {&tm, &h}) {
    MorphicWord w(*m, 0);
    for (std::size_t n = 1; n <= 10000; n *= 3) {
      auto a = w.prefix(n), b = w.prefix(2 * n);
      CHECK(std::equal(a.begin(), a.end(), b.begin()));
    }
  }
}

TEST_CASE("associated morphism of the DFAO graph recovers h") {
  // state 0 plays the initial state "1", state 1 plays "0"
  Dfa d = make_dfa("0123", 2, 0, {0}, {{0, '0', 0}, {0, '2', 0}, {0, '1', 1}, {0, '3', 1}, {1, '0', 1}, {1, '1', 1}});
  AssociatedMorphism a = associated_morphism(d);
  CHECK(a.morphism.image(0) == std::vector<int>{0, 1, 0, 1});
  CHECK(a.morphism.image(1) == std::vector<int>{1, 1});
  CHECK(a.alpha == 2);
  CHECK(a.morphism.name(a.alpha) == "@");
  CHECK(a.morphism.image(a.alpha) == std::vector<int>{2, 0, 1, 0, 1});
}

TEST_CASE("associated morphism: loops and dead ends") {
  AssociatedMorphism loop = associated_morphism(parse_regex("(a|b)*", OrderedAlphabet("ab")));
  CHECK(loop.morphism.image(0) == std::vector<int>{0, 0});
  Dfa chain = make_dfa("a", 2, 0, {1}, {{0, 'a', 1}});
  AssociatedMorphism c = associated_morphism(chain);
  CHECK(c.morphism.image(0) == std::vector<int>{1});
  CHECK(c.morphism.image(1).empty());
}

TEST_CASE("F counts the rep language") {
  MorphicPipeline p = build_pipeline(build_set(fixture("pansiot")));
  auto counts = p.counts(40);
  for (unsigned long n = 0; n <= 40; ++n) {
    CHECK(counts.F[n] == pow_ui(2, n));
    CHECK(counts.coded_length[n] == (n + 1) * pow_ui(2, n));
  }
  MorphicPipeline s = build_pipeline(build_set(fixture("base2_10star")));
  auto sc = s.counts(40);
  for (unsigned long n = 0; n <= 40; ++n) CHECK(sc.F[n] == 1 + n * (n + 1) / 2);
  NumerationSystem fib = build_system(fibonacci());
  MorphicPipeline nat = build_pipeline(RecognizableSet::natural(fib));
  auto nc = nat.counts(30);
  for (unsigned long n = 0; n <= 30; ++n) CHECK(nc.F[n] == fib.counts().v(static_cast<long>(n)));
}

TEST_CASE("coding g follows the three cases") {
  MorphicPipeline p = build_pipeline(build_set(fixture("pansiot")));
  const auto& origins = p.automaton.origins();
  for (std::size_t q = 0; q < p.automaton.num_states(); ++q) {
    bool lf = p.language_dfa.is_final(origins[q].first);
    bool xf = p.set_dfa.is_final(origins[q].second);
    int expect = lf && xf ? 1 : lf ? 0 : -1;
    CHECK(p.g.image[q] == expect);
  }
  CHECK(p.g.image[static_cast<std::size_t>(p.mu.alpha)] == p.g.image[static_cast<std::size_t>(p.automaton.initial())]);
}

TEST_CASE("occurrence vectors match materialized words") {
  for (const auto& name : kSix) {
    MorphicPipeline p = build_pipeline(build_set(fixture(name)));
    auto occ = p.occurrences(8);
    std::vector<int> w{p.mu.alpha};
    for (std::size_t n = 0; n <= 8 && w.size() < 200000; ++n) {
      std::vector<BigInt> direct(p.mu.morphism.size(), 0);
      for (int x : w) direct[static_cast<std::size_t>(x)] += 1;
      INFO(name << " n=" << n);
      CHECK(direct == occ[n]);
      w = p.mu.morphism.apply(w);
    }
  }
}

TEST_CASE("canonical automaton counts |mu^n(alpha)|") {
  MorphicPipeline p = build_pipeline(build_set(fixture("pansiot")));
  CanonicalAutomaton c = canonical_automaton(p.mu.morphism, p.mu.alpha);
  CountTable k(c.k);
  auto counts = p.counts(30);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(counts.length[n] == k.v(static_cast<long>(n)));

  Morphism loop = Morphism::parse("x -> x\n@ -> @x\n");
  CanonicalAutomaton l = canonical_automaton(loop, 1);
  CountTable lk(l.k);
  for (unsigned long n = 0; n <= 20; ++n) CHECK(lk.v(static_cast<long>(n)) == n + 1);

  NumerationSystem fib = build_system(fibonacci());
  MorphicPipeline nat = build_pipeline(RecognizableSet::natural(fib));
  CanonicalAutomaton fk = canonical_automaton(nat.mu.morphism, nat.mu.alpha);
  CountTable a(fk.k), b(all_final(fib.dfa()));
  for (long n = 0; n <= 30; ++n) CHECK(a.v(n) == b.v(n));
}

TEST_CASE("count and coding checks pass on every fixture") {
  for (const auto& name : fixture_files()) {
    RecognizableSet x = build_set(fixture(name));
    LemmaReport l = verify_lemma_L(x, 40);
    INFO(name << ": " << l.detail);
    CHECK(l.ok);
    std::vector<BigInt> samples;
    for (unsigned long n = 0; n < 200; n += 3) samples.emplace_back(n);
    LemmaReport e = verify_lemma_equiv(x, samples);
    INFO(e.detail);
    CHECK(e.ok);
  }
}

TEST_CASE("morphic characteristic sequence equals the numeration one") {
  for (const auto& name : fixture_files()) {
    RecognizableSet x = build_set(fixture(name));
    MorphicPipeline p = build_pipeline(x);
    MorphicWord w(p.mu.morphism, p.mu.alpha, p.g);
    auto coded = w.coded_prefix(10000);
    auto chi = x.characteristic(9999);
    INFO(name);
    REQUIRE(coded.size() == chi.size());
    bool same = true;
    for (std::size_t i = 0; i < chi.size(); ++i) same = same && coded[i] == chi[i];
    CHECK(same);
  }
}

TEST_CASE("DFAO round trips") {
  NumerationSystem p(pansiot_language());
  Dfa graph = make_dfa("0123", 2, 0, {0, 1}, {{0, '0', 0}, {0, '2', 0}, {0, '1', 1}, {0, '3', 1}, {1, '0', 1}, {1, '1', 1}});
  RecognizableSet x = set_from_dfao(p, Dfao::from_partial(graph, {1, 0}));
  RecognizableSet ref = build_set(fixture("pansiot"));
  CHECK(x.characteristic(3000) == ref.characteristic(3000));

  NumerationSystem b2 = build_system(base_b(2));
  Dfa parity = make_dfa("01", 2, 0, {0, 1}, {{0, '0', 0}, {0, '1', 1}, {1, '0', 1}, {1, '1', 0}});
  RecognizableSet tm = set_from_dfao(b2, Dfao::from_partial(parity, {0, 1}));
  // one member in each pair {2k, 2k+1}
  for (unsigned long n = 0; n <= 100000; n += 1 + n / 50) {
    CHECK(tm.t(n) >= 2 * n);
    CHECK(tm.t(n) <= 2 * n + 1);
  }

  RecognizableSet all = set_from_dfao(b2, Dfao::from_partial(parity, {1, 1}));
  for (unsigned long n = 0; n < 200; ++n) CHECK(all.t(n) == n);

  Dfao back = dfao_from_set(ref);
  RecognizableSet again = set_from_dfao(p, back);
  CHECK(again.characteristic(2000) == ref.characteristic(2000));
}
