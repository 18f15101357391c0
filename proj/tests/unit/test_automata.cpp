#include <random>

#include "doctest.h"

#include "core/counting.hpp"
#include "core/error.hpp"
#include "core/regex.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

using namespace ans;
using namespace ans::testing;

namespace {

std::vector<BigInt> lengths(const Dfa& d, std::size_t n) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(brute_force_count(d, i));
  return out;
}

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("regex: squares language") {
  Dfa d = parse_regex("a*b* | a*c*", OrderedAlphabet("abc"));
  for (const char* w : {"", "a", "aab", "bb", "aacc", "ccc"}) CHECK(d.accepts(w));
  for (const char* w : {"ba", "bc", "abc", "ca"}) CHECK_FALSE(d.accepts(w));
}

TEST_CASE("regex: Fibonacci language counts") {
  Dfa d = parse_regex("eps | 1(0|01)*", OrderedAlphabet("01"));
  CHECK(lengths(d, 6) == big({1, 1, 1, 2, 3, 5, 8}));
}

TEST_CASE("regex: eps alone") {
  Dfa d = parse_regex("eps", OrderedAlphabet("ab"));
  CHECK(d.accepts(""));
  CHECK_FALSE(d.accepts("a"));
  CHECK(d.num_states() == 1);
}

TEST_CASE("regex: optional and whitespace") {
  Dfa d = parse_regex(" a ( b | c )? ", OrderedAlphabet("abc"));
  CHECK(d.accepts("a"));
  CHECK(d.accepts("ac"));
  CHECK_FALSE(d.accepts("abc"));
}

TEST_CASE("regex: syntax errors carry positions") {
  OrderedAlphabet ab("ab");
  auto position = [&](const char* text) -> long {
    try {
      parse_regex(text, ab);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("(a") == 0);  // an unclosed group points at its parenthesis
  CHECK(position("a|") == 2);
  CHECK(position("a)") == 1);
  CHECK(position("*a") == 0);
  CHECK(position("()") >= 0);
  CHECK(position("ax") == 1);
}

TEST_CASE("regex: print then parse round-trips on random automata") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    Dfa d = trim(random_dfa(rng, 5, 2));
    if (d.empty()) continue;
    Dfa back = parse_regex(print_regex(d), d.alphabet());
    CHECK(minimize(back) == minimize(d));
    CHECK(same_language_upto(back, d, 10));
  }
}

TEST_CASE("minimize: blocks of two letters") {
  Dfa d = minimize(parse_regex("(0|1)(0|1)", OrderedAlphabet("01")));
  CHECK(d.num_states() == 3);
}

TEST_CASE("minimize: idempotent and keeps the Pansiot automaton") {
  Dfa p = pansiot_language();
  CHECK(minimize(p).num_states() == 3);
  CHECK(minimize(minimize(p)) == minimize(p));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Dfa d = random_dfa(rng, 6, 3);
    Dfa m = minimize(d);
    CHECK(minimize(m) == m);
    CHECK(same_language_upto(m, d, 6));
  }
}

TEST_CASE("minimize: numbering does not depend on the input numbering") {
  Dfa a = make_dfa("ab", 3, 0, {2}, {{0, 'a', 1}, {1, 'b', 2}, {2, 'a', 1}});
  Dfa b = make_dfa("ab", 3, 2, {0}, {{2, 'a', 1}, {1, 'b', 0}, {0, 'a', 1}});
  CHECK(minimize(a) == minimize(b));
}

TEST_CASE("trim: removes the dead state of 1(0|1)*") {
  Dfa d = make_dfa("01", 3, 0, {1}, {{0, '0', 2}, {0, '1', 1}, {1, '0', 1}, {1, '1', 1}, {2, '0', 2}, {2, '1', 2}});
  Dfa t = trim(d);
  CHECK(t.num_states() == 2);
  CHECK(same_language_upto(t, d, 8));
  CHECK(trim(t) == t);
}

TEST_CASE("trim: unreachable sink and empty language") {
  Dfa d = make_dfa("a", 3, 0, {0}, {{0, 'a', 0}, {2, 'a', 1}});
  CHECK(trim(d).num_states() == 1);
  Dfa none = make_dfa("a", 2, 0, {}, {{0, 'a', 1}});
  CHECK(trim(none).empty());
}

TEST_CASE("complete: adds a sink only when needed") {
  Dfa d = parse_regex("1(0|1)*", OrderedAlphabet("01"));
  Dfa c = complete(d);
  CHECK(c.is_complete());
  CHECK(c.num_states() == d.num_states() + 1);
  CHECK(complete(c).num_states() == c.num_states());
  CHECK(same_language_upto(c, d, 8));
}

TEST_CASE("product: 1*0* with 1(0|1)*") {
  OrderedAlphabet a("01");
  Dfa p = product(parse_regex("1*0*", a), parse_regex("1(0|1)*", a), both_final);
  CHECK(same_language_upto(p, parse_regex("11*0*", a), 8));
  Dfa pansiot = pansiot_language();
  CHECK(same_language_upto(product(pansiot, pansiot, both_final), pansiot, 6));
  CHECK(product(pansiot, pansiot, both_final).origins().size() == 3);
}

TEST_CASE("product: alphabet mismatch is rejected") {
  CHECK_THROWS_AS(product(parse_regex("a*", OrderedAlphabet("a")), parse_regex("b*", OrderedAlphabet("b")), both_final),
                  Error);
}

TEST_CASE("disjoint constructions") {
  Dfa a = parse_regex("a*", OrderedAlphabet("a"));
  Dfa b = parse_regex("b*", OrderedAlphabet("b"));
  CountTable shuffle(disjoint_shuffle(a, b));
  CountTable uni(disjoint_union(a, b));
  CHECK(shuffle.dfa().alphabet().letters() == "ab");
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(shuffle.u(n) == pow_ui(2, n));
    CHECK(uni.u(n) == (n == 0 ? 1 : 2));
  }
  Dfa x = parse_regex("a(ab)*", OrderedAlphabet("ab"));
  Dfa e = parse_regex("eps", OrderedAlphabet("z"));
  Dfa s = disjoint_shuffle(x, e);
  CHECK(s.alphabet().letters() == "abz");
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto& w : all_words(s.alphabet(), n))
      CHECK(s.accepts(w) == x.accepts(w));
  CHECK_THROWS_AS(disjoint_union(a, a), Error);
}

TEST_CASE("constructions against brute force") {
  auto r = check_constructions(2024, 8, 7, 12);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("is_subset and is_infinite") {
  OrderedAlphabet a("01");
  CHECK(is_subset(parse_regex("11*0*", a), parse_regex("eps|1(0|1)*", a)));
  CHECK_FALSE(is_subset(parse_regex("1*0*", a), parse_regex("eps|1(0|1)*", a)));
  CHECK(is_infinite(parse_regex("0*", a)));
  CHECK_FALSE(is_infinite(parse_regex("(0|1)(0|1)", a)));
}

TEST_CASE("Dfao from a partial automaton") {
  Dfa d = make_dfa("01", 1, 0, {0}, {{0, '1', 0}});
  Dfao o = Dfao::from_partial(d, {1});
  CHECK(o.automaton.is_complete());
  CHECK(o.evaluate("111") == 1);
  CHECK(o.evaluate("101") == 0);
}
