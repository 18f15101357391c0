#include "core/regex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "core/error.hpp"

namespace ans {

namespace {

// Thompson construction: each fragment has one entry and one exit state.
struct Nfa {
  struct Node {
    std::vector<int> eps;
    std::vector<std::pair<std::size_t, int>> moves;
  };
  std::vector<Node> nodes;

  int add() {
    nodes.emplace_back();
    return static_cast<int>(nodes.size()) - 1;
  }
};

struct Fragment {
  int start;
  int accept;
};

class Parser {
 public:
  Parser(std::string_view text, const OrderedAlphabet& alphabet, Nfa& nfa)
      : text_(text), alphabet_(alphabet), nfa_(nfa) {}

  Fragment parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty regular expression");
    Fragment f = parse_union();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, unexpected());
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string unexpected() const {
    return std::string("unexpected character '") + text_[pos_] + "'";
  }

  bool at_atom_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c != '|' && c != ')' && c != '*' && c != '?';
  }

  Fragment parse_union() {
    Fragment left = parse_concat();
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      Fragment right = parse_concat();
      int s = nfa_.add();
      int t = nfa_.add();
      nfa_.nodes[static_cast<std::size_t>(s)].eps = {left.start, right.start};
      nfa_.nodes[static_cast<std::size_t>(left.accept)].eps.push_back(t);
      nfa_.nodes[static_cast<std::size_t>(right.accept)].eps.push_back(t);
      left = {s, t};
      skip_space();
    }
    return left;
  }

  Fragment parse_concat() {
    if (!at_atom_start()) {
      if (pos_ >= text_.size()) throw ParseError(pos_, "expected expression before end of input");
      throw ParseError(pos_, "expected expression before '" + std::string(1, text_[pos_]) + "'");
    }
    Fragment f = parse_postfix();
    while (at_atom_start()) {
      Fragment g = parse_postfix();
      nfa_.nodes[static_cast<std::size_t>(f.accept)].eps.push_back(g.start);
      f.accept = g.accept;
    }
    return f;
  }

  Fragment parse_postfix() {
    Fragment f = parse_atom();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c == '*') {
        ++pos_;
        int s = nfa_.add();
        int t = nfa_.add();
        nfa_.nodes[static_cast<std::size_t>(s)].eps = {f.start, t};
        nfa_.nodes[static_cast<std::size_t>(f.accept)].eps.push_back(f.start);
        nfa_.nodes[static_cast<std::size_t>(f.accept)].eps.push_back(t);
        f = {s, t};
      } else if (c == '?') {
        ++pos_;
        int s = nfa_.add();
        int t = nfa_.add();
        nfa_.nodes[static_cast<std::size_t>(s)].eps = {f.start, t};
        nfa_.nodes[static_cast<std::size_t>(f.accept)].eps.push_back(t);
        f = {s, t};
      } else {
        break;
      }
    }
    return f;
  }

  Fragment parse_atom() {
    skip_space();
    const std::size_t at = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') throw ParseError(pos_, "empty group");
      Fragment f = parse_union();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError(at, "unbalanced '('");
      ++pos_;
      return f;
    }
    if (text_.substr(pos_, 3) == "eps") {
      pos_ += 3;
      int s = nfa_.add();
      return {s, s};
    }
    auto letter = alphabet_.index_of(c);
    if (!letter) throw ParseError(at, std::string("letter '") + c + "' is not in the alphabet");
    ++pos_;
    int s = nfa_.add();
    int t = nfa_.add();
    nfa_.nodes[static_cast<std::size_t>(s)].moves.emplace_back(*letter, t);
    return {s, t};
  }

  std::string_view text_;
  const OrderedAlphabet& alphabet_;
  Nfa& nfa_;
  std::size_t pos_ = 0;
};

std::vector<int> closure(const Nfa& nfa, std::vector<int> set) {
  std::vector<bool> seen(nfa.nodes.size(), false);
  std::vector<int> stack = set;
  for (int s : set) seen[static_cast<std::size_t>(s)] = true;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int t : nfa.nodes[static_cast<std::size_t>(s)].eps) {
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        set.push_back(t);
        stack.push_back(t);
      }
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

// Regular expression tree used by state elimination; nullptr is the empty set.
struct Rx;
using RxPtr = std::shared_ptr<const Rx>;
struct Rx {
  enum class Kind { Eps, Letter, Union, Concat, Star } kind;
  char letter = 0;
  std::vector<RxPtr> kids;
  std::string text;  // cached rendering, also the identity for deduplication
};

int precedence(const Rx& r) {
  switch (r.kind) {
    case Rx::Kind::Union: return 0;
    case Rx::Kind::Concat: return 1;
    case Rx::Kind::Star: return 2;
    default: return 3;
  }
}

std::string wrap(const RxPtr& r, int context) {
  return precedence(*r) < context ? "(" + r->text + ")" : r->text;
}

RxPtr make(Rx::Kind kind, std::vector<RxPtr> kids, char letter = 0) {
  auto r = std::make_shared<Rx>();
  r->kind = kind;
  r->letter = letter;
  r->kids = std::move(kids);
  switch (kind) {
    case Rx::Kind::Eps: r->text = "eps"; break;
    case Rx::Kind::Letter: r->text = std::string(1, letter); break;
    case Rx::Kind::Union:
      for (std::size_t i = 0; i < r->kids.size(); ++i) {
        if (i) r->text += " | ";
        r->text += wrap(r->kids[i], 1);
      }
      break;
    case Rx::Kind::Concat:
      for (std::size_t i = 0; i < r->kids.size(); ++i) {
        if (i) r->text += " ";
        r->text += wrap(r->kids[i], 2);
      }
      break;
    case Rx::Kind::Star: r->text = wrap(r->kids[0], 3) + "*"; break;
  }
  return r;
}

RxPtr rx_eps() { return make(Rx::Kind::Eps, {}); }

RxPtr rx_union(const RxPtr& a, const RxPtr& b) {
  if (!a) return b;
  if (!b) return a;
  std::map<std::string, RxPtr> parts;
  for (const RxPtr& x : {a, b}) {
    if (x->kind == Rx::Kind::Union) {
      for (const auto& k : x->kids) parts.emplace(k->text, k);
    } else {
      parts.emplace(x->text, x);
    }
  }
  bool has_star = std::any_of(parts.begin(), parts.end(),
                              [](const auto& kv) { return kv.second->kind == Rx::Kind::Star; });
  if (has_star) parts.erase("eps");
  if (parts.size() == 1) return parts.begin()->second;
  std::vector<RxPtr> kids;
  for (auto& [text, k] : parts) kids.push_back(k);
  return make(Rx::Kind::Union, std::move(kids));
}

RxPtr rx_concat(const RxPtr& a, const RxPtr& b) {
  if (!a || !b) return nullptr;
  if (a->kind == Rx::Kind::Eps) return b;
  if (b->kind == Rx::Kind::Eps) return a;
  std::vector<RxPtr> kids;
  for (const RxPtr& x : {a, b}) {
    if (x->kind == Rx::Kind::Concat) {
      kids.insert(kids.end(), x->kids.begin(), x->kids.end());
    } else {
      kids.push_back(x);
    }
  }
  return make(Rx::Kind::Concat, std::move(kids));
}

RxPtr rx_star(const RxPtr& a) {
  if (!a || a->kind == Rx::Kind::Eps) return rx_eps();
  if (a->kind == Rx::Kind::Star) return a;
  return make(Rx::Kind::Star, {a});
}

}  // namespace

Dfa parse_regex(std::string_view text, const OrderedAlphabet& alphabet) {
  Nfa nfa;
  Fragment f = Parser(text, alphabet, nfa).parse();

  const std::size_t k = alphabet.size();
  std::map<std::vector<int>, State> ids;
  std::vector<std::vector<int>> sets;
  std::vector<std::vector<State>> rows;
  auto intern = [&](std::vector<int> set) {
    auto [it, inserted] = ids.emplace(set, static_cast<State>(sets.size()));
    if (inserted) sets.push_back(std::move(set));
    return it->second;
  };
  intern(closure(nfa, {f.start}));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<State> row(k, kNoState);
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<int> target;
      for (int s : sets[i]) {
        for (auto [letter, t] : nfa.nodes[static_cast<std::size_t>(s)].moves) {
          if (letter == a) target.push_back(t);
        }
      }
      if (target.empty()) continue;
      row[a] = intern(closure(nfa, std::move(target)));
    }
    rows.push_back(std::move(row));
  }
  Dfa d(alphabet, sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    d.set_final(static_cast<State>(i),
                std::binary_search(sets[i].begin(), sets[i].end(), f.accept));
    for (std::size_t a = 0; a < k; ++a) {
      if (rows[i][a] != kNoState) d.set_transition(static_cast<State>(i), a, rows[i][a]);
    }
  }
  return minimize(d);
}

std::string print_regex(const Dfa& input) {
  Dfa d = trim(input);
  if (d.empty()) throw Error(ErrorKind::EmptyLanguage, "the empty language has no regex form");
  const std::size_t n = d.num_states();
  // GNFA states: 0..n-1 from d, n = fresh start, n+1 = fresh accept.
  const std::size_t start = n;
  const std::size_t accept = n + 1;
  std::vector<std::vector<RxPtr>> edge(n + 2, std::vector<RxPtr>(n + 2));
  edge[start][static_cast<std::size_t>(d.initial())] = rx_eps();
  for (std::size_t q = 0; q < n; ++q) {
    if (d.is_final(static_cast<State>(q))) edge[q][accept] = rx_eps();
    for (std::size_t a = 0; a < d.num_letters(); ++a) {
      State t = d.next(static_cast<State>(q), a);
      if (t == kNoState) continue;
      auto& e = edge[q][static_cast<std::size_t>(t)];
      e = rx_union(e, make(Rx::Kind::Letter, {}, d.alphabet().letter(a)));
    }
  }
  std::vector<bool> alive(n + 2, true);
  for (std::size_t round = 0; round < n; ++round) {
    // Eliminate the state with the fewest in*out edges.
    std::size_t best = n;
    std::size_t best_cost = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (!alive[q]) continue;
      std::size_t in = 0, out = 0;
      for (std::size_t p = 0; p < n + 2; ++p) {
        if (!alive[p] || p == q) continue;
        if (edge[p][q]) ++in;
        if (edge[q][p]) ++out;
      }
      if (best == n || in * out < best_cost) {
        best = q;
        best_cost = in * out;
      }
    }
    const std::size_t q = best;
    RxPtr loop = rx_star(edge[q][q]);
    for (std::size_t p = 0; p < n + 2; ++p) {
      if (!alive[p] || p == q || !edge[p][q]) continue;
      for (std::size_t r = 0; r < n + 2; ++r) {
        if (!alive[r] || r == q || !edge[q][r]) continue;
        edge[p][r] = rx_union(edge[p][r], rx_concat(rx_concat(edge[p][q], loop), edge[q][r]));
      }
    }
    alive[q] = false;
  }
  return edge[start][accept]->text;
}

}  // namespace ans
