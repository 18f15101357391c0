#include "core/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "core/error.hpp"

namespace ans {

OrderedAlphabet::OrderedAlphabet() { index_.fill(-1); }

OrderedAlphabet::OrderedAlphabet(std::string_view letters) : OrderedAlphabet() {
  for (char c : letters) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u >= 0x7f) {
      throw Error(ErrorKind::InvalidArgument,
                  "alphabet letters must be visible ASCII characters");
    }
    if (index_[u] >= 0) {
      throw Error(ErrorKind::InvalidArgument, std::string("duplicate letter '") + c + "'");
    }
    index_[u] = static_cast<std::int16_t>(letters_.size());
    letters_.push_back(c);
  }
}

std::optional<std::size_t> OrderedAlphabet::index_of(char c) const noexcept {
  auto i = index_[static_cast<unsigned char>(c)];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

OrderedAlphabet OrderedAlphabet::disjoint_concat(const OrderedAlphabet& other) const {
  for (char c : other.letters_) {
    if (contains(c)) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("alphabets intersect on letter '") + c + "'");
    }
  }
  return OrderedAlphabet(letters_ + other.letters_);
}

Dfa::Dfa(OrderedAlphabet alphabet, std::size_t num_states, State initial)
    : alphabet_(std::move(alphabet)),
      table_(num_states * alphabet_.size(), kNoState),
      finals_(num_states, 0),
      initial_(initial) {
  if (num_states == 0) {
    initial_ = kNoState;
  } else if (initial < 0 || static_cast<std::size_t>(initial) >= num_states) {
    throw Error(ErrorKind::InvalidArgument, "initial state out of range");
  }
}

void Dfa::set_transition(State from, std::size_t letter, State to) {
  if (from < 0 || static_cast<std::size_t>(from) >= num_states() || letter >= num_letters() ||
      to < kNoState || (to != kNoState && static_cast<std::size_t>(to) >= num_states())) {
    throw Error(ErrorKind::InvalidArgument, "transition out of range");
  }
  table_[index(from, letter)] = to;
}

void Dfa::set_final(State s, bool final) {
  if (s < 0 || static_cast<std::size_t>(s) >= num_states()) {
    throw Error(ErrorKind::InvalidArgument, "final state out of range");
  }
  finals_[static_cast<std::size_t>(s)] = final ? 1 : 0;
}

void Dfa::set_initial(State s) {
  if (s < 0 || static_cast<std::size_t>(s) >= num_states()) {
    throw Error(ErrorKind::InvalidArgument, "initial state out of range");
  }
  initial_ = s;
}

std::optional<State> Dfa::run(std::string_view word) const {
  if (empty()) return std::nullopt;
  State q = initial_;
  for (char c : word) {
    auto a = alphabet_.index_of(c);
    if (!a) return std::nullopt;
    q = next(q, *a);
    if (q == kNoState) return std::nullopt;
  }
  return q;
}

bool Dfa::accepts(std::string_view word) const {
  auto q = run(word);
  return q && is_final(*q);
}

bool Dfa::is_complete() const noexcept {
  return std::none_of(table_.begin(), table_.end(), [](State s) { return s == kNoState; });
}

bool Dfa::operator==(const Dfa& other) const noexcept {
  return alphabet_ == other.alphabet_ && initial_ == other.initial_ && table_ == other.table_ &&
         finals_ == other.finals_;
}

Dfao Dfao::from_partial(const Dfa& d, std::vector<std::uint8_t> output) {
  if (output.size() != d.num_states()) {
    throw Error(ErrorKind::InvalidArgument, "DFAO output map must cover every state");
  }
  Dfao r;
  r.automaton = complete(d);
  r.output = std::move(output);
  r.output.resize(r.automaton.num_states(), 0);
  return r;
}

std::uint8_t Dfao::evaluate(std::string_view word) const {
  auto q = automaton.run(word);
  if (!q) throw Error(ErrorKind::InvalidArgument, "word is not over the DFAO alphabet");
  return output[static_cast<std::size_t>(*q)];
}

namespace {

std::vector<bool> accessible(const Dfa& d) {
  std::vector<bool> seen(d.num_states(), false);
  if (d.empty()) return seen;
  std::vector<State> stack{d.initial()};
  seen[static_cast<std::size_t>(d.initial())] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < d.num_letters(); ++a) {
      State r = d.next(q, a);
      if (r != kNoState && !seen[static_cast<std::size_t>(r)]) {
        seen[static_cast<std::size_t>(r)] = true;
        stack.push_back(r);
      }
    }
  }
  return seen;
}

std::vector<bool> coaccessible(const Dfa& d) {
  std::size_t n = d.num_states();
  std::vector<std::vector<State>> reverse(n);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < d.num_letters(); ++a) {
      State r = d.next(static_cast<State>(q), a);
      if (r != kNoState) reverse[static_cast<std::size_t>(r)].push_back(static_cast<State>(q));
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<State> stack;
  for (std::size_t q = 0; q < n; ++q) {
    if (d.is_final(static_cast<State>(q))) {
      seen[q] = true;
      stack.push_back(static_cast<State>(q));
    }
  }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : reverse[static_cast<std::size_t>(q)]) {
      if (!seen[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

// Restriction of `d` to the states flagged in `keep`, preserving order.
Dfa restrict_to(const Dfa& d, const std::vector<bool>& keep) {
  std::vector<State> renum(d.num_states(), kNoState);
  State next_id = 0;
  for (std::size_t q = 0; q < d.num_states(); ++q) {
    if (keep[q]) renum[q] = next_id++;
  }
  if (d.empty() || renum[static_cast<std::size_t>(d.initial())] == kNoState) {
    return Dfa(d.alphabet(), 0, kNoState);
  }
  Dfa r(d.alphabet(), static_cast<std::size_t>(next_id), renum[static_cast<std::size_t>(d.initial())]);
  std::vector<std::pair<State, State>> origins;
  for (std::size_t q = 0; q < d.num_states(); ++q) {
    if (!keep[q]) continue;
    State nq = renum[q];
    r.set_final(nq, d.is_final(static_cast<State>(q)));
    for (std::size_t a = 0; a < d.num_letters(); ++a) {
      State t = d.next(static_cast<State>(q), a);
      if (t != kNoState && renum[static_cast<std::size_t>(t)] != kNoState) {
        r.set_transition(nq, a, renum[static_cast<std::size_t>(t)]);
      }
    }
    if (!d.origins().empty()) origins.push_back(d.origins()[q]);
  }
  r.set_origins(std::move(origins));
  return r;
}

}  // namespace

Dfa trim(const Dfa& d) {
  auto acc = accessible(d);
  auto coacc = coaccessible(d);
  std::vector<bool> keep(d.num_states());
  for (std::size_t q = 0; q < d.num_states(); ++q) keep[q] = acc[q] && coacc[q];
  return restrict_to(d, keep);
}

Dfa complete(const Dfa& d) {
  if (d.empty()) {
    Dfa r(d.alphabet(), 1, 0);
    for (std::size_t a = 0; a < d.num_letters(); ++a) r.set_transition(0, a, 0);
    return r;
  }
  if (d.is_complete()) return d;
  std::size_t n = d.num_states();
  State sink = static_cast<State>(n);
  Dfa r(d.alphabet(), n + 1, d.initial());
  for (std::size_t q = 0; q < n; ++q) {
    r.set_final(static_cast<State>(q), d.is_final(static_cast<State>(q)));
    for (std::size_t a = 0; a < d.num_letters(); ++a) {
      State t = d.next(static_cast<State>(q), a);
      r.set_transition(static_cast<State>(q), a, t == kNoState ? sink : t);
    }
  }
  for (std::size_t a = 0; a < d.num_letters(); ++a) r.set_transition(sink, a, sink);
  return r;
}

Dfa minimize(const Dfa& input) {
  Dfa d = trim(input);
  if (d.empty()) return d;
  const std::size_t n = d.num_states();
  const std::size_t k = d.num_letters();
  const std::size_t sink = n;  // implicit rejecting sink

  // Moore refinement on the completed automaton.
  std::vector<std::size_t> block(n + 1);
  for (std::size_t q = 0; q < n; ++q) block[q] = d.is_final(static_cast<State>(q)) ? 1 : 0;
  block[sink] = 0;
  std::size_t num_blocks = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next_block(n + 1);
    std::vector<std::size_t> sig(k + 1);
    for (std::size_t q = 0; q <= n; ++q) {
      sig[0] = block[q];
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t t = sink;
        if (q != sink) {
          State r = d.next(static_cast<State>(q), a);
          if (r != kNoState) t = static_cast<std::size_t>(r);
        }
        sig[a + 1] = block[t];
      }
      auto [it, inserted] = ids.emplace(sig, ids.size());
      next_block[q] = it->second;
    }
    block.swap(next_block);
    if (ids.size() == num_blocks) break;
    num_blocks = ids.size();
  }

  // Canonical breadth-first numbering of the live blocks.
  const std::size_t dead = block[sink];
  std::vector<State> representative(num_blocks, kNoState);
  for (std::size_t q = 0; q < n; ++q) {
    if (representative[block[q]] == kNoState) representative[block[q]] = static_cast<State>(q);
  }
  std::vector<State> order_of(num_blocks, kNoState);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue{block[static_cast<std::size_t>(d.initial())]};
  order_of[queue.front()] = 0;
  order.push_back(queue.front());
  while (!queue.empty()) {
    std::size_t b = queue.front();
    queue.pop_front();
    State rep = representative[b];
    for (std::size_t a = 0; a < k; ++a) {
      State t = d.next(rep, a);
      if (t == kNoState) continue;
      std::size_t tb = block[static_cast<std::size_t>(t)];
      if (tb == dead || order_of[tb] != kNoState) continue;
      order_of[tb] = static_cast<State>(order.size());
      order.push_back(tb);
      queue.push_back(tb);
    }
  }
  Dfa r(d.alphabet(), order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    State rep = representative[order[i]];
    r.set_final(static_cast<State>(i), d.is_final(rep));
    for (std::size_t a = 0; a < k; ++a) {
      State t = d.next(rep, a);
      if (t == kNoState) continue;
      std::size_t tb = block[static_cast<std::size_t>(t)];
      if (tb == dead) continue;
      r.set_transition(static_cast<State>(i), a, order_of[tb]);
    }
  }
  return r;
}

Dfa product(const Dfa& a, const Dfa& b, const PairRule& final_rule) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(ErrorKind::InvalidArgument, "product requires identical ordered alphabets");
  }
  if (a.empty() || b.empty()) return Dfa(a.alphabet(), 0, kNoState);
  const std::size_t k = a.num_letters();
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  std::deque<State> queue;
  auto intern = [&](std::pair<State, State> p) {
    auto [it, inserted] = ids.emplace(p, static_cast<State>(pairs.size()));
    if (inserted) {
      pairs.push_back(p);
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern({a.initial(), b.initial()});
  std::vector<std::vector<State>> rows;
  while (!queue.empty()) {
    State id = queue.front();
    queue.pop_front();
    auto [p, q] = pairs[static_cast<std::size_t>(id)];
    std::vector<State> row(k, kNoState);
    for (std::size_t x = 0; x < k; ++x) {
      State tp = a.next(p, x);
      State tq = b.next(q, x);
      if (tp != kNoState && tq != kNoState) row[x] = intern({tp, tq});
    }
    if (rows.size() <= static_cast<std::size_t>(id)) rows.resize(static_cast<std::size_t>(id) + 1);
    rows[static_cast<std::size_t>(id)] = std::move(row);
  }
  Dfa r(a.alphabet(), pairs.size(), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    r.set_final(static_cast<State>(i), final_rule(a.is_final(p), b.is_final(q)));
    for (std::size_t x = 0; x < k; ++x) {
      if (rows[i][x] != kNoState) r.set_transition(static_cast<State>(i), x, rows[i][x]);
    }
  }
  r.set_origins(std::move(pairs));
  return r;
}

Dfa disjoint_union(const Dfa& a, const Dfa& b) {
  OrderedAlphabet sigma = a.alphabet().disjoint_concat(b.alphabet());
  const std::size_t ka = a.num_letters();
  const std::size_t na = a.num_states();
  const std::size_t nb = b.num_states();
  // State 0 is the fresh initial state; a's states follow, then b's.
  Dfa r(sigma, 1 + na + nb, 0);
  bool eps = (!a.empty() && a.is_final(a.initial())) || (!b.empty() && b.is_final(b.initial()));
  r.set_final(0, eps);
  auto shift_a = [&](State q) { return static_cast<State>(1 + q); };
  auto shift_b = [&](State q) { return static_cast<State>(1 + na + static_cast<std::size_t>(q)); };
  for (std::size_t q = 0; q < na; ++q) {
    r.set_final(shift_a(static_cast<State>(q)), a.is_final(static_cast<State>(q)));
    for (std::size_t x = 0; x < ka; ++x) {
      State t = a.next(static_cast<State>(q), x);
      if (t != kNoState) r.set_transition(shift_a(static_cast<State>(q)), x, shift_a(t));
    }
  }
  for (std::size_t q = 0; q < nb; ++q) {
    r.set_final(shift_b(static_cast<State>(q)), b.is_final(static_cast<State>(q)));
    for (std::size_t x = 0; x < b.num_letters(); ++x) {
      State t = b.next(static_cast<State>(q), x);
      if (t != kNoState) r.set_transition(shift_b(static_cast<State>(q)), ka + x, shift_b(t));
    }
  }
  if (!a.empty()) {
    for (std::size_t x = 0; x < ka; ++x) {
      State t = a.next(a.initial(), x);
      if (t != kNoState) r.set_transition(0, x, shift_a(t));
    }
  }
  if (!b.empty()) {
    for (std::size_t x = 0; x < b.num_letters(); ++x) {
      State t = b.next(b.initial(), x);
      if (t != kNoState) r.set_transition(0, ka + x, shift_b(t));
    }
  }
  return minimize(r);
}

Dfa disjoint_shuffle(const Dfa& a, const Dfa& b) {
  OrderedAlphabet sigma = a.alphabet().disjoint_concat(b.alphabet());
  if (a.empty() || b.empty()) return Dfa(sigma, 0, kNoState);
  const std::size_t ka = a.num_letters();
  const std::size_t kb = b.num_letters();
  const std::size_t nb = b.num_states();
  const std::size_t n = a.num_states() * nb;
  auto id = [&](State p, State q) {
    return static_cast<State>(static_cast<std::size_t>(p) * nb + static_cast<std::size_t>(q));
  };
  Dfa r(sigma, n, id(a.initial(), b.initial()));
  for (std::size_t p = 0; p < a.num_states(); ++p) {
    for (std::size_t q = 0; q < nb; ++q) {
      State s = id(static_cast<State>(p), static_cast<State>(q));
      r.set_final(s, a.is_final(static_cast<State>(p)) && b.is_final(static_cast<State>(q)));
      for (std::size_t x = 0; x < ka; ++x) {
        State t = a.next(static_cast<State>(p), x);
        if (t != kNoState) r.set_transition(s, x, id(t, static_cast<State>(q)));
      }
      for (std::size_t x = 0; x < kb; ++x) {
        State t = b.next(static_cast<State>(q), x);
        if (t != kNoState) r.set_transition(s, ka + x, id(static_cast<State>(p), t));
      }
    }
  }
  return minimize(r);
}

bool is_subset(const Dfa& a, const Dfa& b) {
  if (a.empty()) return true;
  Dfa diff = product(a, complete(b), [](bool x, bool y) { return x && !y; });
  return trim(diff).empty();
}

bool is_infinite(const Dfa& d) {
  Dfa t = trim(d);
  // A trim automaton has an infinite language iff its graph has a cycle.
  const std::size_t n = t.num_states();
  std::vector<int> color(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<State, std::size_t>> stack{{static_cast<State>(root), 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [q, a] = stack.back();
      if (a == t.num_letters()) {
        color[static_cast<std::size_t>(q)] = 2;
        stack.pop_back();
        continue;
      }
      State r = t.next(q, a++);
      if (r == kNoState) continue;
      if (color[static_cast<std::size_t>(r)] == 1) return true;
      if (color[static_cast<std::size_t>(r)] == 0) {
        color[static_cast<std::size_t>(r)] = 1;
        stack.emplace_back(r, 0);
      }
    }
  }
  return false;
}

Dfa all_final(const Dfa& d) {
  Dfa r = d;
  for (std::size_t q = 0; q < r.num_states(); ++q) r.set_final(static_cast<State>(q), true);
  return r;
}

Dfa widen_alphabet(const Dfa& d, const OrderedAlphabet& alphabet) {
  if (d.empty()) return Dfa(alphabet, 0, kNoState);
  std::vector<std::size_t> map(d.num_letters());
  for (std::size_t a = 0; a < d.num_letters(); ++a) {
    auto i = alphabet.index_of(d.alphabet().letter(a));
    if (!i) throw Error(ErrorKind::InvalidArgument, "target alphabet is missing a letter");
    map[a] = *i;
  }
  Dfa r(alphabet, d.num_states(), d.initial());
  for (std::size_t q = 0; q < d.num_states(); ++q) {
    r.set_final(static_cast<State>(q), d.is_final(static_cast<State>(q)));
    for (std::size_t a = 0; a < d.num_letters(); ++a) {
      State t = d.next(static_cast<State>(q), a);
      if (t != kNoState) r.set_transition(static_cast<State>(q), map[a], t);
    }
  }
  return r;
}

}  // namespace ans
