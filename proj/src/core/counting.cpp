#include "core/counting.hpp"

#include <sstream>

#include "core/error.hpp"

namespace ans {

BigInt parse_nonnegative(std::string_view text) {
  if (text.empty() || text.size() > 100000) {
    throw Error(ErrorKind::InvalidArgument, "expected a nonnegative integer");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::InvalidArgument,
                  "expected a nonnegative integer, got '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text), 10);
}

CountTable::CountTable(Dfa d) : dfa_(std::move(d)) {}

void CountTable::grow_to(std::size_t r) const {
  const std::size_t n = dfa_.num_states();
  const std::size_t k = dfa_.num_letters();
  while (rows_.size() <= r) {
    auto row = std::make_unique<Row>(n);
    if (rows_.empty()) {
      for (std::size_t q = 0; q < n; ++q) (*row)[q] = dfa_.is_final(static_cast<State>(q)) ? 1 : 0;
    } else {
      const Row& prev = *rows_.back();
      for (std::size_t q = 0; q < n; ++q) {
        BigInt& cell = (*row)[q];
        for (std::size_t a = 0; a < k; ++a) {
          State t = dfa_.next(static_cast<State>(q), a);
          if (t != kNoState) cell += prev[static_cast<std::size_t>(t)];
        }
      }
    }
    auto v = std::make_unique<BigInt>(v_.empty() ? BigInt(0) : *v_.back());
    if (n > 0) *v += (*row)[static_cast<std::size_t>(dfa_.initial())];
    rows_.push_back(std::move(row));
    v_.push_back(std::move(v));
  }
}

const CountTable::Row& CountTable::row(std::size_t r) const {
  std::lock_guard<std::mutex> lock(mutex_);
  grow_to(r);
  return *rows_[r];
}

const BigInt& CountTable::u(std::size_t n) const {
  if (dfa_.empty()) return zero_;
  return N(dfa_.initial(), n);
}

const BigInt& CountTable::v(long n) const {
  if (n < 0) return zero_;
  std::lock_guard<std::mutex> lock(mutex_);
  grow_to(static_cast<std::size_t>(n));
  return *v_[static_cast<std::size_t>(n)];
}

std::vector<BigInt> count_prefix(const Dfa& d, std::size_t n) {
  std::vector<BigInt> out(n + 1, 0);
  if (d.empty()) return out;
  const std::size_t states = d.num_states();
  std::vector<BigInt> cur(states), nxt(states);
  for (std::size_t q = 0; q < states; ++q) cur[q] = d.is_final(static_cast<State>(q)) ? 1 : 0;
  const auto q0 = static_cast<std::size_t>(d.initial());
  out[0] = cur[q0];
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t q = 0; q < states; ++q) {
      nxt[q] = 0;
      for (std::size_t a = 0; a < d.num_letters(); ++a) {
        State t = d.next(static_cast<State>(q), a);
        if (t != kNoState) nxt[q] += cur[static_cast<std::size_t>(t)];
      }
    }
    std::swap(cur, nxt);
    out[r] = cur[q0];
  }
  return out;
}

namespace {

void generate(const Dfa& d, State q, std::size_t left, BigInt& count) {
  if (left == 0) {
    if (d.is_final(q)) ++count;
    return;
  }
  for (std::size_t a = 0; a < d.num_letters(); ++a) {
    State t = d.next(q, a);
    if (t != kNoState) generate(d, t, left - 1, count);
  }
}

}  // namespace

BigInt brute_force_count(const Dfa& d, std::size_t n) {
  BigInt count = 0;
  if (!d.empty()) generate(d, d.initial(), n, count);
  return count;
}

std::string counts_csv(const CountTable& table, std::size_t n_max) {
  std::ostringstream out;
  out << "n,u,v\n";
  for (std::size_t n = 0; n <= n_max; ++n) {
    out << n << ',' << to_string(table.u(n)) << ',' << to_string(table.v(static_cast<long>(n)))
        << '\n';
  }
  return out.str();
}

}  // namespace ans
