#include "core/recurrence.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace ans {

namespace {

// Connection polynomial C with C[0] = 1 and sum_i C[i] s(n-i) = 0.
std::vector<Rational> berlekamp_massey(const std::vector<BigInt>& s, std::size_t begin) {
  std::vector<Rational> c{Rational(1)}, b{Rational(1)};
  std::size_t length = 0;
  std::size_t shift = 1;
  Rational last_discrepancy = 1;
  for (std::size_t n = begin; n < s.size(); ++n) {
    Rational delta = 0;
    for (std::size_t i = 0; i <= length && i < c.size(); ++i) delta += c[i] * s[n - i];
    if (delta == 0) {
      ++shift;
      continue;
    }
    Rational factor = delta / last_discrepancy;
    std::vector<Rational> t = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] -= factor * b[i];
    if (2 * length <= n - begin) {
      length = n - begin + 1 - length;
      b = std::move(t);
      last_discrepancy = delta;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(length + 1, Rational(0));
  return c;
}

}  // namespace

std::vector<BigInt> LinRec::characteristic() const {
  std::vector<BigInt> p(order + 1);
  p[order] = lead;
  for (std::size_t i = 1; i <= order; ++i) p[order - i] = -coeffs[i - 1];
  return p;
}

std::vector<BigInt> LinRec::extend(std::vector<BigInt> seq, std::size_t extra) const {
  if (seq.size() < valid_from + order) {
    throw Error(ErrorKind::InvalidArgument, "not enough initial terms to extend the sequence");
  }
  for (std::size_t e = 0; e < extra; ++e) {
    const std::size_t m = seq.size();
    BigInt acc = 0;
    for (std::size_t i = 1; i <= order; ++i) acc += coeffs[i - 1] * seq[m - i];
    if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(ErrorKind::NoRecurrence, "recurrence does not produce an integer term");
    }
    seq.push_back(acc / lead);
  }
  return seq;
}

bool satisfies(const std::vector<BigInt>& seq, const Polynomial& p, std::size_t from) {
  if (p.empty()) return true;
  const std::size_t deg = p.size() - 1;
  for (std::size_t n = from; n + deg < seq.size(); ++n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= deg; ++i) acc += p[i] * seq[n + i];
    if (acc != 0) return false;
  }
  return true;
}

LinRec find_recurrence(const std::vector<BigInt>& seq, std::size_t max_order,
                       std::size_t transient) {
  if (transient > seq.size()) transient = seq.size();
  std::vector<Rational> c = berlekamp_massey(seq, transient);
  std::size_t order = c.size() - 1;
  const std::size_t tail = seq.size() - transient;

  LinRec r;
  if (order == 0) {
    // Tail identically zero.
    r.order = 1;
    r.coeffs = {BigInt(0)};
  } else {
    if (order > max_order) {
      throw Error(ErrorKind::NoRecurrence, "no recurrence of order <= " +
                                               std::to_string(max_order) + " fits the sequence");
    }
    if (2 * order > tail) {
      throw Error(ErrorKind::NoRecurrence, "sequence prefix too short to certify a recurrence");
    }
    // s(n) = -sum_{i>=1} c[i] s(n-i); clear denominators.
    BigInt denominators = 1;
    for (const Rational& x : c) {
      mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), x.get_den_mpz_t());
    }
    r.order = order;
    r.lead = denominators;
    for (std::size_t i = 1; i <= order; ++i) {
      Rational a = -c[i] * Rational(denominators);
      r.coeffs.push_back(a.get_num());
    }
  }
  Polynomial p = r.characteristic();
  std::size_t from = transient;
  while (from > 0 && satisfies(seq, p, from - 1)) --from;
  if (!satisfies(seq, p, from)) {
    throw Error(ErrorKind::NoRecurrence, "fitted recurrence fails on the supplied prefix");
  }
  r.valid_from = from;
  r.initial.assign(seq.begin(),
                   seq.begin() + static_cast<long>(std::min(seq.size(), from + r.order)));
  return r;
}

void poly_normalize(Polynomial& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_normalize(r);
  return r;
}

bool poly_divides(const Polynomial& divisor_in, const Polynomial& dividend_in) {
  Polynomial d = divisor_in, rem = dividend_in;
  poly_normalize(d);
  poly_normalize(rem);
  if (d.empty() || (d.size() == 1 && d[0] == 0)) return false;
  std::vector<Rational> r(rem.begin(), rem.end());
  const std::size_t dd = d.size() - 1;
  const Rational lead(d.back());
  for (std::size_t top = r.size(); top-- > dd;) {
    if (r[top] == 0) continue;
    Rational f = r[top] / lead;
    for (std::size_t i = 0; i <= dd; ++i) r[top - dd + i] -= f * Rational(d[i]);
  }
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace ans
