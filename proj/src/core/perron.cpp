#include "core/perron.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/recurrence.hpp"

namespace ans {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

Matrix to_big(const CountMatrix& a) {
  Matrix m(a.size(), std::vector<BigInt>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = static_cast<unsigned long>(a[i][j]);
  }
  return m;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix r(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
    }
  }
  return r;
}

Rational power(const Rational& q, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

BigInt ceil_q(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt floor_q(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Algebraic radical(const BigInt& m, unsigned long e) {
  Algebraic a;
  a.kind = Algebraic::Kind::Radical;
  if (m == 1) return a;
  auto [b, k] = primitive_power(m);
  long g = std::gcd(static_cast<long>(k), static_cast<long>(e));
  a.base = b;
  a.num = static_cast<long>(k) / g;
  a.den = static_cast<long>(e) / g;
  return a;
}

// Looks for θ^e = M with M an integer and det(A^e - M I) = 0.
bool detect_radical(const Matrix& a, const Rational& lo, const Rational& hi, Algebraic& out) {
  const std::size_t n = a.size();
  Matrix ae = a;
  for (unsigned long e = 1; e <= std::max<std::size_t>(n, 2); ++e) {
    if (e > 1) ae = multiply(ae, a);
    BigInt m = ceil_q(power(lo, e));
    if (Rational(m) > power(hi, e)) continue;
    Matrix shifted = ae;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= m;
    if (determinant(shifted) == 0) {
      out = radical(m, e);
      return true;
    }
  }
  return false;
}

bool detect_quadratic(const Matrix& a, const Rational& lo, const Rational& hi, Algebraic& out) {
  if (a.size() < 2) return false;
  const std::vector<BigInt> chi = characteristic_polynomial(a);
  const BigInt s_max = floor_q(2 * hi) + 1;
  for (BigInt s = 0; s <= s_max; ++s) {
    // t = θ(s - θ); a tiny enclosure yields at most a couple of candidates.
    Rational f_lo = lo * (Rational(s) - lo), f_hi = hi * (Rational(s) - hi);
    if (f_lo > f_hi) std::swap(f_lo, f_hi);
    Rational mid_f = Rational(s, 2) * Rational(s, 2);
    if (Rational(s, 2) >= lo && Rational(s, 2) <= hi) f_hi = std::max(f_hi, mid_f);
    for (BigInt t = floor_q(f_lo); t <= ceil_q(f_hi); ++t) {
      BigInt disc = s * s - 4 * t;
      if (disc <= 0 || mpz_perfect_square_p(disc.get_mpz_t())) continue;
      // (s + sqrt(disc)) / 2 in [lo, hi]  <=>  (2lo - s)^2 <= disc <= (2hi - s)^2.
      Rational l2 = 2 * lo - Rational(s), h2 = 2 * hi - Rational(s);
      if (h2 < 0) continue;
      if (l2 > 0 && l2 * l2 > Rational(disc)) continue;
      if (h2 * h2 < Rational(disc)) continue;
      Polynomial q{t, -s, BigInt(1)};
      if (poly_divides(q, chi)) {
        out.kind = Algebraic::Kind::Quadratic;
        out.s = s;
        out.disc = disc;
        return true;
      }
    }
  }
  return false;
}

std::string frac(long num, long den) {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

std::pair<BigInt, unsigned long> primitive_power(const BigInt& n) {
  BigInt b = n;
  unsigned long k = 1;
  for (bool changed = true; changed;) {
    changed = false;
    const unsigned long bits = mpz_sizeinbase(b.get_mpz_t(), 2);
    for (unsigned long e = 2; e <= bits; ++e) {
      BigInt r;
      if (mpz_root(r.get_mpz_t(), b.get_mpz_t(), e) != 0) {
        b = r;
        k *= e;
        changed = true;
        break;
      }
    }
  }
  return {b, k};
}

BigInt determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<BigInt> characteristic_polynomial(const Matrix& a) {
  // Faddeev-LeVerrier; every division below is exact.
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = multiply(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    Matrix prod = multiply(a, m);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod[i][i];
    c[n - k] = -trace / static_cast<unsigned long>(k);
  }
  return c;
}

std::string Algebraic::render() const {
  switch (kind) {
    case Kind::None: return {};
    case Kind::Radical: {
      if (num == 0) return "1";
      if (den == 1) return to_string(pow_ui(base, static_cast<unsigned long>(num)));
      if (num == 1 && den == 2) return "sqrt(" + to_string(base) + ")";
      return to_string(base) + "^(" + frac(num, den) + ")";
    }
    case Kind::Quadratic: {
      // Pull square factors out of the discriminant.
      BigInt f = 1, rest = disc;
      for (BigInt p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
          rest /= p * p;
          f *= p;
        }
      }
      BigInt g = gcd(gcd(s, f), BigInt(2));
      BigInt s1 = s / g, f1 = f / g, d1 = 2 / g;
      std::string root = (f1 == 1 ? "" : to_string(f1) + "*") + "sqrt(" + to_string(rest) + ")";
      std::string numer = s1 == 0 ? root : to_string(s1) + "+" + root;
      if (d1 == 1) return numer;
      return (s1 == 0 ? numer : "(" + numer + ")") + "/" + to_string(d1);
    }
  }
  return {};
}

double Algebraic::log_value() const {
  switch (kind) {
    case Kind::Radical:
      return num == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den) * log_big(base);
    case Kind::Quadratic:
      return std::log((s.get_d() + std::sqrt(disc.get_d())) / 2.0);
    case Kind::None: break;
  }
  return std::nan("");
}

Rate Rate::one() {
  Rate r;
  r.exact.kind = Algebraic::Kind::Radical;
  return r;
}

double Rate::log_value() const {
  if (exact.kind != Algebraic::Kind::None) return exact.log_value();
  return std::log(to_double((lo + hi) / 2));
}

double Rate::value() const { return std::exp(log_value()); }

std::string decimal(const Rational& q, int digits, bool round_up) {
  BigInt scale = pow_ui(BigInt(10), static_cast<unsigned long>(digits));
  Rational scaled = q * Rational(scale);
  BigInt n = round_up ? ceil_q(scaled) : floor_q(scaled);
  bool negative = n < 0;
  if (negative) n = -n;
  std::string s = to_string(n);
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (negative ? "-" : "") + s;
}

std::string Rate::render() const {
  if (exact.is_integer()) return exact.render();
  std::string s = "[" + decimal(lo, 9, false) + "," + decimal(hi, 9, true) + "]";
  if (exact.kind != Algebraic::Kind::None) s += "~" + exact.render();
  return s;
}

Rate perron_rate(const CountMatrix& a) {
  const std::size_t n = a.size();
  const Matrix big = to_big(a);
  std::vector<BigInt> v(n, 1), w(n);
  Rate r;
  bool first = true;
  const Rational floor_width(BigInt(1), BigInt("1000000000000"));
  for (int iter = 0; iter < 200000; ++iter) {
    // w = (A + I) v; primitive even when A is periodic.
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = v[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (a[i][j]) w[i] += big[i][j] * v[j];
      }
    }
    Rational mn, mx;
    for (std::size_t i = 0; i < n; ++i) {
      Rational q(w[i], v[i]);
      q.canonicalize();
      if (i == 0 || q < mn) mn = q;
      if (i == 0 || q > mx) mx = q;
    }
    mn -= 1;
    mx -= 1;
    if (first || mn > r.lo) r.lo = mn;
    if (first || mx < r.hi) r.hi = mx;
    first = false;
    if (r.hi - r.lo <= floor_width) break;
    // Keep the iterate small; any positive vector certifies the bounds.
    std::size_t bits = 0;
    for (const BigInt& x : w) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    const std::size_t drop = bits > 192 ? bits - 128 : 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (drop) {
        mpz_fdiv_q_2exp(v[i].get_mpz_t(), w[i].get_mpz_t(), drop);
        if (v[i] == 0) v[i] = 1;
      } else {
        v[i] = w[i];
      }
    }
  }
  if (!detect_radical(big, r.lo, r.hi, r.exact)) detect_quadratic(big, r.lo, r.hi, r.exact);
  if (r.exact.is_integer()) {
    r.lo = r.hi = Rational(pow_ui(r.exact.base, static_cast<unsigned long>(r.exact.num)));
  }
  return r;
}

int compare_rates(const Rate& a, const Rate& b) {
  using K = Algebraic::Kind;
  if (a.exact.kind == K::Radical && b.exact.kind == K::Radical) {
    // a^(den_a den_b) vs b^(den_a den_b), both integers.
    BigInt x = pow_ui(a.exact.base, static_cast<unsigned long>(a.exact.num * b.exact.den));
    BigInt y = pow_ui(b.exact.base, static_cast<unsigned long>(b.exact.num * a.exact.den));
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  if (a.exact.kind == K::Quadratic && b.exact.kind == K::Quadratic && a.exact.s == b.exact.s &&
      a.exact.disc == b.exact.disc) {
    return 0;
  }
  if (a.hi < b.lo) return -1;
  if (a.lo > b.hi) return 1;
  return 0;
}

}  // namespace ans
