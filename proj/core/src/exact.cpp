#include "invlim/exact.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace invlim {

Integer int_from_string(const std::string& text) {
  if (text.empty()) throw value_error("empty integer literal");
  try {
    return Integer(text, 10);
  } catch (const std::invalid_argument&) {
    throw value_error("bad integer literal: '" + text + "'");
  }
}

std::string int_to_string(const Integer& n) { return n.get_str(); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor_mod(const Integer& a, const Integer& m) {
  if (m <= 0) throw value_error("floor_mod needs a positive modulus");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer round_quotient(const Integer& a, const Integer& b) {
  if (b == 0) throw value_error("division by zero");
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  /* floor remainder shares b's sign; shift by one when |r| > |b|/2 */
  Integer twice = 2 * r;
  if ((b > 0 && twice > b) || (b < 0 && twice < b)) q += 1;
  return q;
}

Integer pow_int(const Integer& base, std::uint64_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exp));
  return out;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m < 1) throw value_error("mod_inverse needs modulus >= 1");
  if (m == 1) return 0;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw value_error("mod_inverse: " + int_to_string(a) +
                      " is not invertible mod " + int_to_string(m));
  return inv;
}

bool fits_int64(const Integer& n) {
  static const Integer lo(std::numeric_limits<std::int64_t>::min());
  static const Integer hi(std::numeric_limits<std::int64_t>::max());
  return n >= lo && n <= hi;
}

std::int64_t to_int64(const Integer& n) {
  if (!fits_int64(n)) throw value_error("integer out of int64 range");
  if (mpz_fits_slong_p(n.get_mpz_t())) return mpz_get_si(n.get_mpz_t());
  /* 32-bit long fallback: reconstruct from the decimal string */
  return std::stoll(n.get_str());
}

namespace {
constexpr unsigned long kTrialBound = 1000000ul;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  Integer limit = Integer(kTrialBound) * kTrialBound;
  if (n > limit) throw value_error("primality test beyond trial-division range");
  for (unsigned long d = 2; d <= kTrialBound; ++d) {
    if (Integer(d) * d > n) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) return n == d;
  }
  return true;
}

std::vector<std::pair<Integer, std::uint64_t>> factorize(const Integer& n) {
  if (n < 1) throw value_error("factorize needs n >= 1");
  std::vector<std::pair<Integer, std::uint64_t>> out;
  Integer rest = n;
  for (unsigned long d = 2; d <= kTrialBound && rest > 1; ++d) {
    if (Integer(d) * d > rest) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), d)) continue;
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      rest /= d;
      ++e;
    }
    out.emplace_back(Integer(d), e);
  }
  if (rest > 1) {
    if (rest > Integer(kTrialBound) * kTrialBound)
      throw value_error("factorize: residue exceeds trial-division range");
    out.emplace_back(rest, 1);
  }
  return out;
}

/* ---- Rational ---- */

Rational::Rational(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_ == 0) throw value_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g = invlim::gcd(num_, den_);
  if (g > 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw value_error("reciprocal of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw value_error("rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  int c = cmp(Integer(num_ * o.den_), Integer(o.num_ * den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

Rational Rational::frac() const {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  Rational out;
  out.num_ = r;
  out.den_ = den_;
  return out;  // already reduced: gcd(num mod den, den) = gcd(num, den) = 1
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(int_from_string(text));
  if (text.find('/', slash + 1) != std::string::npos)
    throw value_error("bad rational literal: '" + text + "'");
  return Rational(int_from_string(text.substr(0, slash)),
                  int_from_string(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

/* ---- IntMatrix ---- */

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
  return a;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& c) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw shape_error("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw shape_error("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix w = a;
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && w(r, k) == 0) ++r;
      if (r == n) return 0;
      w.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w(k, k);
  }
  Integer d = w(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw shape_error("inverse of non-square matrix");
  Integer d = determinant(u);
  if (d != 1 && d != -1)
    throw value_error("inverse_unimodular: determinant is " + int_to_string(d));
  const std::size_t n = u.rows();
  /* Gauss-Jordan over exact rationals on [u | I] */
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(u(i, j));
    w[i][n + i] = Rational(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w[p][c].is_zero()) ++p;
    if (p == n) throw value_error("inverse_unimodular: singular input");
    std::swap(w[c], w[p]);
    Rational inv = w[c][c].reciprocal();
    for (auto& x : w[c]) x = x * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || w[i][c].is_zero()) continue;
      Rational f = w[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] = w[i][j] - f * w[c][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!w[i][n + j].is_integer())
        throw value_error("inverse_unimodular: non-integral inverse");
      out(i, j) = w[i][n + j].num();
    }
  return out;
}

/* ---- Smith normal form ---- */

std::vector<Integer> SnfResult::diagonal() const {
  std::vector<Integer> d;
  const std::size_t k = std::min(s.rows(), s.cols());
  d.reserve(k);
  for (std::size_t i = 0; i < k; ++i) d.push_back(s(i, i));
  return d;
}

namespace {

struct SnfWork {
  IntMatrix s, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    s.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    s.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& c) {
    s.add_row(dst, src, c);
    u.add_row(dst, src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& c) {
    s.add_col(dst, src, c);
    v.add_col(dst, src, c);
  }

  /* Moves a minimal-|entry| nonzero element of the trailing block to (t,t).
     Row-major scan breaks ties, which keeps the whole algorithm
     deterministic. Returns false when the block is entirely zero. */
  bool pivot_to(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j) {
        if (s(i, j) == 0) continue;
        Integer a = abs(s(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
        }
      }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }
};

}  // namespace

SnfResult snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfWork w{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  const std::size_t bound = std::min(m, n);

  for (std::size_t t = 0; t < bound; ++t) {
    if (!w.pivot_to(t)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.s(i, t) == 0) continue;
        Integer q = round_quotient(w.s(i, t), w.s(t, t));
        if (q != 0) w.add_row(i, t, -q);
        if (w.s(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.s(t, j) == 0) continue;
        Integer q = round_quotient(w.s(t, j), w.s(t, t));
        if (q != 0) w.add_col(j, t, -q);
        if (w.s(t, j) != 0) dirty = true;
      }
      if (dirty) {
        /* leftover remainders are smaller than the pivot; re-pivot */
        w.pivot_to(t);
        continue;
      }
      /* pivot must divide the whole trailing block for the chain d_i | d_{i+1} */
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (floor_mod(w.s(i, j), abs(w.s(t, t))) != 0) {
            w.add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
  }
  for (std::size_t t = 0; t < bound; ++t)
    if (w.s(t, t) < 0) {
      w.s.negate_col(t);
      w.v.negate_col(t);
    }
  return {w.u, w.s, w.v};
}

}  // namespace invlim
