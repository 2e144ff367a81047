#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "invlim/errors.hpp"

namespace invlim {

/* Arbitrary-precision signed integer. GMP supplies the arithmetic; the
   helpers below pin down the conventions (floor remainders, canonical
   decimal strings) the rest of the library depends on. */
using Integer = mpz_class;

Integer int_from_string(const std::string& text);
std::string int_to_string(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);  // always >= 0
Integer lcm(const Integer& a, const Integer& b);

/* remainder in [0, m); requires m > 0 */
Integer floor_mod(const Integer& a, const Integer& m);

/* nearest-integer quotient, deterministic (half-way cases round down) */
Integer round_quotient(const Integer& a, const Integer& b);

Integer pow_int(const Integer& base, std::uint64_t exp);

/* inverse of a mod m (m >= 1); throws value_error when gcd(a, m) != 1 */
Integer mod_inverse(const Integer& a, const Integer& m);

bool fits_int64(const Integer& n);
std::int64_t to_int64(const Integer& n);

/* Trial division up to 10^6; covers every n <= 10^12 and throws
   value_error beyond that rather than guessing. */
bool is_prime(const Integer& n);

/* n >= 1; (prime, exponent) pairs with primes ascending */
std::vector<std::pair<Integer, std::uint64_t>> factorize(const Integer& n);

/* Exact rational. Canonical form is eager: den > 0, gcd(num, den) = 1,
   zero is 0/1, so equality is plain field equality. */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational reciprocal() const;  // throws value_error on zero

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const;

  Integer floor() const;
  Rational frac() const;  // this - floor(this), in [0, 1)

  /* "a" or "a/b", matching str() output */
  static Rational parse(const std::string& text);
  std::string str() const;

 private:
  Integer num_;
  Integer den_;
  void normalize();
};

/* Dense integer matrix, row-major. Degenerate (0-row / 0-column) shapes
   are legal and behave like the corresponding empty linear maps. */
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /* row[dst] += c * row[src]; col analogue below */
  void add_row(std::size_t dst, std::size_t src, const Integer& c);
  void add_col(std::size_t dst, std::size_t src, const Integer& c);
  void negate_col(std::size_t j);

 private:
  std::size_t rows_, cols_;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/* Bareiss fraction-free elimination; exact for any square input. */
Integer determinant(const IntMatrix& a);

/* exact inverse of a matrix with det = +-1; throws value_error otherwise */
IntMatrix inverse_unimodular(const IntMatrix& u);

/* u * a * v = s with s diagonal, every d_i >= 0 and d_i | d_{i+1},
   |det u| = |det v| = 1. The construction is deterministic: equal inputs
   give identical transforms, and s itself is the classical invariant. */
struct SnfResult {
  IntMatrix u, s, v;
  std::vector<Integer> diagonal() const;
};

SnfResult snf(const IntMatrix& a);

}  // namespace invlim
