#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "quartic/error.hpp"

namespace quartic {

/// Arbitrary-precision signed integer. Thin value wrapper over GMP's mpz_t:
/// copyable, movable, immutable-by-convention, exact in every operation.
class BigInt {
 public:
  BigInt() { mpz_init(v_); }
  BigInt(long n) { mpz_init_set_si(v_, n); }  // NOLINT: implicit by design
  /// Parses a decimal string: optional leading '-', then digits only.
  explicit BigInt(std::string_view decimal);

  BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(v_);
    mpz_swap(v_, o.v_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(v_, o.v_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(v_, o.v_);
    return *this;
  }
  ~BigInt() { mpz_clear(v_); }

  BigInt& operator+=(const BigInt& o) {
    mpz_add(v_, v_, o.v_);
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    mpz_sub(v_, v_, o.v_);
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    mpz_mul(v_, v_, o.v_);
    return *this;
  }
  BigInt& operator+=(unsigned long n) {
    mpz_add_ui(v_, v_, n);
    return *this;
  }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator-(const BigInt& a) {
    BigInt r;
    mpz_neg(r.v_, a.v_);
    return r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return mpz_cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    int c = mpz_cmp(a.v_, b.v_);
    return c <=> 0;
  }

  int sign() const noexcept { return mpz_sgn(v_); }
  bool is_zero() const noexcept { return mpz_sgn(v_) == 0; }
  bool is_one() const noexcept { return mpz_cmp_ui(v_, 1) == 0; }

  /// Decimal rendering, no leading zeros, '-' prefix when negative.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
  }

  /// Low-level access for interop inside the library.
  mpz_srcptr raw() const noexcept { return v_; }
  mpz_ptr raw() noexcept { return v_; }

 private:
  mpz_t v_;
};

BigInt abs(const BigInt& a);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
/// a^e by exact integer exponentiation.
BigInt pow(const BigInt& a, unsigned long e);
/// Quotient a/b for exactly divisible operands; anything else is a caller bug.
BigInt divide_exact(const BigInt& a, const BigInt& b);

/// Exact integer square root: r with r*r == n and r >= 0, or empty when n is
/// negative or not a perfect square. Never touches floating point.
std::optional<BigInt> int_sqrt_exact(const BigInt& n);

/// Arbitrary-precision rational in canonical form: reduced, denominator > 0.
/// Structural equality of canonical forms is mathematical equality.
class BigRat {
 public:
  BigRat() { mpq_init(v_); }
  BigRat(long n) : BigRat(BigInt(n)) {}  // NOLINT: implicit by design
  BigRat(const BigInt& n) {              // NOLINT: implicit by design
    mpq_init(v_);
    mpz_set(mpq_numref(v_), n.raw());
  }
  /// num/den, canonicalized. Throws ZeroDenominator when den == 0.
  BigRat(const BigInt& num, const BigInt& den);
  /// Parses "num" or "num/den" with both parts decimal integers.
  explicit BigRat(std::string_view text);

  BigRat(const BigRat& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  BigRat(BigRat&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  BigRat& operator=(const BigRat& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  BigRat& operator=(BigRat&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  ~BigRat() { mpq_clear(v_); }

  BigInt num() const {
    BigInt r;
    mpz_set(r.raw(), mpq_numref(v_));
    return r;
  }
  BigInt den() const {
    BigInt r;
    mpz_set(r.raw(), mpq_denref(v_));
    return r;
  }

  BigRat& operator+=(const BigRat& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  BigRat& operator-=(const BigRat& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  BigRat& operator*=(const BigRat& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  friend BigRat operator-(const BigRat& a) {
    BigRat r;
    mpq_neg(r.v_, a.v_);
    return r;
  }

  friend bool operator==(const BigRat& a, const BigRat& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = mpq_cmp(a.v_, b.v_);
    return c <=> 0;
  }

  int sign() const noexcept { return mpq_sgn(v_); }
  bool is_zero() const noexcept { return mpq_sgn(v_) == 0; }
  bool is_integer() const noexcept {
    return mpz_cmp_ui(mpq_denref(v_), 1) == 0;
  }

  /// "num" when the value is integral, "num/den" otherwise.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const BigRat& v) {
    return os << v.to_string();
  }

  mpq_srcptr raw() const noexcept { return v_; }
  mpq_ptr raw() noexcept { return v_; }

 private:
  mpq_t v_;
};

BigRat abs(const BigRat& a);
BigRat pow(const BigRat& a, unsigned long e);

/// Least positive common multiple of the canonical denominators.
/// Throws EmptyInput for an empty list.
BigInt lcm_of_denominators(std::span<const BigRat> values);

}  // namespace quartic
