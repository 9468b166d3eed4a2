#include "quartic/exact.hpp"

#include <cctype>

namespace quartic {

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string mpz_to_string(mpz_srcptr v) {
  // +2: sign and terminator.
  std::string buf(mpz_sizeinbase(v, 10) + 2, '\0');
  mpz_get_str(buf.data(), 10, v);
  buf.resize(buf.find('\0'));
  return buf;
}

}  // namespace

BigInt::BigInt(std::string_view decimal) {
  if (!is_decimal(decimal)) {
    raise(errc::invalid_input,
          "not a decimal integer: \"" + std::string(decimal) + "\"");
  }
  mpz_init_set_str(v_, std::string(decimal).c_str(), 10);
}

std::string BigInt::to_string() const { return mpz_to_string(v_); }

BigInt abs(const BigInt& a) {
  BigInt r;
  mpz_abs(r.raw(), a.raw());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.raw(), a.raw(), b.raw());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.raw(), a.raw(), b.raw());
  return r;
}

BigInt pow(const BigInt& a, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.raw(), a.raw(), e);
  return r;
}

BigInt divide_exact(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_divexact(r.raw(), a.raw(), b.raw());
  return r;
}

std::optional<BigInt> int_sqrt_exact(const BigInt& n) {
  if (n.sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.raw())) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.raw(), n.raw());
  return r;
}

BigRat::BigRat(const BigInt& num, const BigInt& den) {
  mpq_init(v_);
  if (den.is_zero()) {
    mpq_clear(v_);
    raise(errc::zero_denominator, num.to_string() + "/0");
  }
  mpz_set(mpq_numref(v_), num.raw());
  mpz_set(mpq_denref(v_), den.raw());
  mpq_canonicalize(v_);
}

BigRat::BigRat(std::string_view text) {
  mpq_init(v_);
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      BigInt n(text);
      mpz_set(mpq_numref(v_), n.raw());
    } else {
      BigInt n(text.substr(0, slash));
      BigInt d(text.substr(slash + 1));
      if (d.is_zero()) raise(errc::zero_denominator, std::string(text));
      mpz_set(mpq_numref(v_), n.raw());
      mpz_set(mpq_denref(v_), d.raw());
      mpq_canonicalize(v_);
    }
  } catch (...) {
    mpq_clear(v_);
    throw;
  }
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) raise(errc::zero_denominator, "division by zero");
  mpq_div(v_, v_, o.v_);
  return *this;
}

std::string BigRat::to_string() const {
  std::string s = mpz_to_string(mpq_numref(v_));
  if (!is_integer()) {
    s += '/';
    s += mpz_to_string(mpq_denref(v_));
  }
  return s;
}

BigRat abs(const BigRat& a) {
  BigRat r;
  mpq_abs(r.raw(), a.raw());
  return r;
}

BigRat pow(const BigRat& a, unsigned long e) {
  BigRat r;
  mpz_pow_ui(mpq_numref(r.raw()), mpq_numref(a.raw()), e);
  mpz_pow_ui(mpq_denref(r.raw()), mpq_denref(a.raw()), e);
  return r;  // powers of a canonical form stay canonical
}

BigInt lcm_of_denominators(std::span<const BigRat> values) {
  if (values.empty()) raise(errc::empty_input, "lcm of no denominators");
  BigInt acc(1);
  for (const BigRat& v : values) acc = lcm(acc, v.den());
  return acc;
}

}  // namespace quartic
