#include "mx1/decimal.hpp"

#include <stdexcept>

namespace mx1 {

namespace {

BigInt pow10(long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// Returns e with 10^e <= v < 10^(e+1) for v > 0.
long decimal_exponent(const BigRational& v) {
  const BigInt& num = v.get_num();
  const BigInt& den = v.get_den();
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  // sizeinbase may overshoot by one; settle exactly.
  auto ge_pow = [&](long p) {
    return p >= 0 ? num >= den * pow10(p) : num * pow10(-p) >= den;
  };
  while (!ge_pow(e)) --e;
  while (ge_pow(e + 1)) ++e;
  return e;
}

std::string strip_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string render_decimal(const BigRational& value, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("precision must be >= 1");
  if (sgn(value) < 0) throw std::invalid_argument("render_decimal expects a nonnegative value");
  if (sgn(value) == 0) return "0";

  long e = decimal_exponent(value);
  const long shift = static_cast<long>(digits) - 1 - e;
  BigInt num = value.get_num();
  BigInt den = value.get_den();
  if (shift >= 0) num *= pow10(shift); else den *= pow10(-shift);

  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int cmp_half = cmp(BigInt(2 * r), den);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  if (q == pow10(digits)) {  // 9.99.. rounded up to 10.0..
    q /= 10;
    ++e;
  }

  std::string mant = to_string(q);  // exactly `digits` characters
  if (e >= -4) {
    std::string out;
    if (e >= 0) {
      const auto int_len = static_cast<std::size_t>(e + 1);
      if (mant.size() <= int_len) {
        out = mant + std::string(int_len - mant.size(), '0');
      } else {
        out = mant.substr(0, int_len) + "." + mant.substr(int_len);
      }
    } else {
      out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mant;
    }
    return strip_zeros(out);
  }
  std::string sci = mant.substr(0, 1);
  if (mant.size() > 1) sci = strip_zeros(sci + "." + mant.substr(1));
  return sci + "e" + (e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
}

}  // namespace mx1
