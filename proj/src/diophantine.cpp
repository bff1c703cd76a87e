#include "mx1/diophantine.hpp"

#include <sstream>

namespace mx1 {

const char* to_string(WordClass c) noexcept {
  return c == WordClass::Ascending ? "ascending" : "descending";
}

namespace {

BigInt pow2(std::size_t k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

void require_nonempty(const DyadicWord& word) {
  if (word.empty()) throw std::invalid_argument("word length must be >= 1");
}

}  // namespace

DyadicWord residue_to_word(const BigInt& residue, const MapParams& params, std::size_t k) {
  BigInt start = residue;
  if (sgn(start) == 0) start = pow2(k);
  return dyadic_word(start, params, k);
}

BigInt word_to_residue(const DyadicWord& word, const MapParams& params) {
  require_nonempty(word);
  // x: residue fixed so far (mod 2^j); y: its j-th iterate; scale: m^(ones so far).
  // Moving x by 2^j moves y by scale, which is odd, so it flips y's parity.
  BigInt x = 0, y = 0, scale = 1, period = 1;
  for (auto bit : word.bits()) {
    if (static_cast<std::uint8_t>(mpz_odd_p(y.get_mpz_t()) ? 1 : 0) != bit) {
      x += period;
      y += scale;
    }
    if (bit) {
      y = (y * params.m() + 1) / 2;
      scale *= params.m();
    } else {
      y /= 2;
    }
    period *= 2;
  }
  return x;
}

SolutionFamily solve_word(const DyadicWord& word, const MapParams& params) {
  require_nonempty(word);
  SolutionFamily fam;
  fam.coeffs = affine_coefficients(word, params);
  fam.x0 = word_to_residue(word, params);
  BigInt num = fam.coeffs.a * fam.x0 + fam.coeffs.c;
  if (!mpz_divisible_p(num.get_mpz_t(), fam.coeffs.b.get_mpz_t())) {
    throw InvariantViolation("a*x0 + c not divisible by b for word " + word.to_string());
  }
  mpz_divexact(fam.y0.get_mpz_t(), num.get_mpz_t(), fam.coeffs.b.get_mpz_t());
  if (fam.coeffs.c != fam.coeffs.b * fam.y0 - fam.coeffs.a * fam.x0) {
    throw InvariantViolation("c != b*y0 - a*x0 for word " + word.to_string());
  }
  return fam;
}

std::string SolutionFamily::describe() const {
  const BigInt q0 = first_positive_q();
  const BigInt xs = start_at(q0);
  const BigInt ys = end_at(q0);
  std::ostringstream os;
  os << to_string(coeffs.c) << " = " << to_string(coeffs.b) << "y - ";
  if (coeffs.a != 1) os << to_string(coeffs.a);
  os << "x; x = " << to_string(xs) << " + " << to_string(coeffs.b) << "q, y = "
     << to_string(ys) << " + " << to_string(coeffs.a) << "q";
  return os.str();
}

WordClass classify_word(const DyadicWord& word, const MapParams& params) {
  require_nonempty(word);
  BigInt a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), params.m(), word.ones());
  mpz_ui_pow_ui(b.get_mpz_t(), 2, word.size());
  return a > b ? WordClass::Ascending : WordClass::Descending;
}

std::optional<BigInt> descending_dominance_q(const SolutionFamily& family) {
  const auto& [a, b, c] = family.coeffs;
  if (a > b) return std::nullopt;
  // x - y = (x0 - y0) + (b - a) q > 0  <=>  q > (y0 - x0) / (b - a)
  const BigInt gap = family.y0 - family.x0;
  if (sgn(gap) < 0) return BigInt(0);
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), gap.get_mpz_t(), BigInt(b - a).get_mpz_t());
  return q + 1;
}

PeriodicityVerdict periodicity_check(const BigInt& n, std::size_t k, std::size_t qmax,
                                     const MapParams& params) {
  if (k == 0) throw std::invalid_argument("periodicity check needs k >= 1");
  PeriodicityVerdict v;
  const TrajectoryRecord base = trajectory(n, params, k);
  const BigInt period = pow2(k);
  BigInt advance;
  mpz_ui_pow_ui(advance.get_mpz_t(), params.m(), base.word.ones());
  for (std::size_t q = 1; q <= qmax; ++q) {
    const BigInt start = n + period * q;
    const TrajectoryRecord rec = trajectory(start, params, k);
    ++v.checked;
    if (rec.word != base.word) {
      v.pass = false;
      v.counterexample = start;
      v.reason = "word " + rec.word.to_string() + " != " + base.word.to_string();
      return v;
    }
    if (rec.iterates.back() != base.iterates.back() + advance * q) {
      v.pass = false;
      v.counterexample = start;
      v.reason = "end value " + to_string(rec.iterates.back()) + " does not advance by a*q";
      return v;
    }
  }
  return v;
}

}  // namespace mx1
