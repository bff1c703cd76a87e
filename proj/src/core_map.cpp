#include "mx1/core_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mx1 {

std::string to_string(const BigInt& v) { return v.get_str(10); }

MapParams MapParams::make(unsigned m) {
  if (m != 3 && m != 5) {
    throw std::invalid_argument("unsupported multiplier m=" + std::to_string(m) +
                                " (expected 3 or 5)");
  }
  return MapParams(m);
}

DyadicWord::DyadicWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("dyadic word bits must be 0 or 1");
  }
}

DyadicWord DyadicWord::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("invalid bit '" + std::string(1, ch) + "' in word");
    }
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return DyadicWord(std::move(bits));
}

std::size_t DyadicWord::ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

void DyadicWord::push_back(std::uint8_t bit) {
  if (bit > 1) throw std::invalid_argument("dyadic word bits must be 0 or 1");
  bits_.push_back(bit);
}

std::string DyadicWord::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

namespace {

void require_positive(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("mx+1 map is defined here for n >= 1 only");
}

// In-place step; returns the parity consumed.
std::uint8_t advance(BigInt& x, unsigned m) {
  if (mpz_odd_p(x.get_mpz_t())) {
    mpz_mul_ui(x.get_mpz_t(), x.get_mpz_t(), m);
    mpz_add_ui(x.get_mpz_t(), x.get_mpz_t(), 1);
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
    return 1;
  }
  mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
  return 0;
}

}  // namespace

BigInt step(const BigInt& n, const MapParams& params) {
  require_positive(n);
  BigInt x = n;
  advance(x, params.m());
  return x;
}

TrajectoryRecord trajectory(const BigInt& n, const MapParams& params, std::size_t k) {
  require_positive(n);
  TrajectoryRecord rec;
  rec.start = n;
  rec.iterates.reserve(k + 1);
  rec.iterates.push_back(n);
  BigInt x = n;
  for (std::size_t j = 0; j < k; ++j) {
    rec.word.push_back(advance(x, params.m()));
    rec.iterates.push_back(x);
  }
  return rec;
}

DyadicWord dyadic_word(const BigInt& n, const MapParams& params, std::size_t k) {
  require_positive(n);
  DyadicWord w;
  BigInt x = n;
  for (std::size_t j = 0; j < k; ++j) w.push_back(advance(x, params.m()));
  return w;
}

std::optional<std::size_t> stopping_time(const BigInt& n, const MapParams& params,
                                         std::size_t budget) {
  if (n < 2) throw std::invalid_argument("stopping time is defined for n >= 2");
  if (budget == 0) throw std::invalid_argument("stopping time budget must be >= 1");
  BigInt x = n;
  for (std::size_t j = 1; j <= budget; ++j) {
    advance(x, params.m());
    if (x < n) return j;
  }
  return std::nullopt;
}

AffineCoefficients affine_coefficients(const DyadicWord& word, const MapParams& params) {
  // Invariant after j symbols: iterate = (A*n + C) / denom, denom = 2^j.
  BigInt a = 1, c = 0, denom = 1;
  for (auto bit : word.bits()) {
    if (bit) {
      a *= params.m();
      c = c * params.m() + denom;
    }
    denom *= 2;
  }
  return {std::move(a), std::move(denom), std::move(c)};
}

std::optional<std::vector<BigInt>> detect_cycle(const BigInt& n, const MapParams& params,
                                                std::size_t budget) {
  require_positive(n);
  if (budget == 0) throw std::invalid_argument("cycle budget must be >= 1");
  std::map<BigInt, std::size_t> seen;
  std::vector<BigInt> path;
  BigInt x = n;
  for (std::size_t j = 0; j <= budget; ++j) {
    auto [it, inserted] = seen.emplace(x, path.size());
    if (!inserted) {
      std::vector<BigInt> cycle(path.begin() + static_cast<std::ptrdiff_t>(it->second),
                                path.end());
      auto smallest = std::min_element(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), smallest, cycle.end());
      return cycle;
    }
    path.push_back(x);
    if (j < budget) advance(x, params.m());
  }
  return std::nullopt;
}

}  // namespace mx1
