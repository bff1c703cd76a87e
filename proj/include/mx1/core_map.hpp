#pragma once

// The mx+1 map T_m(n) = n/2 (n even), (m*n+1)/2 (n odd) on positive integers,
// its trajectories, parity words and the exact affine form of k iterations.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mx1 {

using BigInt = mpz_class;
using BigRational = mpq_class;

std::string to_string(const BigInt& v);

/// Which problem is being studied. Only m = 3 and m = 5 are supported.
class MapParams {
public:
  /// Throws std::invalid_argument for any multiplier other than 3 or 5.
  static MapParams make(unsigned m);

  unsigned m() const noexcept { return m_; }

  friend bool operator==(const MapParams&, const MapParams&) = default;

private:
  explicit MapParams(unsigned m) : m_(m) {}
  unsigned m_;
};

/// Finite parity sequence t_0 .. t_{l-1}; t_0 is the parity of the start value.
class DyadicWord {
public:
  DyadicWord() = default;
  explicit DyadicWord(std::vector<std::uint8_t> bits);

  /// Parses "1110"-style strings (t_0 first). Throws std::invalid_argument on
  /// any character other than '0' or '1'.
  static DyadicWord parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t j) const { return bits_[j]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// k2: number of odd steps.
  std::size_t ones() const noexcept;
  /// k1: number of even steps.
  std::size_t zeros() const noexcept { return size() - ones(); }

  void push_back(std::uint8_t bit);
  std::string to_string() const;

  friend bool operator==(const DyadicWord&, const DyadicWord&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

struct TrajectoryRecord {
  BigInt start;
  std::vector<BigInt> iterates;  // iterates[0] == start, size k + 1
  DyadicWord word;               // size k

  std::size_t length() const noexcept { return iterates.size(); }
};

/// b * T^(k)(n) = a * n + c for every n whose first k parities match the word.
struct AffineCoefficients {
  BigInt a;  // m^k2
  BigInt b;  // 2^k
  BigInt c;  // >= 0, zero only for the all-zero word
};

BigInt step(const BigInt& n, const MapParams& params);
TrajectoryRecord trajectory(const BigInt& n, const MapParams& params, std::size_t k);
DyadicWord dyadic_word(const BigInt& n, const MapParams& params, std::size_t k);

/// Smallest k <= budget with T^(k)(n) < n, or nullopt when chi(n) > budget.
/// Throws std::invalid_argument for n < 2 or budget == 0.
std::optional<std::size_t> stopping_time(const BigInt& n, const MapParams& params,
                                         std::size_t budget);

AffineCoefficients affine_coefficients(const DyadicWord& word, const MapParams& params);

/// Cycle reached from n within `budget` steps, rotated to start at its
/// smallest element; nullopt if no iterate repeats within the budget.
std::optional<std::vector<BigInt>> detect_cycle(const BigInt& n, const MapParams& params,
                                                std::size_t budget);

}  // namespace mx1
