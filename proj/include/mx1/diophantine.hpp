#pragma once

// Solution families of c = b*y - a*x, one equation per parity word.

#include <optional>
#include <stdexcept>
#include <string>

#include "mx1/core_map.hpp"

namespace mx1 {

/// Raised when an identity that must hold by construction fails.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// All starts realizing a word: x = x0 + b*q, with ends y = y0 + a*q.
struct SolutionFamily {
  AffineCoefficients coeffs;
  BigInt x0;  // 0 <= x0 < b
  BigInt y0;

  BigInt start_at(const BigInt& q) const { return x0 + coeffs.b * q; }
  BigInt end_at(const BigInt& q) const { return y0 + coeffs.a * q; }

  /// Smallest q whose start is a positive integer (1 for the all-zero word).
  BigInt first_positive_q() const { return sgn(x0) == 0 ? BigInt(1) : BigInt(0); }

  /// e.g. "1 = 2y - 3x; x = 1 + 2q, y = 2 + 3q", members re-based so q = 0 is
  /// the first positive start.
  std::string describe() const;
};

enum class WordClass { Ascending, Descending };

const char* to_string(WordClass c) noexcept;

DyadicWord residue_to_word(const BigInt& residue, const MapParams& params, std::size_t k);

/// The unique residue mod 2^k whose trajectory realizes `word`.
BigInt word_to_residue(const DyadicWord& word, const MapParams& params);

/// Throws std::invalid_argument for an empty word and InvariantViolation if
/// the end value does not come out by exact division.
SolutionFamily solve_word(const DyadicWord& word, const MapParams& params);

/// Ascending iff m^k2 > 2^k (exact comparison).
WordClass classify_word(const DyadicWord& word, const MapParams& params);

/// For a Descending family: smallest q with x > y for every q' >= q.
/// nullopt for Ascending families.
std::optional<BigInt> descending_dominance_q(const SolutionFamily& family);

struct PeriodicityVerdict {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<BigInt> counterexample;  // first start value that broke periodicity
  std::string reason;
};

/// Confirms word(n + 2^k q) == word(n) and T^k(n + 2^k q) == T^k(n) + m^k2 q
/// for q = 1..qmax.
PeriodicityVerdict periodicity_check(const BigInt& n, std::size_t k, std::size_t qmax,
                                     const MapParams& params);

}  // namespace mx1
