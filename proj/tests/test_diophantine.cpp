#include <doctest.h>

#include <cmath>
#include <set>

#include "mx1/diophantine.hpp"

using namespace mx1;

namespace {

const MapParams M3 = MapParams::make(3);
const MapParams M5 = MapParams::make(5);

DyadicWord word_of_index(std::uint64_t idx, std::size_t k) {
  DyadicWord w;
  for (std::size_t j = 0; j < k; ++j) w.push_back(static_cast<std::uint8_t>((idx >> j) & 1u));
  return w;
}

}  // namespace

TEST_CASE("word_to_residue") {
  CHECK(word_to_residue(DyadicWord::parse("110"), M3) == 3);
  CHECK(word_to_residue(DyadicWord::parse("0"), M3) == 0);
  CHECK(word_to_residue(DyadicWord::parse("0"), M5) == 0);
  CHECK(word_to_residue(DyadicWord::parse("1111"), M3) == 15);
  CHECK(word_to_residue(DyadicWord::parse("1110"), M3) == 7);
  CHECK(word_to_residue(DyadicWord::parse("1101"), M3) == 11);
  CHECK_THROWS_AS(word_to_residue(DyadicWord{}, M3), std::invalid_argument);
}

TEST_CASE("word_to_residue is a bijection onto residues mod 2^k (k <= 10)") {
  for (const auto& p : {M3, M5}) {
    for (std::size_t k = 1; k <= 10; ++k) {
      std::set<unsigned long> residues;
      for (std::uint64_t idx = 0; idx < (1u << k); ++idx) {
        const auto w = word_of_index(idx, k);
        const BigInt r = word_to_residue(w, p);
        REQUIRE(r >= 0);
        REQUIRE(r < (1ul << k));
        residues.insert(r.get_ui());
        CHECK(residue_to_word(r, p, k) == w);
      }
      CHECK(residues.size() == (1u << k));
    }
  }
}

TEST_CASE("solve_word reproduces the k = 1 families") {
  auto f = solve_word(DyadicWord::parse("1"), M3);
  CHECK(f.coeffs.a == 3);
  CHECK(f.coeffs.b == 2);
  CHECK(f.coeffs.c == 1);
  CHECK(f.x0 == 1);
  CHECK(f.y0 == 2);
  CHECK(f.first_positive_q() == 0);
  CHECK(f.describe() == "1 = 2y - 3x; x = 1 + 2q, y = 2 + 3q");

  f = solve_word(DyadicWord::parse("0"), M3);
  CHECK(f.coeffs.a == 1);
  CHECK(f.coeffs.c == 0);
  CHECK(f.x0 == 0);
  CHECK(f.first_positive_q() == 1);
  CHECK(f.start_at(1) == 2);
  CHECK(f.end_at(1) == 1);
  CHECK(f.describe() == "0 = 2y - x; x = 2 + 2q, y = 1 + 1q");

  f = solve_word(DyadicWord::parse("1110"), M3);
  CHECK(f.x0 == 7);
  CHECK(f.y0 == 13);
}

TEST_CASE("classify_word") {
  for (std::size_t k = 1; k <= 40; ++k) {
    const DyadicWord ones(std::vector<std::uint8_t>(k, 1));
    const DyadicWord zeros(std::vector<std::uint8_t>(k, 0));
    CHECK(classify_word(ones, M3) == WordClass::Ascending);
    CHECK(classify_word(ones, M5) == WordClass::Ascending);
    CHECK(classify_word(zeros, M3) == WordClass::Descending);
    CHECK(classify_word(zeros, M5) == WordClass::Descending);
  }
  // k = 9, k2 = 6: 729 > 512.
  CHECK(classify_word(DyadicWord::parse("111111000"), M3) == WordClass::Ascending);
  // k = 9, k2 = 5: 243 < 512.
  CHECK(classify_word(DyadicWord::parse("111110000"), M3) == WordClass::Descending);
}

TEST_CASE("threshold comparison agrees with k2 > k ln2 / ln m for k <= 1000") {
  for (const auto& p : {M3, M5}) {
    const long double theta = std::log(2.0L) / std::log(static_cast<long double>(p.m()));
    BigInt two_pow = 1;
    for (std::size_t k = 0; k <= 1000; ++k) {
      BigInt m_pow = 1;
      for (std::size_t k2 = 0; k2 <= k; ++k2) {
        const bool exact = m_pow > two_pow;
        const bool floating = static_cast<long double>(k2) > static_cast<long double>(k) * theta;
        REQUIRE(exact == floating);
        if (k2 >= 1) REQUIRE(m_pow != two_pow);
        m_pow *= p.m();
      }
      two_pow *= 2;
    }
  }
}

TEST_CASE("every word with k <= 10 solves exactly and its family behaves") {
  for (const auto& p : {M3, M5}) {
    for (std::size_t k = 1; k <= 10; ++k) {
      for (std::uint64_t idx = 0; idx < (1u << k); ++idx) {
        const auto w = word_of_index(idx, k);
        const auto f = solve_word(w, p);
        const auto& [a, b, c] = f.coeffs;
        REQUIRE(c == b * f.y0 - a * f.x0);

        // Forward family: q = 1, 2 realize the word and land on y0 + a q.
        for (long q = 1; q <= 2; ++q) {
          const auto rec = trajectory(f.start_at(q), p, k);
          CHECK(rec.word == w);
          CHECK(rec.iterates.back() == f.end_at(q));
          CHECK(b * rec.iterates.back() == a * f.start_at(q) + c);
        }

        if (classify_word(w, p) == WordClass::Ascending) {
          CHECK_FALSE(descending_dominance_q(f).has_value());
          for (long q = f.first_positive_q().get_si(); q <= 100; ++q) {
            REQUIRE(f.start_at(q) < f.end_at(q));
          }
        } else {
          const auto q_star = descending_dominance_q(f);
          REQUIRE(q_star.has_value());
          CHECK(f.start_at(*q_star) > f.end_at(*q_star));
          CHECK(f.start_at(*q_star + 1) > f.end_at(*q_star + 1));
          if (sgn(*q_star) > 0) CHECK(f.start_at(*q_star - 1) <= f.end_at(*q_star - 1));
        }
      }
    }
  }
}

TEST_CASE("periodicity_check") {
  auto v = periodicity_check(7, 4, 3, M3);
  CHECK(v.pass);
  CHECK(v.checked == 3);
  // Oracle: direct iteration of 23, 39, 55 ends at 40, 67, 94 (a = 3^3).
  const long ends[] = {40, 67, 94};
  for (long q = 1; q <= 3; ++q) {
    const auto rec = trajectory(7 + 16 * q, M3, 4);
    CHECK(rec.word.to_string() == "1110");
    CHECK(rec.iterates.back() == ends[q - 1]);
    CHECK(rec.iterates.back() == 13 + 27 * q);
  }

  v = periodicity_check(3, 3, 2, M3);
  CHECK(v.pass);
  CHECK(dyadic_word(11, M3, 3).to_string() == "110");
  CHECK(dyadic_word(19, M3, 3).to_string() == "110");

  v = periodicity_check(5, 6, 0, M5);
  CHECK(v.pass);
  CHECK(v.checked == 0);

  CHECK_THROWS_AS(periodicity_check(5, 0, 3, M3), std::invalid_argument);
}
