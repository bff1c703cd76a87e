#include <doctest.h>

#include <chrono>

#include "mx1/stopping_table.hpp"

using namespace mx1;

namespace {

const MapParams M3 = MapParams::make(3);
const MapParams M5 = MapParams::make(5);

BigInt big(const char* s) { return BigInt(s, 10); }

// Independent oracle: enumerate every word of length k and keep those whose
// every prefix j = 1..k is ascending (m^ones > 2^j). gray = words whose first
// k-1 prefixes ascend but the full word does not.
struct WordCensus {
  std::vector<std::uint64_t> survivors_by_ones;
  std::uint64_t gray = 0;
};

WordCensus census(std::size_t k, unsigned m) {
  std::vector<BigInt> mp(k + 1), tp(k + 1);
  mp[0] = 1;
  tp[0] = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    mp[i] = mp[i - 1] * m;
    tp[i] = tp[i - 1] * 2;
  }
  WordCensus c;
  c.survivors_by_ones.assign(k + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::size_t ones = 0;
    bool alive = true;
    for (std::size_t j = 1; j <= k && alive; ++j) {
      ones += (mask >> (j - 1)) & 1u;
      if (mp[ones] <= tp[j]) {
        if (j == k) ++c.gray;
        alive = false;
      }
    }
    if (alive) ++c.survivors_by_ones[ones];
  }
  return c;
}

}  // namespace

TEST_CASE("binomial_table") {
  const auto bt = binomial_table(20);
  CHECK(bt[4][2] == 6);
  CHECK(bt[20][10] == 184756);
  for (std::size_t j = 0; j <= 20; ++j) {
    CHECK(bt[j][0] == 1);
    CHECK(bt[j][j] == 1);
    BigInt sum = 0;
    for (const auto& v : bt[j]) sum += v;
    CHECK(sum == BigInt(1) << static_cast<mp_bitcnt_t>(j));
    for (std::size_t i = 0; i <= j; ++i) {
      BigInt direct;
      mpz_bin_uiui(direct.get_mpz_t(), j, i);
      CHECK(bt[j][i] == direct);
    }
  }
  CHECK(binomial_table(0).size() == 1);
}

TEST_CASE("threshold_row") {
  CHECK(threshold_row(5, M3) == 4);
  CHECK(threshold_row(10, M5) == 5);
  CHECK(threshold_row(0, M3) == 1);
  CHECK(threshold_row(0, M5) == 1);
  CHECK(threshold_row(1, M3) == 1);
  CHECK(threshold_row(2, M3) == 2);
  CHECK(threshold_row(9, M3) == 6);
}

TEST_CASE("chi_table 3x+1 golden columns") {
  const auto t = chi_table(20, M3);
  const long totals[] = {1,   1,   1,   2,    3,    4,    8,    13,   19,    38,   64,
                         128, 226, 367, 734, 1295, 2114, 4228, 7495, 14990, 27328};
  for (std::size_t k = 0; k <= 20; ++k) CHECK(t.column(k).total == totals[k]);
  CHECK(t.column(4).gray == 1);
  CHECK(t.column(5).gray == 2);
  CHECK(t.column(7).gray == 3);
  CHECK(t.column(8).gray == 7);
  CHECK(t.column(10).gray == 12);
  CHECK(t.column(12).gray == 30);
  CHECK(t.column(13).gray == 85);
  CHECK(t.column(20).gray == 2652);
  CHECK(t.column(10).f == BigRational(1, 16));
  // Column 3: rows 2, 3 = 1, 1; column 4: rows 3, 4 = 2, 1.
  CHECK(t.column(3).count(2) == 1);
  CHECK(t.column(3).count(3) == 1);
  CHECK(t.column(4).count(3) == 2);
  CHECK(t.column(4).count(4) == 1);
  CHECK(t.column(4).gray_row == 2);
  // Appendix k = 20 column, row 12.
  CHECK(t.column(20).gray_row == 12);
  CHECK(t.column(19).count(12) == 2652);
}

TEST_CASE("chi_table 5x+1 golden columns") {
  const auto t = chi_table(20, M5);
  const long totals[] = {1,   1,    2,    3,    6,    10,    20,    35,    70,     140,   266,
                         532, 1008, 2016, 3830, 7660, 15320, 29925, 59850, 116456, 232912};
  for (std::size_t k = 0; k <= 20; ++k) CHECK(t.column(k).total == totals[k]);
  // Oracle: total(k) = 2 total(k-1) - gray(k) on the printed totals 140, 266.
  CHECK(t.column(10).gray == 2 * 140 - 266);
  CHECK(f_of_k(t, 10).exact == BigRational(133, 512));
  CHECK(f_of_k(t, 10).decimal == "0.25976562");  // 0.259765625, tie to even
}

TEST_CASE("chi_table matches an explicit word census (k <= 16)") {
  for (const auto& p : {M3, M5}) {
    const auto t = chi_table(16, p);
    for (std::size_t k = 1; k <= 16; ++k) {
      const auto c = census(k, p.m());
      const auto& col = t.column(k);
      CHECK(col.gray == c.gray);
      for (std::size_t i = 0; i <= k; ++i) {
        CHECK(col.count(i) == c.survivors_by_ones[i]);
      }
    }
  }
}

TEST_CASE("survivors plus stopped classes exhaust the binomial row") {
  // For every k: total(k) + sum_j gray(j) 2^(k-j) = 2^k = sum_i C(k, i).
  const auto bt = binomial_table(40);
  for (const auto& p : {M3, M5}) {
    const auto t = chi_table(40, p);
    for (std::size_t k = 0; k <= 40; ++k) {
      BigInt acc = t.column(k).total;
      for (std::size_t j = 1; j <= k; ++j) {
        acc += t.column(j).gray << static_cast<mp_bitcnt_t>(k - j);
      }
      BigInt row_sum = 0;
      for (const auto& v : bt[k]) row_sum += v;
      CHECK(acc == row_sum);
    }
    // The all-odd row never meets a removal and keeps its binomial value.
    for (std::size_t k = 1; k <= 40; ++k) CHECK(t.column(k).count(k) == bt[k][k]);
  }
}

TEST_CASE("structural invariants to k = 900") {
  for (const auto& p : {M3, M5}) {
    const auto t = chi_table(900, p);
    for (std::size_t k = 1; k <= 900; ++k) {
      const auto& col = t.column(k);
      const auto& prev = t.column(k - 1);
      REQUIRE(col.total == 2 * prev.total - col.gray);
      REQUIRE(col.f <= prev.f);
      CHECK((col.f == prev.f) == (sgn(col.gray) == 0));
      CHECK(col.count(k) == 1);
      CHECK(col.threshold_row == threshold_row(k, p));
      if (k >= 2) {
        const auto d = col.threshold_row - prev.threshold_row;
        CHECK((d == 0 || d == 1));
        CHECK((sgn(col.gray) > 0) == (d == 1));
      }
      BigInt sum = 0;
      for (std::size_t i = col.first_row; i <= col.last_row(); ++i) {
        REQUIRE(sgn(col.count(i)) > 0);
        sum += col.count(i);
      }
      CHECK(sum == col.total);
      BigRational f(col.total, BigInt(1) << static_cast<mp_bitcnt_t>(k));
      f.canonicalize();
      CHECK(col.f == f);
      if (col.gray_row) {
        // Zero propagation: the removed row stays empty afterwards.
        for (std::size_t j = k; j <= std::min<std::size_t>(k + 30, 900); ++j) {
          CHECK(sgn(t.column(j).count(*col.gray_row)) == 0);
        }
      }
      if (k >= 3) CHECK(col.total > prev.total);
    }
  }
}

TEST_CASE("exact N checkpoints for 3x+1") {
  const auto t = chi_table(100, M3);
  const auto rows = n_chi_report(t, {20, 30, 40, 50, 60, 70, 80, 90, 100});
  CHECK(rows[0].n_chi_gt_k == 27328);
  CHECK(rows[1].n_chi_gt_k == 12771274);
  CHECK(rows[2].n_chi_gt_k == big("6402835000"));
  CHECK(rows[3].n_chi_gt_k == big("3734259929440"));
  CHECK(rows[4].n_chi_gt_k == big("2216134944775156"));
  CHECK(rows[5].n_chi_gt_k == big("1241503538986719152"));
  CHECK(rows[6].n_chi_gt_k == big("803209913882910595105"));
  CHECK(rows[7].n_chi_gt_k == big("508520069189622659715764"));
  CHECK(rows[8].n_chi_gt_k == big("302560669500543257546172187"));
  CHECK(rows[8].pow2k == big("1267650600228229401496703205376"));
  CHECK(rows[8].f.decimal == "0.00023867828");
  CHECK_THROWS_AS(n_chi_report(t, {101}), std::out_of_range);
}

TEST_CASE("f_of_k") {
  const auto t3 = chi_table(900, M3);
  const auto t5 = chi_table(900, M5);
  CHECK(f_of_k(t3, 0).decimal == "1");
  CHECK(f_of_k(t5, 0).decimal == "1");
  CHECK(f_of_k(t3, 900, 5).decimal == "1.0837e-17");
  CHECK(f_of_k(t3, 300, 5).decimal == "5.4667e-8");
  CHECK(f_of_k(t5, 900).decimal == "0.17602593");
  CHECK(f_of_k(t5, 500).decimal == "0.17604048");
  CHECK(f_of_k(t5, 100).decimal == "0.18060217");
}

TEST_CASE("table to k = 1000 builds quickly") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto t = chi_table(1000, M5);
  const auto dt = std::chrono::steady_clock::now() - t0;
  CHECK(t.kmax() == 1000);
  CHECK(dt < std::chrono::seconds(30));
}
