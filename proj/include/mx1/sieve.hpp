#pragma once

// Brute-force check of the stopping tables over the slice [2, 2^k + 1].
//
// Two kernels compute the same SieveCounts:
//   sieve_counts_reference - serial, built on the core-map operations
//                            (stopping_time, dyadic_word); the test oracle.
//   sieve_counts           - OpenMP over contiguous chunks with a fused
//                            in-place iteration loop; merged in chunk order.

#include <cstdint>
#include <map>
#include <vector>

#include "mx1/core_map.hpp"
#include "mx1/stopping_table.hpp"

namespace mx1 {

/// Integers in a slice classified by stopping time, chi capped at k.
struct SieveCounts {
  std::size_t k = 0;
  std::uint64_t survivors = 0;                // chi > k
  std::vector<std::uint64_t> chi_histogram;   // [j] = #{chi == j}, j = 0..k
  std::vector<std::uint64_t> survivor_ones;   // [k2] = survivors whose word has k2 ones

  explicit SieveCounts(std::size_t k_ = 0)
      : k(k_), chi_histogram(k_ + 1, 0), survivor_ones(k_ + 1, 0) {}

  std::uint64_t classified() const noexcept;
  SieveCounts& operator+=(const SieveCounts& other);
  friend bool operator==(const SieveCounts&, const SieveCounts&) = default;
};

/// Classifies every n in [lo, hi) (lo >= 2), iterating at most k steps each.
SieveCounts sieve_range(std::uint64_t lo, std::uint64_t hi, std::size_t k,
                        const MapParams& params);

/// Serial oracle over [2, 2^k + 1].
SieveCounts sieve_counts_reference(std::size_t k, const MapParams& params);

/// Parallel kernel over [2, 2^k + 1] split into `chunks` contiguous pieces
/// (0 picks a count from the OpenMP thread pool). Result is independent of
/// the chunk count and the thread schedule.
SieveCounts sieve_counts(std::size_t k, const MapParams& params, std::size_t chunks = 0);

enum class Verdict {
  Equal,             // brute count == table total
  TableLowerBound,   // brute count >  table total (surplus reported)
  BoundViolated      // brute count <  table total: contradicts the table
};

const char* to_string(Verdict v) noexcept;

struct SieveReport {
  MapParams params;
  std::size_t k;
  std::uint64_t slice_lo;   // 2
  std::uint64_t slice_hi;   // 2^k + 1, inclusive
  SieveCounts counts;
  BigInt table_total;
  Verdict verdict;
  BigInt surplus;           // brute - table

  std::uint64_t count_chi_gt_k() const noexcept { return counts.survivors; }
};

/// Largest k the sieve accepts; MX1_SIEVE_CEILING overrides the default 22.
std::size_t sieve_ceiling();

/// Throws std::invalid_argument for k == 0 or k > 40 (slice no longer fits
/// the 64-bit index).
SieveReport sieve_slice(std::size_t k, const MapParams& params, std::size_t chunks = 0);

/// Builds the report from precomputed counts and a table that reaches k.
SieveReport make_report(const SieveCounts& counts, const StoppingTable& table);

struct HistogramRow {
  std::size_t chi;
  std::uint64_t brute;
  BigInt gray;       // gray(chi) per slice of 2^chi integers
  BigInt expected;   // gray(chi) * 2^(k - chi): the slice holds 2^(k-chi) periods
  bool match;
};

/// Brute chi histogram of the k-slice next to the table's gray counts, chi = 1..k.
std::vector<HistogramRow> histogram_vs_gray(const SieveCounts& counts,
                                            const StoppingTable& table);
std::vector<HistogramRow> histogram_vs_gray(std::size_t k, const MapParams& params);

/// Survivors of the k-slice grouped by number of odd steps (only nonzero keys).
std::map<std::size_t, std::uint64_t> per_cell_histogram(const SieveCounts& counts);
std::map<std::size_t, std::uint64_t> per_cell_histogram(std::size_t k, const MapParams& params);

}  // namespace mx1
