#pragma once

// Recursive count tables n(k2, k) of residue classes mod 2^k whose stopping
// time exceeds k, and the distribution function F(k) = N_{chi>k} / 2^k.
//
// Column k is built from column k-1 by the Pascal recursion
//   new(i) = old(i-1) + old(i)
// (an appended odd step moves a class one row down, an even step keeps it),
// after which every row i with m^i < 2^k has just dropped below its start:
// those classes stop at exactly k (the "gray" count) and are removed.

#include <optional>
#include <vector>

#include "mx1/core_map.hpp"

namespace mx1 {

/// Pascal triangle rows[j][i] = C(j, i), j = 0..kmax, built by the recursion.
using BinomialTable = std::vector<std::vector<BigInt>>;
BinomialTable binomial_table(std::size_t kmax);

/// Smallest k2 >= 1 with m^k2 > 2^k (exact).
std::size_t threshold_row(std::size_t k, const MapParams& params);

struct TableColumn {
  std::size_t k = 0;
  std::size_t threshold_row = 1;
  // counts[i] is n(first_row + i, k); first_row == threshold_row except for the
  // seed column k = 0, which holds the empty word in row 0.
  std::size_t first_row = 0;
  std::vector<BigInt> counts;
  BigInt gray = 0;
  std::optional<std::size_t> gray_row;
  BigInt total = 0;
  BigRational f = 0;

  /// n(k2, k); zero outside the stored range.
  BigInt count(std::size_t k2) const;
  std::size_t last_row() const noexcept { return first_row + counts.size() - 1; }

  friend bool operator==(const TableColumn&, const TableColumn&) = default;
};

class StoppingTable {
public:
  StoppingTable(MapParams params, std::vector<TableColumn> columns);

  const MapParams& params() const noexcept { return params_; }
  std::size_t kmax() const noexcept { return columns_.size() - 1; }
  const std::vector<TableColumn>& columns() const noexcept { return columns_; }
  /// Throws std::out_of_range past kmax.
  const TableColumn& column(std::size_t k) const { return columns_.at(k); }

  friend bool operator==(const StoppingTable&, const StoppingTable&) = default;

private:
  MapParams params_;
  std::vector<TableColumn> columns_;
};

StoppingTable chi_table(std::size_t kmax, const MapParams& params);

struct FValue {
  BigRational exact;
  std::string decimal;
};

FValue f_of_k(const StoppingTable& table, std::size_t k, unsigned digits = 8);

struct NChiRow {
  std::size_t k;
  BigInt n_chi_gt_k;
  BigInt pow2k;
  FValue f;
};

/// Throws std::out_of_range for checkpoints beyond the table.
std::vector<NChiRow> n_chi_report(const StoppingTable& table,
                                  const std::vector<std::size_t>& checkpoints,
                                  unsigned digits = 8);

}  // namespace mx1
