#include "mx1/stopping_table.hpp"

#include <stdexcept>

#include "mx1/decimal.hpp"

namespace mx1 {

BinomialTable binomial_table(std::size_t kmax) {
  BinomialTable rows(kmax + 1);
  rows[0] = {BigInt(1)};
  for (std::size_t j = 1; j <= kmax; ++j) {
    auto& col = rows[j];
    const auto& prev = rows[j - 1];
    col.resize(j + 1);
    col[0] = 1;
    col[j] = 1;
    for (std::size_t i = 1; i < j; ++i) col[i] = prev[i - 1] + prev[i];
  }
  return rows;
}

std::size_t threshold_row(std::size_t k, const MapParams& params) {
  BigInt b;
  mpz_ui_pow_ui(b.get_mpz_t(), 2, k);
  BigInt a = params.m();
  std::size_t k2 = 1;
  while (a <= b) {
    a *= params.m();
    ++k2;
  }
  return k2;
}

BigInt TableColumn::count(std::size_t k2) const {
  if (k2 < first_row || k2 > last_row()) return 0;
  return counts[k2 - first_row];
}

StoppingTable::StoppingTable(MapParams params, std::vector<TableColumn> columns)
    : params_(params), columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("stopping table needs column 0");
}

StoppingTable chi_table(std::size_t kmax, const MapParams& params) {
  std::vector<TableColumn> cols;
  cols.reserve(kmax + 1);

  TableColumn seed;
  seed.k = 0;
  seed.threshold_row = 1;
  seed.first_row = 0;
  seed.counts = {BigInt(1)};
  seed.total = 1;
  seed.f = 1;
  cols.push_back(std::move(seed));

  // Running powers m^threshold and 2^k; the threshold moves by at most one
  // row per column, so each column costs O(1) big-integer comparisons.
  std::size_t thr = 1;
  BigInt m_pow = params.m();
  BigInt two_pow = 1;

  for (std::size_t k = 1; k <= kmax; ++k) {
    two_pow *= 2;
    while (m_pow <= two_pow) {
      m_pow *= params.m();
      ++thr;
    }

    const TableColumn& prev = cols.back();
    TableColumn col;
    col.k = k;
    col.threshold_row = thr;

    // Unfiltered recursion over rows prev.first_row .. k.
    const std::size_t lo = prev.first_row;
    std::vector<BigInt> raw(k - lo + 1);
    for (std::size_t i = lo; i <= k; ++i) {
      BigInt v = prev.count(i);
      if (i > 0) v += prev.count(i - 1);
      raw[i - lo] = std::move(v);
    }

    for (std::size_t i = lo; i < thr && i <= k; ++i) {
      BigInt& v = raw[i - lo];
      if (sgn(v) == 0) continue;
      if (col.gray_row) throw std::logic_error("more than one gray cell in a column");
      col.gray = v;
      col.gray_row = i;
    }
    col.first_row = thr;
    col.counts.assign(raw.begin() + static_cast<std::ptrdiff_t>(thr - lo), raw.end());
    for (const auto& v : col.counts) col.total += v;
    col.f = BigRational(col.total, two_pow);
    col.f.canonicalize();
    cols.push_back(std::move(col));
  }
  return StoppingTable(params, std::move(cols));
}

FValue f_of_k(const StoppingTable& table, std::size_t k, unsigned digits) {
  const TableColumn& col = table.column(k);
  return {col.f, render_decimal(col.f, digits)};
}

std::vector<NChiRow> n_chi_report(const StoppingTable& table,
                                  const std::vector<std::size_t>& checkpoints,
                                  unsigned digits) {
  std::vector<NChiRow> rows;
  rows.reserve(checkpoints.size());
  for (std::size_t k : checkpoints) {
    const TableColumn& col = table.column(k);
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
    rows.push_back({k, col.total, std::move(p), f_of_k(table, k, digits)});
  }
  return rows;
}

}  // namespace mx1
