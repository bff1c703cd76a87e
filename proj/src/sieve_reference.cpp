#include "mx1/sieve.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mx1 {

std::uint64_t SieveCounts::classified() const noexcept {
  std::uint64_t n = survivors;
  for (auto c : chi_histogram) n += c;
  return n;
}

SieveCounts& SieveCounts::operator+=(const SieveCounts& other) {
  if (other.k != k) throw std::invalid_argument("cannot merge sieve counts for different k");
  survivors += other.survivors;
  for (std::size_t j = 0; j <= k; ++j) {
    chi_histogram[j] += other.chi_histogram[j];
    survivor_ones[j] += other.survivor_ones[j];
  }
  return *this;
}

SieveCounts sieve_counts_reference(std::size_t k, const MapParams& params) {
  SieveCounts out(k);
  const std::uint64_t hi = (std::uint64_t{1} << k) + 1;
  for (std::uint64_t n = 2; n <= hi; ++n) {
    const BigInt start(static_cast<unsigned long>(n));
    if (auto chi = stopping_time(start, params, k)) {
      ++out.chi_histogram[*chi];
    } else {
      ++out.survivors;
      ++out.survivor_ones[dyadic_word(start, params, k).ones()];
    }
  }
  return out;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::TableLowerBound: return "TableLowerBound";
    case Verdict::BoundViolated: return "BoundViolated";
  }
  return "?";
}

std::size_t sieve_ceiling() {
  constexpr std::size_t kDefault = 22;
  const char* env = std::getenv("MX1_SIEVE_CEILING");
  if (env == nullptr || *env == '\0') return kDefault;
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(env, &pos);
    if (pos != std::string(env).size() || v == 0 || v > 40) return kDefault;
    return v;
  } catch (const std::exception&) {
    return kDefault;
  }
}

SieveReport make_report(const SieveCounts& counts, const StoppingTable& table) {
  const std::size_t k = counts.k;
  SieveReport r{table.params(),
                k,
                2,
                (std::uint64_t{1} << k) + 1,
                counts,
                table.column(k).total,
                Verdict::Equal,
                0};
  r.surplus = BigInt(static_cast<unsigned long>(counts.survivors)) - r.table_total;
  if (sgn(r.surplus) > 0) r.verdict = Verdict::TableLowerBound;
  if (sgn(r.surplus) < 0) r.verdict = Verdict::BoundViolated;
  return r;
}

SieveReport sieve_slice(std::size_t k, const MapParams& params, std::size_t chunks) {
  if (k == 0 || k > 40) throw std::invalid_argument("sieve needs 1 <= k <= 40");
  return make_report(sieve_counts(k, params, chunks), chi_table(k, params));
}

std::vector<HistogramRow> histogram_vs_gray(const SieveCounts& counts,
                                            const StoppingTable& table) {
  std::vector<HistogramRow> rows;
  for (std::size_t j = 1; j <= counts.k; ++j) {
    HistogramRow row{j, counts.chi_histogram[j], table.column(j).gray, 0, false};
    row.expected = row.gray << static_cast<mp_bitcnt_t>(counts.k - j);
    row.match = row.expected == BigInt(static_cast<unsigned long>(row.brute));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<HistogramRow> histogram_vs_gray(std::size_t k, const MapParams& params) {
  if (k == 0) throw std::invalid_argument("histogram needs k >= 1");
  return histogram_vs_gray(sieve_counts(k, params), chi_table(k, params));
}

std::map<std::size_t, std::uint64_t> per_cell_histogram(const SieveCounts& counts) {
  std::map<std::size_t, std::uint64_t> cells;
  for (std::size_t k2 = 0; k2 <= counts.k; ++k2) {
    if (counts.survivor_ones[k2] != 0) cells[k2] = counts.survivor_ones[k2];
  }
  return cells;
}

std::map<std::size_t, std::uint64_t> per_cell_histogram(std::size_t k, const MapParams& params) {
  if (k == 0) throw std::invalid_argument("histogram needs k >= 1");
  return per_cell_histogram(sieve_counts(k, params));
}

}  // namespace mx1
