#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "mx1/sieve.hpp"

namespace mx1 {

SieveCounts sieve_range(std::uint64_t lo, std::uint64_t hi, std::size_t k,
                        const MapParams& params) {
  if (lo < 2) throw std::invalid_argument("sieve range must start at n >= 2");
  SieveCounts out(k);
  const unsigned long m = params.m();
  mpz_t start, x;
  mpz_init(start);
  mpz_init(x);
  for (std::uint64_t n = lo; n < hi; ++n) {
    mpz_set_ui(start, static_cast<unsigned long>(n));
    mpz_set(x, start);
    std::size_t ones = 0;
    std::size_t chi = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (mpz_odd_p(x)) {
        mpz_mul_ui(x, x, m);
        mpz_add_ui(x, x, 1);
        ++ones;
      }
      mpz_fdiv_q_2exp(x, x, 1);
      if (mpz_cmp(x, start) < 0) {
        chi = j;
        break;
      }
    }
    if (chi != 0) {
      ++out.chi_histogram[chi];
    } else {
      ++out.survivors;
      ++out.survivor_ones[ones];
    }
  }
  mpz_clear(x);
  mpz_clear(start);
  return out;
}

SieveCounts sieve_counts(std::size_t k, const MapParams& params, std::size_t chunks) {
  if (k > 40) throw std::invalid_argument("sieve needs k <= 40");
  const std::uint64_t lo = 2;
  const std::uint64_t hi = (std::uint64_t{1} << k) + 2;  // exclusive
  const std::uint64_t size = hi - lo;
  if (chunks == 0) chunks = static_cast<std::size_t>(omp_get_max_threads()) * 4;
  chunks = static_cast<std::size_t>(std::min<std::uint64_t>(chunks, size));

  std::vector<SieveCounts> partial(chunks, SieveCounts(k));
  const auto n_chunks = static_cast<long>(chunks);

#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 0; c < n_chunks; ++c) {
    const auto idx = static_cast<std::uint64_t>(c);
    const std::uint64_t a = lo + size * idx / chunks;
    const std::uint64_t b = lo + size * (idx + 1) / chunks;
    partial[static_cast<std::size_t>(c)] = sieve_range(a, b, k, params);
  }

  SieveCounts total(k);
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace mx1
