#include "permgen/counting.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "permgen/certified.hpp"
#include "permgen/character.hpp"
#include "permgen/partition.hpp"

namespace permgen {

std::vector<uint32_t> pi_n(unsigned n) {
  std::vector<uint32_t> out;
  for (uint32_t p = n / 2 + 1; 5ull * p < 3ull * n; ++p) {
    if (2ull * p <= n) continue;
    bool prime = p > 1;
    for (uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(p);
  }
  return out;
}

BigInt factorial(unsigned n) {
  static std::mutex mu;
  static std::vector<BigInt> table{1};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) table.push_back(table.back() * table.size());
  return table[n];
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt frak_c_size(unsigned n) {
  BigInt total = 0;
  for (uint32_t p : pi_n(n)) total += factorial(n) / p;
  return total;
}

BigInt frak_m_size(unsigned n) {
  if (partition_count(n) > 100000)
    throw std::invalid_argument("frak_m_size: partition count guard (<= 1e5) exceeded");
  BigInt total = 0;
  for (const Partition& type : partitions(n)) {
    const CycleType t{type.parts};
    if (in_frak_m(t, n)) total += class_size(t);
  }
  return total;
}

namespace {

// b(k) = sum over allowed lengths j of C(k-1, j-1) (j-1)! b(k-j):
// j is the length of the cycle containing the smallest remaining point.
BigInt count_with_allowed_lengths(unsigned m, const std::vector<uint32_t>& lengths) {
  std::vector<BigInt> b(m + 1);
  b[0] = 1;
  for (unsigned k = 1; k <= m; ++k) {
    BigInt sum = 0;
    for (uint32_t j : lengths) {
      if (j > k) break;
      sum += binomial(k - 1, j - 1) * factorial(j - 1) * b[k - j];
    }
    b[k] = sum;
  }
  return b[m];
}

}  // namespace

BigInt count_bounded_cycles(unsigned m, unsigned r) {
  if (r < 1) throw std::invalid_argument("count_bounded_cycles: r >= 1 required");
  std::vector<uint32_t> lengths;
  for (uint32_t j = 1; j <= r && j <= m; ++j) lengths.push_back(j);
  if (lengths.empty()) lengths.push_back(1);
  return count_with_allowed_lengths(m, lengths);
}

BigInt count_nu_roots(unsigned n, uint64_t nu) {
  if (nu < 1) throw std::invalid_argument("count_nu_roots: nu >= 1 required");
  std::vector<uint32_t> lengths;
  for (uint32_t j = 1; j <= n; ++j)
    if (nu % j == 0) lengths.push_back(j);
  return count_with_allowed_lengths(n, lengths);
}

BigInt k_of_n_roots(unsigned n, uint64_t N) {
  if (n < 1 || N < 1) throw std::invalid_argument("k_of_n_roots: n, N >= 1 required");
  std::map<std::vector<uint32_t>, BigInt> cache;
  BigInt total = 0;
  for (uint64_t nu = 1; nu <= N; ++nu) {
    std::vector<uint32_t> lengths;
    for (uint32_t j = 1; j <= n; ++j)
      if (nu % j == 0) lengths.push_back(j);
    auto it = cache.find(lengths);
    if (it == cache.end())
      it = cache.emplace(lengths, count_with_allowed_lengths(n, lengths)).first;
    total += it->second;
  }
  return total;
}

unsigned divisor_count(uint64_t nu) {
  if (nu < 1) throw std::invalid_argument("divisor_count: nu >= 1 required");
  unsigned count = 1;
  for (uint64_t d = 2; d * d <= nu; ++d) {
    if (nu % d) continue;
    unsigned e = 0;
    while (nu % d == 0) nu /= d, ++e;
    count *= e + 1;
  }
  if (nu > 1) count *= 2;
  return count;
}

double dixon_series(unsigned n, unsigned order, unsigned generators) {
  if (n < 2) throw std::invalid_argument("dixon_series: n >= 2 required");
  static const double pair_coeffs[] = {-1, -1, -4, -23, -171, -1542};
  static const double triple_coeffs[] = {0, -1, 0, -3, -6};
  const double* coeffs;
  unsigned available;
  if (generators == 2) {
    coeffs = pair_coeffs;
    available = 6;
  } else if (generators == 3) {
    coeffs = triple_coeffs;
    available = 5;
  } else {
    throw std::invalid_argument("dixon_series: generators must be 2 or 3");
  }
  if (order > available)
    throw std::invalid_argument("dixon_series: order exceeds available coefficients");
  double value = 1.0, pw = 1.0;
  for (unsigned m = 1; m <= order; ++m) {
    pw /= n;
    value += coeffs[m - 1] * pw;
  }
  return value;
}

std::vector<DensityRow> frak_c_density_check(unsigned n_max) {
  std::vector<DensityRow> rows;
  for (unsigned n = 2; n <= n_max; ++n) {
    const auto primes = pi_n(n);
    if (primes.empty()) continue;
    DensityRow row;
    row.n = n;
    for (uint32_t p : primes) row.prime_reciprocal_sum += BigRat(1, p);
    row.holds = meets_half_log_density(row.prime_reciprocal_sum, n);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BoundedCycleRow> bounded_cycle_bound_check(unsigned m_max) {
  std::vector<BoundedCycleRow> rows;
  for (unsigned m = 2; m <= m_max; ++m) {
    for (unsigned r = 1; 2 * r <= m; ++r) {
      BoundedCycleRow row;
      row.m = m;
      row.r = r;
      row.count = count_bounded_cycles(m, r);
      // count <= (2r/m)^(m/2r) m!  <=>  (count/m!)^(2r) <= (2r/m)^m
      const BigRat lhs = rat_pow(BigRat(row.count, factorial(m)), 2 * r);
      const BigRat rhs = rat_pow(BigRat(2 * r, m), m);
      row.holds = lhs <= rhs;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace permgen
