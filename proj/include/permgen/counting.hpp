#pragma once

#include <cstdint>
#include <vector>

#include "permgen/perm.hpp"

namespace permgen {

/// Primes p with n/2 < p < 3n/5 (both strict), ascending.
std::vector<uint32_t> pi_n(unsigned n);

/// n!, from a shared append-only cache (synchronized). Returned by value:
/// the cache can reallocate on growth, so references into it must not escape.
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Number of permutations of S_n containing a cycle whose length is in the
/// prime window: sum over p of n!/p. Valid as a disjoint sum because two
/// window primes exceed n/2 each, so no permutation carries two such cycles
/// and no window prime divides any other cycle length present.
BigInt frak_c_size(unsigned n);

/// Number of permutations whose cyclic group has minimal degree > sqrt(n)/2,
/// by class-size summation over cycle types. Guarded by
/// partition_count(n) <= 1e5.
BigInt frak_m_size(unsigned n);

/// Permutations of S_m with all cycle lengths <= r.
BigInt count_bounded_cycles(unsigned m, unsigned r);

/// Permutations of S_n with sigma^nu = 1 (cycle lengths dividing nu).
BigInt count_nu_roots(unsigned n, uint64_t nu);

/// k(N) = #{(nu, sigma) : 1 <= nu <= N, sigma^nu = 1}. Internally cached on
/// the set of divisors of nu that are <= n, the only thing count_nu_roots
/// depends on.
BigInt k_of_n_roots(unsigned n, uint64_t N);

unsigned divisor_count(uint64_t nu);

/// Truncated generation-probability series. generators == 2 uses
/// 1 - 1/n - 1/n^2 - 4/n^3 - 23/n^4 - 171/n^5 - 1542/n^6 (order <= 6);
/// generators == 3 uses 1 - 1/n^2 - 3/n^4 - 6/n^5 (order <= 5).
double dixon_series(unsigned n, unsigned order, unsigned generators = 2);

struct DensityRow {
  unsigned n = 0;
  BigRat prime_reciprocal_sum;  // sum of 1/p over the window
  bool holds = false;           // certified: sum >= 1/(2 ln n)
};

/// Report rows for every n <= n_max with a nonempty prime window, judged
/// independently. Report-only; the inequality is asymptotic.
std::vector<DensityRow> frak_c_density_check(unsigned n_max);

struct BoundedCycleRow {
  unsigned m = 0, r = 0;
  BigInt count;
  bool holds = false;  // count <= (2r/m)^(m/2r) * m!, compared exactly
};

/// Checks the no-long-cycle bound for all m <= m_max, r <= m/2. The
/// fractional power is removed by raising both sides to the 2r-th power, so
/// the comparison is exact.
std::vector<BoundedCycleRow> bounded_cycle_bound_check(unsigned m_max);

}  // namespace permgen
