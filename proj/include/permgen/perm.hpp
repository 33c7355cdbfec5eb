#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permgen/rng.hpp"

namespace permgen {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Permutation of {1..n}.
///
/// Composition convention, fixed project-wide: (p * q)(i) = p(q(i)), i.e. the
/// right factor acts first. A product written "p s^i" in prose is
/// compose(p, power(s, i)) here. Points are 1-based in every text format and
/// 0-based in storage.
class Perm {
 public:
  Perm() = default;
  explicit Perm(unsigned n) : img_(n) {
    for (unsigned i = 0; i < n; ++i) img_[i] = i;
  }

  /// Validates that `images` is a bijection of {0..n-1}; throws
  /// std::invalid_argument otherwise.
  static Perm from_images(std::vector<uint32_t> images);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  uint32_t operator()(uint32_t i) const { return img_[i]; }
  const std::vector<uint32_t>& images() const { return img_; }
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<uint32_t> img_;
};

/// Multiset of cycle lengths, stored weakly decreasing. Fixed points count
/// as 1-cycles, so the parts always sum to the degree.
struct CycleType {
  std::vector<uint32_t> parts;

  unsigned n() const;
  /// counts[j] = number of j-cycles, for 1 <= j <= n.
  std::vector<uint32_t> counts() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
/// p^k for any integer k, computed cycle-wise in O(n) independent of |k|.
Perm power(const Perm& p, long long k);
Perm power(const Perm& p, const BigInt& k);
/// g p g^{-1}
Perm conjugate(const Perm& p, const Perm& g);

/// All cycles (fixed points included), each starting at its smallest point,
/// ordered by that point.
std::vector<std::vector<uint32_t>> cycles(const Perm& p);
CycleType cycle_type(const Perm& p);
BigInt order(const Perm& p);
BigInt order(const CycleType& t);
unsigned fixed_points(const Perm& p);
bool is_even(const Perm& p);

/// Marker for the minimal degree of the trivial cyclic group: the identity
/// has no nontrivial power, so the minimum is vacuous.
inline constexpr uint32_t kUnboundedDegree = UINT32_MAX;

/// Minimal degree of <p>: the fewest points moved by a nontrivial power.
/// Computed from the cycle type alone: for each prime q dividing the order,
/// the power p^(ord/q) moves exactly the points on cycles whose length has
/// maximal q-adic valuation, and every nontrivial power moves at least as
/// many points as one of these.
uint32_t min_degree_cyclic(const CycleType& t);
uint32_t min_degree_cyclic(const Perm& p);

/// Does some cycle length lie in `primes`? Callers pass the degree's prime
/// window (see counting::pi_n). Membership depends only on the cycle type.
bool in_frak_c(const CycleType& t, const std::vector<uint32_t>& primes);
bool in_frak_c(const Perm& p, const std::vector<uint32_t>& primes);

/// min_degree_cyclic > sqrt(n)/2, compared exactly as 4*md^2 > n.
/// The identity passes vacuously.
bool in_frak_m(const CycleType& t, unsigned n);
bool in_frak_m(const Perm& p);

/// Accepts cycle notation "(1 2 3)(4 5)" (also "()" for the identity) or
/// one-line notation "2 3 1". The degree is always explicit.
Perm parse_perm(const std::string& text, unsigned n);
std::string format_cycles(const Perm& p);
std::string format_one_line(const Perm& p);

/// Uniform over S_n via Fisher-Yates; consumes exactly n-1 bounded draws.
Perm random_perm(Rng& rng, unsigned n);
/// Uniform over A_n by rejection on parity.
Perm random_even_perm(Rng& rng, unsigned n);

}  // namespace permgen
