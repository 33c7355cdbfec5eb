#include "permgen/certified.hpp"

#include <stdexcept>

namespace permgen {

std::pair<BigRat, BigRat> e_bounds(unsigned terms) {
  if (terms < 2) terms = 2;
  BigRat sum = 1;
  BigInt fact = 1;
  for (unsigned k = 1; k <= terms; ++k) {
    fact *= k;
    sum += BigRat(1, fact);
  }
  // Tail sum_{k>terms} 1/k! < 2/(terms+1)!.
  BigRat tail = BigRat(2, fact * (terms + 1));
  return {sum, sum + tail};
}

namespace {

// atanh(x) enclosure for rational 0 <= x < 1: partial sum plus tail bound
// x^(2J+3) / ((2J+3)(1-x^2)).
std::pair<BigRat, BigRat> atanh_bounds(const BigRat& x, unsigned terms) {
  BigRat sum = 0;
  BigRat xp = x;
  const BigRat x2 = x * x;
  for (unsigned j = 0; j <= terms; ++j) {
    sum += xp / (2 * j + 1);
    xp *= x2;
  }
  BigRat tail = xp / ((2 * terms + 3) * (1 - x2));
  return {sum, sum + tail};
}

}  // namespace

std::pair<BigRat, BigRat> ln_bounds(unsigned x, unsigned terms) {
  if (x < 1) throw std::invalid_argument("ln_bounds: x >= 1 required");
  if (x == 1) return {0, 0};
  unsigned a = 0;
  unsigned y = x;
  while (y >= 2) {
    y /= 2;
    ++a;
  }
  // x / 2^a in [1,2)
  const BigRat yr = BigRat(x) / (BigInt(1) << a);
  auto [l2lo, l2hi] = atanh_bounds(BigRat(1, 3), terms);  // ln 2 = 2 atanh(1/3)
  auto [ylo, yhi] = atanh_bounds((yr - 1) / (yr + 1), terms);
  return {2 * (a * l2lo + ylo), 2 * (a * l2hi + yhi)};
}

bool at_least_exp_quarter(const BigInt& d, unsigned n) {
  if (d <= 0) return false;
  const BigInt d4 = d * d * d * d;
  // d >= e^(n/4)  <=>  d^4 >= e^n. Almost every case is decided by bit
  // length against the certified enclosure
  // log2(e) in (14426950408889634, 14426950408889635) / 10^16:
  // d4 >= 2^bits, and bits >= n log2(e) forces d4 > e^n; symmetrically
  // d4 < 2^(bits+1) <= e^n when bits+1 <= n log2(e).
  if (d4 > 1) {
    const uint64_t bits = boost::multiprecision::msb(d4);
    const BigInt scale = BigInt("10000000000000000");
    if (BigInt(bits) * scale >= BigInt(n) * BigInt("14426950408889635")) return true;
    if (BigInt(bits + 1) * scale <= BigInt(n) * BigInt("14426950408889634")) return false;
  }
  for (unsigned terms = 24;; terms *= 2) {
    auto [lo, hi] = e_bounds(terms);
    if (BigRat(d4) >= rat_pow(hi, n)) return true;
    if (BigRat(d4) < rat_pow(lo, n)) return false;
    if (terms > 1u << 16) throw std::runtime_error("at_least_exp_quarter: no decision");
  }
}

bool meets_half_log_density(const BigRat& s, unsigned n) {
  if (n < 2) throw std::invalid_argument("meets_half_log_density: n >= 2 required");
  if (s <= 0) return false;
  for (unsigned terms = 16;; terms *= 2) {
    auto [lo, hi] = ln_bounds(n, terms);
    if (s >= BigRat(1) / (2 * lo)) return true;   // threshold upper bound
    if (s < BigRat(1) / (2 * hi)) return false;   // threshold lower bound
    if (terms > 1u << 16) throw std::runtime_error("meets_half_log_density: no decision");
  }
}

}  // namespace permgen
