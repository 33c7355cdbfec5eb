#pragma once

#include <utility>

#include "permgen/perm.hpp"

namespace permgen {

/// x^e for exact rationals (numerator and denominator powered separately).
inline BigRat rat_pow(const BigRat& x, unsigned e) {
  using boost::multiprecision::pow;
  return BigRat(pow(boost::multiprecision::numerator(x), e),
                pow(boost::multiprecision::denominator(x), e));
}

/// Rational enclosure of e from the Taylor series with a remainder bound;
/// lo < e < hi.
std::pair<BigRat, BigRat> e_bounds(unsigned terms);

/// Rational enclosure of ln(x) for an integer x >= 1, via
/// ln(x) = a*ln(2) + 2*atanh((y-1)/(y+1)) with y = x/2^a in [1,2).
/// The atanh argument stays below 1/3 so `terms` partial-sum terms give a
/// 9^-terms tail. lo <= ln(x) <= hi.
std::pair<BigRat, BigRat> ln_bounds(unsigned x, unsigned terms);

/// Certified check d >= e^(n/4), decided by comparing d^4 against rational
/// powers enclosing e^n at increasing precision. Exactness of the inputs
/// makes the answer a certificate in both directions.
bool at_least_exp_quarter(const BigInt& d, unsigned n);

/// Certified check s >= 1/(2 ln n) for exact rational s and integer n >= 2.
bool meets_half_log_density(const BigRat& s, unsigned n);

}  // namespace permgen
