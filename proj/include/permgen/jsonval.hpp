#pragma once

#include <string>

#include <json.hpp>

#include "permgen/perm.hpp"

namespace permgen {

/// Report convention: every numeric is wrapped in a kind tag. Exact
/// quantities travel as decimal strings under "exact-decimal"
/// ("num/den" for rationals) and are never serialized as JSON numbers;
/// measured or derived floating-point quantities use "float64".
inline nlohmann::json jexact(const BigInt& v) {
  return {{"kind", "exact-decimal"}, {"value", v.str()}};
}

inline nlohmann::json jexact(uint64_t v) { return jexact(BigInt(v)); }
inline nlohmann::json jexact(int64_t v) { return jexact(BigInt(v)); }
inline nlohmann::json jexact(int v) { return jexact(BigInt(v)); }
inline nlohmann::json jexact(unsigned v) { return jexact(BigInt(v)); }

inline nlohmann::json jexact(const BigRat& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return {{"kind", "exact-decimal"}, {"value", s}};
}

inline nlohmann::json jf64(double v) {
  return {{"kind", "float64"}, {"value", v}};
}

}  // namespace permgen
