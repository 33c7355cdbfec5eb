#include "permgen/partition.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace permgen {

std::string Partition::to_string() const {
  if (parts.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts[i]);
  }
  return s;
}

namespace {

void emit_partitions(unsigned remaining, uint32_t max_part, std::vector<uint32_t>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (uint32_t k = std::min<uint32_t>(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    emit_partitions(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<uint32_t> prefix;
  emit_partitions(n, n == 0 ? 1 : n, prefix, out);
  return out;
}

BigInt partition_count(unsigned n) {
  static std::mutex mu;
  static std::vector<BigInt> table{1};  // p(0) = 1
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    BigInt v = 0;
    for (unsigned k = 1;; ++k) {
      const unsigned long g1 = static_cast<unsigned long>(k) * (3 * k - 1) / 2;
      const unsigned long g2 = static_cast<unsigned long>(k) * (3 * k + 1) / 2;
      if (g1 > m) break;
      const int sign = (k % 2) ? 1 : -1;
      v += sign * table[m - g1];
      if (g2 <= m) v += sign * table[m - g2];
    }
    table.push_back(v);
  }
  return table[n];
}

Partition conjugate_partition(const Partition& lam) {
  Partition out;
  if (lam.parts.empty()) return out;
  out.parts.resize(lam.parts[0]);
  for (uint32_t j = 0; j < lam.parts[0]; ++j) {
    uint32_t count = 0;
    for (uint32_t part : lam.parts)
      if (part > j) ++count;
    out.parts[j] = count;
  }
  return out;
}

std::vector<uint32_t> hook_lengths(const Partition& lam) {
  const Partition conj = conjugate_partition(lam);
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < lam.parts.size(); ++i)
    for (uint32_t j = 0; j < lam.parts[i]; ++j)
      out.push_back((lam.parts[i] - j) + (conj.parts[j] - i) - 1);
  return out;
}

std::vector<RimHook> rim_hooks(const Partition& lam, uint32_t r) {
  std::vector<RimHook> out;
  if (r == 0 || lam.parts.empty()) return out;
  const size_t l = lam.parts.size();
  // beta[i] = lam[i] + (l-1-i); strictly decreasing, all >= 1.
  std::vector<int64_t> beta(l);
  for (size_t i = 0; i < l; ++i) beta[i] = static_cast<int64_t>(lam.parts[i]) + (l - 1 - i);

  for (size_t i = 0; i < l; ++i) {
    const int64_t target = beta[i] - static_cast<int64_t>(r);
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;

    RimHook hook;
    hook.length = r;
    uint32_t crossings = 0;  // beta numbers strictly between target and beta[i]
    std::vector<int64_t> nb;
    nb.reserve(l);
    for (size_t k = 0; k < l; ++k) {
      if (k == i) continue;
      if (beta[k] > target && beta[k] < beta[i]) ++crossings;
      nb.push_back(beta[k]);
    }
    nb.push_back(target);
    std::sort(nb.begin(), nb.end(), std::greater<>());
    hook.leg_length = crossings;
    for (size_t k = 0; k < l; ++k) {
      const int64_t part = nb[k] - static_cast<int64_t>(l - 1 - k);
      if (part > 0) hook.remainder.parts.push_back(static_cast<uint32_t>(part));
    }
    // Cells are the diagram difference lam \ remainder.
    for (uint32_t row = 0; row < l; ++row) {
      const uint32_t lo =
          row < hook.remainder.parts.size() ? hook.remainder.parts[row] : 0;
      for (uint32_t col = lo; col < lam.parts[row]; ++col)
        hook.cells.emplace_back(row, col);
    }
    out.push_back(std::move(hook));
  }
  return out;
}

}  // namespace permgen
