#include "permgen/character.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "permgen/certified.hpp"
#include "permgen/counting.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permgen {

BigInt class_size(const CycleType& t) {
  const unsigned n = t.n();
  BigInt denom = 1;
  uint32_t run_len = 0, run_count = 0;
  auto flush = [&] {
    for (uint32_t c = 1; c <= run_count; ++c) denom *= BigInt(run_len) * c;
  };
  for (uint32_t part : t.parts) {
    if (part == run_len) {
      ++run_count;
    } else {
      flush();
      run_len = part;
      run_count = 1;
    }
  }
  flush();
  return factorial(n) / denom;
}

namespace {

std::string memo_key(const std::vector<uint32_t>& lam, const std::vector<uint32_t>& cyc) {
  std::string key;
  key.reserve(2 * (lam.size() + cyc.size()) + 2);
  for (uint32_t v : lam) {
    key += static_cast<char>(v & 0xff);
    key += static_cast<char>((v >> 8) & 0xff);
  }
  key += '\xff';
  key += '\xff';
  for (uint32_t v : cyc) {
    key += static_cast<char>(v & 0xff);
    key += static_cast<char>((v >> 8) & 0xff);
  }
  return key;
}

}  // namespace

BigInt CharacterEvaluator::value(const Partition& lam, const CycleType& t) {
  if (lam.sum() != t.n())
    throw std::invalid_argument("character: |lambda| != |cycle type|");
  std::vector<uint32_t> cyc = t.parts;  // weakly decreasing
  return eval(lam.parts, std::move(cyc));
}

BigInt CharacterEvaluator::eval(const std::vector<uint32_t>& lam,
                                std::vector<uint32_t> cyc) {
  if (lam.empty()) return 1;  // cyc is empty too (sizes matched throughout)
  const std::string key = memo_key(lam, cyc);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  uint32_t q;
  if (order_ == RemovalOrder::LargestFirst) {
    q = cyc.front();
    cyc.erase(cyc.begin());
  } else {
    q = cyc.back();
    cyc.pop_back();
  }
  BigInt sum = 0;
  Partition shape{lam};
  for (const RimHook& h : rim_hooks(shape, q)) {
    const BigInt sub = eval(h.remainder.parts, cyc);
    sum += (h.leg_length % 2) ? -sub : sub;
  }
  memo_.emplace(key, sum);
  return sum;
}

BigInt mn_character(const Partition& lam, const CycleType& t) {
  CharacterEvaluator ev;
  return ev.value(lam, t);
}

BigInt dimension(const Partition& lam) {
  BigInt denom = 1;
  for (uint32_t h : hook_lengths(lam)) denom *= h;
  return factorial(lam.sum()) / denom;
}

std::vector<std::vector<BigInt>> character_table(unsigned n, int workers) {
  const auto parts = partitions(n);
  const size_t m = parts.size();
  std::vector<std::vector<BigInt>> table(m, std::vector<BigInt>(m));
#ifdef _OPENMP
  if (workers != 1) {
#pragma omp parallel for schedule(dynamic) num_threads(workers > 0 ? workers : omp_get_max_threads())
    for (size_t r = 0; r < m; ++r) {
      CharacterEvaluator ev;
      for (size_t c = 0; c < m; ++c)
        table[r][c] = ev.value(parts[r], CycleType{parts[c].parts});
    }
    return table;
  }
#else
  (void)workers;
#endif
  for (size_t r = 0; r < m; ++r) {
    CharacterEvaluator ev;
    for (size_t c = 0; c < m; ++c)
      table[r][c] = ev.value(parts[r], CycleType{parts[c].parts});
  }
  return table;
}

std::vector<LambdaEntry> lambda_np(unsigned n, uint32_t p) {
  {
    bool prime = p > 1;
    for (uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) throw std::invalid_argument("lambda_np: p must be prime");
  }
  if (2 * p <= n || p >= n)
    throw std::invalid_argument("lambda_np: need n/2 < p < n");

  auto entry_for = [&](std::vector<uint32_t> parts) {
    Partition lam{std::move(parts)};
    for (RimHook& h : rim_hooks(lam, p)) {
      if (h.remainder.parts == std::vector<uint32_t>{n - p})
        return LambdaEntry{std::move(lam), std::move(h)};
    }
    throw std::logic_error("lambda_np: constructed shape lacks its hook");
  };

  std::vector<LambdaEntry> out;
  // Reverse-lexicographic: the l2 = n-p+1 family first (larger first rows).
  for (uint32_t l1 = p - 1; l1 > n - p; --l1) {
    std::vector<uint32_t> parts{l1, n - p + 1};
    parts.insert(parts.end(), n - l1 - (n - p + 1), 1);
    out.push_back(entry_for(std::move(parts)));
  }
  for (uint32_t l2 = n - p; l2 >= 1; --l2) {
    std::vector<uint32_t> parts{n - p, l2};
    parts.insert(parts.end(), n - (n - p) - l2, 1);
    out.push_back(entry_for(std::move(parts)));
  }
  return out;
}

std::vector<LambdaEntry> lambda_np_scan(unsigned n, uint32_t p) {
  std::vector<LambdaEntry> out;
  const std::vector<uint32_t> target{n - p};
  for (Partition& lam : partitions(n)) {
    if (lam.parts == std::vector<uint32_t>{n}) continue;
    for (RimHook& h : rim_hooks(lam, p)) {
      if (h.remainder.parts == target) {
        out.push_back(LambdaEntry{std::move(lam), std::move(h)});
        break;
      }
    }
  }
  return out;
}

BigRat frak_c_inner_product(const Partition& lam, unsigned n) {
  const auto primes = pi_n(n);
  BigRat sum = 0;
  if (lam.parts == std::vector<uint32_t>{n}) {
    for (uint32_t p : primes) sum += BigRat(1, p);
    return sum;
  }
  for (uint32_t p : primes) {
    for (const LambdaEntry& e : lambda_np(n, p)) {
      if (e.lambda == lam) {
        sum += (e.hook.leg_length % 2) ? BigRat(-1, p) : BigRat(1, p);
        break;
      }
    }
  }
  return sum;
}

BigRat inner_product_indicator(const Partition& lam,
                               const std::function<bool(const CycleType&)>& pred,
                               unsigned n) {
  if (partition_count(n) > 100000)
    throw std::invalid_argument("inner_product_indicator: partition count guard (<= 1e5) exceeded");
  CharacterEvaluator ev;
  BigInt sum = 0;
  for (const Partition& cls : partitions(n)) {
    const CycleType t{cls.parts};
    if (!pred(t)) continue;
    sum += class_size(t) * ev.value(lam, t);
  }
  return BigRat(sum, factorial(n));
}

double delta_exponent(unsigned n, unsigned fixed) {
  if (fixed > n) throw std::invalid_argument("delta_exponent: f > n");
  if (fixed == 0) return 1.0 / 13.0;
  return std::log(static_cast<double>(n) / fixed) / (32.0 * std::log(static_cast<double>(n)));
}

CharacterBoundSurvey character_bound_survey(unsigned n, int workers) {
  if (n > 16)
    throw std::invalid_argument("character_bound_survey: guard n <= 16 exceeded");
  const auto parts = partitions(n);
  const auto table = character_table(n, workers);
  CharacterBoundSurvey survey;
  survey.n = n;
  for (size_t r = 0; r < parts.size(); ++r) {
    // dimension = value on (1^n), the last class in revlex order
    const double dim = static_cast<double>(table[r].back());
    for (size_t c = 0; c < parts.size(); ++c) {
      ++survey.checked;
      const CycleType t{parts[c].parts};
      unsigned fixed = 0;
      for (uint32_t part : t.parts)
        if (part == 1) ++fixed;
      const double delta = delta_exponent(n, fixed);
      const double bound = std::pow(dim, 1.0 - delta);
      BigInt chi_abs = boost::multiprecision::abs(table[r][c]);
      if (static_cast<double>(chi_abs) > bound + 1e-9) {
        survey.violations.push_back(
            CharacterBoundViolation{parts[r], t, chi_abs, bound});
      }
    }
  }
  return survey;
}

std::vector<DimBoundRow> dim_lower_bound_check(unsigned n) {
  std::vector<DimBoundRow> rows;
  for (uint32_t p : pi_n(n)) {
    auto entries = lambda_np(n, p);
    const size_t base = rows.size();
    rows.resize(base + entries.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < entries.size(); ++i) {
      DimBoundRow row;
      row.n = n;
      row.p = p;
      row.lambda = entries[i].lambda;
      row.dim = dimension(entries[i].lambda);
      row.exp_quarter_ok = at_least_exp_quarter(row.dim, n);
      row.binomial_ok = n * row.dim >= binomial(n, p);
      rows[base + i] = std::move(row);
    }
  }
  return rows;
}

}  // namespace permgen
