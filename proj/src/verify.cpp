#include "permgen/verify.hpp"

#include <algorithm>

#include "permgen/certified.hpp"
#include "permgen/character.hpp"
#include "permgen/counting.hpp"
#include "permgen/experiments.hpp"
#include "permgen/jsonval.hpp"
#include "permgen/partition.hpp"

namespace permgen {

nlohmann::json CheckResult::to_json() const {
  return {{"suite", suite},
          {"check", name},
          {"pass", pass},
          {"report_only", report_only},
          {"detail", detail}};
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.report_only && !r.pass) return false;
  return true;
}

namespace {

CycleType as_type(const Partition& p) { return CycleType{p.parts}; }

CheckResult check(std::string suite, std::string name, bool pass,
                  nlohmann::json detail = {}) {
  return CheckResult{std::move(suite), std::move(name), pass, false, std::move(detail)};
}

CheckResult report(std::string suite, std::string name, nlohmann::json detail) {
  return CheckResult{std::move(suite), std::move(name), true, true, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> verify_chars(const VerifyLimits& limits) {
  std::vector<CheckResult> out;
  const unsigned nmax = limits.chars_nmax;

  {
    bool ok = true;
    for (unsigned n = 0; n <= nmax + 2; ++n)
      if (partition_count(n) != partitions(n).size()) ok = false;
    out.push_back(check("chars", "partition-count-recurrence", ok,
                        {{"nmax", jexact(nmax + 2)}}));
  }
  {
    bool ok = true;
    for (unsigned n = 1; n <= std::max(nmax, 12u); ++n) {
      BigInt sum = 0;
      for (const Partition& lam : partitions(n)) {
        const BigInt d = dimension(lam);
        sum += d * d;
      }
      if (sum != factorial(n)) ok = false;
    }
    out.push_back(check("chars", "sum-squared-dimensions", ok,
                        {{"nmax", jexact(std::max(nmax, 12u))}}));
  }
  {
    bool ok = true;
    for (unsigned n = 1; n <= nmax; ++n) {
      CharacterEvaluator ev;
      const CycleType ones{std::vector<uint32_t>(n, 1)};
      for (const Partition& lam : partitions(n))
        if (dimension(lam) != ev.value(lam, ones)) ok = false;
    }
    out.push_back(check("chars", "hook-formula-vs-identity-column", ok,
                        {{"nmax", jexact(nmax)}}));
  }
  {
    bool rows_ok = true, cols_ok = true;
    for (unsigned n = 1; n <= nmax; ++n) {
      const auto parts = partitions(n);
      const auto table = character_table(n, limits.workers);
      const size_t m = parts.size();
      std::vector<BigInt> sizes(m);
      for (size_t c = 0; c < m; ++c) sizes[c] = class_size(as_type(parts[c]));
      for (size_t r1 = 0; r1 < m; ++r1)
        for (size_t r2 = r1; r2 < m; ++r2) {
          BigInt sum = 0;
          for (size_t c = 0; c < m; ++c) sum += sizes[c] * table[r1][c] * table[r2][c];
          if (sum != (r1 == r2 ? factorial(n) : BigInt(0))) rows_ok = false;
        }
      for (size_t c1 = 0; c1 < m; ++c1)
        for (size_t c2 = c1; c2 < m; ++c2) {
          BigInt sum = 0;
          for (size_t r = 0; r < m; ++r) sum += table[r][c1] * table[r][c2];
          if (sum != (c1 == c2 ? BigInt(factorial(n) / sizes[c1]) : BigInt(0)))
            cols_ok = false;
        }
    }
    out.push_back(check("chars", "row-orthogonality", rows_ok, {{"nmax", jexact(nmax)}}));
    out.push_back(check("chars", "column-orthogonality", cols_ok, {{"nmax", jexact(nmax)}}));
  }
  {
    bool ok = true;
    Rng rng(2718);
    for (int trial = 0; trial < 24; ++trial) {
      const unsigned n = 2 + static_cast<unsigned>(rng.below(std::min(nmax, 10u) - 1));
      const auto parts = partitions(n);
      const Partition& lam = parts[rng.below(parts.size())];
      const Partition& cls = parts[rng.below(parts.size())];
      CharacterEvaluator big(CharacterEvaluator::RemovalOrder::LargestFirst);
      CharacterEvaluator small(CharacterEvaluator::RemovalOrder::SmallestFirst);
      if (big.value(lam, as_type(cls)) != small.value(lam, as_type(cls))) ok = false;
    }
    out.push_back(check("chars", "removal-order-independence", ok, {}));
  }
  {
    const unsigned n = std::min(nmax + 4, 14u);
    const auto survey = character_bound_survey(n, limits.workers);
    out.push_back(report("chars", "character-bound-survey",
                         {{"n", jexact(n)},
                          {"checked", jexact(survey.checked)},
                          {"violations", jexact(static_cast<uint64_t>(survey.violations.size()))}}));
  }
  return out;
}

std::vector<CheckResult> verify_lambda(const VerifyLimits& limits) {
  std::vector<CheckResult> out;

  {
    bool ok = true;
    uint64_t compared = 0;
    for (unsigned n = 2; n <= limits.lambda_nmax; ++n) {
      std::vector<uint32_t> ps = pi_n(n);
      if (n == 10) ps.push_back(7);  // figure illustration: outside the window
      for (uint32_t p : ps) {
        const auto closed = lambda_np(n, p);
        const auto scan = lambda_np_scan(n, p);
        if (closed.size() != scan.size() || closed.size() != p - 1) ok = false;
        for (size_t i = 0; i < std::min(closed.size(), scan.size()); ++i) {
          if (closed[i].lambda != scan[i].lambda ||
              closed[i].hook.leg_length != scan[i].hook.leg_length)
            ok = false;
          ++compared;
        }
      }
    }
    out.push_back(check("lambda", "closed-form-vs-rim-hook-scan", ok,
                        {{"nmax", jexact(limits.lambda_nmax)}, {"compared", jexact(compared)}}));
  }
  {
    const auto entries = lambda_np(10, 7);
    int with_row = 0, without_row = 0;
    for (const auto& e : entries) (e.lambda.parts[0] > 3 ? with_row : without_row)++;
    out.push_back(check("lambda", "ten-seven-two-families",
                        entries.size() == 6 && with_row == 3 && without_row == 3,
                        {{"size", jexact(static_cast<uint64_t>(entries.size()))}}));
  }
  for (unsigned n : {9u, 12u}) {
    // Class-sum identity: over classes with a window-prime cycle,
    // sum |C| chi^lam(C) = +-n!/p on the distinguished shapes, n!/p at (n),
    // and 0 elsewhere.
    const uint32_t p = pi_n(n).at(0);
    const auto entries = lambda_np(n, p);
    CharacterEvaluator ev;
    bool ok = true;
    for (const Partition& lam : partitions(n)) {
      BigInt lhs = 0;
      for (const Partition& cls : partitions(n)) {
        const CycleType t = as_type(cls);
        if (std::find(t.parts.begin(), t.parts.end(), p) == t.parts.end()) continue;
        lhs += class_size(t) * ev.value(lam, t);
      }
      BigInt expected = 0;
      if (lam.parts == std::vector<uint32_t>{n}) {
        expected = factorial(n) / p;
      } else {
        for (const auto& e : entries)
          if (e.lambda == lam)
            expected = (e.hook.leg_length % 2) ? -BigInt(factorial(n) / p)
                                               : BigInt(factorial(n) / p);
      }
      if (lhs != expected) ok = false;
    }
    out.push_back(check("lambda", "class-sum-identity-n" + std::to_string(n), ok,
                        {{"p", jexact(static_cast<uint64_t>(p))}}));
  }
  for (unsigned n : {9u, 12u}) {
    const auto primes = pi_n(n);
    auto pred = [&](const CycleType& t) { return in_frak_c(t, primes); };
    bool ok = true;
    for (const Partition& lam : partitions(n))
      if (frak_c_inner_product(lam, n) != inner_product_indicator(lam, pred, n)) ok = false;
    out.push_back(check("lambda", "inner-product-vs-class-sum-n" + std::to_string(n), ok, {}));
  }
  for (unsigned n : {9u, 12u}) {
    BigRat sum = 0;
    for (const Partition& lam : partitions(n)) {
      const BigRat v = frak_c_inner_product(lam, n);
      sum += v * v;
    }
    const BigRat expected(frak_c_size(n), factorial(n));
    out.push_back(check("lambda", "parseval-n" + std::to_string(n), sum == expected,
                        {{"value", jexact(sum)}}));
  }
  {
    bool exp_ok = true, binom_ok = true;
    uint64_t rows = 0;
    for (unsigned n = 12; n <= limits.dim_bound_nmax; ++n) {
      for (const auto& row : dim_lower_bound_check(n)) {
        if (!row.exp_quarter_ok) exp_ok = false;
        if (!row.binomial_ok) binom_ok = false;
        ++rows;
      }
    }
    out.push_back(check("lambda", "dimension-exp-quarter-bound", exp_ok,
                        {{"nmax", jexact(limits.dim_bound_nmax)}, {"rows", jexact(rows)}}));
    out.push_back(check("lambda", "dimension-binomial-bound", binom_ok,
                        {{"nmax", jexact(limits.dim_bound_nmax)}, {"rows", jexact(rows)}}));
  }
  return out;
}

std::vector<CheckResult> verify_counting(const VerifyLimits& limits) {
  std::vector<CheckResult> out;

  out.push_back(check("counting", "prime-windows",
                      pi_n(12) == std::vector<uint32_t>{7} && pi_n(8).empty() &&
                          pi_n(9) == std::vector<uint32_t>{5} &&
                          pi_n(84) == std::vector<uint32_t>{43, 47},
                      {}));
  {
    bool ok = frak_c_size(12) == 68428800 && frak_c_size(8) == 0;
    for (unsigned n : {9u, 12u, 19u}) {
      const auto primes = pi_n(n);
      BigInt by_classes = 0;
      for (const Partition& t : partitions(n))
        if (in_frak_c(as_type(t), primes)) by_classes += class_size(as_type(t));
      if (by_classes != frak_c_size(n)) ok = false;
    }
    out.push_back(check("counting", "frak-c-size-vs-class-sum", ok,
                        {{"n12", jexact(frak_c_size(12))}}));
  }
  {
    // Independent oracle: filter every permutation of S_n directly.
    bool ok = true;
    for (unsigned n = 2; n <= 7; ++n) {
      std::vector<uint32_t> img(n);
      for (uint32_t i = 0; i < n; ++i) img[i] = i;
      BigInt direct = 0;
      do {
        if (in_frak_m(Perm::from_images(img))) ++direct;
      } while (std::next_permutation(img.begin(), img.end()));
      if (direct != frak_m_size(n)) ok = false;
    }
    out.push_back(check("counting", "frak-m-size-vs-element-filter", ok, {{"nmax", jexact(7)}}));
  }
  {
    bool ok = count_nu_roots(4, 2) == 10 && count_nu_roots(3, 3) == 3 &&
              count_bounded_cycles(4, 2) == 10 && count_bounded_cycles(5, 1) == 1 &&
              k_of_n_roots(3, 6) == 19 && divisor_count(12) == 6;
    for (unsigned n = 1; n <= 12 && ok; ++n)
      for (uint64_t nu = 1; nu <= 30; ++nu) {
        BigInt by_classes = 0;
        for (const Partition& t : partitions(n)) {
          bool all = true;
          for (uint32_t part : t.parts)
            if (nu % part) all = false;
          if (all) by_classes += class_size(as_type(t));
        }
        if (by_classes != count_nu_roots(n, nu)) ok = false;
      }
    out.push_back(check("counting", "nu-roots-dp-vs-class-sum", ok, {}));
  }
  {
    bool ok = true;
    for (auto [n, N] : {std::pair<unsigned, uint64_t>{5, 25}, {7, 49}, {9, 81}})
      if (k_of_n_roots(n, N) < (factorial(n) / n) * (N / n)) ok = false;
    out.push_back(check("counting", "k-of-n-full-cycle-lower-bound", ok, {}));
  }
  {
    const auto rows = bounded_cycle_bound_check(limits.counting_mmax);
    bool ok = !rows.empty();
    for (const auto& row : rows)
      if (!row.holds) ok = false;
    out.push_back(check("counting", "bounded-cycle-inequality", ok,
                        {{"mmax", jexact(limits.counting_mmax)},
                         {"rows", jexact(static_cast<uint64_t>(rows.size()))}}));
  }
  {
    bool ok = true;
    for (unsigned m = 2; m <= 12; ++m)
      for (unsigned r = 1; r < m; ++r)
        if (count_bounded_cycles(m, r) > count_bounded_cycles(m, r + 1)) ok = false;
    if (k_of_n_roots(5, 26) < k_of_n_roots(5, 25)) ok = false;
    if (k_of_n_roots(6, 25) < k_of_n_roots(5, 25)) ok = false;
    out.push_back(check("counting", "monotonicity", ok, {}));
  }
  {
    const auto rows = frak_c_density_check(limits.density_nmax);
    unsigned first_hold = 0;
    unsigned holds = 0;
    for (const auto& row : rows) {
      if (row.holds) {
        ++holds;
        if (first_hold == 0) first_hold = row.n;
      }
    }
    out.push_back(report("counting", "density-vs-half-log",
                         {{"nmax", jexact(limits.density_nmax)},
                          {"rows", jexact(static_cast<uint64_t>(rows.size()))},
                          {"holds", jexact(holds)},
                          {"first_hold", jexact(first_hold)},
                          {"note", "asymptotic claim; small-n failures expected"}}));
  }
  return out;
}

std::vector<CheckResult> verify_correlation(const VerifyLimits&) {
  std::vector<CheckResult> out;
  const unsigned n = 9;
  // Frozen expected values, computed once from the element-iteration route.
  const BigRat expected[3] = {BigRat(1, 25), BigRat(131, 3150), BigRat(403, 9450)};
  for (uint64_t nu = 1; nu <= 3; ++nu) {
    const auto q = exact_pair_correlation(n, nu);
    out.push_back(check(
        "correlation", "direct-vs-character-nu" + std::to_string(nu),
        q.direct == q.character && q.direct == expected[nu - 1],
        {{"direct", jexact(q.direct)}, {"character", jexact(q.character)}}));
  }
  {
    const auto q = exact_pair_correlation(n, 1);
    out.push_back(check("correlation", "trivial-character-term",
                        q.trivial_term == rat_pow(BigRat(frak_c_size(n), factorial(n)), 2),
                        {{"value", jexact(q.trivial_term)}}));
  }
  {
    // sigma^nu = 1 for every sigma when all cycle lengths <= n divide nu,
    // so both sides collapse to |C|/n!.
    uint64_t nu = 1;
    for (unsigned j = 2; j <= n; ++j) nu = std::lcm(nu, static_cast<uint64_t>(j));
    const auto q = exact_pair_correlation(n, nu);
    const BigRat density(frak_c_size(n), factorial(n));
    out.push_back(check("correlation", "identity-power-collapse",
                        q.direct == density && q.character == density,
                        {{"nu", jexact(nu)}}));
  }
  return out;
}

std::vector<CheckResult> verify_all(const VerifyLimits& limits) {
  std::vector<CheckResult> out;
  for (auto&& part : {verify_chars(limits), verify_lambda(limits),
                      verify_counting(limits), verify_correlation(limits)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace permgen
