#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "permgen/partition.hpp"
#include "permgen/perm.hpp"

namespace permgen {

/// Conjugacy class size: n! / prod_j j^(c_j) c_j!.
BigInt class_size(const CycleType& t);

/// Exact irreducible character values by the rim-hook recursion. Values are
/// memoized on (remaining diagram, remaining cycle multiset), which is sound
/// because the value does not depend on the removal order. One evaluator per
/// thread; instances are not synchronized.
class CharacterEvaluator {
 public:
  enum class RemovalOrder { LargestFirst, SmallestFirst };
  explicit CharacterEvaluator(RemovalOrder order = RemovalOrder::LargestFirst)
      : order_(order) {}

  /// chi^lam on the class of cycle type t; requires |lam| == |t|.
  BigInt value(const Partition& lam, const CycleType& t);

 private:
  BigInt eval(const std::vector<uint32_t>& lam, std::vector<uint32_t> cycles);

  RemovalOrder order_;
  std::unordered_map<std::string, BigInt> memo_;
};

/// One-shot convenience wrapper around CharacterEvaluator.
BigInt mn_character(const Partition& lam, const CycleType& t);

/// chi^lam(1) by the hook length formula.
BigInt dimension(const Partition& lam);

/// Full table: rows follow partitions(n) (both as labels and as cycle
/// types). workers > 1 splits rows across OpenMP threads.
std::vector<std::vector<BigInt>> character_table(unsigned n, int workers = 1);

/// A partition lam != (n) admitting a p-rim hook whose removal leaves the
/// single row (n-p), together with that distinguished hook.
struct LambdaEntry {
  Partition lambda;
  RimHook hook;  // hook.leg_length carries the sign exponent
};

/// Closed-form list for primes n/2 < p < n: two-row-plus-column shapes
/// (l1, l2, 1^(n-l1-l2)) with either l1 = n-p, 1 <= l2 <= n-p, or
/// n-p < l1 <= p-1, l2 = n-p+1. Ordered reverse-lexicographically.
std::vector<LambdaEntry> lambda_np(unsigned n, uint32_t p);

/// Same set by scanning every partition of n for a qualifying rim hook.
/// Independent of the closed form; used to cross-check it.
std::vector<LambdaEntry> lambda_np_scan(unsigned n, uint32_t p);

/// <chi^lam, indicator of the prime-window cycle set> as an exact rational:
/// sum over applicable primes p of (-1)^leg / p, the reciprocal-prime sum for
/// lam = (n), and 0 otherwise.
BigRat frak_c_inner_product(const Partition& lam, unsigned n);

/// Brute-force inner product (1/n!) sum_C |C| chi^lam(C) [pred(C)] over all
/// classes; the oracle for frak_c_inner_product. Guarded by
/// partition_count(n) <= 1e5.
BigRat inner_product_indicator(const Partition& lam,
                               const std::function<bool(const CycleType&)>& pred,
                               unsigned n);

/// Character-bound exponent: 1/13 for fixed-point-free classes, otherwise
/// log(n/f) / (32 log n). f == n gives 0 (trivial bound).
double delta_exponent(unsigned n, unsigned fixed);

struct CharacterBoundViolation {
  Partition lambda;
  CycleType cls;
  BigInt chi_abs;
  double bound;
};

/// Diagnostic survey of |chi(C)| <= dim^(1-delta) over the full table.
/// Report-only: the bound is asymptotic, small-n violations are expected and
/// recorded, never asserted. Guarded at n <= 16.
struct CharacterBoundSurvey {
  unsigned n = 0;
  uint64_t checked = 0;
  std::vector<CharacterBoundViolation> violations;
};
CharacterBoundSurvey character_bound_survey(unsigned n, int workers = 1);

struct DimBoundRow {
  unsigned n = 0;
  uint32_t p = 0;
  Partition lambda;
  BigInt dim;
  bool exp_quarter_ok = false;  // dim >= e^(n/4), certified
  bool binomial_ok = false;     // n * dim >= C(n,p), exact
};

/// Both dimension lower bounds for every lam in lambda_np(n, p), p in the
/// prime window of n.
std::vector<DimBoundRow> dim_lower_bound_check(unsigned n);

}  // namespace permgen
