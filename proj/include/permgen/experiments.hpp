#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "permgen/group.hpp"
#include "permgen/perm.hpp"

namespace permgen {

/// Shared knobs for the sampled experiments. Per-trial randomness is always
/// Rng(seed, trial_index), so a report depends only on (config, seed) and
/// never on scheduling. workers == 1 runs the plain serial reference loop;
/// 0 uses all available threads.
struct ExperimentConfig {
  unsigned n = 2;
  uint64_t trials = 1;
  uint64_t seed = 1;
  uint32_t window = 1;        // N: length of the power walk
  unsigned generators = 2;    // 2 or 3
  unsigned max_word_len = 4;  // depth of the word tree
  char group = 'S';           // 'S' or 'A'
  int workers = 0;
  bool exhaustive = false;    // n <= 4: enumerate every tuple instead of sampling

  nlohmann::json to_json() const;
};

/// Tag-plus-witness serialization of a classification: orbit sizes, a proper
/// block, or the exact order (as a decimal string), depending on the kind.
nlohmann::json classification_json(const Classification& c);

struct EstimateReport {
  ExperimentConfig config;
  uint64_t trials = 0;                   // tuples examined (== config.trials unless exhaustive)
  std::array<uint64_t, 4> counts{};      // indexed by GroupClass
  // Lowest trial index observing each outcome, with its witness; indexes
  // align with counts. UINT64_MAX marks an unobserved outcome.
  std::array<uint64_t, 4> first_trial{};
  std::array<nlohmann::json, 4> witnesses{};
  double estimate = 0, std_error = 0, ci_low = 0, ci_high = 0;
  bool wilson = false;                   // Wilson interval used (small counts)
  double theoretical = 0;                // truncated series value
  double sigma_distance = 0;             // (estimate - theoretical) / binomial sigma
  double runtime_ms = 0;                 // volatile; excluded from payload()

  nlohmann::json payload() const;
};

/// Estimate the probability that a sampled tuple generates a group containing
/// the alternating group. group == 'A' samples from A_n instead of S_n.
EstimateReport estimate_p(const ExperimentConfig& config);

/// Exact value of the pair probability by exhausting all n!^2 ordered pairs
/// with the order oracle. Guarded at n <= 6.
BigRat exact_p_small(unsigned n);

struct SecondMomentReport {
  ExperimentConfig config;
  uint64_t sum_x = 0, sum_x2 = 0, zero_trials = 0;
  std::map<uint32_t, uint64_t> histogram;  // X value -> trials
  double mean = 0, variance = 0, p_zero = 0;
  double chebyshev_bound = 0;      // empirical Var/mean^2
  BigRat theoretical_mean;         // N |C| / n!
  bool jordan_checked = false;     // only meaningful for n >= 8
  uint64_t jordan_violations = 0;  // trials with X > 0 classified PrimitiveProper
  uint64_t rejection_draws = 0;    // total draws spent sampling sigma
  double runtime_ms = 0;

  nlohmann::json payload() const;
};

/// Walk x <- x*sigma from x = pi for N steps, counting visits to the
/// prime-window cycle set; sigma is rejection-sampled from the small
/// minimal-degree set, pi is uniform.
SecondMomentReport second_moment_run(const ExperimentConfig& config);

struct PairCorrelation {
  BigRat direct;        // element-iteration count, no character theory
  BigRat character;     // the character-expansion value
  BigRat trivial_term;  // contribution of the trivial character: (|C|/n!)^2
};

/// Both sides of the exact correlation identity for the pair
/// (x, x*sigma^nu) with x uniform and sigma from the minimal-degree set.
/// Guarded at n <= 10 where the direct element iteration is feasible.
PairCorrelation exact_pair_correlation(unsigned n, uint64_t nu);

/// Freely reduced word over {a, a^-1, b, b^-1}, spelled "aAbB".
struct ReducedWord {
  std::string letters;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

/// All reduced words of length <= max_len (2*3^max_len - 1 of them), depth
/// first in letter order a < a^-1 < b < b^-1. Guarded at max_len <= 12.
std::vector<ReducedWord> enumerate_words(unsigned max_len);

/// Left-to-right product of letter images under the global convention.
Perm evaluate_word(const ReducedWord& w, const Perm& a, const Perm& b);

struct WordReport {
  ExperimentConfig config;
  uint64_t words = 0;               // words of length <= max_word_len: 2*3^L - 1
  uint64_t words_exact_len = 0;     // of length exactly L: 4*3^(L-1)
  uint64_t sum_x = 0, sum_x2 = 0, zero_trials = 0;
  double mean = 0, variance = 0, p_zero = 0;
  BigRat theoretical_mean;          // words * |C| / n!
  std::vector<uint64_t> identity_hits;  // per length: trials where w(s,t) = 1
  double runtime_ms = 0;

  nlohmann::json payload() const;
};

/// Prefix-tree walk over all reduced words w of length <= max_word_len,
/// counting w with pi*w(sigma,tau) in the prime-window set; sigma, tau
/// unrestricted uniform. One composition per tree node.
WordReport word_experiment(const ExperimentConfig& config);

struct FilterStats {
  unsigned n = 0;
  uint64_t trials = 0;
  uint64_t seed = 0;
  uint64_t members = 0;          // first draws landing in the set
  uint64_t total_draws = 0;      // across the rejection simulation
  double fraction = 0;           // members / trials
  double mean_draws = 0;         // total_draws / trials
  bool exact_available = false;
  BigRat exact_fraction;         // |M| / n!
  BigRat expected_draws;         // n! / |M|
  double sigma_distance = 0;
  double runtime_ms = 0;

  nlohmann::json payload() const;
};

/// Empirical density of the minimal-degree set and the rejection cost of
/// sampling from it, against the exact class-sum values where available.
FilterStats min_degree_filter_stats(unsigned n, uint64_t trials, uint64_t seed,
                                    int workers = 0);

}  // namespace permgen
