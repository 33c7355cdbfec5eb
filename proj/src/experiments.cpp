#include "permgen/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "permgen/certified.hpp"
#include "permgen/character.hpp"
#include "permgen/counting.hpp"
#include "permgen/jsonval.hpp"
#include "permgen/partition.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permgen {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Serial reference runner, kept as the baseline the parallel path is tested
// against.
template <class Acc, class Fn>
void run_trials_serial(uint64_t trials, Fn&& per_trial, Acc& acc) {
  for (uint64_t t = 0; t < trials; ++t) per_trial(t, acc);
}

// OpenMP runner. Thread-local accumulators are merged in thread-index order;
// every accumulator field is an integer count, so the merged result is
// identical to the serial loop for any thread count.
template <class Acc, class Fn>
void run_trials(uint64_t trials, int workers, Fn per_trial, Acc& acc) {
#ifdef _OPENMP
  if (workers != 1) {
    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
    std::vector<Acc> locals(nthreads, acc);
#pragma omp parallel num_threads(nthreads)
    {
      Acc& local = locals[omp_get_thread_num()];
#pragma omp for schedule(static)
      for (int64_t t = 0; t < static_cast<int64_t>(trials); ++t)
        per_trial(static_cast<uint64_t>(t), local);
    }
    for (const Acc& local : locals) acc.merge(local);
    return;
  }
#else
  (void)workers;
#endif
  run_trials_serial(trials, per_trial, acc);
}

constexpr double kZ95 = 1.959963984540054;

struct Interval {
  double low = 0, high = 0;
  bool wilson = false;
};

Interval confidence_interval(uint64_t successes, uint64_t trials) {
  const double t = static_cast<double>(trials);
  const double p = successes / t;
  if (successes >= 30 && trials - successes >= 30) {
    const double half = kZ95 * std::sqrt(p * (1 - p) / t);
    return {p - half, p + half, false};
  }
  // Wilson score interval for small counts.
  const double z2 = kZ95 * kZ95;
  const double denom = 1 + z2 / t;
  const double center = (p + z2 / (2 * t)) / denom;
  const double half = kZ95 * std::sqrt(p * (1 - p) / t + z2 / (4 * t * t)) / denom;
  return {center - half, center + half, true};
}

double sigma_distance(double estimate, double theoretical, uint64_t trials) {
  const double var = theoretical * (1 - theoretical) / static_cast<double>(trials);
  if (var <= 0) return estimate == theoretical ? 0 : std::numeric_limits<double>::infinity();
  return (estimate - theoretical) / std::sqrt(var);
}

nlohmann::json counts_json(const std::array<uint64_t, 4>& counts) {
  nlohmann::json out;
  for (int k = 0; k < 4; ++k)
    out[to_string(static_cast<GroupClass>(k))] = jexact(counts[k]);
  return out;
}

}  // namespace

nlohmann::json classification_json(const Classification& c) {
  nlohmann::json out{{"class", to_string(c.kind)}};
  switch (c.kind) {
    case GroupClass::Intransitive: {
      nlohmann::json sizes = nlohmann::json::array();
      for (const auto& orbit : c.orbit_partition)
        sizes.push_back(jexact(static_cast<uint64_t>(orbit.size())));
      out["orbit_sizes"] = sizes;
      break;
    }
    case GroupClass::TransitiveImprimitive: {
      nlohmann::json block = nlohmann::json::array();
      for (uint32_t x : c.block) block.push_back(jexact(static_cast<uint64_t>(x + 1)));
      out["block"] = block;
      break;
    }
    case GroupClass::AllOrAlternating:
      out["order"] = jexact(c.order);
      out["contains_odd"] = c.any_odd_generator;
      out["via_jordan"] = c.via_jordan;
      break;
    case GroupClass::PrimitiveProper:
      out["order"] = jexact(c.order);
      break;
  }
  return out;
}

nlohmann::json ExperimentConfig::to_json() const {
  return {
      {"n", jexact(n)},
      {"trials", jexact(trials)},
      {"seed", jexact(seed)},
      {"window", jexact(static_cast<uint64_t>(window))},
      {"generators", jexact(generators)},
      {"max_word_len", jexact(max_word_len)},
      {"group", std::string(1, group)},
      {"exhaustive", exhaustive},
  };
}

// ---------------------------------------------------------------------------
// estimate_p

namespace {

struct ClassCounts {
  std::array<uint64_t, 4> counts{};
  std::array<uint64_t, 4> first_trial{UINT64_MAX, UINT64_MAX, UINT64_MAX, UINT64_MAX};
  void record(uint64_t trial, GroupClass kind) {
    const int k = static_cast<int>(kind);
    ++counts[k];
    first_trial[k] = std::min(first_trial[k], trial);
  }
  void merge(const ClassCounts& o) {
    for (int k = 0; k < 4; ++k) {
      counts[k] += o.counts[k];
      first_trial[k] = std::min(first_trial[k], o.first_trial[k]);
    }
  }
};

}  // namespace

EstimateReport estimate_p(const ExperimentConfig& config) {
  const auto start = Clock::now();
  if (config.n < 2) throw std::invalid_argument("estimate_p: n >= 2 required");
  if (config.generators != 2 && config.generators != 3)
    throw std::invalid_argument("estimate_p: generators must be 2 or 3");
  if (config.group != 'S' && config.group != 'A')
    throw std::invalid_argument("estimate_p: group must be 'S' or 'A'");
  if (config.exhaustive && config.n > 4)
    throw std::invalid_argument("estimate_p: exhaustive mode guard (n <= 4) exceeded");

  EstimateReport report;
  report.config = config;
  ClassCounts acc;

  if (config.exhaustive) {
    std::vector<Perm> elements;
    {
      std::vector<uint32_t> img(config.n);
      for (uint32_t i = 0; i < config.n; ++i) img[i] = i;
      do {
        Perm p = Perm::from_images(img);
        if (config.group == 'A' && !is_even(p)) continue;
        elements.push_back(std::move(p));
      } while (std::next_permutation(img.begin(), img.end()));
    }
    uint64_t total = 1;
    for (unsigned g = 0; g < config.generators; ++g) total *= elements.size();
    auto per_tuple = [&](uint64_t t, ClassCounts& local) {
      std::vector<Perm> tuple;
      uint64_t rest = t;
      for (unsigned g = 0; g < config.generators; ++g) {
        tuple.push_back(elements[rest % elements.size()]);
        rest /= elements.size();
      }
      local.record(t, classify_tuple(tuple).kind);
    };
    run_trials(total, config.workers, per_tuple, acc);
    report.trials = total;
  } else {
    const unsigned n = config.n;
    const unsigned gens = config.generators;
    const char group = config.group;
    const uint64_t seed = config.seed;
    auto per_trial = [n, gens, group, seed](uint64_t t, ClassCounts& local) {
      Rng rng(seed, t);
      std::vector<Perm> tuple;
      tuple.reserve(gens);
      for (unsigned g = 0; g < gens; ++g)
        tuple.push_back(group == 'A' ? random_even_perm(rng, n) : random_perm(rng, n));
      local.record(t, classify_tuple(tuple).kind);
    };
    run_trials(config.trials, config.workers, per_trial, acc);
    report.trials = config.trials;
  }

  report.counts = acc.counts;
  report.first_trial = acc.first_trial;
  // Re-derive one witness per observed outcome from its first trial index;
  // deterministic because trials are keyed by index, not by schedule.
  for (int k = 0; k < 4; ++k) {
    const uint64_t t = acc.first_trial[k];
    if (t == UINT64_MAX) continue;
    std::vector<Perm> tuple;
    if (config.exhaustive) {
      std::vector<Perm> elements;
      std::vector<uint32_t> img(config.n);
      for (uint32_t i = 0; i < config.n; ++i) img[i] = i;
      do {
        Perm p = Perm::from_images(img);
        if (config.group == 'A' && !is_even(p)) continue;
        elements.push_back(std::move(p));
      } while (std::next_permutation(img.begin(), img.end()));
      uint64_t rest = t;
      for (unsigned g = 0; g < config.generators; ++g) {
        tuple.push_back(elements[rest % elements.size()]);
        rest /= elements.size();
      }
    } else {
      Rng rng(config.seed, t);
      for (unsigned g = 0; g < config.generators; ++g)
        tuple.push_back(config.group == 'A' ? random_even_perm(rng, config.n)
                                            : random_perm(rng, config.n));
    }
    report.witnesses[k] = classification_json(classify_tuple(tuple));
  }
  const uint64_t hits = acc.counts[static_cast<int>(GroupClass::AllOrAlternating)];
  report.estimate = static_cast<double>(hits) / static_cast<double>(report.trials);
  report.std_error =
      std::sqrt(report.estimate * (1 - report.estimate) / static_cast<double>(report.trials));
  const Interval ci = confidence_interval(hits, report.trials);
  report.ci_low = ci.low;
  report.ci_high = ci.high;
  report.wilson = ci.wilson;
  report.theoretical = dixon_series(config.n, config.generators == 2 ? 6 : 5, config.generators);
  report.sigma_distance = sigma_distance(report.estimate, report.theoretical, report.trials);
  report.runtime_ms = ms_since(start);
  return report;
}

nlohmann::json EstimateReport::payload() const {
  return {
      {"experiment", "estimate"},
      {"config", config.to_json()},
      {"results",
       {
           {"trials", jexact(trials)},
           {"counts", counts_json(counts)},
           {"estimate", jf64(estimate)},
           {"std_error", jf64(std_error)},
           {"ci_low", jf64(ci_low)},
           {"ci_high", jf64(ci_high)},
           {"ci_method", wilson ? "wilson" : "normal"},
           {"witness_examples", [this] {
              nlohmann::json w;
              for (int k = 0; k < 4; ++k) {
                if (first_trial[k] == UINT64_MAX) continue;
                nlohmann::json entry = witnesses[k];
                entry["first_trial"] = jexact(first_trial[k]);
                w[to_string(static_cast<GroupClass>(k))] = entry;
              }
              return w;
            }()},
       }},
      {"oracle_comparison",
       {
           {"theoretical", jf64(theoretical)},
           {"sigma_distance", jf64(sigma_distance)},
           {"source", config.generators == 2 ? "series-order-6" : "series-order-5"},
       }},
  };
}

BigRat exact_p_small(unsigned n) {
  if (n > 6) throw std::invalid_argument("exact_p_small: guard n <= 6 exceeded");
  if (n < 2) throw std::invalid_argument("exact_p_small: n >= 2 required");
  std::vector<Perm> elements;
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = i;
  do elements.push_back(Perm::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));

  const BigInt half = factorial(n) / 2;
  uint64_t hits = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : hits)
#endif
  for (size_t a = 0; a < elements.size(); ++a)
    for (size_t b = 0; b < elements.size(); ++b)
      if (Bsgs::build({elements[a], elements[b]}, n).group_order() >= half) ++hits;
  return BigRat(hits, factorial(n) * factorial(n));
}

// ---------------------------------------------------------------------------
// second_moment_run

namespace {

struct MomentAcc {
  uint64_t sum_x = 0, sum_x2 = 0, zero = 0, draws = 0, violations = 0;
  std::map<uint32_t, uint64_t> hist;
  void merge(const MomentAcc& o) {
    sum_x += o.sum_x;
    sum_x2 += o.sum_x2;
    zero += o.zero;
    draws += o.draws;
    violations += o.violations;
    for (const auto& [x, c] : o.hist) hist[x] += c;
  }
};

}  // namespace

SecondMomentReport second_moment_run(const ExperimentConfig& config) {
  const auto start = Clock::now();
  const unsigned n = config.n;
  const uint32_t N = config.window;
  if (n < 2 || N < 1 || config.trials < 1)
    throw std::invalid_argument("second_moment_run: need n >= 2, window >= 1, trials >= 1");
  const auto primes = pi_n(n);
  if (primes.empty())
    throw std::invalid_argument("second_moment_run: empty prime window for this degree");

  const bool jordan = n >= 8;
  const uint64_t seed = config.seed;
  auto per_trial = [n, N, seed, jordan, &primes](uint64_t t, MomentAcc& acc) {
    Rng rng(seed, t);
    const Perm pi = random_perm(rng, n);
    uint64_t draws = 1;
    Perm sigma = random_perm(rng, n);
    while (!in_frak_m(sigma)) {
      sigma = random_perm(rng, n);
      ++draws;
    }
    uint32_t x_count = 0;
    Perm x = pi;
    for (uint32_t i = 0; i < N; ++i) {
      if (in_frak_c(x, primes)) ++x_count;
      if (i + 1 < N) x = compose(x, sigma);
    }
    acc.sum_x += x_count;
    acc.sum_x2 += static_cast<uint64_t>(x_count) * x_count;
    ++acc.hist[x_count];
    if (x_count == 0) ++acc.zero;
    acc.draws += draws;
    if (jordan && x_count > 0 &&
        classify_tuple({pi, sigma}).kind == GroupClass::PrimitiveProper)
      ++acc.violations;
  };

  MomentAcc acc;
  run_trials(config.trials, config.workers, per_trial, acc);

  SecondMomentReport report;
  report.config = config;
  report.sum_x = acc.sum_x;
  report.sum_x2 = acc.sum_x2;
  report.zero_trials = acc.zero;
  report.histogram = std::move(acc.hist);
  const double t = static_cast<double>(config.trials);
  report.mean = static_cast<double>(acc.sum_x) / t;
  report.variance =
      config.trials > 1
          ? (static_cast<double>(acc.sum_x2) - t * report.mean * report.mean) / (t - 1)
          : 0;
  report.p_zero = static_cast<double>(acc.zero) / t;
  report.chebyshev_bound =
      report.mean > 0 ? report.variance / (report.mean * report.mean) : 0;
  report.theoretical_mean = BigRat(BigInt(N) * frak_c_size(n), factorial(n));
  report.jordan_checked = jordan;
  report.jordan_violations = acc.violations;
  report.rejection_draws = acc.draws;
  report.runtime_ms = ms_since(start);
  return report;
}

nlohmann::json SecondMomentReport::payload() const {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [x, c] : histogram)
    hist.push_back({{"x", jexact(static_cast<uint64_t>(x))}, {"trials", jexact(c)}});
  return {
      {"experiment", "second-moment"},
      {"config", config.to_json()},
      {"results",
       {
           {"sum_x", jexact(sum_x)},
           {"sum_x2", jexact(sum_x2)},
           {"zero_trials", jexact(zero_trials)},
           {"mean", jf64(mean)},
           {"variance", jf64(variance)},
           {"p_zero", jf64(p_zero)},
           {"chebyshev_bound", jf64(chebyshev_bound)},
           {"histogram", hist},
           {"jordan_checked", jordan_checked},
           {"jordan_violations", jexact(jordan_violations)},
           {"rejection_draws", jexact(rejection_draws)},
       }},
      {"oracle_comparison",
       {
           {"theoretical_mean", jexact(theoretical_mean)},
           {"theoretical_mean_f64", jf64(static_cast<double>(theoretical_mean))},
       }},
  };
}

// ---------------------------------------------------------------------------
// exact_pair_correlation

namespace {

// Cycle type of degree <= 15 packed 4 bits per part, for fast class lookup.
uint64_t pack_type(const CycleType& t) {
  uint64_t key = 0;
  for (uint32_t part : t.parts) key = (key << 4) | part;
  return key;
}

Perm representative(const std::vector<uint32_t>& parts, unsigned n) {
  std::vector<uint32_t> img(n);
  uint32_t off = 0;
  for (uint32_t len : parts) {
    for (uint32_t i = 0; i < len; ++i) img[off + i] = off + (i + 1) % len;
    off += len;
  }
  return Perm::from_images(img);
}

}  // namespace

PairCorrelation exact_pair_correlation(unsigned n, uint64_t nu) {
  if (n > 10)
    throw std::invalid_argument("exact_pair_correlation: guard n <= 10 exceeded");
  if (nu < 1) throw std::invalid_argument("exact_pair_correlation: nu >= 1 required");
  const auto primes = pi_n(n);
  if (primes.empty())
    throw std::invalid_argument("exact_pair_correlation: empty prime window");

  const auto classes = partitions(n);
  const size_t m = classes.size();
  std::unordered_map<uint64_t, size_t> index;
  std::vector<BigInt> sizes(m);
  std::vector<char> in_c(m), in_m(m);
  std::vector<Perm> reps(m);
  for (size_t i = 0; i < m; ++i) {
    const CycleType t{classes[i].parts};
    index[pack_type(t)] = i;
    sizes[i] = class_size(t);
    in_c[i] = in_frak_c(t, primes);
    in_m[i] = in_frak_m(t, n);
    reps[i] = representative(classes[i].parts, n);
  }

  // g[i] = #{x in C-set : x * rep_i in C-set}, by iterating all of S_n once
  // per class. Pure element counting; no characters involved.
  std::vector<uint64_t> g(m, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (size_t i = 0; i < m; ++i) {
    const Perm& tau = reps[i];
    uint64_t count = 0;
    std::vector<uint32_t> img(n);
    for (uint32_t k = 0; k < n; ++k) img[k] = k;
    do {
      const Perm x = Perm::from_images(img);
      if (!in_c[index.at(pack_type(cycle_type(x)))]) continue;
      if (in_c[index.at(pack_type(cycle_type(compose(x, tau))))]) ++count;
    } while (std::next_permutation(img.begin(), img.end()));
    g[i] = count;
  }

  BigInt m_size = 0;
  for (size_t i = 0; i < m; ++i)
    if (in_m[i]) m_size += sizes[i];

  PairCorrelation out;

  // Direct: average g over sigma classes in the minimal-degree set, using
  // that the class of sigma^nu depends only on the class of sigma.
  BigInt direct_sum = 0;
  for (size_t i = 0; i < m; ++i) {
    if (!in_m[i]) continue;
    const size_t pow_class = index.at(pack_type(cycle_type(power(reps[i], BigInt(nu)))));
    direct_sum += sizes[i] * g[pow_class];
  }
  out.direct = BigRat(direct_sum, factorial(n) * m_size);

  // Character side: (n!/|M|) sum_chi <chi,1_C>^2 <chi,r_nu> / chi(1).
  CharacterEvaluator ev;
  BigRat char_sum = 0;
  for (const Partition& lam : classes) {
    BigInt ip_num = 0;  // n! <chi, 1_C>
    for (size_t c = 0; c < m; ++c)
      if (in_c[c]) ip_num += sizes[c] * ev.value(lam, CycleType{classes[c].parts});
    if (ip_num == 0) continue;
    BigInt r_num = 0;  // n! <chi, r_nu>
    for (size_t c = 0; c < m; ++c) {
      if (!in_m[c]) continue;
      const size_t pow_class = index.at(pack_type(cycle_type(power(reps[c], BigInt(nu)))));
      r_num += sizes[c] * ev.value(lam, CycleType{classes[pow_class].parts});
    }
    const BigRat ip = BigRat(ip_num, factorial(n));
    const BigRat r = BigRat(r_num, factorial(n));
    char_sum += ip * ip * r / BigRat(dimension(lam));
  }
  out.character = BigRat(factorial(n), m_size) * char_sum;
  out.trivial_term = rat_pow(BigRat(frak_c_size(n), factorial(n)), 2);
  return out;
}

// ---------------------------------------------------------------------------
// words

namespace {

constexpr char kLetters[4] = {'a', 'A', 'b', 'B'};

int letter_index(char c) {
  for (int i = 0; i < 4; ++i)
    if (kLetters[i] == c) return i;
  throw std::invalid_argument("word letter must be one of aAbB");
}

void enumerate_rec(unsigned max_len, std::string& cur, std::vector<ReducedWord>& out) {
  out.push_back(ReducedWord{cur});
  if (cur.size() == max_len) return;
  const int last = cur.empty() ? -1 : letter_index(cur.back());
  for (int l = 0; l < 4; ++l) {
    if (last >= 0 && (l ^ 1) == last) continue;  // inverse pairs: a<->A, b<->B
    cur.push_back(kLetters[l]);
    enumerate_rec(max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ReducedWord> enumerate_words(unsigned max_len) {
  if (max_len > 12) throw std::invalid_argument("enumerate_words: guard max_len <= 12 exceeded");
  std::vector<ReducedWord> out;
  std::string cur;
  enumerate_rec(max_len, cur, out);
  return out;
}

Perm evaluate_word(const ReducedWord& w, const Perm& a, const Perm& b) {
  const Perm images[4] = {a, inverse(a), b, inverse(b)};
  Perm acc(a.degree());
  for (char c : w.letters) acc = compose(acc, images[letter_index(c)]);
  return acc;
}

namespace {

struct WordAcc {
  uint64_t sum_x = 0, sum_x2 = 0, zero = 0;
  std::vector<uint64_t> identity_hits;  // indexed by word length
  void merge(const WordAcc& o) {
    sum_x += o.sum_x;
    sum_x2 += o.sum_x2;
    zero += o.zero;
    if (identity_hits.size() < o.identity_hits.size())
      identity_hits.resize(o.identity_hits.size(), 0);
    for (size_t i = 0; i < o.identity_hits.size(); ++i) identity_hits[i] += o.identity_hits[i];
  }
};

}  // namespace

WordReport word_experiment(const ExperimentConfig& config) {
  const auto start = Clock::now();
  const unsigned n = config.n;
  const unsigned L = config.max_word_len;
  if (n < 2 || config.trials < 1)
    throw std::invalid_argument("word_experiment: need n >= 2 and trials >= 1");
  if (L > 12) throw std::invalid_argument("word_experiment: guard max_word_len <= 12 exceeded");
  const auto primes = pi_n(n);
  if (primes.empty())
    throw std::invalid_argument("word_experiment: empty prime window for this degree");

  const uint64_t seed = config.seed;
  auto per_trial = [n, L, seed, &primes](uint64_t t, WordAcc& acc) {
    Rng rng(seed, t);
    const Perm pi = random_perm(rng, n);
    const Perm s = random_perm(rng, n);
    const Perm tau = random_perm(rng, n);
    const Perm images[4] = {s, inverse(s), tau, inverse(tau)};

    if (acc.identity_hits.size() < L + 1) acc.identity_hits.resize(L + 1, 0);
    uint64_t x_count = 0;
    // Depth-first prefix walk: one composition per node. The node value is
    // pi * w(s,tau); w(s,tau) = 1 exactly when the node equals pi.
    struct Frame {
      Perm value;
      int last;
      unsigned depth;
    };
    std::vector<Frame> stack{{pi, -1, 0}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (in_frak_c(f.value, primes)) ++x_count;
      if (f.value == pi) ++acc.identity_hits[f.depth];
      if (f.depth == L) continue;
      for (int l = 3; l >= 0; --l) {
        if (f.last >= 0 && (l ^ 1) == f.last) continue;
        stack.push_back(Frame{compose(f.value, images[l]), l, f.depth + 1});
      }
    }
    acc.sum_x += x_count;
    acc.sum_x2 += x_count * x_count;
    if (x_count == 0) ++acc.zero;
  };

  WordAcc acc;
  acc.identity_hits.resize(L + 1, 0);
  run_trials(config.trials, config.workers, per_trial, acc);

  WordReport report;
  report.config = config;
  uint64_t words = 1, exact_len = 1;
  for (unsigned i = 1; i <= L; ++i) {
    exact_len = i == 1 ? 4 : exact_len * 3;
    words += exact_len;
  }
  report.words = words;                      // 2*3^L - 1
  report.words_exact_len = L == 0 ? 1 : exact_len;  // 4*3^(L-1)
  report.sum_x = acc.sum_x;
  report.sum_x2 = acc.sum_x2;
  report.zero_trials = acc.zero;
  report.identity_hits = std::move(acc.identity_hits);
  const double t = static_cast<double>(config.trials);
  report.mean = static_cast<double>(acc.sum_x) / t;
  report.variance =
      config.trials > 1
          ? (static_cast<double>(acc.sum_x2) - t * report.mean * report.mean) / (t - 1)
          : 0;
  report.p_zero = static_cast<double>(acc.zero) / t;
  report.theoretical_mean = BigRat(BigInt(words) * frak_c_size(n), factorial(n));
  report.runtime_ms = ms_since(start);
  return report;
}

nlohmann::json WordReport::payload() const {
  nlohmann::json ident = nlohmann::json::array();
  uint64_t count_len = 1;
  for (size_t len = 0; len < identity_hits.size(); ++len) {
    if (len == 1) count_len = 4;
    else if (len > 1) count_len *= 3;
    const uint64_t denom = config.trials * count_len;
    ident.push_back({
        {"length", jexact(static_cast<uint64_t>(len))},
        {"words_of_length", jexact(count_len)},
        {"identity_hits", jexact(identity_hits[len])},
        {"frequency", jf64(static_cast<double>(identity_hits[len]) / static_cast<double>(denom))},
    });
  }
  return {
      {"experiment", "words"},
      {"config", config.to_json()},
      {"results",
       {
           {"words_at_most", jexact(words)},
           {"words_exact_length", jexact(words_exact_len)},
           {"sum_x", jexact(sum_x)},
           {"sum_x2", jexact(sum_x2)},
           {"zero_trials", jexact(zero_trials)},
           {"mean", jf64(mean)},
           {"variance", jf64(variance)},
           {"p_zero", jf64(p_zero)},
           {"identity_by_length", ident},
       }},
      {"oracle_comparison",
       {
           {"theoretical_mean", jexact(theoretical_mean)},
           {"theoretical_mean_f64", jf64(static_cast<double>(theoretical_mean))},
       }},
  };
}

// ---------------------------------------------------------------------------
// min_degree_filter_stats

namespace {

struct FilterAcc {
  uint64_t members = 0, draws = 0;
  void merge(const FilterAcc& o) {
    members += o.members;
    draws += o.draws;
  }
};

}  // namespace

FilterStats min_degree_filter_stats(unsigned n, uint64_t trials, uint64_t seed,
                                    int workers) {
  const auto start = Clock::now();
  if (n < 2 || trials < 1)
    throw std::invalid_argument("min_degree_filter_stats: need n >= 2, trials >= 1");

  auto per_trial = [n, seed](uint64_t t, FilterAcc& acc) {
    Rng rng(seed, t);
    uint64_t draws = 1;
    Perm p = random_perm(rng, n);
    if (in_frak_m(p)) ++acc.members;
    while (!in_frak_m(p)) {
      p = random_perm(rng, n);
      ++draws;
    }
    acc.draws += draws;
  };

  FilterAcc acc;
  run_trials(trials, workers, per_trial, acc);

  FilterStats stats;
  stats.n = n;
  stats.trials = trials;
  stats.seed = seed;
  stats.members = acc.members;
  stats.total_draws = acc.draws;
  stats.fraction = static_cast<double>(acc.members) / static_cast<double>(trials);
  stats.mean_draws = static_cast<double>(acc.draws) / static_cast<double>(trials);
  if (partition_count(n) <= 100000) {
    stats.exact_available = true;
    const BigInt m_size = frak_m_size(n);
    stats.exact_fraction = BigRat(m_size, factorial(n));
    stats.expected_draws = BigRat(factorial(n), m_size);
    stats.sigma_distance = sigma_distance(
        stats.fraction, static_cast<double>(stats.exact_fraction), trials);
  }
  stats.runtime_ms = ms_since(start);
  return stats;
}

nlohmann::json FilterStats::payload() const {
  nlohmann::json out{
      {"experiment", "min-degree-filter"},
      {"config", {{"n", jexact(n)}, {"trials", jexact(trials)}, {"seed", jexact(seed)}}},
      {"results",
       {
           {"members", jexact(members)},
           {"total_draws", jexact(total_draws)},
           {"fraction", jf64(fraction)},
           {"mean_draws", jf64(mean_draws)},
       }},
  };
  if (exact_available) {
    out["oracle_comparison"] = {
        {"exact_fraction", jexact(exact_fraction)},
        {"expected_draws", jexact(expected_draws)},
        {"sigma_distance", jf64(sigma_distance)},
    };
  }
  return out;
}

}  // namespace permgen
