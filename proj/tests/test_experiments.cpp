#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "permgen/counting.hpp"
#include "permgen/experiments.hpp"

using namespace permgen;

TEST_CASE("exact_p_small") {
  CHECK(exact_p_small(2) == 1);
  CHECK(exact_p_small(3) == BigRat(26, 36));
  // regression constants from the first exhaustive computation
  CHECK(exact_p_small(4) == BigRat(13, 24));
  CHECK(exact_p_small(5) == BigRat(19, 30));
  CHECK_THROWS_AS(exact_p_small(7), std::invalid_argument);
}

TEST_CASE("estimate_p close to the exhaustive value at n = 3") {
  ExperimentConfig config;
  config.n = 3;
  config.trials = 100000;
  config.seed = 11;
  auto report = estimate_p(config);
  const double exact = static_cast<double>(exact_p_small(3));
  const double sigma = std::sqrt(exact * (1 - exact) / config.trials);
  CHECK(std::abs(report.estimate - exact) < 3 * sigma);
  CHECK(report.counts[0] + report.counts[1] + report.counts[2] + report.counts[3] ==
        report.trials);
}

TEST_CASE("estimate_p tracks exact_p_small at n = 5") {
  ExperimentConfig config;
  config.n = 5;
  config.trials = 100000;
  config.seed = 21;
  auto report = estimate_p(config);
  const double exact = static_cast<double>(exact_p_small(5));
  const double sigma = std::sqrt(exact * (1 - exact) / config.trials);
  CHECK(std::abs(report.estimate - exact) < 3 * sigma);
}

TEST_CASE("estimate_p exhaustive mode reproduces exact_p_small exactly") {
  for (unsigned n : {3u, 4u}) {
    ExperimentConfig config;
    config.n = n;
    config.exhaustive = true;
    auto report = estimate_p(config);
    CHECK(BigRat(report.counts[0], report.trials) == exact_p_small(n));
  }
  // Degenerate degree 2: the trivial group equals A_2 yet is intransitive,
  // so the four-way classification (orbits first) counts 3 of 4 pairs while
  // the order criterion counts all 4. Pin both behaviours.
  ExperimentConfig config;
  config.n = 2;
  config.exhaustive = true;
  auto report = estimate_p(config);
  CHECK(BigRat(report.counts[0], report.trials) == BigRat(3, 4));
  CHECK(exact_p_small(2) == 1);
}

TEST_CASE("estimate_p in A_n mode samples even tuples") {
  ExperimentConfig config;
  config.n = 4;
  config.trials = 2000;
  config.seed = 3;
  config.group = 'A';
  auto report = estimate_p(config);
  CHECK(report.trials == 2000);
  // A_4 pair generation probability: 96 of 144 pairs (exhaustive closure)
  ExperimentConfig ex = config;
  ex.exhaustive = true;
  auto exact = estimate_p(ex);
  CHECK(exact.trials == 144);
  CHECK(exact.counts[0] == 96);
  const double p = static_cast<double>(exact.counts[0]) / 144.0;
  const double sigma = std::sqrt(p * (1 - p) / config.trials);
  CHECK(std::abs(report.estimate - p) < 4 * sigma);
}

TEST_CASE("estimate_p argument guards") {
  ExperimentConfig config;
  config.n = 1;
  CHECK_THROWS_AS(estimate_p(config), std::invalid_argument);
  config.n = 3;
  config.generators = 4;
  CHECK_THROWS_AS(estimate_p(config), std::invalid_argument);
  config.generators = 2;
  config.group = 'X';
  CHECK_THROWS_AS(estimate_p(config), std::invalid_argument);
}

TEST_CASE("reports are byte-identical across worker counts") {
  ExperimentConfig config;
  config.n = 9;
  config.trials = 400;
  config.seed = 77;
  config.window = 16;

  config.workers = 1;  // serial reference
  const std::string serial = second_moment_run(config).payload().dump();
  for (int workers : {2, 3, 4}) {
    config.workers = workers;
    CHECK(second_moment_run(config).payload().dump() == serial);
  }

  ExperimentConfig est;
  est.n = 6;
  est.trials = 600;
  est.seed = 5;
  est.workers = 1;
  const std::string est_serial = estimate_p(est).payload().dump();
  est.workers = 4;
  CHECK(estimate_p(est).payload().dump() == est_serial);

  ExperimentConfig words;
  words.n = 9;
  words.trials = 120;
  words.seed = 9;
  words.max_word_len = 3;
  words.workers = 1;
  const std::string words_serial = word_experiment(words).payload().dump();
  words.workers = 3;
  CHECK(word_experiment(words).payload().dump() == words_serial);
}

TEST_CASE("second moment at n = 9, window 1") {
  ExperimentConfig config;
  config.n = 9;
  config.window = 1;
  config.trials = 40000;
  config.seed = 123;
  auto report = second_moment_run(config);
  // X is Bernoulli(|C|/9!) = Bernoulli(1/5)
  CHECK(report.theoretical_mean == BigRat(1, 5));
  for (const auto& [x, c] : report.histogram) CHECK(x <= 1);
  const double p = 0.2;
  const double sigma = std::sqrt(p * (1 - p) / config.trials);
  CHECK(std::abs(report.mean - p) < 3 * sigma);
}

TEST_CASE("second moment at n = 12 matches the exact mean") {
  ExperimentConfig config;
  config.n = 12;
  config.window = 144;
  config.trials = 1000;
  config.seed = 2025;
  auto report = second_moment_run(config);
  CHECK(report.theoretical_mean == BigRat(144, 7));
  // self-calibrating 3-sigma band around the exact mean
  const double exact = 144.0 / 7.0;
  const double se = std::sqrt(report.variance / config.trials);
  CHECK(std::abs(report.mean - exact) < 3 * se);
  // X <= N always
  for (const auto& [x, c] : report.histogram) CHECK(x <= config.window);
  // Chebyshev on the empirical distribution
  CHECK(report.p_zero <= report.chebyshev_bound + 1e-12);
  // Jordan: X > 0 forbids a proper primitive classification
  CHECK(report.jordan_checked);
  CHECK(report.jordan_violations == 0);
  CHECK_THROWS_AS(second_moment_run(ExperimentConfig{.n = 8, .trials = 10, .window = 4}),
                  std::invalid_argument);
}

TEST_CASE("minimal degree set is everything at n = 9, proper at n = 20") {
  auto stats9 = min_degree_filter_stats(9, 5000, 31);
  CHECK(stats9.exact_available);
  CHECK(stats9.exact_fraction == 1);
  CHECK(stats9.fraction == 1.0);
  CHECK(stats9.mean_draws == 1.0);

  auto stats2 = min_degree_filter_stats(2, 100, 1);
  CHECK(stats2.fraction == 1.0);

  auto stats20 = min_degree_filter_stats(20, 20000, 7);
  CHECK(stats20.exact_available);
  CHECK(stats20.exact_fraction == BigRat(118917, 131072));
  CHECK(std::abs(stats20.sigma_distance) < 3);
  // geometric sampling identity: mean draws ~ n!/|M|
  const double expected = static_cast<double>(stats20.expected_draws);
  CHECK(std::abs(stats20.mean_draws - expected) < 0.05 * expected);
}

TEST_CASE("word enumeration and evaluation") {
  auto w1 = enumerate_words(1);
  REQUIRE(w1.size() == 5);
  CHECK(w1[0].letters == "");
  CHECK(w1[1].letters == "a");

  auto w3 = enumerate_words(3);
  CHECK(w3.size() == 2 * 27 - 1);
  uint64_t len3 = 0;
  for (const auto& w : w3)
    if (w.letters.size() == 3) ++len3;
  CHECK(len3 == 36);
  // freely reduced: no adjacent inverse pair
  for (const auto& w : w3)
    for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
      auto idx = [](char c) { return std::string("aAbB").find(c); };
      CHECK((idx(w.letters[i]) ^ 1u) != idx(w.letters[i + 1]));
    }

  Rng rng(14);
  const Perm s = random_perm(rng, 7), t = random_perm(rng, 7);
  CHECK(evaluate_word(ReducedWord{"abA"}, s, t) ==
        compose(compose(s, t), inverse(s)));
  CHECK(evaluate_word(ReducedWord{""}, s, t) == Perm(7));
  CHECK_THROWS_AS(enumerate_words(13), std::invalid_argument);
}

TEST_CASE("word experiment mean and identity diagnostics") {
  ExperimentConfig config;
  config.n = 12;
  config.max_word_len = 4;
  config.trials = 1000;
  config.seed = 99;
  auto report = word_experiment(config);
  CHECK(report.words == 161);  // 2*3^4 - 1
  CHECK(report.words_exact_len == 108);
  CHECK(report.theoretical_mean == BigRat(161, 7));
  const double exact = 161.0 / 7.0;
  const double se = std::sqrt(report.variance / config.trials);
  CHECK(std::abs(report.mean - exact) < 3 * se);
  // empty word is always the identity
  CHECK(report.identity_hits[0] == config.trials);
  // length-1 identity frequency is P(sigma = 1) = 1/12!; with 1000 trials the
  // expected count is ~0
  CHECK(report.identity_hits[1] <= 1);
}

TEST_CASE("word prefix walk equals naive per-word evaluation") {
  // Count X two ways for a few seeds.
  const unsigned n = 9;
  const auto primes = pi_n(n);
  for (uint64_t seed : {1ull, 2ull, 3ull}) {
    ExperimentConfig config;
    config.n = n;
    config.max_word_len = 5;
    config.trials = 1;
    config.seed = seed;
    auto report = word_experiment(config);

    Rng rng(seed, 0);
    const Perm pi = random_perm(rng, n);
    const Perm s = random_perm(rng, n);
    const Perm tau = random_perm(rng, n);
    uint64_t x_naive = 0;
    for (const auto& w : enumerate_words(5))
      if (in_frak_c(compose(pi, evaluate_word(w, s, tau)), primes)) ++x_naive;
    CHECK(report.sum_x == x_naive);
  }
}

TEST_CASE("exact pair correlation at n = 9") {
  const auto q1 = exact_pair_correlation(9, 1);
  CHECK(q1.direct == q1.character);
  CHECK(q1.direct == BigRat(1, 25));
  CHECK(q1.trivial_term == BigRat(1, 25));

  const auto q2 = exact_pair_correlation(9, 2);
  CHECK(q2.direct == q2.character);
  CHECK(q2.direct == BigRat(131, 3150));

  const auto q3 = exact_pair_correlation(9, 3);
  CHECK(q3.direct == q3.character);
  CHECK(q3.direct == BigRat(403, 9450));

  CHECK_THROWS_AS(exact_pair_correlation(11, 1), std::invalid_argument);
  CHECK_THROWS_AS(exact_pair_correlation(8, 1), std::invalid_argument);
}
