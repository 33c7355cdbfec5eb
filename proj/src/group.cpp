#include "permgen/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace permgen {

namespace {

void check_common_degree(const std::vector<Perm>& gens, unsigned n) {
  for (const Perm& g : gens)
    if (g.degree() != n) throw std::invalid_argument("generator degree mismatch");
}

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(unsigned n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Core of minimal_block, transitivity already checked by the caller.
std::vector<uint32_t> minimal_block_unchecked(const std::vector<Perm>& gens,
                                              unsigned n, uint32_t alpha,
                                              uint32_t beta) {
  UnionFind uf(n);
  std::deque<std::pair<uint32_t, uint32_t>> queue{{alpha, beta}};
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    if (!uf.unite(u, v)) continue;
    // A block congruence must also identify the images of a merged pair.
    for (const Perm& g : gens) queue.emplace_back(g(u), g(v));
  }
  std::vector<uint32_t> block;
  const uint32_t root = uf.find(alpha);
  for (uint32_t x = 0; x < n; ++x)
    if (uf.find(x) == root) block.push_back(x);
  return block;
}

}  // namespace

std::vector<std::vector<uint32_t>> orbits(const std::vector<Perm>& gens, unsigned n) {
  check_common_degree(gens, n);
  UnionFind uf(n);
  for (const Perm& g : gens)
    for (uint32_t i = 0; i < n; ++i) uf.unite(i, g(i));
  std::vector<std::vector<uint32_t>> by_root(n);
  for (uint32_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<uint32_t>> out;
  for (auto& orb : by_root)
    if (!orb.empty()) out.push_back(std::move(orb));
  return out;
}

std::vector<uint32_t> minimal_block(const std::vector<Perm>& gens, uint32_t alpha,
                                    uint32_t beta) {
  if (gens.empty()) throw std::invalid_argument("minimal_block: no generators");
  const unsigned n = gens[0].degree();
  check_common_degree(gens, n);
  if (alpha == beta) throw std::invalid_argument("minimal_block: alpha == beta");
  if (alpha >= n || beta >= n) throw std::invalid_argument("minimal_block: point out of range");
  if (orbits(gens, n).size() != 1)
    throw std::invalid_argument("minimal_block: group is intransitive");
  return minimal_block_unchecked(gens, n, alpha, beta);
}

bool is_primitive(const std::vector<Perm>& gens, unsigned n) {
  check_common_degree(gens, n);
  if (n > 1 && orbits(gens, n).size() != 1)
    throw std::invalid_argument("is_primitive: group is intransitive");
  if (n <= 2) return true;
  for (uint32_t beta = 1; beta < n; ++beta)
    if (minimal_block_unchecked(gens, n, 0, beta).size() != n) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Bsgs

void Bsgs::extend_orbit(size_t i) {
  Level& lv = levels_[i];
  if (lv.pos.empty()) {
    lv.pos.assign(n_, -1);
    lv.orbit.push_back(lv.beta);
    lv.pos[lv.beta] = 0;
    lv.transversal.emplace_back(n_);
  }
  auto visit = [&](size_t head, const Perm& g) {
    const uint32_t q = g(lv.orbit[head]);
    if (lv.pos[q] < 0) {
      lv.pos[q] = static_cast<int32_t>(lv.orbit.size());
      lv.orbit.push_back(q);
      lv.transversal.push_back(compose(g, lv.transversal[head]));
    }
  };
  // New generators over the already-expanded prefix, then every generator
  // over the (growing) tail.
  for (size_t head = 0; head < lv.bfs_points; ++head)
    for (size_t gi = lv.bfs_gens; gi < lv.gens.size(); ++gi) visit(head, lv.gens[gi]);
  for (size_t head = lv.bfs_points; head < lv.orbit.size(); ++head)
    for (size_t gi = 0; gi < lv.gens.size(); ++gi) visit(head, lv.gens[gi]);
  lv.bfs_points = lv.orbit.size();
  lv.bfs_gens = lv.gens.size();
}

std::pair<Perm, size_t> Bsgs::strip(Perm g, size_t from) const {
  for (size_t j = from; j < levels_.size(); ++j) {
    const Level& lv = levels_[j];
    const uint32_t image = g(lv.beta);
    const int32_t idx = lv.pos[image];
    if (idx < 0) return {std::move(g), j};
    g = compose(inverse(lv.transversal[idx]), g);
  }
  return {std::move(g), levels_.size()};
}

namespace {
uint32_t first_moved_point(const Perm& g) {
  uint32_t p = 0;
  while (g(p) == p) ++p;
  return p;
}
}  // namespace

void Bsgs::schreier_sims() {
  // Deterministic Schreier-Sims, verified bottom-up: a level passes when all
  // its Schreier generators sift to the identity through the deeper levels.
  // A nontrivial residue fixing base[0..j-1] becomes a strong generator at
  // levels i+1..j and verification resumes at level j. Append-only orbits
  // keep previously verified Schreier pairs verified, so each level only
  // scans pairs beyond its watermark.
  if (levels_.empty()) return;
  size_t i = levels_.size() - 1;
  for (;;) {
    extend_orbit(i);
    Perm bad;
    size_t stuck = 0;
    bool found = false;
    {
      Level& lv = levels_[i];
      for (size_t oi = 0; oi < lv.orbit.size() && !found; ++oi) {
        for (size_t gi = 0; gi < lv.gens.size() && !found; ++gi) {
          if (oi < lv.verified_orbit && gi < lv.verified_gens) continue;
          const Perm& x = lv.gens[gi];
          const uint32_t image = x(lv.orbit[oi]);
          Perm schreier = compose(inverse(lv.transversal[lv.pos[image]]),
                                  compose(x, lv.transversal[oi]));
          if (schreier.is_identity()) continue;
          auto [residue, j] = strip(std::move(schreier), i + 1);
          if (!residue.is_identity()) {
            bad = std::move(residue);
            stuck = j;
            found = true;
          }
        }
      }
      if (!found) {
        lv.verified_orbit = lv.orbit.size();
        lv.verified_gens = lv.gens.size();
      }
    }
    if (found) {
      if (stuck == levels_.size()) {
        const uint32_t beta = first_moved_point(bad);
        levels_.push_back(Level{beta, {}, {}, {}, {}, 0, 0, 0, 0});
        base_.push_back(beta);
      }
      for (size_t k = i + 1; k <= stuck; ++k) {
        levels_[k].gens.push_back(bad);
        extend_orbit(k);
      }
      i = stuck;
      continue;
    }
    if (i == 0) break;
    --i;
  }
}

Bsgs Bsgs::build(const std::vector<Perm>& gens, unsigned degree) {
  check_common_degree(gens, degree);
  Bsgs b(degree);
  for (const Perm& g : gens) {
    if (g.is_identity()) continue;
    // Longest base prefix fixed by g decides the levels it generates.
    size_t j = 0;
    while (j < b.levels_.size() && g(b.levels_[j].beta) == b.levels_[j].beta) ++j;
    if (j == b.levels_.size()) {
      const uint32_t beta = first_moved_point(g);
      b.levels_.push_back(Level{beta, {}, {}, {}, {}, 0, 0, 0, 0});
      b.base_.push_back(beta);
    }
    for (size_t k = 0; k <= j; ++k) b.levels_[k].gens.push_back(g);
  }
  b.schreier_sims();
  b.order_ = 1;
  for (size_t i = 0; i < b.levels_.size(); ++i) {
    b.extend_orbit(i);
    b.order_ *= b.levels_[i].orbit.size();
  }
  return b;
}

bool Bsgs::contains(const Perm& g) const {
  if (g.degree() != n_) return false;
  auto [residue, level] = strip(g, 0);
  (void)level;
  return residue.is_identity();
}

// ---------------------------------------------------------------------------
// Classification

const char* to_string(GroupClass c) {
  switch (c) {
    case GroupClass::AllOrAlternating: return "AllOrAlternating";
    case GroupClass::Intransitive: return "Intransitive";
    case GroupClass::TransitiveImprimitive: return "TransitiveImprimitive";
    case GroupClass::PrimitiveProper: return "PrimitiveProper";
  }
  return "?";
}

namespace {

std::vector<uint32_t> jordan_primes(unsigned n) {
  // Primes q with n/2 < q <= n-3: a q-cycle in a primitive group forces the
  // group to contain A_n (q <= n-3), and q > n/2 makes a q-cycle extractable
  // from any element having a q-cycle by powering.
  std::vector<uint32_t> out;
  for (uint32_t q = n / 2 + 1; q + 3 <= n; ++q) {
    bool prime = q > 1;
    for (uint32_t d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(q);
  }
  return out;
}

bool has_cycle_in(const Perm& x, const std::vector<uint32_t>& primes) {
  return in_frak_c(cycle_type(x), primes);
}

}  // namespace

Classification classify_tuple(const std::vector<Perm>& gens, const ClassifyOptions& opts) {
  if (gens.empty()) throw std::invalid_argument("classify_tuple: empty tuple");
  const unsigned n = gens[0].degree();
  check_common_degree(gens, n);
  if (n < 2) throw std::invalid_argument("classify_tuple: degree >= 2 required");

  Classification result;
  for (const Perm& g : gens)
    if (!is_even(g)) result.any_odd_generator = true;

  auto orbs = orbits(gens, n);
  if (orbs.size() != 1) {
    result.kind = GroupClass::Intransitive;
    result.orbit_partition = std::move(orbs);
    return result;
  }
  for (uint32_t beta = 1; beta < n; ++beta) {
    auto block = minimal_block_unchecked(gens, n, 0, beta);
    if (block.size() != n) {
      result.kind = GroupClass::TransitiveImprimitive;
      result.block = std::move(block);
      return result;
    }
  }

  BigInt factorial_n = 1;
  for (unsigned k = 2; k <= n; ++k) factorial_n *= k;

  if (opts.jordan_fast_path) {
    const auto primes = jordan_primes(n);
    if (!primes.empty()) {
      uint32_t window = opts.scan_window;
      if (window == 0) window = std::max<uint32_t>(64, std::min<uint32_t>(n * n, 4096));
      // Walk x through products of the generators; for a pair this is
      // exactly p, p*s, p*s^2, ...
      Perm x = gens[0];
      for (uint32_t i = 0; i < window; ++i) {
        if (has_cycle_in(x, primes)) {
          result.kind = GroupClass::AllOrAlternating;
          result.via_jordan = true;
          result.order = result.any_odd_generator ? factorial_n : factorial_n / 2;
          return result;
        }
        x = compose(x, gens.size() > 1 ? gens[1 + (i % (gens.size() - 1))] : gens[0]);
      }
    }
  }

  Bsgs chain = Bsgs::build(gens, n);
  result.order = chain.group_order();
  result.kind = 2 * chain.group_order() >= factorial_n ? GroupClass::AllOrAlternating
                                                       : GroupClass::PrimitiveProper;
  return result;
}

Perm extract_p_cycle(const Perm& p, uint32_t prime) {
  const CycleType t = cycle_type(p);
  bool found = false;
  BigInt e = 1;
  for (uint32_t len : t.parts) {
    if (len == prime && !found) {
      found = true;
    } else {
      e = boost::multiprecision::lcm(e, BigInt(len));
    }
  }
  if (!found) throw std::invalid_argument("extract_p_cycle: no cycle of the given length");
  if (2 * static_cast<uint64_t>(prime) <= p.degree())
    throw std::invalid_argument("extract_p_cycle: prime must exceed n/2");
  return power(p, e);
}

}  // namespace permgen
