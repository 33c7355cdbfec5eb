#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permgen/perm.hpp"

namespace permgen {

/// Orbit partition of {1..n} under the group generated by `gens`. An empty
/// generator list yields n singleton orbits. Orbits are sorted internally and
/// ordered by smallest element.
std::vector<std::vector<uint32_t>> orbits(const std::vector<Perm>& gens, unsigned n);

/// Smallest block of imprimitivity containing {alpha, beta} (0-based points),
/// for a transitive group. Returns the full point set when no proper block
/// contains both. Throws on alpha == beta or intransitive input.
std::vector<uint32_t> minimal_block(const std::vector<Perm>& gens, uint32_t alpha,
                                    uint32_t beta);

/// True iff the transitive group generated by `gens` preserves no nontrivial
/// proper block system. Throws on intransitive input. Degree-1 and degree-2
/// groups are primitive by convention.
bool is_primitive(const std::vector<Perm>& gens, unsigned n);

/// Base and strong generating set built by deterministic Schreier-Sims.
/// A finished chain is immutable and safe to query concurrently.
class Bsgs {
 public:
  static Bsgs build(const std::vector<Perm>& gens, unsigned degree);

  unsigned degree() const { return n_; }
  const BigInt& group_order() const { return order_; }
  /// Membership by sifting through the stabilizer chain.
  bool contains(const Perm& g) const;

  const std::vector<uint32_t>& base() const { return base_; }
  size_t num_levels() const { return levels_.size(); }
  size_t orbit_size(size_t level) const { return levels_[level].orbit.size(); }
  const std::vector<Perm>& level_generators(size_t level) const {
    return levels_[level].gens;
  }

 private:
  struct Level {
    uint32_t beta = 0;
    std::vector<Perm> gens;         // strong generators fixing all earlier base points
    std::vector<int32_t> pos;       // point -> transversal index, -1 outside orbit
    std::vector<uint32_t> orbit;    // discovery order, orbit[0] == beta
    std::vector<Perm> transversal;  // transversal[k] maps beta to orbit[k]
    // Orbit extension is append-only, so transversal entries never change
    // once assigned and a Schreier pair that sifted to the identity stays
    // verified. These marks record how far BFS and verification have run.
    size_t bfs_points = 0;
    size_t bfs_gens = 0;
    size_t verified_orbit = 0;
    size_t verified_gens = 0;
  };

  explicit Bsgs(unsigned n) : n_(n) {}
  void extend_orbit(size_t i);
  // Divides out transversal elements from level `from` on; returns the
  // residue and the level where sifting stopped (== levels_.size() on
  // success, residue identity iff member).
  std::pair<Perm, size_t> strip(Perm g, size_t from) const;
  void schreier_sims();

  unsigned n_ = 0;
  BigInt order_ = 1;
  std::vector<uint32_t> base_;
  std::vector<Level> levels_;
};

enum class GroupClass : int {
  AllOrAlternating = 0,
  Intransitive = 1,
  TransitiveImprimitive = 2,
  PrimitiveProper = 3,
};
const char* to_string(GroupClass c);

struct Classification {
  GroupClass kind = GroupClass::Intransitive;
  /// Witness data; which fields are meaningful depends on `kind`.
  std::vector<std::vector<uint32_t>> orbit_partition;  // Intransitive
  std::vector<uint32_t> block;                         // TransitiveImprimitive
  BigInt order;                    // AllOrAlternating, PrimitiveProper
  bool any_odd_generator = false;  // distinguishes S_n from A_n when >= A_n
  bool via_jordan = false;         // order concluded from a prime-cycle witness
};

struct ClassifyOptions {
  bool jordan_fast_path = true;
  /// Products scanned for a prime-length cycle before falling back to an
  /// order computation; 0 picks max(64, min(n^2, 4096)).
  uint32_t scan_window = 0;
};

/// Four-way classification of the subgroup generated by a tuple.
/// Intransitive if the orbit partition is nontrivial; else
/// TransitiveImprimitive if some proper block exists; else AllOrAlternating
/// when the group contains A_n (decided by a Jordan prime-cycle witness where
/// possible, otherwise by exact order), else PrimitiveProper.
Classification classify_tuple(const std::vector<Perm>& gens,
                              const ClassifyOptions& opts = {});

/// For p containing a cycle of prime length `prime` > n/2: the power of p by
/// the lcm of the other cycle lengths, a pure prime-cycle. Throws when no
/// such cycle exists.
Perm extract_p_cycle(const Perm& p, uint32_t prime);

}  // namespace permgen
