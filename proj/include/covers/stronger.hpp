// Evidence engine for the "stronger than" relation: A is stronger than B
// when every simple graph covering A also covers B. Verdicts always carry
// checkable evidence; the engine never claims the relation holds merely
// because no witness was found.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "covers/cover_search.hpp"

namespace covers {

// Necessary condition: |V(B)| divides 2|V(A)|, and divides |V(A)| when A has
// no semi-edges. Returns false only when the relation is refuted.
bool divisibility_ok(const Multigraph& a, const Multigraph& b);

// Exact classification for connected 2-regular graphs (cycles C_n and open
// paths P_n with a semi-edge at each end):
//   C_n > C_m  iff m | n        P_n > P_m  iff m | n
//   C_n > P_m  iff 2m | n       P_n > C_m  iff m | 2n
// Nullopt unless both graphs are connected and 2-regular.
std::optional<bool> classify_2regular(const Multigraph& a, const Multigraph& b);

struct LiftedCover {
  Multigraph graph;
  CoverProjection projection;  // graph -> base
};

// Enumerates the simple connected k-fold covers of a connected graph, one
// representative per isomorphism class, by permutation voltages: spanning
// tree edges carry the identity, loops avoid 1- and 2-cycles, semi-edges
// take fixed-point-free involutions, parallel edges pointwise-distinct
// permutations. The first free voltage ranges over conjugacy-class
// representatives only. Deterministic order: increasing edge id, then
// lexicographic images. Requires k*|V| <= 16 (desk-scale cap) and a
// connected base. The visitor returns false to stop; limit 0 means no limit.
// Returns the number of covers emitted.
int enumerate_simple_covers(const Multigraph& base, int k, int limit,
                            const std::function<bool(const LiftedCover&)>& visit);
std::vector<LiftedCover> enumerate_simple_covers(const Multigraph& base, int k, int limit = 0);

enum class StrongerVerdict {
  StrongerByCover,
  StrongerBySemiCover,
  StrongerByTheorem,
  NotStrongerByDivisibility,
  NotStrongerByWitness,
  Unknown,
};

enum class RefutationKind {
  None,
  ExhaustiveSearch,          // find_cover(witness, B) exhausted
  ChromaticIndexCertificate, // witness is cubic with chromatic index > 3, B needs 3
  MatchingCertificate,       // witness is simple cubic without a perfect matching
};

struct StrongerEvidence {
  StrongerVerdict verdict = StrongerVerdict::Unknown;
  std::optional<CoverProjection> certificate;  // A -> B, for the two cover verdicts
  std::string theorem;                         // tag for StrongerByTheorem
  int source_vertices = 0;                     // divisibility record
  int target_vertices = 0;
  std::optional<Multigraph> witness;           // simple graph covering A, not B
  std::optional<CoverProjection> witness_cover;  // witness -> A
  RefutationKind refutation = RefutationKind::None;
  std::string note;

  bool is_stronger() const {
    return verdict == StrongerVerdict::StrongerByCover ||
           verdict == StrongerVerdict::StrongerBySemiCover ||
           verdict == StrongerVerdict::StrongerByTheorem;
  }
  bool is_not_stronger() const {
    return verdict == StrongerVerdict::NotStrongerByDivisibility ||
           verdict == StrongerVerdict::NotStrongerByWitness;
  }
};

std::string verdict_name(StrongerVerdict v);

// Decision cascade, first applicable wins: cover search, semi-cover search,
// divisibility, the simple-source shortcut, the 2-regular classification,
// the dipole argument, the 3-edge-coloring criterion for the 3-semi-edge
// target, the matching criterion for the loop-plus-semi-edge target, then
// bounded witness search over simple connected k-fold covers of A for
// k = 1..budget (skipping folds above the 16-vertex enumeration cap).
// Requires A and B connected.
StrongerEvidence decide_stronger(const Multigraph& a, const Multigraph& b, int budget = 0);

// Shared enumeration cache so one source graph's covers are enumerated once
// across many targets (used by the poset runner). A cache instance is bound
// to the first base graph it sees.
class WitnessSearchCache {
 public:
  const std::vector<LiftedCover>& level(const Multigraph& base, int k);

 private:
  std::optional<Multigraph> base_;
  std::vector<std::pair<int, std::vector<LiftedCover>>> levels_;
};

StrongerEvidence decide_stronger(const Multigraph& a, const Multigraph& b, int budget,
                                 WitnessSearchCache* cache);

}  // namespace covers
