#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shiftforge/action.hpp"

namespace shiftforge {

// A constructed subgroup with its word-problem solver and the data the
// construction rests on.  The solver answer is the model's ground truth for
// the image group; claimed presentations ride along as checkable claims.
struct SubgroupHandle {
  std::string kind;  // free | indicable | star | wreath | bs1n
  std::vector<std::string> alphabet;
  std::function<Verdict(const Word&, int window)> solve;

  std::shared_ptr<MultipushSystem> multipush;
  std::shared_ptr<DiagonalSystem> diagonal;
  std::shared_ptr<WreathSystem> wreath;
  int bs_n = 0;
  int bs_depth = 0;
  std::optional<Presentation> claimed_presentation;  // original generators
};

// Free group of rank |letters| generated by the multipushes of a Schreier
// surface; refuses the degenerate single-letter finite-cycle all-spheres case.
SubgroupHandle embed_free(std::shared_ptr<GraphSpec> graph,
                          std::vector<std::string> letters,
                          std::set<std::pair<std::string, std::string>> omissions = {},
                          std::set<std::string> nonsphere = {},
                          std::optional<PiSpec> pi = std::nullopt, int window = 16);

// Factor data for indicable and star embeddings.
struct StarFactor {
  GroupOracle oracle;
  Presentation presentation;
  WeightMap weights;
  std::vector<std::string> kernel_generators;  // empty when not finitely listed
};

// Diagonal-plus-shift embedding of one indicable group; the solver accepts
// augmented, original, and shift letters.
SubgroupHandle embed_indicable(const StarFactor& factor, const std::string& shift_letter,
                               PiSpec pi, bool two_ended = true, int omissions = 0);

// Multi-factor diagonal embedding over a rank-n multipush family.  The handle
// exposes both the model solver and the claimed presentation (factor relators
// plus commutators of listed kernel generators across factors).
SubgroupHandle embed_star(const std::vector<StarFactor>& factors,
                          const std::vector<std::string>& push_letters,
                          std::optional<PiSpec> pi = std::nullopt);

SubgroupHandle embed_wreath(const GroupOracle& lamp, WreathSystem push_system);

// Dual-solver handle: the semidirect-product normal form decides, and the
// window simulation cross-checks every in-window query.
SubgroupHandle embed_bs1n(int n, int depth, int copy_radius = 0,
                          std::optional<PiSpec> pi = std::nullopt);

// Defining graph claimed for a star of factors (Z x A_Delta_i, A_Delta_i):
// each cone vertex joins its own Delta_i, and distinct Delta_i are joined
// completely.
struct RaagFactorShape {
  std::string cone;   // the weight-one generator
  SimpleGraph delta;  // kernel generators with their commutation graph
};
SimpleGraph claimed_raag_graph(const std::vector<RaagFactorShape>& factors);

// Induced subgraphs define subgroups of graph groups.
SimpleGraph induced_subgraph_subgroup(const SimpleGraph& g,
                                      const std::vector<std::string>& vertices);

// Weight map exhibiting indicability of the star: restricts to the first
// factor's map and kills every other factor.
WeightMap star_weight_map(const std::vector<StarFactor>& factors);

// Pairwise-commuting nontrivial crossing-shift words: the corner commutator
// and conjugates pushed along the first axis.
struct NotFreeFamily {
  PushSystem system;
  std::vector<Word> words;
  std::vector<SupportRegion> supports;
};
NotFreeFamily notfree_family(int count, int window = 24);

// Divergence report between the model solver of a diagonal handle and a
// claimed normal-form oracle over the ball of the claimed alphabet.
struct ProbeEntry {
  Word word;
  bool model_trivial = false;
  bool claimed_trivial = false;
  Word x_word;
  std::vector<long long> syllable_weights;
};

struct ProbeReport {
  std::string system;
  std::string claim;
  int radius = 0;
  int window = 0;
  long long compared = 0;
  std::vector<ProbeEntry> entries;  // shortlex order, deduplicated

  long long diverged() const { return static_cast<long long>(entries.size()); }
  std::string to_text() const;
};

ProbeReport faithfulness_probe(const SubgroupHandle& handle, const GroupOracle& claimed,
                               int radius, int window,
                               const std::string& system_name = "system",
                               const std::string& claim_name = "claim");

// Non-conjugacy certificate from complement invariants of omission counts.
struct Certificate {
  enum class Status { Certificate, None, Incomparable };
  Status status = Status::None;
  int m = 0;
  int n = 0;
  ComplementRecord record_m;
  ComplementRecord record_n;
  std::string str() const;
};

Certificate nonconjugacy_certificate(const SchreierSurfaceSpec& spec,
                                     const std::string& letter, int m, int n,
                                     int window = 16);

}  // namespace shiftforge
