#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shiftforge/surface.hpp"

namespace shiftforge {

// Evaluation convention, fixed globally: in any word acting on the surface
// the rightmost letter acts first, so a word maps homomorphically to the
// composition of its letters' homeomorphisms.
inline constexpr const char* kApplyOrder = "rightmost-first";

enum class VerdictKind { Trivial, Nontrivial, Unknown, Truncated };

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string detail;
  int window = 0;

  bool trivial() const { return kind == VerdictKind::Trivial; }
  bool nontrivial() const { return kind == VerdictKind::Nontrivial; }
  std::string str() const;
};

// End-space shape of a catalogued graph; nullopt when not catalogued.
std::optional<EndDescriptor> catalog_graph_ends(const GraphSpec& g);

// ---------------------------------------------------------------------------
// Multipush systems

struct MultipushSystem {
  std::shared_ptr<GraphSpec> graph;
  std::vector<std::string> letters;
  // (letter, node): the node's copy is left out of that letter's domain.
  std::set<std::pair<std::string, std::string>> omissions;
  std::set<std::string> nonsphere;  // nodes whose Omega is not a sphere
  std::optional<PiSpec> pi;

  void validate() const;
  // Coset action of one letter; omitted copies are fixed and the push skips
  // over omitted copies further along the orbit.
  std::string coset_apply(const std::string& node, const Letter& s) const;
  std::string act(const std::string& node, const Word& w) const;  // rightmost first
};

// Trivial iff the word freely reduces to nothing.  Nontrivial comes with a
// moved-coset witness whenever the coset action shows one; otherwise the
// free-group criterion decides except in the single-letter finite-cycle
// all-spheres case, which stays Unknown.
Verdict multipush_is_trivial(const MultipushSystem& sys, const Word& w, int window);

// Deck-transformation displacement on the regular tree over the alphabet:
// max over vertices v in the depth-ball of d(v, w.v); unbounded growth in the
// depth witnesses nontriviality of coset-invisible words.
long long lift_displacement(const std::vector<std::string>& alphabet, const Word& w,
                            int depth);

// ---------------------------------------------------------------------------
// Explicit push systems (crossing shifts, single shift line)

class PushSystem {
 public:
  enum class Kind { Cross, ZLine };

  // Two shifts crossing at the origin of the coordinate axes.  h_a translates
  // the x-axis copies and h_b the y-axis copies, each one step per
  // application toward its forward direction; the crossing copy lies in both
  // domains.
  static PushSystem cross(const std::string& a_letter = "h_a",
                          const std::string& b_letter = "h_b");
  static PushSystem z_line(const std::string& letter = "t");

  Kind kind() const { return kind_; }
  const std::vector<std::string>& letters() const { return letters_; }
  bool has_letter(const std::string& s) const;
  const std::string& basepoint() const { return basepoint_; }

  bool in_domain(const std::string& letter, const std::string& node) const;
  std::string apply(const std::string& node, const Letter& l) const;
  std::string act(const std::string& node, const Word& w) const;  // rightmost first
  std::vector<std::string> window_nodes(int window) const;
  bool in_window(const std::string& node, int window) const;

 private:
  Kind kind_ = Kind::ZLine;
  std::vector<std::string> letters_;
  std::string basepoint_;
};

struct SupportCell {
  enum class Kind { VertexFront, EdgeFront, PiCopy, OmegaCell };
  Kind kind = Kind::VertexFront;
  std::string node;
  std::string letter;  // EdgeFront only; node is the tail in the forward direction

  friend bool operator<(const SupportCell& a, const SupportCell& b) {
    return std::tie(a.kind, a.node, a.letter) < std::tie(b.kind, b.node, b.letter);
  }
  friend bool operator==(const SupportCell& a, const SupportCell& b) {
    return std::tie(a.kind, a.node, a.letter) == std::tie(b.kind, b.node, b.letter);
  }
  std::string str() const;
};

struct SupportRegion {
  std::set<SupportCell> cells;
  int window = 0;
  bool truncated = false;

  bool empty() const { return cells.empty(); }
  std::set<std::string> vertex_fronts() const;
  std::set<std::string> moved_copies() const;
  bool intersects(const SupportRegion& other) const;
  std::string str() const;
};

// Cells disturbed by the composed homeomorphism: fronts and copies of
// net-moved nodes, fronts passed through, and the edge cells along each moved
// copy's backtrack-reduced trajectory.
SupportRegion support_region(const PushSystem& sys, const Word& w, int window);

// Sufficient-condition check: disjoint supports force commutation; overlap
// answers Unknown unless the words coincide or one side is trivial.
Tri commute_by_disjoint_support(const PushSystem& sys, const Word& u, const Word& v,
                                int window);

// Partial solver for explicit push systems: coset motion refutes triviality,
// free triviality certifies it; anything else is Unknown.
Verdict push_system_is_trivial(const PushSystem& sys, const Word& w, int window);

// ---------------------------------------------------------------------------
// Diagonal systems (simultaneous action on every copy, one shift per factor)

struct DiagonalFactor {
  GroupOracle oracle;          // the original group
  Presentation presentation;   // original presentation
  WeightMap weights;           // original surjective weight map
  ZeroSumPresentation zs;      // rebased, all generator weights one
  std::string push_letter;
};

struct DiagonalSystem {
  std::vector<DiagonalFactor> factors;
  std::optional<PiSpec> pi;
  bool two_ended = true;

  void validate() const;
  // Letter classes: augmented generator, original generator (evaluated as its
  // embedded image, shift included), a bar letter `~g` (the bare diagonal
  // action of g with no shift), or a push letter.
  enum class LetterClass { Augmented, Original, Bar, Push, Unknown };
  LetterClass classify_letter(const std::string& name, int* factor) const;
  std::vector<std::string> solver_alphabet() const;  // augmented letters
};

struct NormalizedDiagonal {
  Word x_word;                     // collected shift shadow, freely reduced
  std::vector<Word> factor_parts;  // oracle normal forms, one per factor

  bool trivial() const;
  friend bool operator==(const NormalizedDiagonal& a, const NormalizedDiagonal& b) {
    return a.x_word == b.x_word && a.factor_parts == b.factor_parts;
  }
  std::string str() const;
};

NormalizedDiagonal diagonal_normalize(const DiagonalSystem& sys, const Word& w);
NormalizedDiagonal diagonal_mul(const DiagonalSystem& sys, const NormalizedDiagonal& a,
                                const NormalizedDiagonal& b);
Verdict diagonal_verdict(const DiagonalSystem& sys, const Word& w);

// ---------------------------------------------------------------------------
// Wreath systems (lamps on push-domain copies)

struct WreathSystem {
  enum class PushKind { ZShift, Multipush, Cross };

  GroupOracle lamp;
  PushKind push_kind = PushKind::ZShift;
  std::string shift_letter = "t";                 // ZShift
  std::shared_ptr<MultipushSystem> multipush;     // Multipush
  std::shared_ptr<PushSystem> cross;              // Cross
  std::string base;                               // position carrying the lamp generators
  std::optional<PiSpec> pi;

  void validate() const;
  std::vector<std::string> push_letters() const;
  bool is_push_letter(const std::string& name) const;
  std::string apply_push(const std::string& pos, const Letter& l) const;
};

struct WreathElement {
  std::map<std::string, Word> support;  // position -> nontrivial lamp element
  Word shift;                           // reduced push word

  bool support_empty() const { return support.empty(); }
  friend bool operator==(const WreathElement& a, const WreathElement& b) {
    return a.support == b.support && a.shift == b.shift;
  }
  std::string str() const;
};

WreathElement wreath_normalize(const WreathSystem& sys, const Word& w);
Verdict wreath_verdict(const WreathSystem& sys, const WreathElement& e, int window);

// ---------------------------------------------------------------------------
// Graded (Baumslag-Solitar) window action

struct BSWindowState {
  long long copy_shift = 0;
  std::map<long long, NAdic> offsets;  // copy index -> accumulated translation
  bool truncated = false;
};

struct BSWindowResult {
  BSWindowState state;
  Verdict verdict;
  std::string describe(int n) const;
};

// Simulates the word on copies -copy_radius..copy_radius, tracking for each
// copy the exact accumulated translation in level units (level k moves in
// steps of n^-k).  Exceeding the level window yields a Truncated verdict.
BSWindowResult bs_window_action(int n, const Word& w, int depth, int copy_radius,
                                const std::string& a_name = "a",
                                const std::string& t_name = "t");

// ---------------------------------------------------------------------------
// Intrinsic-type witnesses

struct IntrinsicWitness {
  enum class Kind { EndPermutation, HandleShift };
  Kind kind = Kind::EndPermutation;
  std::string detail;
  std::string str() const;
};

// Core rule: a word with nonzero net shift permutes ends when the block
// surface has any, and powers a handle shift when the block surface is
// compact of positive genus and the shift is two-ended.
std::optional<IntrinsicWitness> intrinsic_witness_for_shift(const PiSpec& pi,
                                                            bool two_ended,
                                                            long long net_shift);

std::optional<IntrinsicWitness> intrinsic_type_witness(const DiagonalSystem& sys,
                                                       const Word& w);
std::optional<IntrinsicWitness> intrinsic_type_witness(const MultipushSystem& sys,
                                                       const Word& w, int window);

}  // namespace shiftforge
