#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shiftforge/schreier.hpp"

namespace shiftforge {

// Natural number extended by infinity; used for genus and end counts.
struct Card {
  bool infinite = false;
  long long n = 0;

  static Card inf() { return Card{true, 0}; }
  static Card of(long long k) { return Card{false, k}; }

  friend Card operator+(const Card& a, const Card& b) {
    if (a.infinite || b.infinite) return inf();
    return of(a.n + b.n);
  }
  friend bool operator==(const Card& a, const Card& b) {
    return a.infinite == b.infinite && (a.infinite || a.n == b.n);
  }
  friend bool operator!=(const Card& a, const Card& b) { return !(a == b); }
  bool finite() const { return !infinite; }
  std::string str() const { return infinite ? "infinity" : std::to_string(n); }
};

// Closed algebra of end-space descriptors.  Each term carries a nonplanar
// marking describing which of its ends are accumulated by genus.  Comparisons
// outside the algebra answer Unknown, never a boolean.
struct EndDescriptor {
  enum class Kind { Finite, OmegaPlusOne, ZTwoPoint, Cantor, DisjointUnion, GraphEnds };
  // None: all ends planar.  All: every end nonplanar.  Count: a designated
  // finite subset of k ends.  Limit: exactly the limit ends of the term.
  enum class Mark { None, All, Count, Limit };

  Kind kind = Kind::Finite;
  long long count = 0;               // Finite
  std::string tag;                   // GraphEnds catalog tag
  std::vector<EndDescriptor> parts;  // DisjointUnion
  Mark mark = Mark::None;
  long long marked = 0;              // Count

  static EndDescriptor empty() { return finite(0); }
  static EndDescriptor finite(long long k, Mark m = Mark::None, long long marked = 0);
  static EndDescriptor omega_plus_one(Mark m = Mark::None, long long marked = 0);
  static EndDescriptor z_two_point(Mark m = Mark::None, long long marked = 0);
  static EndDescriptor cantor(Mark m = Mark::None);
  static EndDescriptor graph_ends(const std::string& tag);
  static EndDescriptor disjoint_union(std::vector<EndDescriptor> parts);

  // Resolves catalog tags, flattens unions, and drops empty parts; structural
  // equality after normalization is homeomorphism of catalogued end spaces.
  EndDescriptor normalized() const;
  bool in_catalog() const;  // normalizes to a tag-free term

  bool is_empty() const;
  Card total_count() const;      // cardinality as an extended natural
  bool countable() const;
  Card nonplanar_count() const;
  Card planar_count() const;
  EndDescriptor nonplanar_subterm() const;

  std::string str() const;
  friend bool operator==(const EndDescriptor& a, const EndDescriptor& b);
  friend bool operator!=(const EndDescriptor& a, const EndDescriptor& b) { return !(a == b); }
};

enum class Cmp { Equal, Distinct, Incomparable };
Cmp compare_descriptors(const EndDescriptor& a, const EndDescriptor& b);

// The classification quadruple (genus, boundary, nonplanar ends, ends); the
// nonplanar space is the marked sub-term of `ends`.
struct SurfaceType {
  Card genus;
  long long boundary = 0;
  EndDescriptor ends;

  EndDescriptor nonplanar_ends() const { return ends.nonplanar_subterm(); }
  bool infinite_type() const { return genus.infinite || !ends.total_count().finite(); }
  bool is_sphere() const;
  std::string str() const;
  friend bool operator==(const SurfaceType& a, const SurfaceType& b);
};

SurfaceType sphere();
SurfaceType closed_surface(long long genus);
SurfaceType one_boundary(long long genus);  // compact, genus >= 1

// One-boundary building-block surface.
struct PiSpec {
  std::string name;
  SurfaceType type;

  void validate() const;  // exactly one boundary, not a disk
  bool compact() const { return type.genus.finite() && type.ends.is_empty(); }
};

// S_Gamma(Pi) # Omega_v: vertex surfaces carry one Pi copy each; finitely many
// Omega_v differ from the sphere.
struct SchreierSurfaceSpec {
  std::string name;
  std::shared_ptr<GraphSpec> graph;
  PiSpec pi;
  std::map<std::string, SurfaceType> omegas;  // node label -> non-sphere Omega

  void validate() const;
  bool omega_is_sphere(const std::string& node) const;
  std::set<std::string> nonsphere_nodes() const;
};

struct Classification {
  bool symbolic = false;
  std::string reason;  // set when symbolic
  SurfaceType type;
  std::string str() const;
};

Classification classify(const SchreierSurfaceSpec& spec);

// Invariant of the ambient surface minus the push domain: genus and end
// counts contributed by omitted Pi copies, back-side ends, and the Omega_v.
struct ComplementRecord {
  bool incomparable = false;
  std::string note;
  Card genus;
  Card planar_ends;
  Card nonplanar_ends;

  friend bool operator==(const ComplementRecord& a, const ComplementRecord& b) {
    return a.incomparable == b.incomparable && a.genus == b.genus &&
           a.planar_ends == b.planar_ends && a.nonplanar_ends == b.nonplanar_ends;
  }
  std::string str() const;
};

ComplementRecord complement_invariant(const SchreierSurfaceSpec& spec,
                                      const std::vector<std::string>& omitted_nodes,
                                      const std::set<std::string>* domain_nodes = nullptr);

// Which of the three distinguishing conditions hold: (1) finite genus,
// (2) finitely many ends and all planar, (3) finitely many ends and all
// nonplanar.  The empty end space satisfies (2) and (3) vacuously.
std::set<int> distinguished_conditions(const PiSpec& pi);

struct FamilyFlags {
  Tri c_pi = Tri::Unknown;
  Tri b = Tri::Unknown;
  Tri b_inf = Tri::Unknown;
};

FamilyFlags family_membership(const PiSpec& pi, const SchreierSurfaceSpec& ambient,
                              const std::string& domain_letter);

}  // namespace shiftforge
