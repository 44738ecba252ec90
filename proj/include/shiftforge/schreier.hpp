#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shiftforge/oracle.hpp"
#include "shiftforge/word.hpp"

namespace shiftforge {

// A node is identified by its canonical coset label; two nodes are equal iff
// the labels coincide.
struct OrbitInfo {
  bool finite_cycle = false;  // cycle closed within the window
  long long cycle_length = 0;
  std::vector<std::string> nodes;  // cycle in order, or segment window
  int window = 0;
};

struct BallEdge {
  std::string from;
  std::string letter;
  std::string to;

  friend bool operator<(const BallEdge& a, const BallEdge& b) {
    return std::tie(a.from, a.letter, a.to) < std::tie(b.from, b.letter, b.to);
  }
  friend bool operator==(const BallEdge& a, const BallEdge& b) {
    return std::tie(a.from, a.letter, a.to) == std::tie(b.from, b.letter, b.to);
  }
};

struct Ball {
  std::string center;
  int radius = 0;
  std::vector<std::string> nodes;     // sorted
  std::vector<BallEdge> edges;        // positive direction, sorted
  std::map<std::string, int> depth;   // node -> distance from center
};

// Labeled graphs whose vertices are right cosets: Cayley graphs of catalogued
// groups, weight-kernel coset graphs, explicit finite graphs, and lazily
// explorable graphs given by a neighbor function.
class GraphSpec {
 public:
  enum class Kind { Cayley, KernelCosets, FiniteExplicit, LazyExplicit };

  static GraphSpec cayley(GroupOracle oracle, std::vector<std::string> letters);
  // Cosets of the kernel of f; labels are the integer weight values.  f must
  // be surjective and vanish on the oracle's relations.
  static GraphSpec kernel_cosets(GroupOracle oracle, std::vector<std::string> letters,
                                 WeightMap f);
  // perms[letter][v] = v.s, required total; every letter acts by a bijection.
  static GraphSpec finite_explicit(std::vector<std::string> vertices,
                                   std::map<std::string, std::map<std::string, std::string>> perms);
  // Deterministic neighbor oracle plus declared end data for classification.
  static GraphSpec lazy(std::vector<std::string> letters,
                        std::function<std::string(const std::string&, const Letter&)> stepper,
                        std::string basepoint, std::string declared_ends_tag,
                        bool declared_acyclic);

  Kind kind() const { return kind_; }
  const std::vector<std::string>& letters() const { return letters_; }
  bool has_letter(const std::string& s) const;
  const std::string& basepoint() const { return basepoint_; }

  // Right multiplication on coset labels; step(step(v,s),s^-1) = v.
  std::string step(const std::string& node, const Letter& s) const;

  Ball ball(const std::string& center, int radius) const;
  OrbitInfo s_orbit(const std::string& node, const std::string& letter, int window) const;

  bool is_finite() const { return kind_ == Kind::FiniteExplicit; }
  const std::vector<std::string>& finite_vertices() const { return finite_vertices_; }
  long long finite_edge_count() const;  // one edge per (vertex, letter)
  long long finite_component_count() const;

  const GroupOracle& oracle() const { return oracle_; }
  const WeightMap& kernel_weights() const { return kernel_weights_; }
  const std::string& declared_ends_tag() const { return declared_ends_tag_; }
  bool declared_acyclic() const { return declared_acyclic_; }

 private:
  GraphSpec() = default;

  Kind kind_ = Kind::FiniteExplicit;
  std::vector<std::string> letters_;
  std::set<std::string> letter_set_;
  std::string basepoint_;

  GroupOracle oracle_;
  WeightMap kernel_weights_;
  std::vector<std::string> finite_vertices_;
  std::map<std::string, std::map<std::string, std::string>> perms_;     // forward
  std::map<std::string, std::map<std::string, std::string>> inverse_;   // backward
  std::function<std::string(const std::string&, const Letter&)> stepper_;
  std::string declared_ends_tag_;
  bool declared_acyclic_ = false;
};

// DOT rendering of a ball; per-letter edge colors, optional highlighted nodes
// (orbit or support overlays).
std::string ball_to_dot(const Ball& ball, const std::string& title,
                        const std::map<std::string, std::string>& letter_colors,
                        const std::set<std::string>& highlight_nodes,
                        const std::set<std::pair<std::string, std::string>>& highlight_edges);

}  // namespace shiftforge
