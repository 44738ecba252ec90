#include "shiftforge/schreier.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace shiftforge {

namespace {

std::set<std::string> unique_letters(const std::vector<std::string>& letters) {
  std::set<std::string> s(letters.begin(), letters.end());
  if (s.size() != letters.size()) throw SpecError("duplicate edge letters in graph spec");
  if (s.empty()) throw SpecError("graph spec needs at least one edge letter");
  return s;
}

}  // namespace

GraphSpec GraphSpec::cayley(GroupOracle oracle, std::vector<std::string> letters) {
  GraphSpec g;
  g.kind_ = Kind::Cayley;
  g.letter_set_ = unique_letters(letters);
  g.letters_ = std::move(letters);
  for (const std::string& s : g.letters_) {
    if (!oracle.has_letter(s))
      throw SpecError("edge letter '" + s + "' is not an oracle generator");
  }
  g.oracle_ = std::move(oracle);
  g.basepoint_ = Word{}.str();  // "1"
  return g;
}

GraphSpec GraphSpec::kernel_cosets(GroupOracle oracle, std::vector<std::string> letters,
                                   WeightMap f) {
  GraphSpec g;
  g.kind_ = Kind::KernelCosets;
  g.letter_set_ = unique_letters(letters);
  g.letters_ = std::move(letters);
  for (const std::string& s : g.letters_) {
    if (!oracle.has_letter(s))
      throw SpecError("edge letter '" + s + "' is not an oracle generator");
    f.at(s);
  }
  if (!f.surjective())
    throw SpecError("kernel-coset graph requires a surjective weight map");
  // The weight map must be constant on the oracle's relations.
  switch (oracle.kind()) {
    case GroupOracle::Kind::Free:
    case GroupOracle::Kind::FreeAbelian:
    case GroupOracle::Kind::Raag:
      break;
    case GroupOracle::Kind::BS1n:
      if (f.at(oracle.bs_a()) != 0)
        throw SpecError("weight map is not a homomorphism on the bs1n relation");
      break;
    default:
      throw SpecError("kernel-coset graphs are not defined for oracle kind " +
                      oracle.kind_str());
  }
  g.oracle_ = std::move(oracle);
  g.kernel_weights_ = std::move(f);
  g.basepoint_ = "0";
  return g;
}

GraphSpec GraphSpec::finite_explicit(
    std::vector<std::string> vertices,
    std::map<std::string, std::map<std::string, std::string>> perms) {
  GraphSpec g;
  g.kind_ = Kind::FiniteExplicit;
  if (vertices.empty()) throw SpecError("finite graph needs at least one vertex");
  std::set<std::string> vset(vertices.begin(), vertices.end());
  if (vset.size() != vertices.size()) throw SpecError("duplicate vertex labels");
  std::vector<std::string> letters;
  for (auto& [letter, perm] : perms) {
    letters.push_back(letter);
    std::set<std::string> image;
    for (const std::string& v : vertices) {
      auto it = perm.find(v);
      if (it == perm.end())
        throw SpecError("letter '" + letter + "' is undefined at vertex '" + v + "'");
      if (!vset.count(it->second))
        throw SpecError("letter '" + letter + "' maps to unknown vertex '" + it->second + "'");
      image.insert(it->second);
    }
    if (image.size() != vertices.size())
      throw SpecError("letter '" + letter + "' does not act by a bijection");
    for (const auto& [v, w] : perm) g.inverse_[letter][w] = v;
  }
  g.letter_set_ = unique_letters(letters);
  g.letters_ = std::move(letters);
  g.basepoint_ = vertices.front();
  g.finite_vertices_ = std::move(vertices);
  g.perms_ = std::move(perms);
  return g;
}

GraphSpec GraphSpec::lazy(std::vector<std::string> letters,
                          std::function<std::string(const std::string&, const Letter&)> stepper,
                          std::string basepoint, std::string declared_ends_tag,
                          bool declared_acyclic) {
  GraphSpec g;
  g.kind_ = Kind::LazyExplicit;
  g.letter_set_ = unique_letters(letters);
  g.letters_ = std::move(letters);
  g.stepper_ = std::move(stepper);
  g.basepoint_ = std::move(basepoint);
  g.declared_ends_tag_ = std::move(declared_ends_tag);
  g.declared_acyclic_ = declared_acyclic;
  return g;
}

bool GraphSpec::has_letter(const std::string& s) const { return letter_set_.count(s) != 0; }

std::string GraphSpec::step(const std::string& node, const Letter& s) const {
  if (!has_letter(s.gen)) throw SpecError("unknown edge letter '" + s.gen + "'");
  switch (kind_) {
    case Kind::Cayley: {
      Word w = Word::parse(node);
      w.push_back(s);
      return oracle_.normalize(w).str();
    }
    case Kind::KernelCosets: {
      long long v = std::stoll(node);
      return std::to_string(v + kernel_weights_.at(s.gen) * s.sign);
    }
    case Kind::FiniteExplicit: {
      const auto& table = s.sign > 0 ? perms_ : inverse_;
      auto lt = table.find(s.gen);
      auto it = lt->second.find(node);
      if (it == lt->second.end()) throw SpecError("unknown vertex '" + node + "'");
      return it->second;
    }
    case Kind::LazyExplicit:
      return stepper_(node, s);
  }
  throw InternalError("unhandled graph kind");
}

Ball GraphSpec::ball(const std::string& center, int radius) const {
  if (radius < 0) throw SpecError("ball radius must be >= 0");
  Ball b;
  b.center = center;
  b.radius = radius;
  std::deque<std::string> queue{center};
  b.depth[center] = 0;
  std::set<BallEdge> edges;
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    int d = b.depth[v];
    if (d == radius) continue;
    for (const std::string& s : letters_) {
      for (int sign : {1, -1}) {
        std::string u = step(v, Letter(s, sign));
        if (!b.depth.count(u)) {
          b.depth[u] = d + 1;
          queue.push_back(u);
        }
        if (sign > 0) {
          edges.insert(BallEdge{v, s, u});
        } else {
          edges.insert(BallEdge{u, s, v});
        }
      }
    }
  }
  for (const auto& [node, d] : b.depth) b.nodes.push_back(node);
  std::sort(b.nodes.begin(), b.nodes.end());
  // Keep only edges with both ends inside the ball (frontier steps may exit).
  for (const BallEdge& e : edges) {
    if (b.depth.count(e.from) && b.depth.count(e.to)) b.edges.push_back(e);
  }
  return b;
}

OrbitInfo GraphSpec::s_orbit(const std::string& node, const std::string& letter,
                             int window) const {
  if (window < 0) throw SpecError("orbit window must be >= 0");
  OrbitInfo info;
  info.window = window;
  std::string cur = node;
  std::vector<std::string> forward{node};
  for (int i = 0; i < 2 * window + 1; ++i) {
    cur = step(cur, Letter(letter, 1));
    if (cur == node) {
      info.finite_cycle = true;
      info.cycle_length = static_cast<long long>(forward.size());
      info.nodes = std::move(forward);
      return info;
    }
    if (static_cast<int>(forward.size()) <= 2 * window) forward.push_back(cur);
  }
  // No closure inside the window: report the two-sided segment.
  std::vector<std::string> nodes;
  cur = node;
  for (int i = 0; i < window; ++i) cur = step(cur, Letter(letter, -1));
  for (int i = 0; i <= 2 * window; ++i) {
    nodes.push_back(cur);
    cur = step(cur, Letter(letter, 1));
  }
  info.finite_cycle = false;
  info.cycle_length = 0;
  info.nodes = std::move(nodes);
  return info;
}

long long GraphSpec::finite_edge_count() const {
  if (kind_ != Kind::FiniteExplicit)
    throw InternalError("finite_edge_count on a non-finite graph");
  // Every vertex carries exactly one outgoing edge per letter; a transposition
  // gives two parallel edges and a fixed point gives one loop, both of which
  // are genuine cells of the coset graph.
  return static_cast<long long>(letters_.size()) *
         static_cast<long long>(finite_vertices_.size());
}

long long GraphSpec::finite_component_count() const {
  if (kind_ != Kind::FiniteExplicit)
    throw InternalError("finite_component_count on a non-finite graph");
  std::set<std::string> unseen(finite_vertices_.begin(), finite_vertices_.end());
  long long components = 0;
  while (!unseen.empty()) {
    ++components;
    std::deque<std::string> queue{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!queue.empty()) {
      std::string v = queue.front();
      queue.pop_front();
      for (const std::string& s : letters_) {
        for (int sign : {1, -1}) {
          std::string u = step(v, Letter(s, sign));
          if (unseen.count(u)) {
            unseen.erase(u);
            queue.push_back(u);
          }
        }
      }
    }
  }
  return components;
}

std::string ball_to_dot(const Ball& ball, const std::string& title,
                        const std::map<std::string, std::string>& letter_colors,
                        const std::set<std::string>& highlight_nodes,
                        const std::set<std::pair<std::string, std::string>>& highlight_edges) {
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n";
  os << "  graph [label=\"" << title << "\", overlap=false];\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (const std::string& n : ball.nodes) {
    os << "  \"" << n << "\"";
    if (highlight_nodes.count(n)) {
      os << " [style=filled, fillcolor=lightgoldenrod]";
    } else if (n == ball.center) {
      os << " [style=filled, fillcolor=lightgray]";
    }
    os << ";\n";
  }
  for (const BallEdge& e : ball.edges) {
    std::string color = "black";
    auto it = letter_colors.find(e.letter);
    if (it != letter_colors.end()) color = it->second;
    bool hl = highlight_edges.count({e.from, e.letter}) != 0;
    os << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"" << e.letter
       << "\", color=" << color << (hl ? ", penwidth=2.5" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace shiftforge
