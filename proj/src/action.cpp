#include "shiftforge/action.hpp"

#include <algorithm>
#include <sstream>

namespace shiftforge {

std::string Verdict::str() const {
  std::ostringstream os;
  switch (kind) {
    case VerdictKind::Trivial: os << "TRIVIAL"; break;
    case VerdictKind::Nontrivial: os << "NONTRIVIAL"; break;
    case VerdictKind::Unknown: os << "UNKNOWN"; break;
    case VerdictKind::Truncated: os << "TRUNCATED"; break;
  }
  if (!detail.empty()) os << ' ' << detail;
  os << " [window=" << window << "]";
  return os.str();
}

std::optional<EndDescriptor> catalog_graph_ends(const GraphSpec& g) {
  switch (g.kind()) {
    case GraphSpec::Kind::FiniteExplicit:
      return EndDescriptor::empty();
    case GraphSpec::Kind::Cayley: {
      const GroupOracle& o = g.oracle();
      std::size_t rank = g.letters().size();
      if (o.kind() == GroupOracle::Kind::Free && rank == o.alphabet().size())
        return rank >= 2 ? EndDescriptor::cantor() : EndDescriptor::finite(2);
      if (o.kind() == GroupOracle::Kind::FreeAbelian && rank == o.alphabet().size())
        return rank >= 2 ? EndDescriptor::finite(1) : EndDescriptor::finite(2);
      if (o.kind() == GroupOracle::Kind::CyclicMod) return EndDescriptor::empty();
      return std::nullopt;
    }
    case GraphSpec::Kind::KernelCosets:
      return EndDescriptor::finite(2);
    case GraphSpec::Kind::LazyExplicit: {
      EndDescriptor d = EndDescriptor::graph_ends(g.declared_ends_tag());
      if (d.in_catalog()) return d.normalized();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Multipush systems

void MultipushSystem::validate() const {
  if (!graph) throw SpecError("multipush system has no graph");
  if (letters.empty()) throw SpecError("multipush system needs at least one letter");
  for (const std::string& s : letters) {
    if (!graph->has_letter(s))
      throw SpecError("multipush letter '" + s + "' is not a graph letter");
  }
  for (const auto& [letter, node] : omissions) {
    if (std::find(letters.begin(), letters.end(), letter) == letters.end())
      throw SpecError("omission references unknown letter '" + letter + "'");
  }
  if (pi) pi->validate();
}

std::string MultipushSystem::coset_apply(const std::string& node, const Letter& s) const {
  if (omissions.count({s.gen, node})) return node;  // omitted copies sit still
  std::string cur = graph->step(node, s);
  std::size_t hops = 0;
  while (omissions.count({s.gen, cur})) {
    if (cur == node || hops++ > omissions.size()) return node;
    cur = graph->step(cur, s);
  }
  return cur;
}

std::string MultipushSystem::act(const std::string& node, const Word& w) const {
  std::string cur = node;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) cur = coset_apply(cur, *it);
  return cur;
}

Verdict multipush_is_trivial(const MultipushSystem& sys, const Word& w, int window) {
  sys.validate();
  for (const Letter& l : w.letters()) {
    if (std::find(sys.letters.begin(), sys.letters.end(), l.gen) == sys.letters.end())
      throw SpecError("word letter '" + l.gen + "' is not a system letter");
  }
  Word wr = free_reduce(w);
  if (wr.empty()) return Verdict{VerdictKind::Trivial, "freely trivial", window};

  // The basepoint catches almost every coset motion; the full window scan
  // only runs for words invisible there.
  std::string base = sys.graph->basepoint();
  std::string base_image = sys.act(base, wr);
  if (base_image != base) {
    return Verdict{VerdictKind::Nontrivial, "moves copy " + base + " to " + base_image,
                   window};
  }
  Ball ball = sys.graph->ball(base, window);
  for (const std::string& node : ball.nodes) {
    std::string image = sys.act(node, wr);
    if (image != node) {
      return Verdict{VerdictKind::Nontrivial,
                     "moves copy " + node + " to " + image, window};
    }
  }

  if (sys.letters.size() >= 2) {
    return Verdict{VerdictKind::Nontrivial,
                   "freely nontrivial; pushes along " +
                       std::to_string(sys.letters.size()) +
                       " letters generate a free group",
                   window};
  }

  // Single letter, coset action invisible: w = s^k with every in-window orbit
  // a finite cycle dividing k.
  const std::string& s = sys.letters[0];
  OrbitInfo orbit = sys.graph->s_orbit(sys.graph->basepoint(), s, window);
  if (!orbit.finite_cycle) {
    return Verdict{VerdictKind::Nontrivial, "freely nontrivial on an infinite orbit",
                   window};
  }
  for (const std::string& node : ball.nodes) {
    if (sys.nonsphere.count(node)) {
      return Verdict{VerdictKind::Nontrivial,
                     "cycle power crosses the non-sphere cell at " + node, window};
    }
  }
  return Verdict{VerdictKind::Unknown,
                 "single-letter finite-cycle system with every back cell a sphere",
                 window};
}

namespace {

void reduced_words(const std::vector<std::string>& alphabet, int depth,
                   std::vector<Word>& out) {
  std::vector<Letter> sigma;
  for (const std::string& g : alphabet) {
    sigma.emplace_back(g, 1);
    sigma.emplace_back(g, -1);
  }
  std::vector<Letter> cur;
  // Iterative DFS over reduced words of length <= depth.
  std::function<void()> rec = [&]() {
    out.emplace_back(Word(cur));
    if (static_cast<int>(cur.size()) == depth) return;
    for (const Letter& l : sigma) {
      if (!cur.empty() && cur.back().gen == l.gen && cur.back().sign == -l.sign) continue;
      cur.push_back(l);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

}  // namespace

long long lift_displacement(const std::vector<std::string>& alphabet, const Word& w,
                            int depth) {
  Word wr = free_reduce(w);
  if (wr.empty()) throw SpecError("lift displacement is undefined for the trivial word");
  if (depth < 0) throw SpecError("depth must be >= 0");
  std::vector<Word> ball;
  reduced_words(alphabet, depth, ball);
  long long best = 0;
  for (const Word& v : ball) {
    Word moved = free_reduce(v.inverse() * wr * v);
    best = std::max<long long>(best, static_cast<long long>(moved.size()));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Explicit push systems

namespace {

struct AxisPoint {
  long long x = 0;
  long long y = 0;
};

AxisPoint parse_axis(const std::string& label) {
  if (label.size() < 5 || label.front() != '(' || label.back() != ')')
    throw SpecError("bad axis label '" + label + "'");
  auto comma = label.find(',');
  if (comma == std::string::npos) throw SpecError("bad axis label '" + label + "'");
  AxisPoint p;
  p.x = std::stoll(label.substr(1, comma - 1));
  p.y = std::stoll(label.substr(comma + 1, label.size() - comma - 2));
  if (p.x != 0 && p.y != 0) throw SpecError("label '" + label + "' is not on an axis");
  return p;
}

std::string axis_label(long long x, long long y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

PushSystem PushSystem::cross(const std::string& a_letter, const std::string& b_letter) {
  PushSystem s;
  s.kind_ = Kind::Cross;
  s.letters_ = {a_letter, b_letter};
  s.basepoint_ = axis_label(0, 0);
  return s;
}

PushSystem PushSystem::z_line(const std::string& letter) {
  PushSystem s;
  s.kind_ = Kind::ZLine;
  s.letters_ = {letter};
  s.basepoint_ = "0";
  return s;
}

bool PushSystem::has_letter(const std::string& s) const {
  return std::find(letters_.begin(), letters_.end(), s) != letters_.end();
}

bool PushSystem::in_domain(const std::string& letter, const std::string& node) const {
  if (kind_ == Kind::ZLine) return true;
  AxisPoint p = parse_axis(node);
  if (letter == letters_[0]) return p.y == 0;
  if (letter == letters_[1]) return p.x == 0;
  throw SpecError("unknown push letter '" + letter + "'");
}

std::string PushSystem::apply(const std::string& node, const Letter& l) const {
  if (!has_letter(l.gen)) throw SpecError("unknown push letter '" + l.gen + "'");
  if (kind_ == Kind::ZLine) {
    return std::to_string(std::stoll(node) + l.sign);
  }
  AxisPoint p = parse_axis(node);
  // Forward direction of each crossing shift decreases the coordinate; this
  // is the orientation under which the commutator of the two shifts is
  // supported on the three fronts at and just behind the crossing.
  if (l.gen == letters_[0]) {
    if (p.y != 0) return node;
    return axis_label(p.x - l.sign, 0);
  }
  if (p.x != 0) return node;
  return axis_label(0, p.y - l.sign);
}

std::string PushSystem::act(const std::string& node, const Word& w) const {
  std::string cur = node;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) cur = apply(cur, *it);
  return cur;
}

std::vector<std::string> PushSystem::window_nodes(int window) const {
  std::vector<std::string> out;
  if (kind_ == Kind::ZLine) {
    for (long long k = -window; k <= window; ++k) out.push_back(std::to_string(k));
    return out;
  }
  for (long long k = -window; k <= window; ++k) out.push_back(axis_label(k, 0));
  for (long long k = -window; k <= window; ++k) {
    if (k != 0) out.push_back(axis_label(0, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PushSystem::in_window(const std::string& node, int window) const {
  if (kind_ == Kind::ZLine) {
    long long k = std::stoll(node);
    return -window <= k && k <= window;
  }
  AxisPoint p = parse_axis(node);
  return std::llabs(p.x) <= window && std::llabs(p.y) <= window;
}

std::string SupportCell::str() const {
  switch (kind) {
    case Kind::VertexFront: return "front(" + node + ")";
    case Kind::EdgeFront: return "edge(" + node + "," + letter + ")";
    case Kind::PiCopy: return "copy(" + node + ")";
    case Kind::OmegaCell: return "omega(" + node + ")";
  }
  return "?";
}

std::set<std::string> SupportRegion::vertex_fronts() const {
  std::set<std::string> out;
  for (const SupportCell& c : cells) {
    if (c.kind == SupportCell::Kind::VertexFront) out.insert(c.node);
  }
  return out;
}

std::set<std::string> SupportRegion::moved_copies() const {
  std::set<std::string> out;
  for (const SupportCell& c : cells) {
    if (c.kind == SupportCell::Kind::PiCopy) out.insert(c.node);
  }
  return out;
}

bool SupportRegion::intersects(const SupportRegion& other) const {
  for (const SupportCell& c : cells) {
    if (other.cells.count(c)) return true;
  }
  return false;
}

std::string SupportRegion::str() const {
  std::ostringstream os;
  bool first = true;
  for (const SupportCell& c : cells) {
    if (!first) os << ' ';
    first = false;
    os << c.str();
  }
  if (truncated) os << (first ? "" : " ") << "(truncated)";
  if (first && !truncated) os << "empty";
  return os.str();
}

namespace {

struct TrajStep {
  std::string from;
  std::string to;
  std::string letter;
  int dir = 1;  // +1 along the letter, -1 against it
};

// Backtrack reduction: a step followed by its exact reverse cancels.
void push_step(std::vector<TrajStep>& path, TrajStep step) {
  if (!path.empty()) {
    const TrajStep& top = path.back();
    if (top.letter == step.letter && top.dir == -step.dir && top.to == step.from &&
        top.from == step.to) {
      path.pop_back();
      return;
    }
  }
  path.push_back(std::move(step));
}

}  // namespace

SupportRegion support_region(const PushSystem& sys, const Word& w, int window) {
  SupportRegion region;
  region.window = window;
  Word wr = free_reduce(w);
  if (wr.empty()) return region;

  for (const std::string& node : sys.window_nodes(window)) {
    std::vector<TrajStep> path;
    std::string cur = node;
    const auto& ls = wr.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      std::string next = sys.apply(cur, *it);
      if (next != cur) {
        push_step(path, TrajStep{cur, next, it->gen, it->sign});
      }
      cur = next;
    }
    if (cur == node) continue;  // net-fixed; backtracks cancelled exactly
    // A moved copy whose reduced track leaves the window means the support
    // continues past what the window can certify.
    if (!sys.in_window(cur, window)) region.truncated = true;
    region.cells.insert(SupportCell{SupportCell::Kind::PiCopy, node, ""});
    region.cells.insert(SupportCell{SupportCell::Kind::VertexFront, node, ""});
    region.cells.insert(SupportCell{SupportCell::Kind::VertexFront, cur, ""});
    for (const TrajStep& step : path) {
      if (!sys.in_window(step.from, window) || !sys.in_window(step.to, window))
        region.truncated = true;
      region.cells.insert(SupportCell{SupportCell::Kind::VertexFront, step.from, ""});
      region.cells.insert(SupportCell{SupportCell::Kind::VertexFront, step.to, ""});
      // Canonical edge id: the endpoint the forward direction leaves from.
      const std::string& tail = step.dir > 0 ? step.from : step.to;
      region.cells.insert(SupportCell{SupportCell::Kind::EdgeFront, tail, step.letter});
    }
  }
  return region;
}

Tri commute_by_disjoint_support(const PushSystem& sys, const Word& u, const Word& v,
                                int window) {
  Word ur = free_reduce(u);
  Word vr = free_reduce(v);
  if (ur.empty() || vr.empty()) return Tri::Yes;
  if (ur == vr) return Tri::Yes;
  SupportRegion ru = support_region(sys, ur, window);
  SupportRegion rv = support_region(sys, vr, window);
  if (!ru.intersects(rv)) return Tri::Yes;
  return Tri::Unknown;
}

Verdict push_system_is_trivial(const PushSystem& sys, const Word& w, int window) {
  for (const Letter& l : w.letters()) {
    if (!sys.has_letter(l.gen))
      throw SpecError("word letter '" + l.gen + "' is not a push letter");
  }
  Word wr = free_reduce(w);
  if (wr.empty()) return Verdict{VerdictKind::Trivial, "freely trivial", window};
  for (const std::string& node : sys.window_nodes(window)) {
    std::string image = sys.act(node, wr);
    if (image != node)
      return Verdict{VerdictKind::Nontrivial, "moves copy " + node + " to " + image,
                     window};
  }
  return Verdict{VerdictKind::Unknown,
                 "copies fixed on the window; crossing shifts admit relations", window};
}

// ---------------------------------------------------------------------------
// Diagonal systems

void DiagonalSystem::validate() const {
  if (factors.empty()) throw SpecError("diagonal system needs at least one factor");
  std::set<std::string> seen;
  for (const DiagonalFactor& f : factors) {
    if (f.push_letter.empty()) throw SpecError("diagonal factor has no push letter");
    if (!seen.insert(f.push_letter).second)
      throw SpecError("push letter '" + f.push_letter + "' reused across factors");
    for (const std::string& g : f.zs.pres.alphabet) {
      if (!seen.insert(g).second)
        throw SpecError("generator '" + g + "' appears in two alphabets");
    }
    for (const std::string& g : f.presentation.alphabet) {
      if (!f.zs.old_to_new.count(g))
        throw InternalError("zero-sum dictionary misses generator '" + g + "'");
      if (f.zs.pres.has_generator(g)) continue;  // shared name, already checked
      if (!seen.insert(g).second)
        throw SpecError("generator '" + g + "' appears in two alphabets");
    }
  }
  if (pi) pi->validate();
}

DiagonalSystem::LetterClass DiagonalSystem::classify_letter(const std::string& name,
                                                            int* factor) const {
  if (name.size() > 1 && name[0] == '~') {
    std::string bare = name.substr(1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].presentation.has_generator(bare)) {
        if (factor) *factor = static_cast<int>(i);
        return LetterClass::Bar;
      }
    }
    return LetterClass::Unknown;
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].push_letter == name) {
      if (factor) *factor = static_cast<int>(i);
      return LetterClass::Push;
    }
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].zs.pres.has_generator(name)) {
      if (factor) *factor = static_cast<int>(i);
      return LetterClass::Augmented;
    }
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].presentation.has_generator(name)) {
      if (factor) *factor = static_cast<int>(i);
      return LetterClass::Original;
    }
  }
  return LetterClass::Unknown;
}

std::vector<std::string> DiagonalSystem::solver_alphabet() const {
  std::vector<std::string> out;
  for (const DiagonalFactor& f : factors) {
    out.insert(out.end(), f.zs.pres.alphabet.begin(), f.zs.pres.alphabet.end());
  }
  return out;
}

bool NormalizedDiagonal::trivial() const {
  if (!x_word.empty()) return false;
  for (const Word& p : factor_parts) {
    if (!p.empty()) return false;
  }
  return true;
}

std::string NormalizedDiagonal::str() const {
  std::ostringstream os;
  os << "x=" << x_word.str();
  for (std::size_t i = 0; i < factor_parts.size(); ++i) {
    os << " g" << i + 1 << "=" << factor_parts[i].str();
  }
  return os.str();
}

NormalizedDiagonal diagonal_normalize(const DiagonalSystem& sys, const Word& w) {
  sys.validate();
  Word shadow;
  std::vector<Word> parts(sys.factors.size());
  for (const Letter& l : w.letters()) {
    int fi = -1;
    switch (sys.classify_letter(l.gen, &fi)) {
      case DiagonalSystem::LetterClass::Push:
        shadow.push_back(Letter(sys.factors[fi].push_letter, l.sign));
        break;
      case DiagonalSystem::LetterClass::Augmented: {
        shadow.push_back(Letter(sys.factors[fi].push_letter, l.sign));
        Word underlying = sys.factors[fi].zs.new_to_old.at(l.gen);
        parts[fi] = parts[fi] * (l.sign > 0 ? underlying : underlying.inverse());
        break;
      }
      case DiagonalSystem::LetterClass::Original: {
        // An original generator evaluates as its embedded image: the diagonal
        // action plus as many shift steps as its weight.
        long long weight = sys.factors[fi].weights.at(l.gen) * l.sign;
        for (long long k = 0; k < std::llabs(weight); ++k)
          shadow.push_back(Letter(sys.factors[fi].push_letter, weight > 0 ? 1 : -1));
        parts[fi].push_back(l);
        break;
      }
      case DiagonalSystem::LetterClass::Bar:
        parts[fi].push_back(Letter(l.gen.substr(1), l.sign));
        break;
      case DiagonalSystem::LetterClass::Unknown:
        throw SpecError("letter '" + l.gen + "' belongs to no factor of the system");
    }
  }
  NormalizedDiagonal out;
  out.x_word = free_reduce(shadow);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.factor_parts.push_back(sys.factors[i].oracle.normalize(parts[i]));
  }
  return out;
}

NormalizedDiagonal diagonal_mul(const DiagonalSystem& sys, const NormalizedDiagonal& a,
                                const NormalizedDiagonal& b) {
  NormalizedDiagonal out;
  out.x_word = free_reduce(a.x_word * b.x_word);
  for (std::size_t i = 0; i < sys.factors.size(); ++i) {
    out.factor_parts.push_back(
        sys.factors[i].oracle.normalize(a.factor_parts[i] * b.factor_parts[i]));
  }
  return out;
}

Verdict diagonal_verdict(const DiagonalSystem& sys, const Word& w) {
  NormalizedDiagonal n = diagonal_normalize(sys, w);
  if (n.trivial()) return Verdict{VerdictKind::Trivial, "", 0};
  if (!n.x_word.empty())
    return Verdict{VerdictKind::Nontrivial, "shift part " + n.x_word.str(), 0};
  for (std::size_t i = 0; i < n.factor_parts.size(); ++i) {
    if (!n.factor_parts[i].empty())
      return Verdict{VerdictKind::Nontrivial,
                     "factor " + std::to_string(i + 1) + " part " +
                         n.factor_parts[i].str(),
                     0};
  }
  throw InternalError("diagonal verdict fell through");
}

// ---------------------------------------------------------------------------
// Wreath systems

void WreathSystem::validate() const {
  switch (push_kind) {
    case PushKind::ZShift:
      if (shift_letter.empty()) throw SpecError("wreath shift letter missing");
      break;
    case PushKind::Multipush:
      if (!multipush) throw SpecError("wreath system has no multipush data");
      multipush->validate();
      break;
    case PushKind::Cross:
      if (!cross) throw SpecError("wreath system has no crossing-shift data");
      break;
  }
  for (const std::string& g : lamp.alphabet()) {
    if (is_push_letter(g))
      throw SpecError("lamp generator '" + g + "' collides with a push letter");
  }
  if (pi) pi->validate();
}

std::vector<std::string> WreathSystem::push_letters() const {
  switch (push_kind) {
    case PushKind::ZShift: return {shift_letter};
    case PushKind::Multipush: return multipush->letters;
    case PushKind::Cross: return cross->letters();
  }
  return {};
}

bool WreathSystem::is_push_letter(const std::string& name) const {
  auto ls = push_letters();
  return std::find(ls.begin(), ls.end(), name) != ls.end();
}

std::string WreathSystem::apply_push(const std::string& pos, const Letter& l) const {
  switch (push_kind) {
    case PushKind::ZShift:
      return std::to_string(std::stoll(pos) + l.sign);
    case PushKind::Multipush:
      return multipush->coset_apply(pos, l);
    case PushKind::Cross:
      return cross->apply(pos, l);
  }
  throw InternalError("unhandled push kind");
}

std::string WreathElement::str() const {
  std::ostringstream os;
  os << "support{";
  bool first = true;
  for (const auto& [pos, g] : support) {
    if (!first) os << ", ";
    first = false;
    os << pos << ": " << g.str();
  }
  os << "} shift=" << shift.str();
  return os.str();
}

WreathElement wreath_normalize(const WreathSystem& sys, const Word& w) {
  sys.validate();
  std::string base = sys.base.empty()
                         ? (sys.push_kind == WreathSystem::PushKind::ZShift
                                ? "0"
                                : (sys.push_kind == WreathSystem::PushKind::Multipush
                                       ? sys.multipush->graph->basepoint()
                                       : sys.cross->basepoint()))
                         : sys.base;
  std::map<std::string, Word> support;
  Word shift;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const Letter& l = *it;
    if (sys.is_push_letter(l.gen)) {
      std::map<std::string, Word> moved;
      for (auto& [pos, g] : support) moved[sys.apply_push(pos, l)] = std::move(g);
      support = std::move(moved);
      shift = free_reduce(Word::from_letter(l.gen, l.sign) * shift);
    } else if (sys.lamp.has_letter(l.gen)) {
      // The new lamp acts after whatever already sits at the base position.
      support[base] = Word::from_letter(l.gen, l.sign) * support[base];
    } else {
      throw SpecError("letter '" + l.gen + "' is neither a lamp nor a push letter");
    }
  }
  WreathElement out;
  for (auto& [pos, g] : support) {
    Word n = sys.lamp.normalize(g);
    if (!n.empty()) out.support.emplace(pos, std::move(n));
  }
  out.shift = shift;
  return out;
}

Verdict wreath_verdict(const WreathSystem& sys, const WreathElement& e, int window) {
  if (!e.support_empty()) {
    const auto& [pos, g] = *e.support.begin();
    return Verdict{VerdictKind::Nontrivial, "lamp " + g.str() + " at " + pos, window};
  }
  switch (sys.push_kind) {
    case WreathSystem::PushKind::ZShift:
    case WreathSystem::PushKind::Multipush: {
      if (e.shift.empty()) return Verdict{VerdictKind::Trivial, "", window};
      if (sys.push_kind == WreathSystem::PushKind::Multipush) {
        return multipush_is_trivial(*sys.multipush, e.shift, window);
      }
      return Verdict{VerdictKind::Nontrivial, "shift " + e.shift.str(), window};
    }
    case WreathSystem::PushKind::Cross:
      return push_system_is_trivial(*sys.cross, e.shift, window);
  }
  throw InternalError("unhandled push kind");
}

// ---------------------------------------------------------------------------
// Graded window action

std::string BSWindowResult::describe(int n) const {
  std::ostringstream os;
  os << "copy-shift=" << state.copy_shift;
  for (const auto& [o, off] : state.offsets) {
    if (off.zero()) continue;
    os << " copy[" << o << "]+=" << nadic_str(off, n);
  }
  if (state.truncated) os << " (truncated)";
  return os.str();
}

BSWindowResult bs_window_action(int n, const Word& w, int depth, int copy_radius,
                                const std::string& a_name, const std::string& t_name) {
  if (n < 2) throw SpecError("window action requires n >= 2");
  if (depth < 0 || copy_radius < 0) throw SpecError("window sizes must be >= 0");
  BSWindowResult res;
  BSWindowState& st = res.state;
  for (long long o = -copy_radius; o <= copy_radius; ++o) st.offsets[o] = NAdic{};

  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const Letter& l = *it;
    if (l.gen == t_name) {
      st.copy_shift += l.sign;
    } else if (l.gen == a_name) {
      for (auto& [o, off] : st.offsets) {
        long long level = o + st.copy_shift;
        if (std::llabs(level) > depth) {
          st.truncated = true;
          continue;
        }
        // One step of the level-`level` family: n^-level in level-0 units.
        NAdic step = nadic_mul_npow(NAdic{l.sign, 0}, -level, n);
        off = nadic_add(off, step, n);
      }
    } else {
      throw SpecError("letter '" + l.gen + "' is not in the {" + a_name + "," + t_name +
                      "} alphabet");
    }
  }

  if (st.truncated) {
    res.verdict = Verdict{VerdictKind::Truncated, "level window exceeded", depth};
    return res;
  }
  bool moved = st.copy_shift != 0;
  for (const auto& [o, off] : st.offsets) {
    if (!off.zero()) moved = true;
  }
  res.verdict = moved ? Verdict{VerdictKind::Nontrivial, res.describe(n), depth}
                      : Verdict{VerdictKind::Trivial, "", depth};
  return res;
}

// ---------------------------------------------------------------------------
// Intrinsic-type witnesses

std::string IntrinsicWitness::str() const {
  return (kind == Kind::EndPermutation ? "end-permutation: " : "handle-shift: ") + detail;
}

std::optional<IntrinsicWitness> intrinsic_witness_for_shift(const PiSpec& pi,
                                                            bool two_ended,
                                                            long long net_shift) {
  if (net_shift == 0) return std::nullopt;
  if (!pi.type.ends.is_empty()) {
    return IntrinsicWitness{IntrinsicWitness::Kind::EndPermutation,
                            "ends of copy 0 move to copy " + std::to_string(net_shift)};
  }
  if (pi.compact() && pi.type.genus.n >= 1 && two_ended) {
    return IntrinsicWitness{IntrinsicWitness::Kind::HandleShift,
                            "net handle-shift exponent " + std::to_string(net_shift)};
  }
  return std::nullopt;
}

std::optional<IntrinsicWitness> intrinsic_type_witness(const DiagonalSystem& sys,
                                                       const Word& w) {
  if (!sys.pi) return std::nullopt;
  NormalizedDiagonal n = diagonal_normalize(sys, w);
  WeightMap ones;
  for (const DiagonalFactor& f : sys.factors) ones.set(f.push_letter, 1);
  for (const DiagonalFactor& f : sys.factors) {
    WeightMap only;
    for (const DiagonalFactor& g : sys.factors)
      only.set(g.push_letter, g.push_letter == f.push_letter ? 1 : 0);
    long long net = exponent_sum(n.x_word, only);
    auto witness = intrinsic_witness_for_shift(*sys.pi, sys.two_ended, net);
    if (witness) return witness;
  }
  return std::nullopt;
}

std::optional<IntrinsicWitness> intrinsic_type_witness(const MultipushSystem& sys,
                                                       const Word& w, int window) {
  if (!sys.pi) return std::nullopt;
  Word wr = free_reduce(w);
  if (wr.empty()) return std::nullopt;
  Ball ball = sys.graph->ball(sys.graph->basepoint(), window);
  std::string moved_node;
  for (const std::string& node : ball.nodes) {
    if (sys.act(node, wr) != node) {
      moved_node = node;
      break;
    }
  }
  if (moved_node.empty()) return std::nullopt;
  if (!sys.pi->type.ends.is_empty()) {
    return IntrinsicWitness{IntrinsicWitness::Kind::EndPermutation,
                            "ends of copy " + moved_node + " move with it"};
  }
  if (sys.pi->compact() && sys.pi->type.genus.n >= 1) {
    OrbitInfo orbit = sys.graph->s_orbit(moved_node, wr.letters().back().gen, window);
    auto ends = catalog_graph_ends(*sys.graph);
    bool two_ended = !orbit.finite_cycle && ends.has_value() &&
                     !(ends->total_count() == Card::of(1));
    if (two_ended) {
      return IntrinsicWitness{IntrinsicWitness::Kind::HandleShift,
                              "moves the copy at " + moved_node + " along an infinite orbit"};
    }
  }
  return std::nullopt;
}

}  // namespace shiftforge
