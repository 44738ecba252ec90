#include "shiftforge/surface.hpp"

#include <algorithm>
#include <sstream>

namespace shiftforge {

EndDescriptor EndDescriptor::finite(long long k, Mark m, long long marked) {
  if (k < 0) throw SpecError("end count must be >= 0");
  EndDescriptor d;
  d.kind = Kind::Finite;
  d.count = k;
  d.mark = m;
  d.marked = marked;
  if (m == Mark::Count && (marked < 0 || marked > k))
    throw SpecError("nonplanar marking exceeds the end count");
  if (m == Mark::Limit) throw SpecError("a finite end set has no limit ends");
  return d;
}

EndDescriptor EndDescriptor::omega_plus_one(Mark m, long long marked) {
  EndDescriptor d;
  d.kind = Kind::OmegaPlusOne;
  d.mark = m;
  d.marked = marked;
  return d;
}

EndDescriptor EndDescriptor::z_two_point(Mark m, long long marked) {
  EndDescriptor d;
  d.kind = Kind::ZTwoPoint;
  d.mark = m;
  d.marked = marked;
  return d;
}

EndDescriptor EndDescriptor::cantor(Mark m) {
  if (m == Mark::Count || m == Mark::Limit)
    throw SpecError("a Cantor end set supports only all-or-none markings");
  EndDescriptor d;
  d.kind = Kind::Cantor;
  d.mark = m;
  return d;
}

EndDescriptor EndDescriptor::graph_ends(const std::string& tag) {
  EndDescriptor d;
  d.kind = Kind::GraphEnds;
  d.tag = tag;
  return d;
}

EndDescriptor EndDescriptor::disjoint_union(std::vector<EndDescriptor> parts) {
  EndDescriptor d;
  d.kind = Kind::DisjointUnion;
  d.parts = std::move(parts);
  return d;
}

EndDescriptor EndDescriptor::normalized() const {
  switch (kind) {
    case Kind::GraphEnds: {
      // Catalogued graph families.
      if (tag == "tree") return cantor(mark);
      if (tag == "line") return finite(2, mark, mark == Mark::Count ? marked : 0);
      if (tag == "cycle" || tag == "finite") return finite(0);
      if (tag == "one-end" || tag == "grid") return finite(1, mark, mark == Mark::Count ? marked : 0);
      if (tag == "three-end-star") return finite(3, mark, mark == Mark::Count ? marked : 0);
      if (tag == "z-two-point") return z_two_point(mark, marked);
      return *this;  // unrecognized tag stays symbolic
    }
    case Kind::DisjointUnion: {
      std::vector<EndDescriptor> norm;
      long long finite_total = 0;
      long long finite_marked = 0;
      bool saw_finite = false;
      bool finite_all = true;
      for (const EndDescriptor& p : parts) {
        EndDescriptor q = p.normalized();
        if (q.kind == Kind::DisjointUnion) {
          for (const EndDescriptor& r : q.parts) norm.push_back(r);
        } else {
          norm.push_back(q);
        }
      }
      std::vector<EndDescriptor> rest;
      for (const EndDescriptor& q : norm) {
        if (q.kind == Kind::Finite) {
          if (q.count == 0) continue;
          saw_finite = true;
          finite_total += q.count;
          Card np = q.nonplanar_count();
          finite_marked += np.n;
          if (np.n != q.count) finite_all = false;
        } else {
          rest.push_back(q);
        }
      }
      if (saw_finite && finite_total > 0) {
        Mark m = finite_marked == 0 ? Mark::None
                 : (finite_all ? Mark::All : Mark::Count);
        rest.push_back(finite(finite_total, m, m == Mark::Count ? finite_marked : 0));
      }
      if (rest.empty()) return finite(0);
      if (rest.size() == 1) return rest[0];
      std::sort(rest.begin(), rest.end(), [](const EndDescriptor& a, const EndDescriptor& b) {
        return a.str() < b.str();
      });
      EndDescriptor d;
      d.kind = Kind::DisjointUnion;
      d.parts = std::move(rest);
      return d;
    }
    default: {
      EndDescriptor d = *this;
      if (d.kind == Kind::Finite && d.mark == Mark::Count) {
        if (d.marked == 0) d.mark = Mark::None;
        if (d.marked == d.count && d.count > 0) {
          d.mark = Mark::All;
          d.marked = 0;
        }
      }
      if (d.kind == Kind::Finite && d.count == 0) {
        d.mark = Mark::None;
        d.marked = 0;
      }
      return d;
    }
  }
}

bool EndDescriptor::in_catalog() const {
  EndDescriptor n = normalized();
  if (n.kind == Kind::GraphEnds) return false;
  if (n.kind == Kind::DisjointUnion) {
    for (const EndDescriptor& p : n.parts)
      if (!p.in_catalog()) return false;
  }
  return true;
}

bool EndDescriptor::is_empty() const {
  EndDescriptor n = normalized();
  return n.kind == Kind::Finite && n.count == 0;
}

Card EndDescriptor::total_count() const {
  EndDescriptor n = normalized();
  switch (n.kind) {
    case Kind::Finite: return Card::of(n.count);
    case Kind::DisjointUnion: {
      Card c = Card::of(0);
      for (const EndDescriptor& p : n.parts) c = c + p.total_count();
      return c;
    }
    default: return Card::inf();
  }
}

bool EndDescriptor::countable() const {
  EndDescriptor n = normalized();
  switch (n.kind) {
    case Kind::Cantor: return false;
    case Kind::GraphEnds: return false;  // unknown tag: do not guess
    case Kind::DisjointUnion:
      for (const EndDescriptor& p : n.parts)
        if (!p.countable()) return false;
      return true;
    default: return true;
  }
}

Card EndDescriptor::nonplanar_count() const {
  EndDescriptor n = normalized();
  if (n.kind == Kind::DisjointUnion) {
    Card c = Card::of(0);
    for (const EndDescriptor& p : n.parts) c = c + p.nonplanar_count();
    return c;
  }
  switch (n.mark) {
    case Mark::None: return Card::of(0);
    case Mark::All: return n.total_count();
    case Mark::Count: return Card::of(n.marked);
    case Mark::Limit:
      if (n.kind == Kind::OmegaPlusOne) return Card::of(1);
      if (n.kind == Kind::ZTwoPoint) return Card::of(2);
      return Card::inf();
  }
  return Card::of(0);
}

Card EndDescriptor::planar_count() const {
  Card total = total_count();
  Card np = nonplanar_count();
  if (total.infinite) {
    // Infinite total with all ends marked nonplanar leaves no planar ends.
    if (mark == Mark::All && kind != Kind::DisjointUnion) return Card::of(0);
    if (kind == Kind::DisjointUnion) {
      Card c = Card::of(0);
      for (const EndDescriptor& p : normalized().parts) c = c + p.planar_count();
      return c;
    }
    return Card::inf();
  }
  return Card::of(total.n - np.n);
}

EndDescriptor EndDescriptor::nonplanar_subterm() const {
  EndDescriptor n = normalized();
  if (n.kind == Kind::DisjointUnion) {
    std::vector<EndDescriptor> parts;
    for (const EndDescriptor& p : n.parts) {
      EndDescriptor q = p.nonplanar_subterm();
      if (!q.is_empty()) parts.push_back(q);
    }
    return disjoint_union(std::move(parts)).normalized();
  }
  switch (n.mark) {
    case Mark::None: return empty();
    case Mark::All: {
      EndDescriptor d = n;
      d.mark = Mark::All;
      return d;
    }
    case Mark::Count: return finite(n.marked, n.marked > 0 ? Mark::All : Mark::None);
    case Mark::Limit:
      if (n.kind == Kind::OmegaPlusOne) return finite(1, Mark::All);
      if (n.kind == Kind::ZTwoPoint) return finite(2, Mark::All);
      return n;
  }
  return empty();
}

std::string EndDescriptor::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Finite: os << "finite(" << count << ")"; break;
    case Kind::OmegaPlusOne: os << "omega-plus-one"; break;
    case Kind::ZTwoPoint: os << "z-two-point"; break;
    case Kind::Cantor: os << "cantor"; break;
    case Kind::GraphEnds: os << "graph-ends(" << tag << ")"; break;
    case Kind::DisjointUnion: {
      os << "union[";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << " + ";
        os << parts[i].str();
      }
      os << "]";
      break;
    }
  }
  switch (mark) {
    case Mark::None: break;
    case Mark::All: os << "{nonplanar:all}"; break;
    case Mark::Count: os << "{nonplanar:" << marked << "}"; break;
    case Mark::Limit: os << "{nonplanar:limit}"; break;
  }
  return os.str();
}

bool operator==(const EndDescriptor& a, const EndDescriptor& b) {
  EndDescriptor na = a.normalized();
  EndDescriptor nb = b.normalized();
  if (na.kind != nb.kind || na.count != nb.count || na.tag != nb.tag ||
      na.mark != nb.mark || na.marked != nb.marked)
    return false;
  if (na.parts.size() != nb.parts.size()) return false;
  for (std::size_t i = 0; i < na.parts.size(); ++i) {
    if (!(na.parts[i] == nb.parts[i])) return false;
  }
  return true;
}

Cmp compare_descriptors(const EndDescriptor& a, const EndDescriptor& b) {
  if (!a.in_catalog() || !b.in_catalog()) return Cmp::Incomparable;
  return a == b ? Cmp::Equal : Cmp::Distinct;
}

bool SurfaceType::is_sphere() const {
  return !genus.infinite && genus.n == 0 && boundary == 0 && ends.is_empty();
}

std::string SurfaceType::str() const {
  std::ostringstream os;
  os << "(genus=" << genus.str() << ", boundary=" << boundary
     << ", nonplanar=" << nonplanar_ends().str() << ", ends=" << ends.str() << ")";
  return os.str();
}

bool operator==(const SurfaceType& a, const SurfaceType& b) {
  return a.genus == b.genus && a.boundary == b.boundary && a.ends == b.ends &&
         a.nonplanar_ends() == b.nonplanar_ends();
}

SurfaceType sphere() { return SurfaceType{Card::of(0), 0, EndDescriptor::empty()}; }

SurfaceType closed_surface(long long genus) {
  return SurfaceType{Card::of(genus), 0, EndDescriptor::empty()};
}

SurfaceType one_boundary(long long genus) {
  return SurfaceType{Card::of(genus), 1, EndDescriptor::empty()};
}

void PiSpec::validate() const {
  if (type.boundary != 1)
    throw SpecError("building-block surface '" + name + "' must have exactly one boundary component");
  if (!type.genus.infinite && type.genus.n == 0 && type.ends.is_empty())
    throw SpecError("building-block surface '" + name + "' is a disk");
}

void SchreierSurfaceSpec::validate() const {
  if (!graph) throw SpecError("surface spec '" + name + "' has no graph");
  pi.validate();
  for (const auto& [node, omega] : omegas) {
    if (omega.boundary < 0) throw SpecError("negative boundary count");
  }
}

bool SchreierSurfaceSpec::omega_is_sphere(const std::string& node) const {
  auto it = omegas.find(node);
  return it == omegas.end() || it->second.is_sphere();
}

std::set<std::string> SchreierSurfaceSpec::nonsphere_nodes() const {
  std::set<std::string> out;
  for (const auto& [node, omega] : omegas) {
    if (!omega.is_sphere()) out.insert(node);
  }
  return out;
}

std::string Classification::str() const {
  if (symbolic) return "symbolic(" + reason + ")";
  return type.str();
}

namespace {

struct GraphShape {
  bool known = false;
  std::string reason;
  bool finite = false;
  long long vertices = 0;  // finite case
  EndDescriptor ends;      // unmarked end space of the graph
  Card betti;              // cycle rank
};

GraphShape graph_shape(const GraphSpec& g) {
  GraphShape s;
  switch (g.kind()) {
    case GraphSpec::Kind::FiniteExplicit: {
      s.known = true;
      s.finite = true;
      s.vertices = static_cast<long long>(g.finite_vertices().size());
      s.ends = EndDescriptor::empty();
      long long betti = g.finite_edge_count() - s.vertices + g.finite_component_count();
      s.betti = Card::of(betti);
      return s;
    }
    case GraphSpec::Kind::Cayley: {
      const GroupOracle& o = g.oracle();
      std::size_t rank = g.letters().size();
      if (o.kind() == GroupOracle::Kind::Free && rank == o.alphabet().size()) {
        s.known = true;
        s.ends = rank >= 2 ? EndDescriptor::cantor() : EndDescriptor::finite(2);
        s.betti = Card::of(0);
        return s;
      }
      if (o.kind() == GroupOracle::Kind::FreeAbelian && rank == o.alphabet().size()) {
        s.known = true;
        s.ends = rank >= 2 ? EndDescriptor::finite(1) : EndDescriptor::finite(2);
        s.betti = rank >= 2 ? Card::inf() : Card::of(0);
        return s;
      }
      if (o.kind() == GroupOracle::Kind::CyclicMod && rank == 1) {
        s.known = true;
        s.finite = true;
        s.vertices = o.modulus();
        s.ends = EndDescriptor::empty();
        s.betti = Card::of(1);
        return s;
      }
      s.reason = "Cayley graph of oracle kind '" + o.kind_str() + "' is not catalogued";
      return s;
    }
    case GraphSpec::Kind::KernelCosets: {
      s.known = true;
      s.ends = EndDescriptor::finite(2);
      // A single unit-weight letter gives the bare line; anything else adds
      // loops or chords at every vertex, hence infinitely many cycles.
      bool bare_line = g.letters().size() == 1 &&
                       std::llabs(g.kernel_weights().at(g.letters()[0])) == 1;
      s.betti = bare_line ? Card::of(0) : Card::inf();
      return s;
    }
    case GraphSpec::Kind::LazyExplicit: {
      EndDescriptor d = EndDescriptor::graph_ends(g.declared_ends_tag());
      if (!d.in_catalog()) {
        s.reason = "declared graph-end tag '" + g.declared_ends_tag() + "' is not catalogued";
        return s;
      }
      s.known = true;
      s.ends = d.normalized();
      s.betti = g.declared_acyclic() ? Card::of(0) : Card::inf();
      return s;
    }
  }
  s.reason = "unhandled graph kind";
  return s;
}

}  // namespace

Classification classify(const SchreierSurfaceSpec& spec) {
  spec.validate();
  Classification out;
  GraphShape shape = graph_shape(*spec.graph);
  if (!shape.known) {
    out.symbolic = true;
    out.reason = shape.reason;
    return out;
  }
  if (!spec.pi.compact()) {
    out.symbolic = true;
    out.reason = "non-compact building block enriches the graph end space; outside the catalog";
    return out;
  }

  long long pi_genus = spec.pi.type.genus.n;  // compact: finite

  Card genus = shape.betti;
  if (pi_genus > 0) {
    if (shape.finite) {
      genus = genus + Card::of(shape.vertices * pi_genus);
    } else {
      genus = Card::inf();
    }
  }
  long long boundary = 0;
  std::vector<EndDescriptor> extra_ends;
  for (const auto& [node, omega] : spec.omegas) {
    genus = genus + omega.genus;
    boundary += omega.boundary;
    if (!omega.ends.is_empty()) extra_ends.push_back(omega.ends);
  }

  EndDescriptor ends = shape.ends;
  if (!ends.is_empty() && pi_genus > 0) {
    // Genus at every vertex accumulates onto every end of the graph.
    ends.mark = EndDescriptor::Mark::All;
  }
  if (!extra_ends.empty()) {
    extra_ends.push_back(ends);
    ends = EndDescriptor::disjoint_union(std::move(extra_ends)).normalized();
  }

  out.type = SurfaceType{genus, boundary, ends};
  return out;
}

std::string ComplementRecord::str() const {
  if (incomparable) return "incomparable(" + note + ")";
  std::ostringstream os;
  os << "(genus=" << genus.str() << ", planar-ends=" << planar_ends.str()
     << ", nonplanar-ends=" << nonplanar_ends.str() << ")";
  return os.str();
}

ComplementRecord complement_invariant(const SchreierSurfaceSpec& spec,
                                      const std::vector<std::string>& omitted_nodes,
                                      const std::set<std::string>* domain_nodes) {
  spec.validate();
  ComplementRecord rec;
  const SurfaceType& pi = spec.pi.type;
  if (!pi.ends.in_catalog()) {
    rec.incomparable = true;
    rec.note = "building-block end space outside the descriptor algebra";
    return rec;
  }
  if (domain_nodes) {
    for (const std::string& v : omitted_nodes) {
      if (domain_nodes->count(v))
        throw SpecError("omitted copy '" + v + "' still lies in the support region");
    }
  }

  // Back side of the construction: planar, carries the ambient graph ends.
  GraphShape shape = graph_shape(*spec.graph);
  if (!shape.known) {
    rec.incomparable = true;
    rec.note = shape.reason;
    return rec;
  }
  Card genus = Card::of(0);
  Card planar = shape.ends.total_count();
  Card nonplanar = Card::of(0);

  long long m = static_cast<long long>(omitted_nodes.size());
  if (pi.genus.infinite) {
    genus = m > 0 ? Card::inf() : genus;
  } else {
    genus = genus + Card::of(m * pi.genus.n);
  }
  Card pi_planar = pi.ends.planar_count();
  Card pi_nonplanar = pi.ends.nonplanar_count();
  for (long long i = 0; i < m; ++i) {
    planar = planar + pi_planar;
    nonplanar = nonplanar + pi_nonplanar;
  }
  for (const auto& [node, omega] : spec.omegas) {
    genus = genus + omega.genus;
    planar = planar + omega.ends.planar_count();
    nonplanar = nonplanar + omega.ends.nonplanar_count();
  }
  rec.genus = genus;
  rec.planar_ends = planar;
  rec.nonplanar_ends = nonplanar;
  return rec;
}

std::set<int> distinguished_conditions(const PiSpec& pi) {
  std::set<int> out;
  const SurfaceType& t = pi.type;
  if (t.genus.finite()) out.insert(1);
  Card total = t.ends.total_count();
  if (total.finite()) {
    Card np = t.ends.nonplanar_count();
    if (np == Card::of(0)) out.insert(2);                 // all planar (or empty)
    if (np == total || total == Card::of(0)) out.insert(3);  // all nonplanar (or empty)
  }
  return out;
}

FamilyFlags family_membership(const PiSpec& pi, const SchreierSurfaceSpec& ambient,
                              const std::string& domain_letter) {
  FamilyFlags flags;
  ambient.validate();
  if (!pi.type.ends.in_catalog()) return flags;  // everything stays Unknown

  std::set<int> conds = distinguished_conditions(pi);
  GraphShape shape = graph_shape(*ambient.graph);
  if (!shape.known) return flags;

  // C(Pi): a shift domain exists along the letter and the complement of that
  // single domain satisfies the matching finiteness condition.
  bool has_line;
  if (shape.finite) {
    has_line = false;
  } else if (ambient.graph->kind() == GraphSpec::Kind::KernelCosets) {
    has_line = ambient.graph->kernel_weights().at(domain_letter) != 0;
  } else {
    OrbitInfo orbit = ambient.graph->s_orbit(ambient.graph->basepoint(), domain_letter, 8);
    has_line = !orbit.finite_cycle;
  }
  if (conds.empty() || !has_line) {
    flags.c_pi = Tri::No;
  } else {
    // Copies of Pi away from the single domain line sit in the complement.
    bool other_copies = !(shape.ends.total_count() == Card::of(2) && shape.betti.finite());
    Card comp_genus = Card::of(0);
    Card comp_planar = shape.ends.total_count();  // graph ends, planar a priori
    Card comp_nonplanar = Card::of(0);
    for (const auto& [node, omega] : ambient.omegas) {
      comp_genus = comp_genus + omega.genus;
      comp_planar = comp_planar + omega.ends.planar_count();
      comp_nonplanar = comp_nonplanar + omega.ends.nonplanar_count();
    }
    if (other_copies) {
      bool pi_genus = !(pi.type.genus == Card::of(0));
      if (pi_genus) comp_genus = Card::inf();
      if (!(pi.type.ends.planar_count() == Card::of(0))) comp_planar = Card::inf();
      if (!(pi.type.ends.nonplanar_count() == Card::of(0))) comp_nonplanar = Card::inf();
      // Infinitely many off-domain copies with genus accumulate onto every
      // graph end, turning them nonplanar.
      if (pi_genus || !(pi.type.ends.nonplanar_count() == Card::of(0))) {
        comp_nonplanar = comp_nonplanar + shape.ends.total_count();
        comp_planar = comp_planar.infinite ? comp_planar : Card::of(0);
      }
    }
    bool ok = (conds.count(1) && comp_genus.finite()) ||
              (conds.count(2) && comp_planar.finite()) ||
              (conds.count(3) && comp_nonplanar.finite());
    flags.c_pi = ok ? Tri::Yes : Tri::No;
  }

  // B: infinite-type ambient, countable Pi end space, and omissions change the
  // complement invariant (nonzero per-copy contribution in a finite slot).
  bool infinite_type = !shape.finite || pi.type.genus.infinite;
  bool countable = pi.type.ends.countable();
  bool effective = (pi.type.genus.finite() && pi.type.genus.n >= 1) ||
                   (pi.type.ends.total_count().finite() && pi.type.ends.total_count().n >= 1);
  if (pi.type.genus.infinite && pi.type.ends.nonplanar_count().finite() &&
      !(pi.type.ends.nonplanar_count() == Card::of(0)))
    effective = true;
  flags.b = (infinite_type && countable && effective) ? Tri::Yes : Tri::No;
  flags.b_inf = (flags.b == Tri::Yes && pi.type.infinite_type()) ? Tri::Yes : Tri::No;
  return flags;
}

}  // namespace shiftforge
