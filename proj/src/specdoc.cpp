#include "shiftforge/specdoc.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace shiftforge {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SpecError(msg); }

const json& need(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing key '" + key + "'");
  return *it;
}

std::string need_string(const json& obj, const std::string& key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_string()) fail(where + ": key '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const json& e : v) {
    if (!e.is_string()) fail(where + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Card card_from_json(const json& v, const std::string& where) {
  if (v.is_string()) {
    if (v.get<std::string>() == "infinite") return Card::inf();
    fail(where + ": expected an integer or \"infinite\"");
  }
  if (!v.is_number_integer()) fail(where + ": expected an integer or \"infinite\"");
  return Card::of(v.get<long long>());
}

json card_to_json(const Card& c) {
  if (c.infinite) return json("infinite");
  return json(c.n);
}

EndDescriptor descriptor_from_json(const json& v, const std::string& where);

EndDescriptor::Mark mark_from_json(const json& v, long long* marked,
                                   const std::string& where) {
  *marked = 0;
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "none") return EndDescriptor::Mark::None;
    if (s == "all") return EndDescriptor::Mark::All;
    if (s == "limit") return EndDescriptor::Mark::Limit;
    fail(where + ": unknown nonplanar marking '" + s + "'");
  }
  if (v.is_object() && v.contains("count")) {
    *marked = v["count"].get<long long>();
    return EndDescriptor::Mark::Count;
  }
  fail(where + ": nonplanar marking must be \"none\", \"all\", \"limit\" or {\"count\":k}");
}

EndDescriptor descriptor_from_json(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where + ": end descriptor must be an object");
  std::string kind = need_string(v, "kind", where);
  EndDescriptor::Mark mark = EndDescriptor::Mark::None;
  long long marked = 0;
  if (v.contains("nonplanar")) mark = mark_from_json(v["nonplanar"], &marked, where);
  if (kind == "finite") {
    long long count = need(v, "count", where).get<long long>();
    return EndDescriptor::finite(count, mark, marked);
  }
  if (kind == "omega-plus-one") return EndDescriptor::omega_plus_one(mark, marked);
  if (kind == "z-two-point") return EndDescriptor::z_two_point(mark, marked);
  if (kind == "cantor") return EndDescriptor::cantor(mark);
  if (kind == "graph-ends") return EndDescriptor::graph_ends(need_string(v, "tag", where));
  if (kind == "disjoint-union") {
    std::vector<EndDescriptor> parts;
    for (const json& p : need(v, "parts", where)) {
      parts.push_back(descriptor_from_json(p, where));
    }
    return EndDescriptor::disjoint_union(std::move(parts));
  }
  fail(where + ": unknown end-descriptor kind '" + kind + "'");
}

json descriptor_to_json(const EndDescriptor& d) {
  json v;
  switch (d.kind) {
    case EndDescriptor::Kind::Finite:
      v["kind"] = "finite";
      v["count"] = d.count;
      break;
    case EndDescriptor::Kind::OmegaPlusOne: v["kind"] = "omega-plus-one"; break;
    case EndDescriptor::Kind::ZTwoPoint: v["kind"] = "z-two-point"; break;
    case EndDescriptor::Kind::Cantor: v["kind"] = "cantor"; break;
    case EndDescriptor::Kind::GraphEnds:
      v["kind"] = "graph-ends";
      v["tag"] = d.tag;
      break;
    case EndDescriptor::Kind::DisjointUnion: {
      v["kind"] = "disjoint-union";
      json parts = json::array();
      for (const EndDescriptor& p : d.parts) parts.push_back(descriptor_to_json(p));
      v["parts"] = parts;
      break;
    }
  }
  switch (d.mark) {
    case EndDescriptor::Mark::None: break;
    case EndDescriptor::Mark::All: v["nonplanar"] = "all"; break;
    case EndDescriptor::Mark::Limit: v["nonplanar"] = "limit"; break;
    case EndDescriptor::Mark::Count: v["nonplanar"] = json{{"count", d.marked}}; break;
  }
  return v;
}

SurfaceType surface_type_from_json(const json& v, const std::string& where) {
  SurfaceType t;
  t.genus = card_from_json(need(v, "genus", where), where + ".genus");
  t.boundary = v.contains("boundary") ? v["boundary"].get<long long>() : 0;
  t.ends = v.contains("ends") ? descriptor_from_json(v["ends"], where + ".ends")
                              : EndDescriptor::empty();
  return t;
}

}  // namespace

struct SpecDocumentBuilder {
  SpecDocument& doc;
  const json& root;

  void build() {
    if (!root.is_object()) fail("spec document must be a JSON object");
    static const std::set<std::string> known{"groups", "graphs", "pis",
                                             "surfaces", "systems", "queries"};
    for (auto it = root.begin(); it != root.end(); ++it) {
      if (!known.count(it.key())) fail("unknown top-level key '" + it.key() + "'");
    }
    if (root.contains("groups")) build_groups(root["groups"]);
    if (root.contains("graphs")) build_graphs(root["graphs"]);
    if (root.contains("pis")) build_pis(root["pis"]);
    if (root.contains("surfaces")) build_surfaces(root["surfaces"]);
    if (root.contains("systems")) build_systems(root["systems"]);
    if (root.contains("queries")) build_queries(root["queries"]);
  }

  void build_groups(const json& groups) {
    for (auto it = groups.begin(); it != groups.end(); ++it) {
      const std::string& name = it.key();
      const json& v = it.value();
      std::string where = "groups." + name;
      std::string kind = need_string(v, "kind", where);
      if (kind == "free") {
        doc.oracles_.emplace(name, GroupOracle::free_group(
                                       string_list(need(v, "generators", where), where)));
      } else if (kind == "free-abelian") {
        doc.oracles_.emplace(name, GroupOracle::free_abelian(
                                       string_list(need(v, "generators", where), where)));
      } else if (kind == "cyclic-mod") {
        doc.oracles_.emplace(name,
                             GroupOracle::cyclic_mod(need_string(v, "generator", where),
                                                     need(v, "modulus", where).get<long long>()));
      } else if (kind == "bs1n") {
        doc.oracles_.emplace(
            name, GroupOracle::bs1n(need(v, "n", where).get<int>(),
                                    v.contains("a") ? v["a"].get<std::string>() : "a",
                                    v.contains("t") ? v["t"].get<std::string>() : "t"));
      } else if (kind == "raag") {
        SimpleGraph g;
        for (const std::string& vx : string_list(need(v, "vertices", where), where))
          g.add_vertex(vx);
        for (const json& e : need(v, "edges", where)) {
          auto pair = string_list(e, where + ".edges");
          if (pair.size() != 2) fail(where + ": edges must be vertex pairs");
          g.add_edge(pair[0], pair[1]);
        }
        doc.oracles_.emplace(name, GroupOracle::raag(std::move(g)));
      } else if (kind == "direct-product") {
        std::vector<GroupOracle> factors;
        for (const std::string& f : string_list(need(v, "factors", where), where)) {
          auto fit = doc.oracles_.find(f);
          if (fit == doc.oracles_.end())
            fail(where + ": factor '" + f + "' is not declared earlier in groups");
          factors.push_back(fit->second);
        }
        doc.oracles_.emplace(name, GroupOracle::direct_product(std::move(factors)));
      } else if (kind == "opaque") {
        OpaqueTable table;
        table.elements = string_list(need(v, "elements", where), where);
        std::map<std::string, int> index;
        for (std::size_t i = 0; i < table.elements.size(); ++i)
          index[table.elements[i]] = static_cast<int>(i);
        std::string id = need_string(v, "identity", where);
        if (!index.count(id)) fail(where + ": identity '" + id + "' is not an element");
        table.identity = index[id];
        for (const json& row : need(v, "table", where)) {
          std::vector<int> r;
          for (const std::string& cell : string_list(row, where + ".table")) {
            if (!index.count(cell)) fail(where + ": table entry '" + cell + "' unknown");
            r.push_back(index[cell]);
          }
          table.mul.push_back(std::move(r));
        }
        for (auto lt = need(v, "letters", where).begin();
             lt != need(v, "letters", where).end(); ++lt) {
          std::string target = lt.value().get<std::string>();
          if (!index.count(target)) fail(where + ": letter target '" + target + "' unknown");
          table.letters[lt.key()] = index[target];
        }
        doc.oracles_.emplace(name, GroupOracle::opaque(std::move(table)));
      } else if (kind == "presentation") {
        Presentation p;
        p.alphabet = string_list(need(v, "alphabet", where), where);
        for (const json& r : need(v, "relators", where)) {
          p.relators.push_back(Word::parse(r.get<std::string>()));
        }
        p.validate();
        doc.presentations_.emplace(name, std::move(p));
      } else if (kind == "weight-map") {
        WeightMap w;
        const json& weights = need(v, "weights", where);
        for (auto wt = weights.begin(); wt != weights.end(); ++wt) {
          w.set(wt.key(), wt.value().get<long long>());
        }
        doc.weight_maps_.emplace(name, std::move(w));
      } else {
        fail(where + ": unknown group kind '" + kind + "'");
      }
    }
  }

  void build_graphs(const json& graphs) {
    for (auto it = graphs.begin(); it != graphs.end(); ++it) {
      const std::string& name = it.key();
      const json& v = it.value();
      std::string where = "graphs." + name;
      std::string kind = need_string(v, "kind", where);
      if (kind == "cayley") {
        doc.graphs_.emplace(
            name, std::make_shared<GraphSpec>(GraphSpec::cayley(
                      doc.oracle(need_string(v, "group", where)),
                      string_list(need(v, "letters", where), where))));
      } else if (kind == "kernel-cosets") {
        doc.graphs_.emplace(
            name, std::make_shared<GraphSpec>(GraphSpec::kernel_cosets(
                      doc.oracle(need_string(v, "group", where)),
                      string_list(need(v, "letters", where), where),
                      doc.weight_map(need_string(v, "weights", where)))));
      } else if (kind == "finite") {
        std::map<std::string, std::map<std::string, std::string>> perms;
        const json& edges = need(v, "edges", where);
        for (auto lt = edges.begin(); lt != edges.end(); ++lt) {
          for (auto pt = lt.value().begin(); pt != lt.value().end(); ++pt) {
            perms[lt.key()][pt.key()] = pt.value().get<std::string>();
          }
        }
        doc.graphs_.emplace(name, std::make_shared<GraphSpec>(GraphSpec::finite_explicit(
                                      string_list(need(v, "vertices", where), where),
                                      std::move(perms))));
      } else {
        fail(where + ": unknown graph kind '" + kind + "'");
      }
    }
  }

  void build_pis(const json& pis) {
    for (auto it = pis.begin(); it != pis.end(); ++it) {
      PiSpec pi;
      pi.name = it.key();
      pi.type = surface_type_from_json(it.value(), "pis." + it.key());
      pi.validate();
      doc.pis_.emplace(it.key(), std::move(pi));
    }
  }

  void build_surfaces(const json& surfaces) {
    for (auto it = surfaces.begin(); it != surfaces.end(); ++it) {
      const std::string& name = it.key();
      const json& v = it.value();
      std::string where = "surfaces." + name;
      SchreierSurfaceSpec s;
      s.name = name;
      s.graph = doc.graph(need_string(v, "graph", where));
      s.pi = doc.pi(need_string(v, "pi", where));
      if (v.contains("omegas")) {
        for (auto ot = v["omegas"].begin(); ot != v["omegas"].end(); ++ot) {
          s.omegas[ot.key()] =
              surface_type_from_json(ot.value(), where + ".omegas." + ot.key());
        }
      }
      s.validate();
      doc.surfaces_.emplace(name, std::move(s));
    }
  }

  StarFactor star_factor(const json& v, const std::string& where) {
    StarFactor f;
    f.oracle = doc.oracle(need_string(v, "group", where));
    f.presentation = doc.presentation(need_string(v, "presentation", where));
    f.weights = doc.weight_map(need_string(v, "weights", where));
    if (v.contains("kernel")) f.kernel_generators = string_list(v["kernel"], where);
    return f;
  }

  void build_systems(const json& systems) {
    for (auto it = systems.begin(); it != systems.end(); ++it) {
      const std::string& name = it.key();
      const json& v = it.value();
      std::string where = "systems." + name;
      std::string kind = need_string(v, "kind", where);
      SpecDocument::SystemEntry entry;
      entry.kind = kind;
      if (kind == "free") {
        std::set<std::pair<std::string, std::string>> omissions;
        if (v.contains("omissions")) {
          for (const json& o : v["omissions"]) {
            auto pair = string_list(o, where + ".omissions");
            if (pair.size() != 2) fail(where + ": omissions are [letter, node] pairs");
            omissions.insert({pair[0], pair[1]});
          }
        }
        std::set<std::string> nonsphere;
        if (v.contains("nonsphere")) {
          for (const std::string& s : string_list(v["nonsphere"], where))
            nonsphere.insert(s);
        }
        std::optional<PiSpec> pi;
        if (v.contains("pi")) pi = doc.pi(v["pi"].get<std::string>());
        entry.handle = embed_free(doc.graph(need_string(v, "graph", where)),
                                  string_list(need(v, "letters", where), where),
                                  std::move(omissions), std::move(nonsphere), pi);
      } else if (kind == "indicable") {
        StarFactor f = star_factor(v, where);
        PiSpec pi = doc.pi(need_string(v, "pi", where));
        bool two_ended = !v.contains("two-ended") || v["two-ended"].get<bool>();
        int omissions = v.contains("omissions") ? v["omissions"].get<int>() : 0;
        entry.handle = embed_indicable(f, v.contains("shift-letter")
                                              ? v["shift-letter"].get<std::string>()
                                              : "h",
                                       pi, two_ended, omissions);
      } else if (kind == "star") {
        std::vector<StarFactor> factors;
        for (const json& fv : need(v, "factors", where))
          factors.push_back(star_factor(fv, where + ".factors"));
        std::vector<std::string> push_letters =
            string_list(need(v, "push-letters", where), where);
        std::optional<PiSpec> pi;
        if (v.contains("pi")) pi = doc.pi(v["pi"].get<std::string>());
        entry.handle = embed_star(factors, push_letters, pi);
      } else if (kind == "wreath") {
        const json& push = need(v, "push", where);
        std::string pkind = need_string(push, "kind", where + ".push");
        WreathSystem ws;
        if (pkind == "z-shift") {
          ws.push_kind = WreathSystem::PushKind::ZShift;
          ws.shift_letter =
              push.contains("letter") ? push["letter"].get<std::string>() : "t";
        } else if (pkind == "multipush") {
          ws.push_kind = WreathSystem::PushKind::Multipush;
          auto ms = std::make_shared<MultipushSystem>();
          ms->graph = doc.graph(need_string(push, "graph", where + ".push"));
          ms->letters = string_list(need(push, "letters", where + ".push"), where);
          ws.multipush = ms;
        } else if (pkind == "cross") {
          ws.push_kind = WreathSystem::PushKind::Cross;
          ws.cross = std::make_shared<PushSystem>(PushSystem::cross());
        } else {
          fail(where + ": unknown push kind '" + pkind + "'");
        }
        if (v.contains("pi")) ws.pi = doc.pi(v["pi"].get<std::string>());
        entry.handle = embed_wreath(doc.oracle(need_string(v, "lamp", where)), std::move(ws));
      } else if (kind == "bs1n") {
        int n = need(v, "n", where).get<int>();
        int depth = v.contains("depth") ? v["depth"].get<int>() : 8;
        int copies = v.contains("copies") ? v["copies"].get<int>() : 0;
        std::optional<PiSpec> pi;
        if (v.contains("pi")) pi = doc.pi(v["pi"].get<std::string>());
        entry.handle = embed_bs1n(n, depth, copies, pi);
      } else if (kind == "explicit-push") {
        std::string layout = need_string(v, "layout", where);
        std::shared_ptr<PushSystem> push;
        if (layout == "cross") {
          if (v.contains("letters")) {
            auto ls = string_list(v["letters"], where);
            if (ls.size() != 2) fail(where + ": the crossing layout takes two letters");
            push = std::make_shared<PushSystem>(PushSystem::cross(ls[0], ls[1]));
          } else {
            push = std::make_shared<PushSystem>(PushSystem::cross());
          }
        } else if (layout == "z-line") {
          push = std::make_shared<PushSystem>(PushSystem::z_line(
              v.contains("letters") ? string_list(v["letters"], where).at(0) : "t"));
        } else {
          fail(where + ": unknown layout '" + layout + "'");
        }
        entry.push = push;
        entry.handle.kind = kind;
        entry.handle.alphabet = push->letters();
        entry.handle.solve = [push](const Word& w, int win) {
          return push_system_is_trivial(*push, w, win);
        };
      } else {
        fail(where + ": unknown system kind '" + kind + "'");
      }
      doc.systems_.emplace(name, std::move(entry));
    }
  }

  void build_queries(const json& queries) {
    for (auto it = queries.begin(); it != queries.end(); ++it) {
      const std::string& name = it.key();
      const json& v = it.value();
      std::string where = "queries." + name;
      SpecDocument::Query q;
      q.kind = need_string(v, "kind", where);
      if (q.kind == "word-list") {
        q.system = need_string(v, "system", where);
        doc.system(q.system);
        for (const json& w : need(v, "words", where)) {
          q.words.push_back(w.get<std::string>());
          Word::parse(q.words.back());
        }
      } else if (q.kind == "probe") {
        q.system = need_string(v, "system", where);
        q.claim = need_string(v, "claim", where);
        q.radius = need(v, "radius", where).get<int>();
        doc.system(q.system);
        doc.oracle(q.claim);
      } else if (q.kind == "certificate") {
        q.surface = need_string(v, "surface", where);
        q.letter = need_string(v, "letter", where);
        q.m = need(v, "m", where).get<int>();
        q.n = need(v, "n", where).get<int>();
        doc.surface(q.surface);
      } else {
        fail(where + ": unknown query kind '" + q.kind + "'");
      }
      doc.queries_.emplace(name, std::move(q));
    }
  }
};

SpecDocument SpecDocument::parse_text(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  SpecDocument doc;
  SpecDocumentBuilder{doc, root}.build();
  doc.raw_json_ = root.dump(2);
  return doc;
}

SpecDocument SpecDocument::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

std::string SpecDocument::serialize() const { return raw_json_ + "\n"; }

namespace {

template <typename Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name,
                                        const char* what) {
  auto it = m.find(name);
  if (it == m.end()) fail(std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

}  // namespace

const GroupOracle& SpecDocument::oracle(const std::string& name) const {
  return lookup(oracles_, name, "group");
}
const Presentation& SpecDocument::presentation(const std::string& name) const {
  return lookup(presentations_, name, "presentation");
}
const WeightMap& SpecDocument::weight_map(const std::string& name) const {
  return lookup(weight_maps_, name, "weight map");
}
std::shared_ptr<GraphSpec> SpecDocument::graph(const std::string& name) const {
  return lookup(graphs_, name, "graph");
}
const PiSpec& SpecDocument::pi(const std::string& name) const {
  return lookup(pis_, name, "block surface");
}
const SchreierSurfaceSpec& SpecDocument::surface(const std::string& name) const {
  return lookup(surfaces_, name, "surface");
}
const SpecDocument::SystemEntry& SpecDocument::system(const std::string& name) const {
  return lookup(systems_, name, "system");
}
const SpecDocument::Query& SpecDocument::query(const std::string& name) const {
  return lookup(queries_, name, "query");
}

std::vector<std::string> SpecDocument::system_names() const {
  std::vector<std::string> out;
  for (const auto& [name, entry] : systems_) out.push_back(name);
  return out;
}

std::string SpecDocument::eval_word(const std::string& system_name,
                                    const std::string& word_text, int window) const {
  const SystemEntry& entry = system(system_name);
  Word w = Word::parse(word_text);
  return entry.handle.solve(w, window).str();
}

ProbeReport SpecDocument::probe(const std::string& system_name,
                                const std::string& claim_name, int radius,
                                int window) const {
  if (radius > probe_radius_cap())
    throw SpecError("probe radius " + std::to_string(radius) +
                    " exceeds the configured maximum " +
                    std::to_string(probe_radius_cap()));
  const SystemEntry& entry = system(system_name);
  return faithfulness_probe(entry.handle, oracle(claim_name), radius, window,
                            system_name, claim_name);
}

namespace {

const std::vector<std::string> kPalette = {"blue",   "red",    "forestgreen",
                                           "orange", "purple", "brown"};

std::map<std::string, std::string> letter_palette(const std::vector<std::string>& letters) {
  std::map<std::string, std::string> colors;
  for (std::size_t i = 0; i < letters.size(); ++i)
    colors[letters[i]] = kPalette[i % kPalette.size()];
  return colors;
}

Ball push_system_ball(const PushSystem& push, int window) {
  Ball b;
  b.center = push.basepoint();
  b.radius = window;
  b.nodes = push.window_nodes(window);
  for (const std::string& node : b.nodes) {
    for (const std::string& letter : push.letters()) {
      if (!push.in_domain(letter, node)) continue;
      std::string to = push.apply(node, Letter(letter, 1));
      if (to != node && push.in_window(to, window))
        b.edges.push_back(BallEdge{node, letter, to});
    }
  }
  std::sort(b.edges.begin(), b.edges.end());
  return b;
}

}  // namespace

std::string SpecDocument::render(const std::string& target, const std::string& name,
                                 const std::string& word_text, int window) const {
  if (target == "graph") {
    auto g = graph(name);
    Ball b = g->ball(g->basepoint(), window);
    return ball_to_dot(b, "graph " + name, letter_palette(g->letters()), {}, {});
  }
  if (target == "domains") {
    const SystemEntry& entry = system(name);
    if (entry.push) {
      Ball b = push_system_ball(*entry.push, window);
      return ball_to_dot(b, "push domains of " + name,
                         letter_palette(entry.push->letters()), {}, {});
    }
    if (!entry.handle.multipush)
      throw SpecError("system '" + name + "' has no push domains to draw");
    const MultipushSystem& sys = *entry.handle.multipush;
    Ball b = sys.graph->ball(sys.graph->basepoint(), window);
    std::set<std::string> omitted;
    for (const auto& [letter, node] : sys.omissions) omitted.insert(node);
    return ball_to_dot(b, "push domains of " + name, letter_palette(sys.letters),
                       omitted, {});
  }
  if (target == "support") {
    const SystemEntry& entry = system(name);
    if (!entry.push)
      throw SpecError("support rendering needs an explicit push system");
    Word w = Word::parse(word_text);
    SupportRegion region = support_region(*entry.push, w, window);
    Ball b = push_system_ball(*entry.push, window);
    std::set<std::pair<std::string, std::string>> hl_edges;
    for (const SupportCell& c : region.cells) {
      if (c.kind == SupportCell::Kind::EdgeFront) hl_edges.insert({c.node, c.letter});
    }
    return ball_to_dot(b, "support of " + w.str() + " in " + name,
                       letter_palette(entry.push->letters()), region.vertex_fronts(),
                       hl_edges);
  }
  throw SpecError("unknown render target '" + target + "' (graph|domains|support)");
}

std::string SpecDocument::classify_surface(const std::string& surface_name) const {
  Classification c = classify(surface(surface_name));
  json out;
  if (c.symbolic) {
    out["symbolic"] = true;
    out["reason"] = c.reason;
  } else {
    out["symbolic"] = false;
    out["genus"] = card_to_json(c.type.genus);
    out["boundary"] = c.type.boundary;
    out["nonplanar-ends"] = descriptor_to_json(c.type.nonplanar_ends());
    out["ends"] = descriptor_to_json(c.type.ends);
  }
  return out.dump();
}

std::string SpecDocument::certificate(const std::string& surface_name,
                                      const std::string& letter, int m, int n) const {
  return nonconjugacy_certificate(surface(surface_name), letter, m, n).str();
}

std::string SpecDocument::run_query(const std::string& query_name, int window) const {
  const Query& q = query(query_name);
  std::ostringstream os;
  if (q.kind == "word-list") {
    for (const std::string& w : q.words) os << eval_word(q.system, w, window) << "\n";
  } else if (q.kind == "probe") {
    ProbeReport report = probe(q.system, q.claim, q.radius, window);
    os << report.to_text();
  } else if (q.kind == "certificate") {
    os << certificate(q.surface, q.letter, q.m, q.n) << "\n";
  }
  return os.str();
}

int probe_radius_cap() {
  const char* env = std::getenv("SHIFTFORGE_MAX_RADIUS");
  if (!env) return 8;
  try {
    return std::max(0, std::stoi(env));
  } catch (...) {
    throw SpecError("SHIFTFORGE_MAX_RADIUS is not an integer");
  }
}

}  // namespace shiftforge
