#include "shiftforge/construct.hpp"

#include <algorithm>
#include <sstream>

namespace shiftforge {

SubgroupHandle embed_free(std::shared_ptr<GraphSpec> graph,
                          std::vector<std::string> letters,
                          std::set<std::pair<std::string, std::string>> omissions,
                          std::set<std::string> nonsphere, std::optional<PiSpec> pi,
                          int window) {
  auto sys = std::make_shared<MultipushSystem>();
  sys->graph = std::move(graph);
  sys->letters = std::move(letters);
  sys->omissions = std::move(omissions);
  sys->nonsphere = std::move(nonsphere);
  sys->pi = std::move(pi);
  sys->validate();

  if (sys->letters.size() == 1) {
    OrbitInfo orbit = sys->graph->s_orbit(sys->graph->basepoint(), sys->letters[0], window);
    if (orbit.finite_cycle && sys->nonsphere.empty()) {
      throw SpecError(
          "degenerate system: one letter on a finite cycle with every back cell a "
          "sphere; no free subgroup is certified");
    }
  }

  SubgroupHandle h;
  h.kind = "free";
  h.alphabet = sys->letters;
  h.multipush = sys;
  h.solve = [sys](const Word& w, int win) { return multipush_is_trivial(*sys, w, win); };
  return h;
}

namespace {

DiagonalFactor make_diagonal_factor(const StarFactor& f, const std::string& push_letter) {
  DiagonalFactor out;
  out.oracle = f.oracle;
  out.presentation = f.presentation;
  out.weights = f.weights;
  out.presentation.validate();
  for (const std::string& g : f.presentation.alphabet) {
    if (!f.oracle.has_letter(g))
      throw SpecError("presentation generator '" + g + "' is unknown to the oracle");
    f.weights.at(g);
  }
  for (const Word& r : f.presentation.relators) {
    if (!f.oracle.is_trivial(r))
      throw SpecError("presentation relator '" + r.str() + "' is not trivial in the oracle");
    if (exponent_sum(r, f.weights) != 0)
      throw SpecError("weight map does not vanish on relator '" + r.str() + "'");
  }
  out.zs = zero_sum_presentation(f.presentation, f.weights);
  out.push_letter = push_letter;
  return out;
}

}  // namespace

SubgroupHandle embed_indicable(const StarFactor& factor, const std::string& shift_letter,
                               PiSpec pi, bool two_ended, int omissions) {
  if (!factor.weights.surjective())
    throw SpecError("indicable embedding needs a surjective weight map");
  if (omissions < 0) throw SpecError("omission count must be >= 0");
  auto sys = std::make_shared<DiagonalSystem>();
  sys->factors.push_back(make_diagonal_factor(factor, shift_letter));
  sys->pi = std::move(pi);
  sys->two_ended = two_ended;
  sys->validate();

  SubgroupHandle h;
  h.kind = "indicable";
  h.alphabet = sys->solver_alphabet();
  h.diagonal = sys;
  h.claimed_presentation = sys->factors[0].zs.pres;
  h.solve = [sys](const Word& w, int win) {
    Verdict v = diagonal_verdict(*sys, w);
    v.window = win;
    return v;
  };
  return h;
}

SubgroupHandle embed_star(const std::vector<StarFactor>& factors,
                          const std::vector<std::string>& push_letters,
                          std::optional<PiSpec> pi) {
  if (factors.empty()) throw SpecError("star embedding needs at least one factor");
  if (push_letters.size() != factors.size())
    throw SpecError("star embedding needs one push letter per factor");
  auto sys = std::make_shared<DiagonalSystem>();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!factors[i].weights.surjective())
      throw SpecError("factor " + std::to_string(i + 1) + " weight map is not surjective");
    sys->factors.push_back(make_diagonal_factor(factors[i], push_letters[i]));
  }
  sys->pi = std::move(pi);
  sys->validate();

  SubgroupHandle h;
  h.kind = "star";
  h.alphabet = sys->solver_alphabet();
  h.diagonal = sys;
  h.solve = [sys](const Word& w, int win) {
    Verdict v = diagonal_verdict(*sys, w);
    v.window = win;
    return v;
  };

  // Claimed presentation on the original generators: factor relators plus
  // commutators of listed kernel generators across distinct factors.
  Presentation claim;
  bool kernels_listed = true;
  for (const StarFactor& f : factors) {
    claim.alphabet.insert(claim.alphabet.end(), f.presentation.alphabet.begin(),
                          f.presentation.alphabet.end());
    claim.relators.insert(claim.relators.end(), f.presentation.relators.begin(),
                          f.presentation.relators.end());
    if (f.kernel_generators.empty() && f.presentation.alphabet.size() > 1)
      kernels_listed = false;
    for (const std::string& k : f.kernel_generators) {
      if (!f.presentation.has_generator(k))
        throw SpecError("kernel generator '" + k + "' is not a presentation generator");
      if (f.weights.at(k) != 0)
        throw SpecError("kernel generator '" + k + "' has nonzero weight");
    }
  }
  if (kernels_listed) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        for (const std::string& u : factors[i].kernel_generators) {
          for (const std::string& v : factors[j].kernel_generators) {
            Word uw = Word::from_letter(u);
            Word vw = Word::from_letter(v);
            claim.relators.push_back(uw * vw * uw.inverse() * vw.inverse());
          }
        }
      }
    }
    claim.validate();
    h.claimed_presentation = std::move(claim);
  }
  return h;
}

SubgroupHandle embed_wreath(const GroupOracle& lamp, WreathSystem push_system) {
  push_system.lamp = lamp;
  push_system.validate();
  auto sys = std::make_shared<WreathSystem>(std::move(push_system));

  SubgroupHandle h;
  h.kind = "wreath";
  h.alphabet = sys->lamp.alphabet();
  for (const std::string& s : sys->push_letters()) h.alphabet.push_back(s);
  h.wreath = sys;
  h.solve = [sys](const Word& w, int win) {
    return wreath_verdict(*sys, wreath_normalize(*sys, w), win);
  };
  return h;
}

SubgroupHandle embed_bs1n(int n, int depth, int copy_radius, std::optional<PiSpec> pi) {
  if (n < 2) throw SpecError("solvable Baumslag-Solitar embedding needs n >= 2");
  if (depth < 0) throw SpecError("depth must be >= 0");
  SubgroupHandle h;
  h.kind = "bs1n";
  h.bs_n = n;
  h.bs_depth = depth;
  h.alphabet = {"a", "t"};
  (void)pi;
  h.solve = [n, depth, copy_radius](const Word& w, int win) {
    BSElement nf = bs_normal_form(n, w);
    Verdict algebra =
        nf.identity()
            ? Verdict{VerdictKind::Trivial, "", win}
            : Verdict{VerdictKind::Nontrivial,
                      "normal form (" + nadic_str(nf.r, n) + ", " + std::to_string(nf.e) + ")",
                      win};
    BSWindowResult sim = bs_window_action(n, w, depth, copy_radius);
    if (sim.verdict.kind != VerdictKind::Truncated &&
        sim.verdict.trivial() != algebra.trivial()) {
      throw InternalError("window action disagrees with the normal form on '" +
                          w.str() + "'");
    }
    return algebra;
  };
  return h;
}

SimpleGraph claimed_raag_graph(const std::vector<RaagFactorShape>& factors) {
  SimpleGraph g;
  for (const RaagFactorShape& f : factors) {
    g.add_vertex(f.cone);
    for (const std::string& v : f.delta.vertices()) {
      if (v == f.cone) throw SpecError("cone vertex '" + f.cone + "' reused inside its block");
      g.add_vertex(v);
      g.add_edge(f.cone, v);
    }
    for (const auto& [u, v] : f.delta.edges()) g.add_edge(u, v);
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      for (const std::string& u : factors[i].delta.vertices()) {
        for (const std::string& v : factors[j].delta.vertices()) {
          g.add_edge(u, v);
        }
      }
    }
  }
  return g;
}

SimpleGraph induced_subgraph_subgroup(const SimpleGraph& g,
                                      const std::vector<std::string>& vertices) {
  return g.induced(vertices);
}

WeightMap star_weight_map(const std::vector<StarFactor>& factors) {
  if (factors.empty()) throw SpecError("star weight map needs at least one factor");
  WeightMap out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    ZeroSumPresentation zs = zero_sum_presentation(factors[i].presentation, factors[i].weights);
    for (const std::string& g : zs.pres.alphabet) out.set(g, i == 0 ? 1 : 0);
  }
  return out;
}

NotFreeFamily notfree_family(int count, int window) {
  if (count < 1) throw SpecError("family size must be >= 1");
  NotFreeFamily fam;
  fam.system = PushSystem::cross();
  const std::string& ha = fam.system.letters()[0];
  const std::string& hb = fam.system.letters()[1];

  Word a = Word::from_letter(ha);
  Word b = Word::from_letter(hb);
  Word commutator = a * b * a.inverse() * b.inverse();
  fam.words.push_back(commutator);
  for (int j = 0; j + 1 < count; ++j) {
    // Conjugators carry the corner support onto the forward axis, three
    // copies at a time: blocks {3j+1, 3j+2, 3j+3}.
    Word wj = a.inverse().pow(3 * j + 1) * b.inverse() * a.inverse().pow(2);
    fam.words.push_back(free_reduce(wj * commutator * wj.inverse()));
  }

  for (const Word& w : fam.words) {
    Verdict v = push_system_is_trivial(fam.system, w, window);
    if (!v.nontrivial())
      throw InternalError("family element '" + w.str() + "' does not move a copy");
    fam.supports.push_back(support_region(fam.system, w, window));
  }
  for (std::size_t i = 0; i < fam.words.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.words.size(); ++j) {
      if (commute_by_disjoint_support(fam.system, fam.words[i], fam.words[j], window) !=
          Tri::Yes)
        throw InternalError("family elements " + std::to_string(i) + " and " +
                            std::to_string(j) + " are not support-disjoint");
    }
  }
  return fam;
}

namespace {

void enumerate_reduced(const std::vector<std::string>& alphabet, int radius,
                       const std::function<void(const Word&)>& visit) {
  std::vector<Letter> sigma;
  for (const std::string& g : alphabet) {
    sigma.emplace_back(g, 1);
    sigma.emplace_back(g, -1);
  }
  std::sort(sigma.begin(), sigma.end());
  std::vector<Letter> cur;
  std::function<void()> rec = [&]() {
    if (!cur.empty()) visit(Word(cur));
    if (static_cast<int>(cur.size()) == radius) return;
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

std::string ProbeReport::to_text() const {
  std::ostringstream os;
  os << "# probe report\n";
  os << "# system: " << system << "\n";
  os << "# claim: " << claim << "\n";
  os << "# radius: " << radius << "\n";
  os << "# window: " << window << "\n";
  os << "# apply-order: " << kApplyOrder << "\n";
  os << "# compared: " << compared << "\n";
  os << "# diverged: " << diverged() << "\n";
  os << "word\tmodel\tclaimed\txword\tsyllable-weights\n";
  for (const ProbeEntry& e : entries) {
    os << e.word.str() << '\t' << (e.model_trivial ? "TRIVIAL" : "NONTRIVIAL") << '\t'
       << (e.claimed_trivial ? "TRIVIAL" : "NONTRIVIAL") << '\t' << e.x_word.str() << '\t';
    for (std::size_t i = 0; i < e.syllable_weights.size(); ++i) {
      if (i) os << ',';
      os << e.syllable_weights[i];
    }
    os << '\n';
  }
  return os.str();
}

ProbeReport faithfulness_probe(const SubgroupHandle& handle, const GroupOracle& claimed,
                               int radius, int window, const std::string& system_name,
                               const std::string& claim_name) {
  if (!handle.diagonal)
    throw SpecError("faithfulness probe requires a diagonal-system handle");
  if (radius < 0) throw SpecError("probe radius must be >= 0");
  const DiagonalSystem& sys = *handle.diagonal;

  // The comparison alphabet is the claimed oracle's; every claimed generator
  // must resolve inside the model.
  std::map<std::string, int> partition;
  for (const std::string& g : claimed.alphabet()) {
    int fi = -1;
    auto cls = sys.classify_letter(g, &fi);
    if (cls == DiagonalSystem::LetterClass::Unknown)
      throw SpecError("claimed generator '" + g + "' belongs to no factor");
    partition[g] = fi;
  }

  ProbeReport report;
  report.system = system_name;
  report.claim = claim_name;
  report.radius = radius;
  report.window = window;

  std::set<std::string> seen_claim_forms;
  std::vector<Word> ball;
  enumerate_reduced(claimed.alphabet(), radius, [&](const Word& w) { ball.push_back(w); });
  std::sort(ball.begin(), ball.end(), shortlex_less);

  for (const Word& w : ball) {
    ++report.compared;
    NormalizedDiagonal model = diagonal_normalize(sys, w);
    bool model_trivial = model.trivial();
    bool claimed_trivial = claimed.is_trivial(w);
    if (model_trivial == claimed_trivial) continue;
    std::string form = claimed.normalize(w).str();
    if (!seen_claim_forms.insert(form).second) continue;

    ProbeEntry e;
    e.word = w;
    e.model_trivial = model_trivial;
    e.claimed_trivial = claimed_trivial;
    e.x_word = model.x_word;
    for (const auto& [factor, block] : syllable_decompose(w, partition)) {
      long long weight = 0;
      for (const Letter& l : block.letters())
        weight += sys.factors[factor].weights.at(l.gen) * l.sign;
      e.syllable_weights.push_back(weight);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string Certificate::str() const {
  switch (status) {
    case Status::None:
      return "none";
    case Status::Incomparable:
      return "incomparable";
    case Status::Certificate: {
      std::ostringstream os;
      os << "non-conjugacy certificate: omitting " << m << " copies gives complement "
         << record_m.str() << "; omitting " << n << " gives " << record_n.str();
      return os.str();
    }
  }
  return "?";
}

Certificate nonconjugacy_certificate(const SchreierSurfaceSpec& spec,
                                     const std::string& letter, int m, int n,
                                     int window) {
  if (m < 0 || n < 0) throw SpecError("omission counts must be >= 0");
  Certificate cert;
  cert.m = m;
  cert.n = n;
  if (m == n) {
    cert.status = Certificate::Status::None;
    return cert;
  }
  std::set<int> conds = distinguished_conditions(spec.pi);
  if (conds.empty())
    throw SpecError("building-block surface satisfies no distinguishing condition");

  // Canonical omission sets: the first k copies along the letter's forward
  // orbit from the basepoint.  Only the count enters the invariant.
  auto omit = [&](int k) {
    std::vector<std::string> nodes;
    std::string cur = spec.graph->basepoint();
    for (int i = 0; i < k; ++i) {
      cur = spec.graph->step(cur, Letter(letter, 1));
      nodes.push_back(cur);
    }
    if (k > 0 && static_cast<int>(std::set<std::string>(nodes.begin(), nodes.end()).size()) != k)
      throw SpecError("orbit too short to omit " + std::to_string(k) + " distinct copies");
    return nodes;
  };
  (void)window;
  cert.record_m = complement_invariant(spec, omit(m));
  cert.record_n = complement_invariant(spec, omit(n));
  if (cert.record_m.incomparable || cert.record_n.incomparable) {
    cert.status = Certificate::Status::Incomparable;
    return cert;
  }
  cert.status = cert.record_m == cert.record_n ? Certificate::Status::None
                                               : Certificate::Status::Certificate;
  return cert;
}

}  // namespace shiftforge
