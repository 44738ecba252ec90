#include <doctest.h>

#include <random>

#include "shiftforge/action.hpp"

using namespace shiftforge;

namespace {

MultipushSystem cayley_system(GroupOracle oracle, std::vector<std::string> letters) {
  MultipushSystem sys;
  sys.graph = std::make_shared<GraphSpec>(GraphSpec::cayley(std::move(oracle), letters));
  sys.letters = std::move(letters);
  return sys;
}

MultipushSystem cycle_system(bool nonsphere) {
  MultipushSystem sys;
  sys.graph = std::make_shared<GraphSpec>(GraphSpec::finite_explicit(
      {"0", "1", "2"}, {{"t", {{"0", "1"}, {"1", "2"}, {"2", "0"}}}}));
  sys.letters = {"t"};
  if (nonsphere) sys.nonsphere.insert("0");
  return sys;
}

Word random_word(std::mt19937& rng, const std::vector<std::string>& alphabet, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back(Letter(alphabet[pick(rng)], coin(rng) ? 1 : -1));
  return w;
}

PiSpec handle_pi() {
  PiSpec pi;
  pi.name = "handle";
  pi.type = one_boundary(1);
  return pi;
}

PiSpec flute_pi() {
  PiSpec pi;
  pi.name = "flute";
  pi.type = SurfaceType{Card::of(0), 1, EndDescriptor::omega_plus_one()};
  return pi;
}

DiagonalFactor z2_factor(const std::string& a, const std::string& b,
                         const std::string& push) {
  DiagonalFactor d;
  d.oracle = GroupOracle::free_abelian({a, b});
  d.presentation.alphabet = {a, b};
  d.presentation.relators = {Word::parse("[" + a + "," + b + "]")};
  d.weights.set(a, 1);
  d.weights.set(b, 0);
  d.zs = zero_sum_presentation(d.presentation, d.weights);
  d.push_letter = push;
  return d;
}

DiagonalSystem star_z2_z2() {
  DiagonalSystem sys;
  sys.factors = {z2_factor("a1", "b1", "xa"), z2_factor("a2", "b2", "xb")};
  return sys;
}

}  // namespace

TEST_CASE("multipush coset action matches steps and honors omissions") {
  MultipushSystem sys = cayley_system(GroupOracle::free_abelian({"a", "b"}), {"a", "b"});
  Ball ball = sys.graph->ball("1", 3);
  for (const std::string& node : ball.nodes) {
    for (const std::string& s : sys.letters) {
      CHECK(sys.coset_apply(node, Letter(s, 1)) == sys.graph->step(node, Letter(s, 1)));
    }
  }

  // Omitting the copy at "a" from the a-domain: it stands still and its
  // neighbors skip over it.
  sys.omissions.insert({"a", "a"});
  CHECK(sys.coset_apply("a", Letter("a", 1)) == "a");
  CHECK(sys.coset_apply("1", Letter("a", 1)) == "a^2");
  CHECK(sys.coset_apply("a^3", Letter("a", -1)) == "a^2");
  CHECK(sys.coset_apply("a^2", Letter("a", -1)) == "1");
  // The b-domain is untouched.
  CHECK(sys.coset_apply("a", Letter("b", 1)) == "a b");
}

TEST_CASE("multipush triviality on the rank-two tree") {
  MultipushSystem sys = cayley_system(GroupOracle::free_group({"a", "b"}), {"a", "b"});
  CHECK(multipush_is_trivial(sys, Word::parse("a a^-1"), 4).trivial());
  CHECK(multipush_is_trivial(sys, Word::parse("[a,b]"), 4).nontrivial());
  CHECK(multipush_is_trivial(sys, Word::parse("a"), 4).nontrivial());

  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, {"a", "b"}, 10);
    Verdict v = multipush_is_trivial(sys, w, 4);
    CHECK(v.trivial() == free_reduce(w).empty());
    CHECK(v.kind != VerdictKind::Unknown);
  }
}

TEST_CASE("multipush triviality on the grid: coset-invisible words still refuse") {
  MultipushSystem sys = cayley_system(GroupOracle::free_abelian({"a", "b"}), {"a", "b"});
  Verdict v = multipush_is_trivial(sys, Word::parse("[a,b]"), 4);
  CHECK(v.nontrivial());  // coset action is trivial but the rank is two
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, {"a", "b"}, 10);
    Verdict verdict = multipush_is_trivial(sys, w, 4);
    CHECK(verdict.trivial() == free_reduce(w).empty());
    CHECK(verdict.kind != VerdictKind::Unknown);
  }
}

TEST_CASE("cycle systems and the sphere caveat") {
  MultipushSystem plain = cycle_system(false);
  MultipushSystem dotted = cycle_system(true);
  for (int m = 1; m <= 12; ++m) {
    Word w = Word::from_letter("t", 1, m);
    Verdict vd = multipush_is_trivial(dotted, w, 8);
    CHECK(vd.nontrivial());
    Verdict vp = multipush_is_trivial(plain, w, 8);
    if (m % 3 == 0) {
      CHECK(vp.kind == VerdictKind::Unknown);
    } else {
      CHECK(vp.nontrivial());
    }
  }
}

TEST_CASE("lift displacement") {
  // At the basepoint the displacement is the reduced length.
  CHECK(lift_displacement({"a", "b"}, Word::parse("[a,b]"), 0) == 4);
  CHECK(lift_displacement({"a", "b"}, Word::parse("a"), 0) == 1);

  // Conjugation off the axis grows the displacement linearly.
  long long d0 = lift_displacement({"a", "b"}, Word::parse("[a,b]"), 0);
  long long d3 = lift_displacement({"a", "b"}, Word::parse("[a,b]"), 3);
  CHECK(d3 >= 4);
  CHECK(d3 > d0);
  CHECK(d3 == 4 + 2 * 3);

  // Translations displace 1 on their axis and 2d+1 at distance d from it.
  for (int depth = 0; depth <= 3; ++depth) {
    CHECK(lift_displacement({"a", "b"}, Word::parse("a"), depth) == 2 * depth + 1);
  }

  CHECK_THROWS_AS(lift_displacement({"a", "b"}, Word::parse("a a^-1"), 2), SpecError);

  // Every freely nontrivial word has growing displacement.
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    Word w = free_reduce(random_word(rng, {"a", "b"}, 8));
    if (w.empty()) continue;
    CHECK(lift_displacement({"a", "b"}, w, 4) > lift_displacement({"a", "b"}, w, 0));
  }
}

TEST_CASE("crossing shifts: commutator support sits on the three corner fronts") {
  PushSystem cross = PushSystem::cross();
  Word u = Word::parse("[h_a,h_b]");

  SupportRegion region = support_region(cross, u, 8);
  CHECK(region.vertex_fronts() ==
        std::set<std::string>{"(-1,0)", "(0,-1)", "(0,0)"});
  CHECK(region.moved_copies() ==
        std::set<std::string>{"(-1,0)", "(0,-1)", "(0,0)"});

  // Edge cells adjoin the named fronts.
  std::set<std::string> fronts = region.vertex_fronts();
  int edge_cells = 0;
  for (const SupportCell& c : region.cells) {
    if (c.kind != SupportCell::Kind::EdgeFront) continue;
    ++edge_cells;
    CHECK(fronts.count(c.node));
  }
  CHECK(edge_cells == 2);

  CHECK(support_region(cross, Word{}, 8).empty());
}

TEST_CASE("crossing shifts: conjugates carry the support along the axis") {
  PushSystem cross = PushSystem::cross();
  Word u = Word::parse("[h_a,h_b]");
  Word w1 = Word::parse("h_a^-1 h_b^-1 h_a^-2");
  Word conj = w1 * u * w1.inverse();

  SupportRegion base = support_region(cross, u, 12);
  SupportRegion moved = support_region(cross, conj, 12);
  CHECK(moved.vertex_fronts() == std::set<std::string>{"(1,0)", "(2,0)", "(3,0)"});

  // The moved copies are exactly the coset-action image of the base copies.
  std::set<std::string> image;
  for (const std::string& node : base.moved_copies()) image.insert(cross.act(node, w1));
  CHECK(moved.moved_copies() == image);

  CHECK_FALSE(base.intersects(moved));
  CHECK(commute_by_disjoint_support(cross, u, conj, 12) == Tri::Yes);
  CHECK(commute_by_disjoint_support(cross, Word::parse("h_a"), Word::parse("h_b"), 8) ==
        Tri::Unknown);
  CHECK(commute_by_disjoint_support(cross, u, Word{}, 8) == Tri::Yes);
}

TEST_CASE("conjugation moves supports by the coset action on random words") {
  PushSystem cross = PushSystem::cross();
  std::mt19937 rng(13);
  for (int i = 0; i < 60; ++i) {
    Word v = random_word(rng, {"h_a", "h_b"}, 4);
    Word u = random_word(rng, {"h_a", "h_b"}, 3);
    SupportRegion rv = support_region(cross, v, 10);
    SupportRegion ruv = support_region(cross, u * v * u.inverse(), 10);
    if (rv.truncated || ruv.truncated) continue;
    std::set<std::string> image;
    for (const std::string& node : rv.moved_copies()) image.insert(cross.act(node, u));
    CHECK(ruv.moved_copies() == image);
  }
}

TEST_CASE("push solver verdicts") {
  PushSystem cross = PushSystem::cross();
  CHECK(push_system_is_trivial(cross, Word::parse("h_a h_a^-1"), 6).trivial());
  CHECK(push_system_is_trivial(cross, Word::parse("h_a"), 6).nontrivial());
  Word u = Word::parse("[h_a,h_b]");
  Word w1 = Word::parse("h_a^-1 h_b^-1 h_a^-2");
  Word conj = free_reduce(w1 * u * w1.inverse());
  // The commutator of two support-disjoint elements really is trivial, but
  // the partial solver cannot certify it.
  Word c = u * conj * u.inverse() * conj.inverse();
  CHECK(push_system_is_trivial(cross, c, 12).kind == VerdictKind::Unknown);
}

TEST_CASE("diagonal normalization for a two-factor system") {
  DiagonalSystem sys = star_z2_z2();

  // Factor relators and cross-kernel commutators die.
  CHECK(diagonal_normalize(sys, Word::parse("[a1,b1]")).trivial());
  CHECK(diagonal_normalize(sys, Word::parse("[b1,b2]")).trivial());
  // The two shift-carrying generators do not commute.
  NormalizedDiagonal nd = diagonal_normalize(sys, Word::parse("[a1,a2]"));
  CHECK_FALSE(nd.trivial());
  CHECK(nd.x_word == Word::parse("[xa,xb]"));
  for (const Word& p : nd.factor_parts) CHECK(p.empty());

  // Augmented letters mix the shift with the diagonal part.
  NormalizedDiagonal aug = diagonal_normalize(sys, Word::parse("b1a1"));
  CHECK(aug.x_word == Word::parse("xa"));
  CHECK(aug.factor_parts[0] == sys.factors[0].oracle.normalize(Word::parse("b1 a1")));

  // The solver is multiplicative.
  std::mt19937 rng(17);
  std::vector<std::string> alphabet{"a1", "b1", "a2", "b2", "b1a1", "b2a2"};
  for (int i = 0; i < 1000; ++i) {
    Word u = random_word(rng, alphabet, 10);
    Word v = random_word(rng, alphabet, 10);
    CHECK(diagonal_normalize(sys, u * v) ==
          diagonal_mul(sys, diagonal_normalize(sys, u), diagonal_normalize(sys, v)));
  }

  CHECK_THROWS_AS(diagonal_normalize(sys, Word::parse("zz")), SpecError);
}

TEST_CASE("wreath normalization over the shift line") {
  WreathSystem sys;
  sys.lamp = GroupOracle::cyclic_mod("c", 2);
  sys.push_kind = WreathSystem::PushKind::ZShift;
  sys.shift_letter = "t";

  WreathElement e = wreath_normalize(sys, Word::parse("c t c t^-1"));
  CHECK(e.shift.empty());
  REQUIRE(e.support.size() == 2);
  CHECK(e.support.count("0"));
  CHECK(e.support.count("1"));

  CHECK(wreath_normalize(sys, Word::parse("t^5")).shift == Word::parse("t^5"));
  CHECK(wreath_normalize(sys, Word::parse("t^5")).support.empty());

  // Lamps at distinct positions commute.
  Word conj = Word::parse("t c t^-1");
  Word comm = Word::parse("c") * conj * Word::parse("c^-1") * conj.inverse();
  WreathElement id = wreath_normalize(sys, comm);
  CHECK(id.support.empty());
  CHECK(id.shift.empty());
  CHECK(wreath_verdict(sys, id, 8).trivial());

  // Conjugation by the shift moves the lamp one copy forward.
  for (long long lam = -8; lam <= 8; ++lam) {
    Word tpow = Word::from_letter("t", lam >= 0 ? 1 : -1, static_cast<int>(std::llabs(lam)));
    Word lamp = tpow * Word::parse("c") * tpow.inverse();
    WreathElement shifted = wreath_normalize(sys, Word::parse("t") * lamp * Word::parse("t^-1"));
    REQUIRE(shifted.support.size() == 1);
    CHECK(shifted.support.begin()->first == std::to_string(lam + 1));
  }

  // The lamp order matters: c^2 is trivial.
  CHECK(wreath_verdict(sys, wreath_normalize(sys, Word::parse("c^2")), 8).trivial());
}

TEST_CASE("wreath systems over multipush and crossing-shift bases") {
  WreathSystem wm;
  wm.lamp = GroupOracle::free_abelian({"z"});
  wm.push_kind = WreathSystem::PushKind::Multipush;
  auto ms = std::make_shared<MultipushSystem>(
      cayley_system(GroupOracle::free_group({"a", "b"}), {"a", "b"}));
  wm.multipush = ms;
  WreathElement e = wreath_normalize(wm, Word::parse("a z a^-1"));
  REQUIRE(e.support.size() == 1);
  CHECK(e.support.begin()->first == "a");
  CHECK(e.shift.empty());
  CHECK(wreath_verdict(wm, wreath_normalize(wm, Word::parse("[a,b]")), 4).nontrivial());

  WreathSystem wc;
  wc.lamp = GroupOracle::free_abelian({"z"});
  wc.push_kind = WreathSystem::PushKind::Cross;
  wc.cross = std::make_shared<PushSystem>(PushSystem::cross());
  WreathElement c = wreath_normalize(wc, Word::parse("h_a z h_a^-1"));
  REQUIRE(c.support.size() == 1);
  CHECK(c.support.begin()->first == "(-1,0)");
  // A lampless push word whose copies all return: the partial base solver
  // cannot decide it.
  Word u = Word::parse("[h_a,h_b]");
  Word w1 = Word::parse("h_a^-1 h_b^-1 h_a^-2");
  Word conj = free_reduce(w1 * u * w1.inverse());
  Word undecidable = u * conj * u.inverse() * conj.inverse();
  Verdict unknown = wreath_verdict(wc, wreath_normalize(wc, undecidable), 12);
  CHECK(unknown.kind == VerdictKind::Unknown);
}

TEST_CASE("graded window action") {
  // The defining relation acts as the identity.
  BSWindowResult rel = bs_window_action(2, Word::parse("t a t^-1 a^-2"), 3, 1);
  CHECK(rel.verdict.trivial());

  // A single level-zero step.
  BSWindowResult a = bs_window_action(2, Word::parse("a"), 3, 1);
  CHECK(a.verdict.nontrivial());
  CHECK(a.state.offsets.at(0) == NAdic{1, 0});

  // Conjugating down one level produces a fractional step on the center copy
  // while the copy shift cancels.
  BSWindowResult fine = bs_window_action(2, Word::parse("t^-1 a t"), 3, 0);
  CHECK(fine.state.copy_shift == 0);
  CHECK(fine.state.offsets.at(0) == NAdic{1, 1});  // one half
  CHECK(fine.verdict.nontrivial());

  // Window overflow reports truncation.
  BSWindowResult trunc = bs_window_action(2, Word::parse("t^4 a t^-4"), 3, 1);
  CHECK(trunc.verdict.kind == VerdictKind::Truncated);

  // Exhaustive agreement with the algebraic normal form.
  std::vector<Word> words{Word{}};
  std::vector<Letter> sigma{Letter("a", 1), Letter("a", -1), Letter("t", 1),
                            Letter("t", -1)};
  std::size_t head = 0;
  while (head < words.size()) {
    Word w = words[head++];
    if (w.size() >= 6) continue;
    for (const Letter& l : sigma) {
      Word e = w;
      e.push_back(l);
      words.push_back(e);
    }
  }
  for (int n : {2, 3}) {
    for (const Word& w : words) {
      BSWindowResult sim = bs_window_action(n, w, 8, 0);
      REQUIRE(sim.verdict.kind != VerdictKind::Truncated);
      CHECK(sim.verdict.trivial() == bs_normal_form(n, w).identity());
    }
  }
}

TEST_CASE("intrinsic-type witnesses") {
  // A diagonal single-factor system over a block with ends.
  DiagonalSystem sys;
  DiagonalFactor d;
  d.oracle = GroupOracle::free_abelian({"g"});
  d.presentation.alphabet = {"g"};
  d.weights.set("g", 1);
  d.zs = zero_sum_presentation(d.presentation, d.weights);
  d.push_letter = "h";
  sys.factors = {d};
  sys.pi = flute_pi();

  auto witness = intrinsic_type_witness(sys, Word::parse("g"));
  REQUIRE(witness.has_value());
  CHECK(witness->kind == IntrinsicWitness::Kind::EndPermutation);
  CHECK_FALSE(intrinsic_type_witness(sys, Word{}).has_value());

  // Compact block of positive genus: handle-shift witness for net powers.
  sys.pi = handle_pi();
  auto hs = intrinsic_type_witness(sys, Word::parse("g^3"));
  REQUIRE(hs.has_value());
  CHECK(hs->kind == IntrinsicWitness::Kind::HandleShift);
  // One-ended shifts do not certify anything.
  sys.two_ended = false;
  CHECK_FALSE(intrinsic_type_witness(sys, Word::parse("g^3")).has_value());

  // Multipush systems: a moved copy with block ends permutes ends.
  MultipushSystem mp = cayley_system(GroupOracle::free_group({"a", "b"}), {"a", "b"});
  mp.pi = flute_pi();
  auto mw = intrinsic_type_witness(mp, Word::parse("a"), 4);
  REQUIRE(mw.has_value());
  CHECK(mw->kind == IntrinsicWitness::Kind::EndPermutation);
  mp.pi = handle_pi();
  auto mh = intrinsic_type_witness(mp, Word::parse("a"), 4);
  REQUIRE(mh.has_value());
  CHECK(mh->kind == IntrinsicWitness::Kind::HandleShift);
}
