#include <doctest.h>

#include <random>

#include "shiftforge/word.hpp"

using namespace shiftforge;

namespace {

Word random_word(std::mt19937& rng, const std::vector<std::string>& alphabet, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back(Letter(alphabet[pick(rng)], coin(rng) ? 1 : -1));
  return w;
}

}  // namespace

TEST_CASE("word parsing and printing") {
  CHECK(Word::parse("a b^-1 a^2").str() == "a b^-1 a^2");
  CHECK(Word::parse("1").empty());
  CHECK(Word::parse("  ").empty());
  CHECK(Word::parse("a^0").empty());
  CHECK(Word::parse("a^-3").str() == "a^-3");
  CHECK(Word::parse("[a,b]").str() == "a b a^-1 b^-1");
  CHECK(Word::parse("[a,[b,c]]").size() == 10);
  CHECK(Word::parse("t [a,b] t^-1").str() == "t a b a^-1 b^-1 t^-1");
  CHECK_THROWS_AS(Word::parse("[a,b"), SpecError);
  CHECK_THROWS_AS(Word::parse("a^"), SpecError);
  CHECK_THROWS_AS(Word::parse("a,b"), SpecError);
  // Round trip through the printer.
  Word w = Word::parse("x^3 y^-2 x");
  CHECK(Word::parse(w.str()) == w);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(Word::parse("a a^-1")).empty());
  CHECK(free_reduce(Word::parse("a b b^-1 a")).str() == "a^2");
  CHECK(free_reduce(Word::parse("b a a^-1 b^-1 c")).str() == "c");

  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(rng, {"a", "b", "c"}, 20);
    Word r = free_reduce(w);
    CHECK(free_reduce(r) == r);        // idempotent
    CHECK(r.size() <= w.size());       // never longer
    CHECK(free_reduce(w * w.inverse()).empty());
  }
}

TEST_CASE("exponent sums") {
  WeightMap ones;
  ones.set("a", 1);
  ones.set("t", 1);
  CHECK(exponent_sum(Word::parse("t a t^-1 a^-3"), ones) == -2);

  WeightMap f;
  f.set("a", 0);
  f.set("t", 1);
  CHECK(exponent_sum(Word::parse("t a t^-1 a^-3"), f) == 0);
  CHECK(exponent_sum(Word{}, f) == 0);
  CHECK_THROWS_AS(exponent_sum(Word::parse("z"), f), SpecError);

  CHECK(f.surjective());
  WeightMap evens;
  evens.set("a", 2);
  evens.set("b", 4);
  CHECK_FALSE(evens.surjective());
}

TEST_CASE("zero-sum rebase of the standard bs presentation") {
  Presentation p;
  p.alphabet = {"a", "t"};
  p.relators = {Word::parse("t a t^-1 a^-3")};
  WeightMap f;
  f.set("a", 0);
  f.set("t", 1);

  ZeroSumPresentation zs = zero_sum_presentation(p, f);
  CHECK(zs.base == "t");
  CHECK(zs.base_in_old.str() == "t");
  REQUIRE(zs.pres.alphabet.size() == 2);
  CHECK(zs.pres.alphabet[0] == "t");
  CHECK(zs.pres.alphabet[1] == "at");
  CHECK(zs.new_to_old.at("at").str() == "a t");
  CHECK(zs.old_to_new.at("a").str() == "at t^-1");

  WeightMap ones;
  for (const auto& g : zs.pres.alphabet) ones.set(g, 1);
  for (const Word& r : zs.pres.relators) CHECK(exponent_sum(r, ones) == 0);
}

TEST_CASE("zero-sum rebase of the free-abelian commutator presentation") {
  Presentation p;
  p.alphabet = {"a", "b"};
  p.relators = {Word::parse("[a,b]")};
  WeightMap f;
  f.set("a", 1);
  f.set("b", 0);

  ZeroSumPresentation zs = zero_sum_presentation(p, f);
  CHECK(zs.base == "a");
  CHECK(zs.new_to_old.at("ba").str() == "b a");
  WeightMap ones;
  for (const auto& g : zs.pres.alphabet) ones.set(g, 1);
  for (const Word& r : zs.pres.relators) CHECK(exponent_sum(r, ones) == 0);
}

TEST_CASE("zero-sum rebase keeps weight-one alphabets") {
  Presentation p;
  p.alphabet = {"x", "y"};
  p.relators = {Word::parse("x y x^-1 y^-1")};
  WeightMap f;
  f.set("x", 1);
  f.set("y", 1);

  ZeroSumPresentation zs = zero_sum_presentation(p, f);
  CHECK(zs.pres.alphabet == std::vector<std::string>{"x", "y"});
  CHECK(zs.pres.relators[0] == p.relators[0]);
  CHECK(zs.old_to_new.at("y").str() == "y");
}

TEST_CASE("zero-sum rebase with a composite base element") {
  Presentation p;
  p.alphabet = {"u", "v"};
  p.relators = {Word::parse("[u,v]")};
  WeightMap f;
  f.set("u", 2);
  f.set("v", 3);

  ZeroSumPresentation zs = zero_sum_presentation(p, f);
  CHECK(zs.base == "h");
  CHECK(exponent_sum(zs.base_in_old, f) == 1);
  WeightMap ones;
  for (const auto& g : zs.pres.alphabet) ones.set(g, 1);
  for (const Word& r : zs.pres.relators) CHECK(exponent_sum(r, ones) == 0);

  // Substituting the old-letter meanings back in must recover relations of
  // the original group (here: commutators in a free-abelian group).
  for (const Word& r : zs.pres.relators) {
    Word back = rewrite_word(r, zs.new_to_old);
    WeightMap ucount, vcount;
    ucount.set("u", 1);
    ucount.set("v", 0);
    vcount.set("u", 0);
    vcount.set("v", 1);
    CHECK(exponent_sum(back, ucount) == 0);
    CHECK(exponent_sum(back, vcount) == 0);
  }
}

TEST_CASE("zero-sum rebase rejects non-surjective maps") {
  Presentation p;
  p.alphabet = {"a"};
  WeightMap f;
  f.set("a", 2);
  CHECK_THROWS_AS(zero_sum_presentation(p, f), SpecError);
}

TEST_CASE("syllable decomposition and projections") {
  std::map<std::string, int> part{{"a1", 1}, {"b1", 1}, {"a2", 2}};

  auto blocks = syllable_decompose(Word::parse("a1 b1 a2"), part);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].first == 1);
  CHECK(blocks[0].second.str() == "a1 b1");
  CHECK(blocks[1].first == 2);
  CHECK(blocks[1].second.str() == "a2");

  CHECK(syllable_decompose(Word{}, part).empty());
  CHECK(syllable_decompose(Word::parse("a1 a2 a1"), part).size() == 3);

  // Concatenation recovers the word.
  Word w = Word::parse("a1 a2 b1 b1 a2 a1^-1");
  Word glued;
  for (const auto& [i, block] : syllable_decompose(w, part)) glued = glued * block;
  CHECK(glued == w);

  CHECK(free_reduce(project_to_factor(Word::parse("[a1,a2]"), 1, part)).empty());
  CHECK(project_to_factor(Word::parse("b1 a2 b1"), 1, part).str() == "b1^2");
  CHECK(project_to_factor(Word::parse("a2 a2"), 2, part).str() == "a2^2");
}
