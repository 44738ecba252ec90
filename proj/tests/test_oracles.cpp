#include <doctest.h>

#include <deque>
#include <random>
#include <set>

#include "shiftforge/oracle.hpp"

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

// Independent triviality check for graph groups: breadth-first search over
// adjacent commuting swaps and free cancellations, which never need to grow
// a geodesic representative.
bool raag_trivial_bfs(const SimpleGraph& g, const Word& start) {
  std::set<std::string> seen;
  std::deque<Word> queue{start};
  seen.insert(start.str());
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    if (w.empty()) return true;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      if (ls[i].gen == ls[i + 1].gen && ls[i].sign == -ls[i + 1].sign) {
        std::vector<Letter> next(ls.begin(), ls.end());
        next.erase(next.begin() + i, next.begin() + i + 2);
        Word cand{next};
        if (seen.insert(cand.str()).second) queue.push_back(cand);
      }
      if (ls[i].gen != ls[i + 1].gen && g.adjacent(ls[i].gen, ls[i + 1].gen)) {
        std::vector<Letter> next(ls.begin(), ls.end());
        std::swap(next[i], next[i + 1]);
        Word cand{next};
        if (seen.insert(cand.str()).second) queue.push_back(cand);
      }
    }
  }
  return false;
}

SimpleGraph path_graph(const std::vector<std::string>& verts) {
  SimpleGraph g;
  for (const auto& v : verts) g.add_vertex(v);
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) g.add_edge(verts[i], verts[i + 1]);
  return g;
}

}  // namespace

TEST_CASE("n-adic arithmetic") {
  CHECK(nadic_normalize(NAdic{4, 2}, 2) == NAdic{1, 0});
  CHECK(nadic_normalize(NAdic{6, 1}, 2) == NAdic{3, 0});
  CHECK(nadic_normalize(NAdic{0, 5}, 2) == NAdic{0, 0});
  CHECK(nadic_add(NAdic{1, 1}, NAdic{1, 1}, 2) == NAdic{1, 0});  // 1/2 + 1/2
  CHECK(nadic_add(NAdic{1, 0}, NAdic{1, 1}, 2) == NAdic{3, 1});  // 1 + 1/2
  CHECK(nadic_mul_npow(NAdic{1, 0}, -1, 2) == NAdic{1, 1});
  CHECK(nadic_mul_npow(NAdic{3, 2}, 2, 2) == NAdic{3, 0});
  // Lowest terms are relative to powers of n, so 2/4 stays put for n = 4.
  CHECK(nadic_normalize(NAdic{2, 1}, 4) == NAdic{2, 1});
}

TEST_CASE("bs normal forms") {
  CHECK(bs_normal_form(2, Word::parse("a")) == BSElement{NAdic{1, 0}, 0});
  CHECK(bs_normal_form(2, Word::parse("t a t^-1")) == BSElement{NAdic{2, 0}, 0});
  CHECK(bs_normal_form(2, Word::parse("t^-1 a t")) == BSElement{NAdic{1, 1}, 0});
  CHECK(bs_normal_form(2, Word::parse("t a t^-1 a^-2")).identity());
  CHECK(bs_normal_form(3, Word::parse("t a t^-1 a^-3")).identity());
  CHECK_FALSE(bs_normal_form(2, Word::parse("t a t^-1 a^-1")).identity());
  CHECK(bs_normal_form(2, Word::parse("t a t^-1 a^-1")) == BSElement{NAdic{1, 0}, 0});

  // Homomorphism property on random pairs.
  std::mt19937 rng(11);
  for (int n : {2, 3}) {
    for (int i = 0; i < 400; ++i) {
      Word u = random_word(rng, {"a", "t"}, 8);
      Word v = random_word(rng, {"a", "t"}, 8);
      CHECK(bs_normal_form(n, u * v) == bs_mul(bs_normal_form(n, u), bs_normal_form(n, v), n));
    }
  }

  // Canonical words round-trip through the fold.
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, {"a", "t"}, 8);
    BSElement e = bs_normal_form(2, u);
    CHECK(bs_normal_form(2, bs_canonical_word(2, e)) == e);
  }
  CHECK(bs_canonical_word(2, bs_normal_form(2, Word::parse("t^-1 a t"))).str() ==
        "t^-1 a t");
}

TEST_CASE("raag normal form on a path") {
  SimpleGraph p4 = path_graph({"a1", "b1", "b2", "a2"});

  CHECK(raag_normalize(p4, Word::parse("[b1,b2]")).empty());
  CHECK(raag_normalize(p4, Word::parse("[a1,b1]")).empty());
  CHECK_FALSE(raag_normalize(p4, Word::parse("[a1,a2]")).empty());
  CHECK_FALSE(raag_normalize(p4, Word::parse("[a1,b2]")).empty());

  SimpleGraph single;
  single.add_vertex("a");
  CHECK(raag_normalize(single, Word::parse("a a a^-1")).str() == "a");

  // Commuting letters sort into the lex-least order.
  CHECK(raag_normalize(p4, Word::parse("b2 b1")).str() == "b1 b2");
  CHECK(raag_normalize(p4, Word::parse("b1 b2")).str() == "b1 b2");
  // Blocked letters stay put.
  CHECK(raag_normalize(p4, Word::parse("a2 a1")).str() == "a2 a1");
}

TEST_CASE("raag normal form agrees with breadth-first search") {
  SimpleGraph p4 = path_graph({"a", "b", "c", "d"});
  SimpleGraph tri = path_graph({"a", "b", "c"});
  tri.add_edge("a", "c");
  SimpleGraph star = path_graph({"a", "b"});
  star.add_vertex("c");
  star.add_vertex("d");
  star.add_edge("a", "c");
  star.add_edge("a", "d");
  std::vector<SimpleGraph> graphs{p4, tri, star};

  std::mt19937 rng(23);
  std::vector<std::string> alphabet{"a", "b", "c", "d"};
  for (const SimpleGraph& g : graphs) {
    std::vector<std::string> verts = g.vertices();
    // Exhaustive short words.
    std::vector<Word> words{Word{}};
    for (int len = 1; len <= 3; ++len) {
      std::vector<Word> next;
      for (const Word& w : words) {
        if (static_cast<int>(w.size()) != len - 1) continue;
        for (const std::string& v : verts) {
          for (int sign : {1, -1}) {
            Word e = w;
            e.push_back(Letter(v, sign));
            next.push_back(e);
          }
        }
      }
      words.insert(words.end(), next.begin(), next.end());
    }
    for (const Word& w : words) {
      CHECK(raag_normalize(g, w).empty() == raag_trivial_bfs(g, w));
    }
    // Random equality checks: u = v iff normal forms agree iff u v^-1 dies.
    for (int i = 0; i < 120; ++i) {
      Word u = random_word(rng, verts, 5);
      Word v = random_word(rng, verts, 5);
      bool same_form = raag_normalize(g, u) == raag_normalize(g, v);
      CHECK(same_form == raag_trivial_bfs(g, u * v.inverse()));
    }
    // The normal form represents the same element.
    for (int i = 0; i < 60; ++i) {
      Word u = random_word(rng, verts, 5);
      CHECK(raag_trivial_bfs(g, u * raag_normalize(g, u).inverse()));
    }
  }
}

TEST_CASE("oracle catalog") {
  GroupOracle f2 = GroupOracle::free_group({"a", "b"});
  CHECK_FALSE(f2.is_trivial(Word::parse("[a,b]")));
  CHECK(f2.is_trivial(Word::parse("a b b^-1 a^-1")));

  GroupOracle z2 = GroupOracle::free_abelian({"a", "b"});
  CHECK(z2.is_trivial(Word::parse("[a,b]")));
  CHECK(z2.normalize(Word::parse("b a b a^-2")).str() == "a^-1 b^2");

  GroupOracle bs2 = GroupOracle::bs1n(2);
  CHECK(bs2.is_trivial(Word::parse("t a t^-1 a^-2")));
  CHECK_FALSE(bs2.is_trivial(Word::parse("t a t^-1 a^-1")));

  GroupOracle c2 = GroupOracle::cyclic_mod("c", 2);
  CHECK(c2.is_trivial(Word::parse("c^2")));
  CHECK(c2.normalize(Word::parse("c^-1")).str() == "c");
  CHECK(c2.letter_order("c") == 2);

  GroupOracle z1 = GroupOracle::free_abelian({"z"});
  GroupOracle prod = GroupOracle::direct_product({z1, f2});
  CHECK(prod.is_trivial(Word::parse("z a z^-1 a^-1")));
  CHECK_FALSE(prod.is_trivial(Word::parse("a b a^-1 b^-1")));
  CHECK(prod.normalize(Word::parse("a z a")).str() == "z a^2");

  CHECK_THROWS_AS(f2.normalize(Word::parse("q")), SpecError);
  CHECK_FALSE(f2.letter_order("a").has_value());
}

TEST_CASE("opaque tables") {
  // The Klein four-group on letters x, y.
  OpaqueTable t;
  t.elements = {"e", "x", "y", "xy"};
  t.identity = 0;
  t.mul = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  t.letters = {{"x", 1}, {"y", 2}};
  GroupOracle v4 = GroupOracle::opaque(t);
  CHECK(v4.is_trivial(Word::parse("x x")));
  CHECK(v4.is_trivial(Word::parse("[x,y]")));
  CHECK(v4.normalize(Word::parse("x y")).size() == 2);
  CHECK(v4.letter_order("x") == 2);

  OpaqueTable bad = t;
  bad.mul[1][1] = 1;  // row no longer a permutation
  CHECK_THROWS_AS(GroupOracle::opaque(bad), SpecError);
}

TEST_CASE("normalize is idempotent and multiplicative for every oracle") {
  SimpleGraph p4 = path_graph({"p", "q", "r", "s"});
  std::vector<GroupOracle> oracles{
      GroupOracle::free_group({"a", "b"}),
      GroupOracle::free_abelian({"a", "b"}),
      GroupOracle::cyclic_mod("a", 5),
      GroupOracle::bs1n(2, "a", "b"),
      GroupOracle::raag(p4),
      GroupOracle::direct_product(
          {GroupOracle::free_abelian({"a"}), GroupOracle::free_group({"b", "c"})}),
  };
  std::mt19937 rng(31);
  for (const GroupOracle& o : oracles) {
    std::vector<std::string> alphabet = o.alphabet();
    for (int i = 0; i < 150; ++i) {
      Word u = random_word(rng, alphabet, 12);
      Word v = random_word(rng, alphabet, 12);
      Word nu = o.normalize(u);
      CHECK(o.normalize(nu) == nu);
      CHECK(o.normalize(u * v) == o.normalize(o.normalize(u) * o.normalize(v)));
    }
  }
}

TEST_CASE("induced subgraphs") {
  SimpleGraph g = path_graph({"a", "b", "c"});
  SimpleGraph sub = g.induced({"a", "c"});
  CHECK(sub.vertices().size() == 2);
  CHECK(sub.edges().empty());
  CHECK(g.induced(g.vertices()) == g);
  CHECK(g.induced({}).vertices().empty());
}
