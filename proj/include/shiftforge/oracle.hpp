#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shiftforge/word.hpp"

namespace shiftforge {

// Element of Z[1/n]: num / n^pow in lowest terms (pow = 0, or n does not
// divide num).  Exact integer arithmetic; overflow raises.
struct NAdic {
  long long num = 0;
  int pow = 0;

  friend bool operator==(const NAdic& a, const NAdic& b) {
    return a.num == b.num && a.pow == b.pow;
  }
  friend bool operator!=(const NAdic& a, const NAdic& b) { return !(a == b); }
  bool zero() const { return num == 0; }
};

NAdic nadic_normalize(NAdic x, int n);
NAdic nadic_add(NAdic a, NAdic b, int n);
NAdic nadic_neg(NAdic a);
NAdic nadic_mul_npow(NAdic a, long long k, int n);  // a * n^k
std::string nadic_str(const NAdic& x, int n);

// Z[1/n] x| Z with (r1,e1)(r2,e2) = (r1 + n^e1 r2, e1+e2); the generator pair
// is a = (1,0), t = (0,1).
struct BSElement {
  NAdic r;
  long long e = 0;

  friend bool operator==(const BSElement& a, const BSElement& b) {
    return a.r == b.r && a.e == b.e;
  }
  bool identity() const { return r.zero() && e == 0; }
};

BSElement bs_mul(const BSElement& a, const BSElement& b, int n);
BSElement bs_inverse(const BSElement& a, int n);

// Letters fold left to right through the product law.
BSElement bs_normal_form(int n, const Word& w, const std::string& a_name = "a",
                         const std::string& t_name = "t");

// Canonical word t^-q a^p t^(q+e) for (p/n^q, e).
Word bs_canonical_word(int n, const BSElement& g, const std::string& a_name = "a",
                       const std::string& t_name = "t");

class SimpleGraph {
 public:
  SimpleGraph() = default;

  void add_vertex(const std::string& v);
  void add_edge(const std::string& u, const std::string& v);
  bool has_vertex(const std::string& v) const;
  bool adjacent(const std::string& u, const std::string& v) const;
  const std::vector<std::string>& vertices() const { return vertices_; }
  std::vector<std::pair<std::string, std::string>> edges() const;
  SimpleGraph induced(const std::vector<std::string>& verts) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b);
  std::string str() const;

 private:
  std::vector<std::string> vertices_;  // insertion order, unique
  std::set<std::pair<std::string, std::string>> edges_;  // stored with u < v
};

// Shortlex-least representative under adjacent-commutation moves and free
// reduction; two words are equal in the graph group iff outputs coincide.
Word raag_normalize(const SimpleGraph& g, const Word& w);

struct OpaqueTable {
  std::vector<std::string> elements;          // names; index is the element id
  int identity = 0;
  std::vector<std::vector<int>> mul;          // mul[i][j] = i*j
  std::map<std::string, int> letters;         // generator name -> element id

  void validate() const;
};

// Normal-form back-ends for the catalogued groups.  normalize is idempotent;
// the designated identity form is the empty word for every kind.
class GroupOracle {
 public:
  enum class Kind { Free, FreeAbelian, CyclicMod, BS1n, Raag, DirectProduct, Opaque };

  GroupOracle() = default;  // rank-zero free group

  static GroupOracle free_group(std::vector<std::string> gens);
  static GroupOracle free_abelian(std::vector<std::string> gens);
  static GroupOracle cyclic_mod(const std::string& gen, long long modulus);
  static GroupOracle bs1n(int n, const std::string& a_name = "a",
                          const std::string& t_name = "t");
  static GroupOracle raag(SimpleGraph g);
  static GroupOracle direct_product(std::vector<GroupOracle> factors);
  static GroupOracle opaque(OpaqueTable table);

  Kind kind() const { return kind_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  bool has_letter(const std::string& g) const;
  void require_letters(const Word& w) const;

  Word normalize(const Word& w) const;
  bool is_trivial(const Word& w) const { return normalize(w).empty(); }

  // Order of a single generator as a group element; nullopt means infinite.
  std::optional<long long> letter_order(const std::string& g) const;

  // Kind-specific accessors.
  int bs_n() const { return bs_n_; }
  const std::string& bs_a() const { return bs_a_; }
  const std::string& bs_t() const { return bs_t_; }
  long long modulus() const { return modulus_; }
  const SimpleGraph& graph() const { return graph_; }
  const std::vector<GroupOracle>& factors() const { return factors_; }
  const OpaqueTable& table() const { return table_; }
  std::string kind_str() const;

 private:
  Kind kind_ = Kind::Free;
  std::vector<std::string> alphabet_;
  std::set<std::string> alphabet_set_;

  int bs_n_ = 0;
  std::string bs_a_, bs_t_;
  long long modulus_ = 0;
  SimpleGraph graph_;
  std::vector<GroupOracle> factors_;
  OpaqueTable table_;
  std::vector<Word> opaque_canonical_;  // per element id

  void finish_alphabet(std::vector<std::string> gens);
};

inline bool oracle_is_trivial(const GroupOracle& o, const Word& w) {
  return o.is_trivial(w);
}

}  // namespace shiftforge
