#pragma once

#include <map>
#include <string>
#include <vector>

#include "shiftforge/common.hpp"

namespace shiftforge {

struct Letter {
  std::string gen;
  int sign = 1;  // +1 or -1

  Letter() = default;
  Letter(std::string g, int s) : gen(std::move(g)), sign(s) {}
  Letter inverse() const { return Letter(gen, -sign); }

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.sign == b.sign && a.gen == b.gen;
  }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
  // Order: generator name, then +1 before -1.
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.sign > b.sign;
  }
};

// A word over named generators.  Words are plain sequences; canonical forms
// are produced by free_reduce or by a group oracle.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Token syntax: whitespace-separated `name`, `name^k`, `name^-1`.
  // Bracket pairs `[u,v]` expand to u v u^-1 v^-1 before anything else and
  // may nest.  The bare token `1` denotes the empty word.
  static Word parse(const std::string& text);

  static Word from_letter(const std::string& gen, int sign = 1, int count = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(const Letter& l) { letters_.push_back(l); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;  // concatenation, no reduction
  Word pow(long long k) const;

  // Rendering collapses runs of equal letters into `name^k`; the empty word
  // renders as `1`.
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  std::vector<Letter> letters_;
};

// Cancels adjacent inverse pairs until none remain.  Idempotent and
// length-non-increasing; the empty output characterises free triviality.
Word free_reduce(const Word& w);

// Length first, then (name, sign) per position.
bool shortlex_less(const Word& a, const Word& b);

// Generator-name -> integer weight; extends to the unique homomorphism from
// the free group on its domain to the integers.
class WeightMap {
 public:
  WeightMap() = default;
  explicit WeightMap(std::map<std::string, long long> w) : weights_(std::move(w)) {}

  void set(const std::string& gen, long long w) { weights_[gen] = w; }
  bool has(const std::string& gen) const { return weights_.count(gen) != 0; }
  long long at(const std::string& gen) const;
  const std::map<std::string, long long>& entries() const { return weights_; }

  // True iff the image subgroup is all of the integers.
  bool surjective() const;

 private:
  std::map<std::string, long long> weights_;
};

long long exponent_sum(const Word& w, const WeightMap& f);

struct Presentation {
  std::vector<std::string> alphabet;
  std::vector<Word> relators;

  // Every relator letter must belong to the alphabet.
  void validate() const;
  bool has_generator(const std::string& g) const;
};

struct ZeroSumPresentation {
  Presentation pres;        // every generator weighs 1; relators sum to zero
  std::string base;         // the weight-one base generator of `pres`
  Word base_in_old;         // base expressed in the original alphabet
  std::map<std::string, Word> old_to_new;  // original generator -> new word
  std::map<std::string, Word> new_to_old;  // new generator -> original word
};

// Rebases a presentation so that every generator has weight one under f and
// every relator has zero all-ones exponent sum.  The base element is the
// shortest signed product of generators with weight one (breadth-first, ties
// broken by letter order); other generators g are replaced by g*base^(1-f(g)).
// A composite base becomes a fresh generator with its defining relator added.
ZeroSumPresentation zero_sum_presentation(const Presentation& p, const WeightMap& f);

// Substitutes each letter by dict.at(letter) (inverted for negative signs).
Word rewrite_word(const Word& w, const std::map<std::string, Word>& dict);

// Maximal single-factor blocks of w, in order; concatenation recovers w.
std::vector<std::pair<int, Word>> syllable_decompose(
    const Word& w, const std::map<std::string, int>& partition);

// Deletes all letters outside the given factor, preserving order (the result
// is not freely reduced).
Word project_to_factor(const Word& w, int factor,
                       const std::map<std::string, int>& partition);

}  // namespace shiftforge
