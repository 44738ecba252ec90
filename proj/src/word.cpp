#include "shiftforge/word.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace shiftforge {

namespace {

bool is_name_char(char c) {
  return !(c == '[' || c == ']' || c == ',' || c == '^' ||
           std::isspace(static_cast<unsigned char>(c)));
}

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }

  // item := name [^int] | '[' expr ',' expr ']'
  std::vector<Letter> parse_expr(bool in_bracket) {
    std::vector<Letter> out;
    while (!done()) {
      char c = peek();
      if (c == ',' || c == ']') {
        if (!in_bracket) throw SpecError("unexpected '" + std::string(1, c) + "' in word");
        break;
      }
      if (c == '[') {
        ++pos;
        std::vector<Letter> u = parse_expr(true);
        skip_ws();
        if (pos >= text.size() || text[pos] != ',')
          throw SpecError("expected ',' in commutator bracket");
        ++pos;
        std::vector<Letter> v = parse_expr(true);
        skip_ws();
        if (pos >= text.size() || text[pos] != ']')
          throw SpecError("expected ']' closing commutator bracket");
        ++pos;
        // [u,v] = u v u^-1 v^-1
        out.insert(out.end(), u.begin(), u.end());
        out.insert(out.end(), v.begin(), v.end());
        for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(it->inverse());
        for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(it->inverse());
        continue;
      }
      std::string name;
      while (pos < text.size() && is_name_char(text[pos])) name += text[pos++];
      if (name.empty()) throw SpecError("malformed word token near position " + std::to_string(pos));
      long long exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::string num;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) num += text[pos++];
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) num += text[pos++];
        if (num.empty() || num == "-" || num == "+")
          throw SpecError("malformed exponent on token '" + name + "'");
        exp = std::stoll(num);
      }
      if (name == "1") {
        if (exp != 1 && exp != 0 && exp != -1)
          throw SpecError("'1' denotes the empty word and takes no exponent");
        continue;
      }
      int sign = exp >= 0 ? 1 : -1;
      for (long long i = 0; i < std::llabs(exp); ++i) out.emplace_back(name, sign);
    }
    return out;
  }
};

}  // namespace

Word Word::parse(const std::string& text) {
  Parser p{text};
  std::vector<Letter> letters = p.parse_expr(false);
  if (!p.done()) throw SpecError("trailing characters in word: '" + text + "'");
  return Word(std::move(letters));
}

Word Word::from_letter(const std::string& gen, int sign, int count) {
  std::vector<Letter> ls;
  for (int i = 0; i < count; ++i) ls.emplace_back(gen, sign);
  return Word(std::move(ls));
}

Word Word::inverse() const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) ls.push_back(it->inverse());
  return Word(std::move(ls));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(ls));
}

Word Word::pow(long long k) const {
  Word base = k >= 0 ? *this : inverse();
  Word out;
  for (long long i = 0; i < std::llabs(k); ++i) out = out * base;
  return out;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long long run = static_cast<long long>(j - i) * letters_[i].sign;
    if (!first) os << ' ';
    first = false;
    os << letters_[i].gen;
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& la = a.letters();
  const auto& lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i] != lb[i]) return la[i] < lb[i];
  }
  return false;
}

long long WeightMap::at(const std::string& gen) const {
  auto it = weights_.find(gen);
  if (it == weights_.end()) throw SpecError("weight map has no entry for generator '" + gen + "'");
  return it->second;
}

bool WeightMap::surjective() const {
  long long g = 0;
  for (const auto& [name, w] : weights_) g = std::gcd(g, w);
  return g == 1;
}

long long exponent_sum(const Word& w, const WeightMap& f) {
  long long sum = 0;
  for (const Letter& l : w.letters()) sum += f.at(l.gen) * l.sign;
  return sum;
}

void Presentation::validate() const {
  std::set<std::string> names(alphabet.begin(), alphabet.end());
  if (names.size() != alphabet.size()) throw SpecError("presentation alphabet has duplicate names");
  if (names.count("1")) throw SpecError("'1' is reserved and cannot name a generator");
  for (const Word& r : relators) {
    for (const Letter& l : r.letters()) {
      if (!names.count(l.gen))
        throw SpecError("relator letter '" + l.gen + "' is not in the alphabet");
    }
  }
}

bool Presentation::has_generator(const std::string& g) const {
  return std::find(alphabet.begin(), alphabet.end(), g) != alphabet.end();
}

Word rewrite_word(const Word& w, const std::map<std::string, Word>& dict) {
  Word out;
  for (const Letter& l : w.letters()) {
    auto it = dict.find(l.gen);
    if (it == dict.end()) throw SpecError("no rewriting for generator '" + l.gen + "'");
    Word piece = l.sign > 0 ? it->second : it->second.inverse();
    out = out * piece;
  }
  return out;
}

namespace {

// Shortest signed product of generators with weight exactly one; breadth
// first over word length, letters tried in canonical order so the first hit
// is the lex-least among the shortest.
Word weight_one_base(const Presentation& p, const WeightMap& f) {
  std::vector<Letter> sigma;
  std::vector<std::string> names = p.alphabet;
  std::sort(names.begin(), names.end());
  for (const std::string& n : names) {
    sigma.emplace_back(n, 1);
    sigma.emplace_back(n, -1);
  }
  long long bound = 1;
  for (const std::string& n : names) bound += std::llabs(f.at(n));
  bound = bound * bound + 4;

  std::set<long long> seen{0};
  std::deque<std::pair<Word, long long>> queue;
  queue.emplace_back(Word{}, 0);
  while (!queue.empty()) {
    auto [w, sum] = queue.front();
    queue.pop_front();
    for (const Letter& l : sigma) {
      long long next = sum + f.at(l.gen) * l.sign;
      if (next == 1) {
        Word hit = w;
        hit.push_back(l);
        return hit;
      }
      if (std::llabs(next) > bound || seen.count(next)) continue;
      seen.insert(next);
      Word nw = w;
      nw.push_back(l);
      queue.emplace_back(std::move(nw), next);
    }
  }
  throw InternalError("weight-one base search exhausted despite surjective map");
}

std::string fresh_name(std::string base, const std::set<std::string>& used) {
  if (!used.count(base) && base != "1") return base;
  for (int i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

}  // namespace

ZeroSumPresentation zero_sum_presentation(const Presentation& p, const WeightMap& f) {
  p.validate();
  for (const std::string& g : p.alphabet) f.at(g);
  if (!f.surjective())
    throw SpecError("weight map is not surjective onto the integers; no zero-sum rebase exists");

  ZeroSumPresentation out;
  Word base_word = weight_one_base(p, f);
  out.base_in_old = base_word;

  std::set<std::string> used(p.alphabet.begin(), p.alphabet.end());
  bool base_is_generator =
      base_word.size() == 1 && base_word.letters()[0].sign == 1;
  std::string base_name;
  if (base_is_generator) {
    base_name = base_word.letters()[0].gen;
  } else {
    base_name = fresh_name("h", used);
    used.insert(base_name);
  }
  out.base = base_name;

  out.pres.alphabet.push_back(base_name);
  out.new_to_old[base_name] = base_word;

  // g with weight 1 keeps its name; otherwise g is augmented to g*base^(1-f(g)).
  for (const std::string& g : p.alphabet) {
    if (base_is_generator && g == base_name) continue;
    long long wg = f.at(g);
    if (wg == 1) {
      out.pres.alphabet.push_back(g);
      out.new_to_old[g] = Word::from_letter(g);
      out.old_to_new[g] = Word::from_letter(g);
      continue;
    }
    std::string aug = fresh_name(g + base_name, used);
    used.insert(aug);
    out.pres.alphabet.push_back(aug);
    out.new_to_old[aug] = Word::from_letter(g) * base_word.pow(1 - wg);
    // g = aug * base^(f(g)-1) in the new alphabet.
    out.old_to_new[g] = Word::from_letter(aug) * Word::from_letter(base_name).pow(wg - 1);
  }
  if (base_is_generator) out.old_to_new[base_name] = Word::from_letter(base_name);

  for (const Word& r : p.relators) {
    out.pres.relators.push_back(free_reduce(rewrite_word(r, out.old_to_new)));
  }
  if (!base_is_generator) {
    // Defining relator for the fresh base: base^-1 * (base word, rewritten).
    Word rel = Word::from_letter(base_name, -1) * rewrite_word(base_word, out.old_to_new);
    out.pres.relators.push_back(free_reduce(rel));
  }

  WeightMap ones;
  for (const std::string& g : out.pres.alphabet) ones.set(g, 1);
  for (const Word& r : out.pres.relators) {
    if (exponent_sum(r, ones) != 0)
      throw InternalError("zero-sum rebase produced a relator with nonzero exponent sum");
  }
  out.pres.validate();
  return out;
}

std::vector<std::pair<int, Word>> syllable_decompose(
    const Word& w, const std::map<std::string, int>& partition) {
  std::vector<std::pair<int, Word>> blocks;
  for (const Letter& l : w.letters()) {
    auto it = partition.find(l.gen);
    if (it == partition.end())
      throw SpecError("partition does not cover generator '" + l.gen + "'");
    if (blocks.empty() || blocks.back().first != it->second) {
      blocks.emplace_back(it->second, Word{});
    }
    blocks.back().second.push_back(l);
  }
  return blocks;
}

Word project_to_factor(const Word& w, int factor,
                       const std::map<std::string, int>& partition) {
  Word out;
  for (const Letter& l : w.letters()) {
    auto it = partition.find(l.gen);
    if (it == partition.end())
      throw SpecError("partition does not cover generator '" + l.gen + "'");
    if (it->second == factor) out.push_back(l);
  }
  return out;
}

}  // namespace shiftforge
