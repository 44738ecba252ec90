#include "shiftforge/oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace shiftforge {

namespace {

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out))
    throw SpecError("integer overflow in exact arithmetic; word too long for this window");
  return out;
}

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out))
    throw SpecError("integer overflow in exact arithmetic; word too long for this window");
  return out;
}

long long npow(int n, long long k) {
  long long out = 1;
  for (long long i = 0; i < k; ++i) out = checked_mul(out, n);
  return out;
}

}  // namespace

NAdic nadic_normalize(NAdic x, int n) {
  if (n < 2) throw SpecError("n-adic arithmetic requires n >= 2");
  if (x.num == 0) return NAdic{0, 0};
  while (x.pow > 0 && x.num % n == 0) {
    x.num /= n;
    --x.pow;
  }
  return x;
}

NAdic nadic_add(NAdic a, NAdic b, int n) {
  int p = std::max(a.pow, b.pow);
  long long an = checked_mul(a.num, npow(n, p - a.pow));
  long long bn = checked_mul(b.num, npow(n, p - b.pow));
  return nadic_normalize(NAdic{checked_add(an, bn), p}, n);
}

NAdic nadic_neg(NAdic a) {
  a.num = -a.num;
  return a;
}

NAdic nadic_mul_npow(NAdic a, long long k, int n) {
  if (a.num == 0) return a;
  if (k >= 0) {
    a.num = checked_mul(a.num, npow(n, k));
  } else {
    a.pow += static_cast<int>(-k);
  }
  return nadic_normalize(a, n);
}

std::string nadic_str(const NAdic& x, int n) {
  if (x.pow == 0) return std::to_string(x.num);
  std::ostringstream os;
  os << x.num << "/" << n << "^" << x.pow;
  return os.str();
}

BSElement bs_mul(const BSElement& a, const BSElement& b, int n) {
  return BSElement{nadic_add(a.r, nadic_mul_npow(b.r, a.e, n), n), a.e + b.e};
}

BSElement bs_inverse(const BSElement& a, int n) {
  return BSElement{nadic_mul_npow(nadic_neg(a.r), -a.e, n), -a.e};
}

BSElement bs_normal_form(int n, const Word& w, const std::string& a_name,
                         const std::string& t_name) {
  if (n < 2) throw SpecError("bs_normal_form requires n >= 2");
  BSElement acc;
  for (const Letter& l : w.letters()) {
    BSElement v;
    if (l.gen == a_name) {
      v = BSElement{NAdic{l.sign, 0}, 0};
    } else if (l.gen == t_name) {
      v = BSElement{NAdic{0, 0}, l.sign};
    } else {
      throw SpecError("letter '" + l.gen + "' is not in the {" + a_name + "," +
                      t_name + "} alphabet");
    }
    acc = bs_mul(acc, v, n);
  }
  return acc;
}

Word bs_canonical_word(int n, const BSElement& g, const std::string& a_name,
                       const std::string& t_name) {
  NAdic r = nadic_normalize(g.r, n);
  Word out;
  out = out * Word::from_letter(t_name, -1, r.pow);
  if (r.num != 0)
    out = out * Word::from_letter(a_name, r.num > 0 ? 1 : -1,
                                  static_cast<int>(std::llabs(r.num)));
  long long tail = r.pow + g.e;
  out = out * Word::from_letter(t_name, tail >= 0 ? 1 : -1,
                                static_cast<int>(std::llabs(tail)));
  return free_reduce(out);
}

void SimpleGraph::add_vertex(const std::string& v) {
  if (!has_vertex(v)) vertices_.push_back(v);
}

void SimpleGraph::add_edge(const std::string& u, const std::string& v) {
  if (u == v) throw SpecError("graph has a self-loop at '" + u + "'; defining graphs are simple");
  add_vertex(u);
  add_vertex(v);
  edges_.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
}

bool SimpleGraph::has_vertex(const std::string& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool SimpleGraph::adjacent(const std::string& u, const std::string& v) const {
  if (u == v) return false;
  return edges_.count(u < v ? std::make_pair(u, v) : std::make_pair(v, u)) != 0;
}

std::vector<std::pair<std::string, std::string>> SimpleGraph::edges() const {
  return {edges_.begin(), edges_.end()};
}

SimpleGraph SimpleGraph::induced(const std::vector<std::string>& verts) const {
  SimpleGraph out;
  for (const std::string& v : verts) {
    if (!has_vertex(v)) throw SpecError("induced subgraph vertex '" + v + "' not present");
    out.add_vertex(v);
  }
  for (const auto& [u, v] : edges_) {
    if (out.has_vertex(u) && out.has_vertex(v)) out.add_edge(u, v);
  }
  return out;
}

bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
  std::set<std::string> va(a.vertices_.begin(), a.vertices_.end());
  std::set<std::string> vb(b.vertices_.begin(), b.vertices_.end());
  return va == vb && a.edges_ == b.edges_;
}

std::string SimpleGraph::str() const {
  std::vector<std::string> vs = vertices_;
  std::sort(vs.begin(), vs.end());
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : vs) os << ' ' << v;
  os << " edges:";
  for (const auto& [u, v] : edges_) os << ' ' << u << '-' << v;
  return os.str();
}

namespace {

// One pass of shuffle cancellation: find i < j with w[j] = w[i]^-1 and every
// letter strictly between commuting with w[i].
bool raag_cancel_once(const SimpleGraph& g, std::vector<Letter>& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].gen == w[i].gen) {
        if (w[j].sign == -w[i].sign) {
          w.erase(w.begin() + j);
          w.erase(w.begin() + i);
          return true;
        }
        break;  // same generator, same sign: nothing passes it
      }
      if (!g.adjacent(w[i].gen, w[j].gen)) break;
    }
  }
  return false;
}

}  // namespace

Word raag_normalize(const SimpleGraph& g, const Word& w) {
  for (const Letter& l : w.letters()) {
    if (!g.has_vertex(l.gen))
      throw SpecError("letter '" + l.gen + "' is not a vertex of the defining graph");
  }
  std::vector<Letter> cur = w.letters();
  while (raag_cancel_once(g, cur)) {
  }
  // Greedy lexicographic pick: repeatedly move the least front-movable letter
  // to the output.  A letter is front-movable when everything before it
  // commutes with it.
  std::vector<Letter> out;
  std::vector<Letter> pool = cur;
  while (!pool.empty()) {
    std::size_t best = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      bool movable = true;
      for (std::size_t k = 0; k < i; ++k) {
        if (pool[k].gen != pool[i].gen && !g.adjacent(pool[k].gen, pool[i].gen)) {
          movable = false;
          break;
        }
        if (pool[k].gen == pool[i].gen) {
          // An earlier occurrence of the same generator is the representative.
          movable = false;
          break;
        }
      }
      if (movable && (best == pool.size() || pool[i] < pool[best])) best = i;
    }
    if (best == pool.size()) throw InternalError("raag normal form: no movable letter");
    out.push_back(pool[best]);
    pool.erase(pool.begin() + best);
  }
  return Word(std::move(out));
}

void OpaqueTable::validate() const {
  const std::size_t m = elements.size();
  if (m == 0) throw SpecError("opaque table has no elements");
  if (identity < 0 || static_cast<std::size_t>(identity) >= m)
    throw SpecError("opaque table identity out of range");
  if (mul.size() != m) throw SpecError("opaque table is not square");
  for (const auto& row : mul) {
    if (row.size() != m) throw SpecError("opaque table is not square");
    std::set<int> seen(row.begin(), row.end());
    if (seen.size() != m || *seen.begin() < 0 || *seen.rbegin() >= static_cast<int>(m))
      throw SpecError("opaque table row is not a permutation");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (mul[identity][i] != static_cast<int>(i) || mul[i][identity] != static_cast<int>(i))
      throw SpecError("opaque table identity does not behave as an identity");
  }
  if (m <= 16) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          if (mul[mul[i][j]][k] != mul[i][mul[j][k]])
            throw SpecError("opaque table is not associative");
  }
  for (const auto& [name, id] : letters) {
    if (id < 0 || static_cast<std::size_t>(id) >= m)
      throw SpecError("opaque letter '" + name + "' maps outside the table");
  }
}

void GroupOracle::finish_alphabet(std::vector<std::string> gens) {
  alphabet_ = std::move(gens);
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_set_ = std::set<std::string>(alphabet_.begin(), alphabet_.end());
  if (alphabet_set_.size() != alphabet_.size())
    throw SpecError("oracle alphabet has duplicate generator names");
  if (alphabet_set_.count("1")) throw SpecError("'1' is reserved and cannot name a generator");
}

GroupOracle GroupOracle::free_group(std::vector<std::string> gens) {
  GroupOracle o;
  o.kind_ = Kind::Free;
  o.finish_alphabet(std::move(gens));
  return o;
}

GroupOracle GroupOracle::free_abelian(std::vector<std::string> gens) {
  GroupOracle o;
  o.kind_ = Kind::FreeAbelian;
  o.finish_alphabet(std::move(gens));
  return o;
}

GroupOracle GroupOracle::cyclic_mod(const std::string& gen, long long modulus) {
  if (modulus < 1) throw SpecError("cyclic modulus must be >= 1");
  GroupOracle o;
  o.kind_ = Kind::CyclicMod;
  o.modulus_ = modulus;
  o.finish_alphabet({gen});
  return o;
}

GroupOracle GroupOracle::bs1n(int n, const std::string& a_name, const std::string& t_name) {
  if (n < 2) throw SpecError("bs1n oracle requires n >= 2");
  GroupOracle o;
  o.kind_ = Kind::BS1n;
  o.bs_n_ = n;
  o.bs_a_ = a_name;
  o.bs_t_ = t_name;
  o.finish_alphabet({a_name, t_name});
  return o;
}

GroupOracle GroupOracle::raag(SimpleGraph g) {
  GroupOracle o;
  o.kind_ = Kind::Raag;
  o.graph_ = std::move(g);
  o.finish_alphabet(o.graph_.vertices());
  return o;
}

GroupOracle GroupOracle::direct_product(std::vector<GroupOracle> factors) {
  GroupOracle o;
  o.kind_ = Kind::DirectProduct;
  std::vector<std::string> gens;
  for (const GroupOracle& f : factors) {
    gens.insert(gens.end(), f.alphabet().begin(), f.alphabet().end());
  }
  o.factors_ = std::move(factors);
  o.finish_alphabet(std::move(gens));
  return o;
}

GroupOracle GroupOracle::opaque(OpaqueTable table) {
  table.validate();
  GroupOracle o;
  o.kind_ = Kind::Opaque;
  o.table_ = std::move(table);
  std::vector<std::string> gens;
  for (const auto& [name, id] : o.table_.letters) gens.push_back(name);
  o.finish_alphabet(std::move(gens));

  // Shortest (then lex-least) word per reachable element; identity is empty.
  const std::size_t m = o.table_.elements.size();
  o.opaque_canonical_.assign(m, Word{});
  std::vector<bool> seen(m, false);
  seen[o.table_.identity] = true;
  std::deque<int> queue{o.table_.identity};
  std::vector<int> inv(m, -1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (o.table_.mul[i][j] == o.table_.identity) inv[i] = static_cast<int>(j);
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (const std::string& g : o.alphabet_) {
      for (int sign : {1, -1}) {
        int ge = o.table_.letters.at(g);
        if (sign < 0) ge = inv[ge];
        int nxt = o.table_.mul[e][ge];
        if (seen[nxt]) continue;
        seen[nxt] = true;
        o.opaque_canonical_[nxt] = o.opaque_canonical_[e] * Word::from_letter(g, sign);
        queue.push_back(nxt);
      }
    }
  }
  return o;
}

bool GroupOracle::has_letter(const std::string& g) const {
  return alphabet_set_.count(g) != 0;
}

void GroupOracle::require_letters(const Word& w) const {
  for (const Letter& l : w.letters()) {
    if (!has_letter(l.gen))
      throw SpecError("letter '" + l.gen + "' is not in the oracle alphabet");
  }
}

Word GroupOracle::normalize(const Word& w) const {
  require_letters(w);
  switch (kind_) {
    case Kind::Free:
      return free_reduce(w);
    case Kind::FreeAbelian: {
      std::map<std::string, long long> exps;
      for (const Letter& l : w.letters()) exps[l.gen] += l.sign;
      Word out;
      for (const std::string& g : alphabet_) {
        long long e = exps.count(g) ? exps[g] : 0;
        if (e != 0)
          out = out * Word::from_letter(g, e > 0 ? 1 : -1, static_cast<int>(std::llabs(e)));
      }
      return out;
    }
    case Kind::CyclicMod: {
      long long e = 0;
      for (const Letter& l : w.letters()) e += l.sign;
      e %= modulus_;
      if (e < 0) e += modulus_;
      return Word::from_letter(alphabet_[0], 1, static_cast<int>(e));
    }
    case Kind::BS1n:
      return bs_canonical_word(bs_n_, bs_normal_form(bs_n_, w, bs_a_, bs_t_), bs_a_, bs_t_);
    case Kind::Raag:
      return raag_normalize(graph_, w);
    case Kind::DirectProduct: {
      Word out;
      for (const GroupOracle& f : factors_) {
        Word part;
        for (const Letter& l : w.letters())
          if (f.has_letter(l.gen)) part.push_back(l);
        out = out * f.normalize(part);
      }
      return out;
    }
    case Kind::Opaque: {
      int e = table_.identity;
      const std::size_t m = table_.elements.size();
      std::vector<int> inv(m, -1);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (table_.mul[i][j] == table_.identity) inv[i] = static_cast<int>(j);
      for (const Letter& l : w.letters()) {
        int ge = table_.letters.at(l.gen);
        if (l.sign < 0) ge = inv[ge];
        e = table_.mul[e][ge];
      }
      return opaque_canonical_[e];
    }
  }
  throw InternalError("unhandled oracle kind");
}

std::optional<long long> GroupOracle::letter_order(const std::string& g) const {
  if (!has_letter(g)) throw SpecError("letter '" + g + "' is not in the oracle alphabet");
  switch (kind_) {
    case Kind::Free:
    case Kind::FreeAbelian:
    case Kind::BS1n:
    case Kind::Raag:
      return std::nullopt;
    case Kind::CyclicMod:
      return modulus_;
    case Kind::DirectProduct:
      for (const GroupOracle& f : factors_)
        if (f.has_letter(g)) return f.letter_order(g);
      return std::nullopt;
    case Kind::Opaque: {
      int e = table_.letters.at(g);
      int cur = e;
      long long k = 1;
      while (cur != table_.identity) {
        cur = table_.mul[cur][e];
        ++k;
      }
      return k;
    }
  }
  return std::nullopt;
}

std::string GroupOracle::kind_str() const {
  switch (kind_) {
    case Kind::Free: return "free";
    case Kind::FreeAbelian: return "free-abelian";
    case Kind::CyclicMod: return "cyclic-mod";
    case Kind::BS1n: return "bs1n";
    case Kind::Raag: return "raag";
    case Kind::DirectProduct: return "direct-product";
    case Kind::Opaque: return "opaque";
  }
  return "?";
}

}  // namespace shiftforge
