#include "antihorn/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace antihorn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<LiteralGroup> parseGroups(std::string_view text) {
  std::vector<LiteralGroup> groups;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    if (rest.front() != '[')
      throw std::invalid_argument("literal groups: expected '[' in \"" + std::string(rest) + "\"");
    const auto close = rest.find(']');
    if (close == std::string_view::npos)
      throw std::invalid_argument("literal groups: missing ']'");
    groups.push_back(LiteralGroup::parse(rest.substr(0, close + 1)));
    rest = trim(rest.substr(close + 1));
  }
  return groups;
}

std::string groupsToString(std::span<const LiteralGroup> groups) {
  std::string out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out += " ";
    out += groups[i].str();
  }
  return out;
}

void checkLiteralBound(int k, std::span<const LiteralGroup> groups, const char* what) {
  if (k < 1) throw std::invalid_argument(std::string(what) + ": k must be at least 1");
  for (const LiteralGroup& g : groups)
    if (g.literalCount() > static_cast<std::size_t>(k))
      throw std::invalid_argument(std::string(what) + ": group \"" + g.str() +
                                  "\" exceeds " + std::to_string(k) + " literals");
}

}  // namespace

Word encodeTuple(std::span<const Word> words, int k) {
  if (words.size() > static_cast<std::size_t>(k))
    throw std::invalid_argument("encodeTuple: arity exceeds k");
  WordBuilder b;
  for (std::size_t i = 0; i < words.size(); ++i) b.push(true);  // unary arity header
  b.push(false);
  for (const Word& w : words) {
    for (int i = 0; i < w.size(); ++i) {  // doubled symbols, then "01"
      b.push(w.bit(i));
      b.push(w.bit(i));
    }
    b.push(false);
    b.push(true);
  }
  return b.take();
}

std::optional<std::vector<Word>> decodeTuple(const Word& w) {
  int pos = 0;
  std::size_t arity = 0;
  while (pos < w.size() && w.bit(pos)) {
    ++arity;
    ++pos;
  }
  if (pos >= w.size() && arity > 0) return std::nullopt;  // header never closed
  if (pos < w.size() && w.bit(pos)) return std::nullopt;
  ++pos;  // the header's zero
  std::vector<Word> out;
  out.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    WordBuilder b;
    for (;;) {
      if (pos + 2 > w.size()) return std::nullopt;  // ran out mid-pair

      const bool a = w.bit(pos), c = w.bit(pos + 1);
      pos += 2;
      if (a == c) {
        b.push(a);
      } else if (!a && c) {
        break;  // "01" terminator
      } else {
        return std::nullopt;  // "10" cannot occur
      }
    }
    out.push_back(b.take());
  }
  if (pos != w.size()) return std::nullopt;  // trailing symbols
  return out;
}

LiteralGroup::LiteralGroup(std::vector<Word> negs, std::vector<Word> poss)
    : negatives(std::move(negs)), positives(std::move(poss)) {
  std::sort(negatives.begin(), negatives.end());
  negatives.erase(std::unique(negatives.begin(), negatives.end()), negatives.end());
  std::sort(positives.begin(), positives.end());
  positives.erase(std::unique(positives.begin(), positives.end()), positives.end());
}

std::string LiteralGroup::str() const {
  std::string out = "[";
  bool first = true;
  for (const Word& w : negatives) {
    if (!first) out += " ";
    out += "-" + w.str();
    first = false;
  }
  for (const Word& w : positives) {
    if (!first) out += " ";
    out += "+" + w.str();
    first = false;
  }
  return out + "]";
}

LiteralGroup LiteralGroup::parse(std::string_view text) {
  std::string_view rest = trim(text);
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    throw std::invalid_argument("LiteralGroup::parse: expected \"[...]\"");
  rest = rest.substr(1, rest.size() - 2);
  std::vector<Word> negs, poss;
  while (true) {
    rest = trim(rest);
    if (rest.empty()) break;
    auto end = rest.find(' ');
    const std::string_view tok = rest.substr(0, end);
    if (tok.size() < 2 || (tok.front() != '-' && tok.front() != '+'))
      throw std::invalid_argument("LiteralGroup::parse: bad literal \"" + std::string(tok) + "\"");
    (tok.front() == '-' ? negs : poss).push_back(Word::parse(tok.substr(1)));
    if (end == std::string_view::npos) break;
    rest = rest.substr(end + 1);
  }
  return LiteralGroup(std::move(negs), std::move(poss));
}

BoundedCnf::BoundedCnf(int k, std::vector<LiteralGroup> conjuncts)
    : k_(k), conjuncts_(std::move(conjuncts)) {
  checkLiteralBound(k_, conjuncts_, "bounded CNF");
}

std::string BoundedCnf::str() const { return groupsToString(conjuncts_); }

BoundedCnf BoundedCnf::parse(int k, std::string_view text) {
  return BoundedCnf(k, parseGroups(text));
}

BoundedDnf::BoundedDnf(int k, std::vector<LiteralGroup> disjuncts)
    : k_(k), disjuncts_(std::move(disjuncts)) {
  checkLiteralBound(k_, disjuncts_, "bounded DNF");
}

std::string BoundedDnf::str() const { return groupsToString(disjuncts_); }

BoundedDnf BoundedDnf::parse(int k, std::string_view text) {
  return BoundedDnf(k, parseGroups(text));
}

bool conjunctSatisfied(const LiteralGroup& g, const WordSet& s) {
  for (const Word& w : g.negatives)
    if (!s.contains(w)) return true;
  for (const Word& w : g.positives)
    if (s.contains(w)) return true;
  return false;
}

bool disjunctSatisfied(const LiteralGroup& g, const WordSet& s) {
  for (const Word& w : g.negatives)
    if (s.contains(w)) return false;
  for (const Word& w : g.positives)
    if (!s.contains(w)) return false;
  return true;
}

bool satisfied(const BoundedCnf& f, const WordSet& s) {
  for (const LiteralGroup& g : f.conjuncts())
    if (!conjunctSatisfied(g, s)) return false;
  return true;
}

bool satisfied(const BoundedDnf& f, const WordSet& s) {
  for (const LiteralGroup& g : f.disjuncts())
    if (disjunctSatisfied(g, s)) return true;
  return false;
}

AntiHornFormula transformCnf(const BoundedCnf& f) {
  std::vector<AntiHornClause> clauses;
  clauses.reserve(f.conjuncts().size());
  for (const LiteralGroup& g : f.conjuncts()) {
    const Word lhs = encodeTuple(g.negatives, f.k());
    std::vector<Word> rhs;
    rhs.reserve(g.positives.size());
    for (const Word& w : g.positives) rhs.push_back(encodeTuple({&w, 1}, f.k()));
    clauses.emplace_back(lhs, std::move(rhs));
  }
  return AntiHornFormula(std::move(clauses));
}

WordSet liftSparseSet(const WordSet& s, int k, int length_cap) {
  if (k < 0) throw std::invalid_argument("liftSparseSet: negative arity bound");
  std::vector<Word> base;
  for (const Word& w : s) {
    if (w.size() > length_cap) break;  // sorted by length
    base.push_back(w);
  }
  std::vector<Word> lifted;
  std::vector<Word> tuple;
  // All tuples of each arity, odometer-style.
  for (int arity = 0; arity <= k; ++arity) {
    if (arity > 0 && base.empty()) break;
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
    for (;;) {
      tuple.clear();
      for (std::size_t i : idx) tuple.push_back(base[i]);
      lifted.push_back(encodeTuple(tuple, k));
      int pos = arity - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == base.size()) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return WordSet(std::move(lifted));
}

BoundedCnf negateDnf(const BoundedDnf& f) {
  std::vector<LiteralGroup> conjuncts;
  conjuncts.reserve(f.disjuncts().size());
  for (const LiteralGroup& g : f.disjuncts())
    conjuncts.push_back(LiteralGroup(g.positives, g.negatives));
  return BoundedCnf(f.k(), std::move(conjuncts));
}

}  // namespace antihorn
