#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antihorn/clause.hpp"
#include "antihorn/word.hpp"

namespace antihorn {

// --- tuple codes -------------------------------------------------------------
//
// Self-delimiting injection of word tuples into single words: a unary arity
// header (arity ones, then a zero), then each component with every symbol
// doubled and a "01" terminator.  "10" inside a component is therefore
// impossible, which makes the image decidable and the code prefix-free per
// component.  Example: ("1", "_") -> 110 1101 01.

// Encodes a tuple of at most k words.  Output length is
// (arity + 1) + sum(2|w| + 2), linear in the input.
Word encodeTuple(std::span<const Word> words, int k);

// Inverse on the image; nullopt for words outside it.
std::optional<std::vector<Word>> decodeTuple(const Word& w);

// --- bounded conjunctive/disjunctive forms ------------------------------------
//
// A literal group over words: negated words and plain words.  Read
// disjunctively it is a CNF conjunct (not-v1 or ... or w1 or ...), read
// conjunctively a DNF disjunct.  Text form: "[-v1 -v2 +w1 +w2]".
struct LiteralGroup {
  std::vector<Word> negatives;  // sorted, duplicate-free
  std::vector<Word> positives;  // sorted, duplicate-free

  LiteralGroup() = default;
  LiteralGroup(std::vector<Word> negs, std::vector<Word> poss);

  std::size_t literalCount() const { return negatives.size() + positives.size(); }
  std::string str() const;
  static LiteralGroup parse(std::string_view text);

  friend bool operator==(const LiteralGroup&, const LiteralGroup&) = default;
};

// A conjunction of literal groups, every group holding at most k literals.
class BoundedCnf {
 public:
  BoundedCnf() = default;
  BoundedCnf(int k, std::vector<LiteralGroup> conjuncts);

  int k() const { return k_; }
  std::span<const LiteralGroup> conjuncts() const { return conjuncts_; }

  std::string str() const;  // groups separated by spaces
  static BoundedCnf parse(int k, std::string_view text);

  friend bool operator==(const BoundedCnf&, const BoundedCnf&) = default;

 private:
  int k_ = 1;
  std::vector<LiteralGroup> conjuncts_;
};

// A disjunction of literal groups (each a conjunction of its literals).
class BoundedDnf {
 public:
  BoundedDnf() = default;
  BoundedDnf(int k, std::vector<LiteralGroup> disjuncts);

  int k() const { return k_; }
  std::span<const LiteralGroup> disjuncts() const { return disjuncts_; }

  std::string str() const;
  static BoundedDnf parse(int k, std::string_view text);

  friend bool operator==(const BoundedDnf&, const BoundedDnf&) = default;

 private:
  int k_ = 1;
  std::vector<LiteralGroup> disjuncts_;
};

// Satisfaction against a finite set S of words ("w in S" is the atom).
bool conjunctSatisfied(const LiteralGroup& g, const WordSet& s);  // some literal true
bool disjunctSatisfied(const LiteralGroup& g, const WordSet& s);  // all literals true
bool satisfied(const BoundedCnf& f, const WordSet& s);
bool satisfied(const BoundedDnf& f, const WordSet& s);

// Turns each conjunct (-v1 .. -vi, +w1 .. +wj) into the anti-Horn clause
//   encode(v1..vi) -> encode(w1) | ... | encode(wj).
// Satisfaction carries over exactly against the lifted set below.
AntiHornFormula transformCnf(const BoundedCnf& f);

// The lifted sparse set: encodings of all tuples of arity <= k whose
// components come from S and are no longer than length_cap.  Its census
// stays polynomially bounded when S's is.
WordSet liftSparseSet(const WordSet& s, int k, int length_cap);

// De Morgan: the negation of a bounded DNF as a bounded CNF with the same
// literal groups, sides swapped.  satisfied(negateDnf(f), s) == !satisfied(f, s).
BoundedCnf negateDnf(const BoundedDnf& f);

}  // namespace antihorn
