#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antihorn {

// A finite binary word over {0,1}.  Words are immutable values ordered
// length-lexicographically: shorter words first, equal lengths by their
// symbol strings.  The empty word prints as "_".
class Word {
 public:
  static constexpr int kMaxLength = 120;

  constexpr Word() = default;  // the empty word

  // Word whose symbols are the `length` low bits of `bits`, most
  // significant bit first.  length <= 63.
  static Word fromBits(std::uint64_t bits, int length);

  // Accepts "_" (empty word) or a nonempty string of 0/1 symbols.
  static Word parse(std::string_view text);

  int size() const { return length_; }
  bool empty() const { return length_ == 0; }
  bool bit(int i) const;  // i-th symbol, 0-based from the left

  std::string str() const;

  // Position in the length-lexicographic enumeration of all words:
  // "_" = 0, "0" = 1, "1" = 2, "00" = 3, ...  Requires size() <= 62.
  std::uint64_t rank() const;
  static Word fromRank(std::uint64_t rank);

  // Number of words of length <= n (n <= 62), i.e. 2^(n+1) - 1.
  static std::uint64_t countUpToLength(int n);

  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.length_ != b.length_) return a.length_ <=> b.length_;
    if (a.bits_ < b.bits_) return std::strong_ordering::less;
    if (a.bits_ > b.bits_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  friend class WordBuilder;
  unsigned __int128 bits_ = 0;  // symbol string as an integer, first symbol most significant
  std::int16_t length_ = 0;
};

// Appends symbols one at a time; used by encodings whose output exceeds
// the 63-bit limit of Word::fromBits.
class WordBuilder {
 public:
  void push(bool symbol);
  void append(const Word& w);
  int size() const { return word_.size(); }
  Word take();

 private:
  Word word_;
};

// A finite set of words (sorted, duplicate-free).
class WordSet {
 public:
  WordSet() = default;
  explicit WordSet(std::vector<Word> words);

  bool contains(const Word& w) const;
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  std::span<const Word> words() const { return words_; }

  // |{w in set : |w| <= n}|
  std::size_t countUpToLength(int n) const;
  // Length of the longest member, -1 for the empty set.
  int maxLength() const;

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  friend bool operator==(const WordSet& a, const WordSet& b) = default;

 private:
  std::vector<Word> words_;
};

}  // namespace antihorn
