#include "antihorn/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace antihorn {

Word Word::fromBits(std::uint64_t bits, int length) {
  if (length < 0 || length > 63)
    throw std::invalid_argument("Word::fromBits: length out of range");
  if (length < 64 && (bits >> length) != 0)
    throw std::invalid_argument("Word::fromBits: bits wider than length");
  Word w;
  w.bits_ = bits;
  w.length_ = static_cast<std::int16_t>(length);
  return w;
}

Word Word::parse(std::string_view text) {
  if (text == "_") return Word{};
  if (text.empty()) throw std::invalid_argument("Word::parse: empty token (use \"_\")");
  if (text.size() > kMaxLength) throw std::invalid_argument("Word::parse: word too long");
  Word w;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("Word::parse: bad symbol in \"" + std::string(text) + "\"");
    w.bits_ = (w.bits_ << 1) | static_cast<unsigned>(c == '1');
    ++w.length_;
  }
  return w;
}

bool Word::bit(int i) const {
  if (i < 0 || i >= length_) throw std::out_of_range("Word::bit: index out of range");
  return static_cast<unsigned>(bits_ >> (length_ - 1 - i)) & 1u;
}

std::string Word::str() const {
  if (length_ == 0) return "_";
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i)
    if (bit(i)) out[static_cast<std::size_t>(i)] = '1';
  return out;
}

std::uint64_t Word::rank() const {
  if (length_ > 62) throw std::domain_error("Word::rank: word too long to rank");
  return ((std::uint64_t{1} << length_) - 1) + static_cast<std::uint64_t>(bits_);
}

Word Word::fromRank(std::uint64_t rank) {
  // Invert rank = 2^len - 1 + bits.
  const int len = std::bit_width(rank + 1) - 1;
  if (len > 62) throw std::domain_error("Word::fromRank: rank too large");
  Word w;
  w.length_ = static_cast<std::int16_t>(len);
  w.bits_ = rank + 1 - (std::uint64_t{1} << len);
  return w;
}

std::uint64_t Word::countUpToLength(int n) {
  if (n < 0) return 0;
  if (n > 62) throw std::domain_error("Word::countUpToLength: length too large");
  return (std::uint64_t{1} << (n + 1)) - 1;
}

void WordBuilder::push(bool symbol) {
  if (word_.length_ >= Word::kMaxLength)
    throw std::length_error("WordBuilder: word exceeds maximum length");
  word_.bits_ = (word_.bits_ << 1) | static_cast<unsigned>(symbol);
  ++word_.length_;
}

void WordBuilder::append(const Word& w) {
  for (int i = 0; i < w.size(); ++i) push(w.bit(i));
}

Word WordBuilder::take() {
  Word out = word_;
  word_ = Word{};
  return out;
}

WordSet::WordSet(std::vector<Word> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool WordSet::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::size_t WordSet::countUpToLength(int n) const {
  // Words are sorted by length first, so the prefix of length <= n is contiguous.
  std::size_t count = 0;
  for (const Word& w : words_) {
    if (w.size() > n) break;
    ++count;
  }
  return count;
}

int WordSet::maxLength() const {
  return words_.empty() ? -1 : words_.back().size();
}

}  // namespace antihorn
