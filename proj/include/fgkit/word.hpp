#ifndef FGKIT_WORD_HPP
#define FGKIT_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fgkit {

/// Thrown when word text does not match the grammar. `token()` is the
/// offending atom as it appeared in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Raised when two operands live over different alphabets.
class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered set of free generator names. Generator indices are 1-based.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// prefix1 .. prefixN
  static std::shared_ptr<const Alphabet> numbered(std::size_t rank, std::string_view prefix);
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names);

  std::size_t rank() const noexcept { return names_.size(); }
  const std::string& name(int gen) const { return names_.at(static_cast<std::size_t>(gen - 1)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// 1-based index, or 0 when unknown.
  int index_of(std::string_view name) const noexcept;

  bool operator==(const Alphabet& other) const noexcept { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) noexcept;

/// One signed generator occurrence.
struct Letter {
  int gen = 1;
  int sign = 1;

  constexpr Letter inverse() const noexcept { return {gen, -sign}; }
  constexpr bool cancels(Letter other) const noexcept { return gen == other.gen && sign == -other.sign; }
  /// Position in the total letter order: generator ascending, then +1 before -1.
  constexpr int key() const noexcept { return 2 * (gen - 1) + (sign < 0 ? 1 : 0); }
  static constexpr Letter from_key(int key) noexcept { return {key / 2 + 1, (key % 2) ? -1 : 1}; }

  constexpr bool operator==(const Letter&) const noexcept = default;
  constexpr std::strong_ordering operator<=>(const Letter& other) const noexcept {
    return key() <=> other.key();
  }
};

/// A freely reduced word. The empty word is the identity.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  /// Reduces `letters`; every generator index must lie in [1, rank].
  Word(AlphabetPtr alphabet, std::span<const Letter> letters);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  bool operator==(const Word& other) const noexcept;

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

/// Cyclically reduced word; rotations denote the same conjugacy class.
class CyclicWord {
 public:
  explicit CyclicWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  /// Throws std::invalid_argument unless `letters` is cyclically reduced.
  CyclicWord(AlphabetPtr alphabet, std::vector<Letter> letters);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Word to_word() const { return Word(alphabet_, letters_); }

  /// Sequence equality; canonicalize first to compare classes.
  bool operator==(const CyclicWord& other) const noexcept;

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

struct CyclicReduction {
  CyclicWord core;
  Word conjugator;
};

enum class Orientation { oriented, unoriented };

Word identity_word(const AlphabetPtr& alphabet);
Word generator_word(const AlphabetPtr& alphabet, int gen, int exponent = 1);

Word reduce(const AlphabetPtr& alphabet, std::span<const Letter> letters);
Word concat(const Word& a, const Word& b);
Word invert(const Word& w);
Word power(const Word& w, std::int64_t n);

/// w = conjugator * core * conjugator^-1.
CyclicReduction cyclic_reduce(const Word& w);

/// Least rotation of the cyclic core (and, unoriented, of its inverse).
CyclicWord canonical_class(const Word& w, Orientation orientation);

bool lex_less(std::span<const Letter> a, std::span<const Letter> b) noexcept;

Word parse_word(std::string_view text, const AlphabetPtr& alphabet);
std::string render_word(const Word& w);
std::string render_letters(const Alphabet& alphabet, std::span<const Letter> letters);

/// Product of several words, left to right.
template <typename... Ws>
Word product(const Word& first, const Ws&... rest) {
  Word out = first;
  ((out = concat(out, rest)), ...);
  return out;
}

}  // namespace fgkit

#endif  // FGKIT_WORD_HPP
