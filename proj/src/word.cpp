#include "fgkit/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace fgkit {

namespace {

// Caps a single atom or power expansion; anything larger is a malformed input.
constexpr std::int64_t kMaxExpansion = std::int64_t{1} << 26;

bool valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void push_reduced(std::vector<Letter>& stack, Letter x) {
  if (!stack.empty() && stack.back().cancels(x)) {
    stack.pop_back();
  } else {
    stack.push_back(x);
  }
}

void check_letters(const Alphabet& alphabet, std::span<const Letter> letters) {
  const auto rank = static_cast<int>(alphabet.rank());
  for (const Letter& x : letters) {
    if (x.gen < 1 || x.gen > rank || (x.sign != 1 && x.sign != -1)) {
      throw std::out_of_range("letter outside alphabet of rank " + std::to_string(rank));
    }
  }
}

void require_same(const Word& a, const Word& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet())) {
    throw AlphabetMismatch("words are over different alphabets");
  }
}

// Optional sign followed by one or more decimal digits.
bool parse_exponent(std::string_view text, std::int64_t& value) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return false;
  }
  std::int64_t magnitude = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), magnitude);
  if (ec != std::errc{} || end != text.data() + text.size()) return false;
  value = negative ? -magnitude : magnitude;
  return true;
}

std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = s[(i + k) % n];
    const Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

std::vector<Letter> rotated(std::span<const Letter> s, std::size_t start) {
  std::vector<Letter> out;
  out.reserve(s.size());
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(start), s.end());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(start));
  return out;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet rank must be at least 1");
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw std::invalid_argument("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
  }
}

std::shared_ptr<const Alphabet> Alphabet::numbered(std::size_t rank, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (std::size_t k = 1; k <= rank; ++k) names.push_back(std::string(prefix) + std::to_string(k));
  return make(std::move(names));
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

int Alphabet::index_of(std::string_view name) const noexcept {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return static_cast<int>(k + 1);
  }
  return 0;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Word::Word(AlphabetPtr alphabet, std::span<const Letter> letters) : alphabet_(std::move(alphabet)) {
  check_letters(*alphabet_, letters);
  letters_.reserve(letters.size());
  for (Letter x : letters) push_reduced(letters_, x);
}

bool Word::operator==(const Word& other) const noexcept {
  return letters_ == other.letters_ && same_alphabet(alphabet_, other.alphabet_);
}

CyclicWord::CyclicWord(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  check_letters(*alphabet_, letters_);
  for (std::size_t k = 1; k < letters_.size(); ++k) {
    if (letters_[k - 1].cancels(letters_[k])) throw std::invalid_argument("cyclic word is not reduced");
  }
  if (letters_.size() > 1 && letters_.front().cancels(letters_.back())) {
    throw std::invalid_argument("cyclic word is not cyclically reduced");
  }
}

bool CyclicWord::operator==(const CyclicWord& other) const noexcept {
  return letters_ == other.letters_ && same_alphabet(alphabet_, other.alphabet_);
}

Word identity_word(const AlphabetPtr& alphabet) { return Word(alphabet); }

Word generator_word(const AlphabetPtr& alphabet, int gen, int exponent) {
  const Letter x{gen, exponent < 0 ? -1 : 1};
  std::vector<Letter> letters(static_cast<std::size_t>(exponent < 0 ? -std::int64_t{exponent} : exponent), x);
  return Word(alphabet, letters);
}

Word reduce(const AlphabetPtr& alphabet, std::span<const Letter> letters) { return Word(alphabet, letters); }

Word concat(const Word& a, const Word& b) {
  require_same(a, b);
  auto la = a.letters();
  auto lb = b.letters();
  // Cancellation only happens across the junction.
  std::size_t cut = 0;
  while (cut < la.size() && cut < lb.size() && la[la.size() - 1 - cut].cancels(lb[cut])) ++cut;
  std::vector<Letter> out;
  out.reserve(la.size() + lb.size() - 2 * cut);
  out.insert(out.end(), la.begin(), la.end() - static_cast<std::ptrdiff_t>(cut));
  out.insert(out.end(), lb.begin() + static_cast<std::ptrdiff_t>(cut), lb.end());
  return Word(a.alphabet(), out);
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(w.alphabet(), out);
}

Word power(const Word& w, std::int64_t n) {
  if (n == 0 || w.empty()) return Word(w.alphabet());
  if (n < 0) {
    if (n == std::numeric_limits<std::int64_t>::min()) throw std::length_error("power result too long");
    return power(invert(w), -n);
  }
  // w = c u c^-1 with u cyclically reduced, so w^n = c u^n c^-1 without
  // internal cancellation.
  const auto [core, conj] = cyclic_reduce(w);
  const auto body = core.letters();
  if (static_cast<std::int64_t>(body.size()) > kMaxExpansion / n) {
    throw std::length_error("power result too long");
  }
  std::vector<Letter> out;
  out.reserve(2 * conj.size() + body.size() * static_cast<std::size_t>(n));
  out.insert(out.end(), conj.letters().begin(), conj.letters().end());
  for (std::int64_t k = 0; k < n; ++k) out.insert(out.end(), body.begin(), body.end());
  for (auto it = conj.letters().rbegin(); it != conj.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(w.alphabet(), out);
}

CyclicReduction cyclic_reduce(const Word& w) {
  auto s = w.letters();
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo].cancels(s[hi - 1])) {
    ++lo;
    --hi;
  }
  return CyclicReduction{
      CyclicWord(w.alphabet(), std::vector<Letter>(s.begin() + static_cast<std::ptrdiff_t>(lo),
                                                   s.begin() + static_cast<std::ptrdiff_t>(hi))),
      Word(w.alphabet(), s.first(lo))};
}

bool lex_less(std::span<const Letter> a, std::span<const Letter> b) noexcept {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

CyclicWord canonical_class(const Word& w, Orientation orientation) {
  const CyclicWord core = cyclic_reduce(w).core;
  auto s = core.letters();
  std::vector<Letter> best = rotated(s, least_rotation(s));
  if (orientation == Orientation::unoriented) {
    std::vector<Letter> inv;
    inv.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) inv.push_back(it->inverse());
    std::vector<Letter> alt = rotated(inv, least_rotation(inv));
    if (lex_less(alt, best)) best = std::move(alt);
  }
  return CyclicWord(w.alphabet(), std::move(best));
}

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  std::vector<std::string_view> atoms;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) atoms.push_back(text.substr(start, pos - start));
  }
  if (atoms.empty()) throw ParseError("empty word text (use 1 for the identity)", "");
  if (atoms.size() == 1 && atoms.front() == "1") return Word(alphabet);

  std::vector<Letter> letters;
  std::int64_t budget = kMaxExpansion;
  for (std::string_view atom : atoms) {
    const auto caret = atom.find('^');
    const std::string_view name = atom.substr(0, caret);
    if (!valid_name(name)) throw ParseError("malformed atom '" + std::string(atom) + "'", std::string(atom));
    const int gen = alphabet->index_of(name);
    if (gen == 0) throw ParseError("unknown generator '" + std::string(name) + "'", std::string(atom));
    std::int64_t exponent = 1;
    if (caret != std::string_view::npos && !parse_exponent(atom.substr(caret + 1), exponent)) {
      throw ParseError("malformed exponent in '" + std::string(atom) + "'", std::string(atom));
    }
    const std::int64_t count = exponent < 0 ? -exponent : exponent;
    if (count > budget) throw ParseError("exponent too large in '" + std::string(atom) + "'", std::string(atom));
    budget -= count;
    const Letter x{gen, exponent < 0 ? -1 : 1};
    for (std::int64_t k = 0; k < count; ++k) push_reduced(letters, x);
  }
  return Word(alphabet, letters);
}

std::string render_letters(const Alphabet& alphabet, std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::ostringstream out;
  std::size_t k = 0;
  bool first = true;
  while (k < letters.size()) {
    const int gen = letters[k].gen;
    std::int64_t run = 0;
    // Maximal run of one generator; in a reduced word the signs agree.
    while (k < letters.size() && letters[k].gen == gen && (run == 0 || (letters[k].sign > 0) == (run > 0))) {
      run += letters[k].sign;
      ++k;
    }
    if (!first) out << ' ';
    first = false;
    out << alphabet.name(gen);
    if (run != 1) out << '^' << run;
  }
  return out.str();
}

std::string render_word(const Word& w) { return render_letters(*w.alphabet(), w.letters()); }

}  // namespace fgkit
