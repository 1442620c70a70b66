#include "fgkit/surface_family.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace fgkit {

namespace {

constexpr int Y1 = 1;
constexpr int Y2 = 2;
constexpr int Y3 = 3;

Word y(int gen, int exponent) { return generator_word(handlebody_alphabet(), gen, exponent); }

Word surface_image_at(int k, const std::vector<Word>& images, int l) {
  if (k == 1) return y(Y3, 3);
  const Word& prev = images[static_cast<std::size_t>(k - 2)];
  switch ((k - 1) % 4 + 1) {
    case 1:
      return product(y(Y3, -1), y(Y2, -1), prev, y(Y2, l), y(Y3, 3));
    case 2:
      return product(y(Y1, 3), prev, y(Y1, 1));
    case 3:
      return product(y(Y3, -3), y(Y2, -l), prev, y(Y2, 1), y(Y3, 1));
    default:
      return product(y(Y1, -1), prev, y(Y1, -3));
  }
}

// Generator k of a rank-g sub-alphabet placed at odd (2k-1) or even (2k)
// positions of the surface alphabet.
Word embed_parity(const Word& w, const AlphabetPtr& surface, bool even) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (const Letter x : w.letters()) letters.push_back({even ? 2 * x.gen : 2 * x.gen - 1, x.sign});
  return Word(surface, letters);
}

bool letter_ok(Letter x, bool even) { return even ? x.gen == Y1 : (x.gen == Y2 || x.gen == Y3); }

}  // namespace

FamilyParams FamilyParams::make(int g, int l) {
  FamilyParams p{g, l};
  p.validate();
  return p;
}

void FamilyParams::validate() const {
  if (g < 2) throw InvalidParams("g must be at least 2");
  if (g % 2 != 0) throw InvalidParams("g must be even");
  if (l < 3) throw InvalidParams("l must be >= 3");
}

const AlphabetPtr& handlebody_alphabet() {
  static const AlphabetPtr alphabet = Alphabet::numbered(3, "y");
  return alphabet;
}

AlphabetPtr surface_alphabet(int g) { return Alphabet::numbered(static_cast<std::size_t>(2 * g), "x"); }

ConnectorWords connector_words(int l) {
  if (l < 1) throw InvalidParams("l must be positive");
  return {product(y(Y1, 1), y(Y2, 1), y(Y3, 1)), product(y(Y3, -3), y(Y2, -l), y(Y1, 3))};
}

std::vector<Word> surface_images_recursive(const FamilyParams& p) {
  p.validate();
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(2 * p.g));
  for (int k = 1; k <= 2 * p.g; ++k) images.push_back(surface_image_at(k, images, p.l));
  return images;
}

std::vector<Word> surface_images_closed(const FamilyParams& p) {
  p.validate();
  const auto [w1, w2] = connector_words(p.l);
  const Word left = concat(invert(w1), w2);   // w1^-1 w2
  const Word right = concat(w1, invert(w2));  // w1 w2^-1
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(2 * p.g));
  for (int i = 0; 4 * i < 2 * p.g; ++i) {
    const Word middle = product(power(left, i), y(Y3, 3), power(right, i));
    images.push_back(middle);
    images.push_back(product(y(Y1, 3), middle, y(Y1, 1)));
    images.push_back(product(w2, middle, w1));
    images.push_back(product(y(Y1, -1), w2, middle, w1, y(Y1, -3)));
  }
  images.resize(static_cast<std::size_t>(2 * p.g), Word(handlebody_alphabet()));
  return images;
}

Homomorphism surface_map(const FamilyParams& p) {
  return Homomorphism(surface_alphabet(p.g), handlebody_alphabet(), surface_images_recursive(p));
}

std::string to_string(ShuffleBranch b) {
  switch (b) {
    case ShuffleBranch::lead_w1_i_gt_j: return "w1:i>j";
    case ShuffleBranch::lead_w1_i_le_j: return "w1:i<=j";
    case ShuffleBranch::lead_w2_i_ge_j: return "w2:i>=j";
    case ShuffleBranch::lead_w2_i_lt_j: return "w2:i<j";
  }
  return "?";
}

std::optional<ShuffleFailure> find_shuffle_failure(int i_max, int j_max, int l) {
  if (i_max < 0 || j_max < 0) throw std::invalid_argument("identity bounds must be non-negative");
  const auto [w1, w2] = connector_words(l);
  const Word left = concat(invert(w1), w2);
  const Word right = concat(w1, invert(w2));
  for (int i = 0; i <= i_max; ++i) {
    for (int j = 0; j <= j_max; ++j) {
      const Word lhs_w1 = product(power(right, j), w1, power(left, i));
      const Word rhs_w1 = i > j ? concat(w2, power(left, i - j - 1)) : concat(power(right, j - i), w1);
      if (lhs_w1 != rhs_w1) {
        return ShuffleFailure{i > j ? ShuffleBranch::lead_w1_i_gt_j : ShuffleBranch::lead_w1_i_le_j, i, j, l};
      }
      const Word lhs_w2 = product(power(right, j), w2, power(left, i));
      const Word rhs_w2 = i >= j ? concat(w2, power(left, i - j)) : concat(power(right, j - i - 1), w1);
      if (lhs_w2 != rhs_w2) {
        return ShuffleFailure{i >= j ? ShuffleBranch::lead_w2_i_ge_j : ShuffleBranch::lead_w2_i_lt_j, i, j, l};
      }
    }
  }
  return std::nullopt;
}

bool check_shuffle_identities(int i_max, int j_max, int l) { return !find_shuffle_failure(i_max, j_max, l); }

Word boundary_word(int g) {
  if (g < 2 || g % 2 != 0) throw InvalidParams("g must be even and at least 2");
  std::vector<Letter> odd;
  std::vector<Letter> even;
  for (int k = 0; k < g; ++k) {
    odd.push_back({2 * k + 1, k % 2 == 0 ? 1 : -1});
    even.push_back({2 * (g - k), k % 2 == 0 ? -1 : 1});
  }
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(4 * g));
  for (const auto* block : {&odd, &even}) {
    letters.insert(letters.end(), block->begin(), block->end());
    for (const Letter x : *block) letters.push_back(x.inverse());
  }
  return Word(surface_alphabet(g), letters);
}

SlopeCheck slope_distinctness(int g, std::span<const int> l_values, Orientation orientation) {
  SlopeCheck out;
  out.l_values.assign(l_values.begin(), l_values.end());
  const Word boundary = boundary_word(g);
  out.all_nontrivial = true;
  for (int l : l_values) {
    const Word image = apply(surface_map(FamilyParams::make(g, l)), boundary);
    out.classes.push_back(canonical_class(image, orientation));
    if (out.classes.back().empty()) out.all_nontrivial = false;
  }
  std::set<std::vector<Letter>> seen;
  out.pairwise_distinct = true;
  for (const CyclicWord& c : out.classes) {
    if (!seen.emplace(c.letters().begin(), c.letters().end()).second) out.pairwise_distinct = false;
  }
  return out;
}

BlockLetterCheck check_block_letters(const FamilyParams& p, std::uint64_t seed, std::size_t samples,
                                     std::size_t sample_length, std::size_t exhaustive_length) {
  p.validate();
  const Homomorphism phi = surface_map(p);
  const AlphabetPtr surface = phi.domain();
  const AlphabetPtr half = Alphabet::numbered(static_cast<std::size_t>(p.g), "z");
  BlockLetterCheck out;

  auto check = [&](const Word& sub, bool even) {
    const Word u = embed_parity(sub, surface, even);
    const Word image = apply(phi, u);
    ++out.words_checked;
    if (image.empty() || !letter_ok(image.front(), even) || !letter_ok(image.back(), even)) {
      if (out.ok) out.counterexample = u;
      out.ok = false;
    }
  };

  const int keys = 2 * p.g;
  for (const bool even : {true, false}) {
    std::vector<Letter> prefix;
    std::function<void()> extend = [&] {
      if (!prefix.empty()) check(Word(half, prefix), even);
      if (prefix.size() == exhaustive_length) return;
      for (int key = 0; key < keys; ++key) {
        const Letter x = Letter::from_key(key);
        if (!prefix.empty() && prefix.back().cancels(x)) continue;
        prefix.push_back(x);
        extend();
        prefix.pop_back();
      }
    };
    extend();

    std::mt19937_64 rng(seed ^ (even ? 0x9e3779b97f4a7c15ULL : 0ULL));
    std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(sample_length, 1));
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t n = length(rng);
      check(random_reduced_word(half, n, rng()), even);
    }
  }
  return out;
}

std::size_t longest_y2_run(const FamilyParams& p) {
  const Word image = apply(surface_map(p), boundary_word(p.g));
  const CyclicWord core = cyclic_reduce(image).core;
  const auto s = core.letters();
  const std::size_t n = s.size();
  if (n == 0) return 0;
  // Start scanning just after a non-y2 letter so no run wraps.
  std::size_t start = 0;
  while (start < n && s[start].gen == Y2) ++start;
  if (start == n) return n;
  std::size_t best = 0, run = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const Letter x = s[(start + k) % n];
    run = x.gen == Y2 ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

}  // namespace fgkit
