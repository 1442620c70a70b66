#include "fgkit/homomorphism.hpp"

#include <random>

namespace fgkit {

Homomorphism::Homomorphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_->rank()) {
    throw std::invalid_argument("homomorphism needs one image per domain generator (" +
                                std::to_string(domain_->rank()) + "), got " + std::to_string(images_.size()));
  }
  for (const Word& w : images_) {
    if (!same_alphabet(w.alphabet(), codomain_)) throw AlphabetMismatch("image word is not over the codomain");
  }
}

Homomorphism Homomorphism::identity(const AlphabetPtr& alphabet) {
  std::vector<Word> images;
  for (int k = 1; k <= static_cast<int>(alphabet->rank()); ++k) images.push_back(generator_word(alphabet, k));
  return Homomorphism(alphabet, alphabet, std::move(images));
}

bool Homomorphism::operator==(const Homomorphism& other) const noexcept {
  return same_alphabet(domain_, other.domain_) && same_alphabet(codomain_, other.codomain_) &&
         images_ == other.images_;
}

Word apply(const Homomorphism& h, const Word& w) {
  if (!same_alphabet(w.alphabet(), h.domain())) throw AlphabetMismatch("word is not over the homomorphism domain");
  std::vector<Letter> out;
  for (const Letter x : w.letters()) {
    const auto img = h.image(x.gen).letters();
    if (x.sign > 0) {
      for (const Letter y : img) {
        if (!out.empty() && out.back().cancels(y)) out.pop_back(); else out.push_back(y);
      }
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) {
        const Letter y = it->inverse();
        if (!out.empty() && out.back().cancels(y)) out.pop_back(); else out.push_back(y);
      }
    }
  }
  return Word(h.codomain(), out);
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (!same_alphabet(inner.codomain(), outer.domain())) {
    throw AlphabetMismatch("compose: inner codomain differs from outer domain");
  }
  std::vector<Word> images;
  images.reserve(inner.images().size());
  for (const Word& w : inner.images()) images.push_back(apply(outer, w));
  return Homomorphism(inner.domain(), outer.codomain(), std::move(images));
}

Word random_reduced_word(const AlphabetPtr& alphabet, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int choices = 2 * static_cast<int>(alphabet->rank());
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    if (letters.empty()) {
      letters.push_back(Letter::from_key(std::uniform_int_distribution<int>(0, choices - 1)(rng)));
      continue;
    }
    // Skip the key that would cancel the previous letter.
    const int banned = letters.back().inverse().key();
    int key = std::uniform_int_distribution<int>(0, choices - 2)(rng);
    if (key >= banned) ++key;
    letters.push_back(Letter::from_key(key));
  }
  return Word(alphabet, letters);
}

nlohmann::json to_json(const Homomorphism& h) {
  nlohmann::json images = nlohmann::json::object();
  for (int k = 1; k <= static_cast<int>(h.domain()->rank()); ++k) {
    images[h.domain()->name(k)] = render_word(h.image(k));
  }
  return {{"domain", h.domain()->names()}, {"codomain", h.codomain()->names()}, {"images", images}};
}

Homomorphism homomorphism_from_json(const nlohmann::json& j) {
  auto domain = Alphabet::make(j.at("domain").get<std::vector<std::string>>());
  auto codomain = Alphabet::make(j.at("codomain").get<std::vector<std::string>>());
  const auto& images = j.at("images");
  if (!images.is_object() || images.size() != domain->rank()) {
    throw std::invalid_argument("images must map every domain generator exactly once");
  }
  std::vector<Word> words;
  for (const auto& name : domain->names()) {
    words.push_back(parse_word(images.at(name).get<std::string>(), codomain));
  }
  return Homomorphism(std::move(domain), std::move(codomain), std::move(words));
}

}  // namespace fgkit
