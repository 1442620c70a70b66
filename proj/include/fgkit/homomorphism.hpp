#ifndef FGKIT_HOMOMORPHISM_HPP
#define FGKIT_HOMOMORPHISM_HPP

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "fgkit/word.hpp"

namespace fgkit {

/// A map between free groups, fixed by the image of each domain generator.
class Homomorphism {
 public:
  /// `images[k]` is the image of domain generator k+1; every image must be
  /// over `codomain` and there must be exactly domain->rank() of them.
  Homomorphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images);

  static Homomorphism identity(const AlphabetPtr& alphabet);

  const AlphabetPtr& domain() const noexcept { return domain_; }
  const AlphabetPtr& codomain() const noexcept { return codomain_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(int gen) const { return images_.at(static_cast<std::size_t>(gen - 1)); }

  bool operator==(const Homomorphism& other) const noexcept;

 private:
  AlphabetPtr domain_;
  AlphabetPtr codomain_;
  std::vector<Word> images_;
};

Word apply(const Homomorphism& h, const Word& w);

/// x -> outer(inner(x)).
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

/// Uniform non-backtracking walk of exactly `length` letters. Pure in its
/// arguments: the same (alphabet rank, length, seed) always yields the same word.
Word random_reduced_word(const AlphabetPtr& alphabet, std::size_t length, std::uint64_t seed);

/// {"domain": [names], "codomain": [names], "images": {name: word-text}}
nlohmann::json to_json(const Homomorphism& h);
Homomorphism homomorphism_from_json(const nlohmann::json& j);

}  // namespace fgkit

#endif  // FGKIT_HOMOMORPHISM_HPP
