#ifndef FGKIT_SURFACE_FAMILY_HPP
#define FGKIT_SURFACE_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgkit/homomorphism.hpp"
#include "fgkit/word.hpp"

namespace fgkit {

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Genus g (even, >= 2) and winding parameter l (>= 3) of one surface map.
struct FamilyParams {
  int g = 2;
  int l = 3;

  /// Throws InvalidParams with a user-facing message.
  static FamilyParams make(int g, int l);
  void validate() const;
  bool operator==(const FamilyParams&) const = default;
  auto operator<=>(const FamilyParams&) const = default;
};

/// y1, y2, y3 (one shared instance).
const AlphabetPtr& handlebody_alphabet();
/// x1 .. x{2g}
AlphabetPtr surface_alphabet(int g);

struct ConnectorWords {
  Word w1;  // y1 y2 y3
  Word w2;  // y3^-3 y2^-l y1^3
};

ConnectorWords connector_words(int l);

/// Images of x1 .. x{2g}, each obtained from its predecessor by the
/// conjugation recursion. This is the defining construction.
std::vector<Word> surface_images_recursive(const FamilyParams& p);

/// Images of x1 .. x{2g} from the closed forms in the connector words:
///   x{4i+1} = (w1^-1 w2)^i y3^3 (w1 w2^-1)^i
///   x{4i+2} = y1^3 x{4i+1} y1
///   x{4i+3} = w2 (w1^-1 w2)^i y3^3 (w1 w2^-1)^i w1
///   x{4i+4} = y1^-1 x{4i+3} y1^-3
std::vector<Word> surface_images_closed(const FamilyParams& p);

Homomorphism surface_map(const FamilyParams& p);

/// The four shuffle identities between powers of w1 w2^-1 and w1^-1 w2.
enum class ShuffleBranch {
  lead_w1_i_gt_j,  // (w1 w2^-1)^j w1 (w1^-1 w2)^i = w2 (w1^-1 w2)^(i-j-1)
  lead_w1_i_le_j,  // (w1 w2^-1)^j w1 (w1^-1 w2)^i = (w1 w2^-1)^(j-i) w1
  lead_w2_i_ge_j,  // (w1 w2^-1)^j w2 (w1^-1 w2)^i = w2 (w1^-1 w2)^(i-j)
  lead_w2_i_lt_j,  // (w1 w2^-1)^j w2 (w1^-1 w2)^i = (w1 w2^-1)^(j-i-1) w1
};

std::string to_string(ShuffleBranch b);

struct ShuffleFailure {
  ShuffleBranch branch;
  int i;
  int j;
  int l;
};

/// First (branch, i, j) in row-major order where an identity fails, if any.
std::optional<ShuffleFailure> find_shuffle_failure(int i_max, int j_max, int l);
bool check_shuffle_identities(int i_max, int j_max, int l);

/// Boundary word of the surface, length 4g:
///   x1 x3^-1 x5 ... x{2g-1}^-1 | inverse signs | x{2g}^-1 x{2g-2} ... x2 | inverse signs
Word boundary_word(int g);

struct SlopeCheck {
  std::vector<int> l_values;
  std::vector<CyclicWord> classes;  // canonical class per l, same order
  bool pairwise_distinct = false;
  bool all_nontrivial = false;
  bool ok() const noexcept { return pairwise_distinct && all_nontrivial; }
};

/// Canonical classes of the boundary image for each l; checks they are
/// nonempty and pairwise distinct.
SlopeCheck slope_distinctness(int g, std::span<const int> l_values, Orientation orientation);

struct BlockLetterCheck {
  bool ok = true;
  std::size_t words_checked = 0;
  std::optional<Word> counterexample;  // over the surface alphabet
};

/// Images of nontrivial words in the even generators start and end with
/// y1^(+-1); images of nontrivial words in the odd generators start and
/// end with a y2 or y3 letter. Checks every word up to `exhaustive_length`
/// and `samples` random words per parity of length 1..`sample_length`.
BlockLetterCheck check_block_letters(const FamilyParams& p, std::uint64_t seed, std::size_t samples = 200,
                                     std::size_t sample_length = 8, std::size_t exhaustive_length = 3);

/// Longest maximal run of y2 letters in the cyclic core of the boundary image.
std::size_t longest_y2_run(const FamilyParams& p);

}  // namespace fgkit

#endif  // FGKIT_SURFACE_FAMILY_HPP
