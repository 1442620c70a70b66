#ifndef FGKIT_STALLINGS_HPP
#define FGKIT_STALLINGS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgkit/homomorphism.hpp"
#include "fgkit/word.hpp"

namespace fgkit {

class NotFolded : public std::logic_error {
 public:
  NotFolded() : std::logic_error("operation requires a folded subgroup graph") {}
};

/// Directed edge `from --gen--> to`; traversed backwards it reads gen^-1.
struct Edge {
  int from = 0;
  int gen = 1;
  int to = 0;
  bool operator==(const Edge&) const = default;
};

/// Labeled graph with base vertex 0 representing a subgroup of the free
/// group on `codomain`. Folded graphs are numbered canonically (breadth
/// first from the base, letters in the total letter order), so folding one
/// graph in any order produces equal results.
class SubgroupGraph {
 public:
  /// One loop at the base per generator, spelling its word. Not folded.
  static SubgroupGraph wedge(std::span<const Word> generators, AlphabetPtr codomain);

  const AlphabetPtr& codomain() const noexcept { return codomain_; }
  int base() const noexcept { return 0; }
  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool folded() const noexcept { return folded_; }

  /// Target of reading `x` from `v`, or nullopt. Folded graphs only.
  std::optional<int> follow(int v, Letter x) const;

  /// Line 1: base vertex. Then one `<from> <label> <to>` line per edge.
  std::string dump() const;

  bool operator==(const SubgroupGraph& other) const;

 private:
  friend SubgroupGraph fold(const SubgroupGraph& g, std::optional<std::uint64_t> order_seed);

  SubgroupGraph(AlphabetPtr codomain, int vertex_count, std::vector<Edge> edges)
      : codomain_(std::move(codomain)), vertex_count_(vertex_count), edges_(std::move(edges)) {}

  AlphabetPtr codomain_;
  int vertex_count_ = 1;
  std::vector<Edge> edges_;
  bool folded_ = false;
  std::vector<int> transitions_;  // vertex * 2 * rank + letter key, -1 for none
};

/// Identifies equally labeled edges at a vertex until none remain.
/// `order_seed` permutes the processing order; the result does not depend on it.
SubgroupGraph fold(const SubgroupGraph& g, std::optional<std::uint64_t> order_seed = std::nullopt);

SubgroupGraph build_subgroup_graph(std::span<const Word> generators, const AlphabetPtr& codomain);

/// E - V + 1 of the core graph. Throws NotFolded.
std::size_t graph_rank(const SubgroupGraph& g);

/// Whether `w` reads a base-to-base loop. Throws NotFolded / AlphabetMismatch.
bool contains(const SubgroupGraph& g, const Word& w);

struct InjectivityCertificate {
  bool injective = false;
  std::size_t image_rank = 0;
  std::size_t domain_rank = 0;
};

/// Rank of the image subgroup equals the domain rank iff the map is
/// injective (free groups of finite rank are Hopfian).
InjectivityCertificate is_injective(const Homomorphism& h);

}  // namespace fgkit

#endif  // FGKIT_STALLINGS_HPP
