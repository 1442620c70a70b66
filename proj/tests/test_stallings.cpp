#include "doctest.h"

#include <random>

#include "fgkit/stallings.hpp"
#include "fgkit/surface_family.hpp"
#include "oracles.hpp"

using namespace fgkit;

namespace {

const AlphabetPtr AB = Alphabet::make({"a", "b"});
const AlphabetPtr ABC = Alphabet::make({"a", "b", "c"});

std::vector<Word> words(const std::vector<const char*>& texts, const AlphabetPtr& alphabet = AB) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(parse_word(t, alphabet));
  return out;
}

SubgroupGraph graph_of(const std::vector<const char*>& texts, const AlphabetPtr& alphabet = AB) {
  return build_subgroup_graph(words(texts, alphabet), alphabet);
}

void check_immersion(const SubgroupGraph& g) {
  std::set<std::tuple<int, int, int>> seen;  // (vertex, gen, direction)
  for (const Edge& e : g.edges()) {
    REQUIRE(seen.insert({e.from, e.gen, +1}).second);
    REQUIRE(seen.insert({e.to, e.gen, -1}).second);
  }
}

}  // namespace

TEST_CASE("build_subgroup_graph") {
  const SubgroupGraph a = graph_of({"a"});
  CHECK(a.vertex_count() == 1);
  CHECK(a.edges() == std::vector<Edge>{{0, 1, 0}});
  CHECK(graph_rank(a) == 1);

  const SubgroupGraph a2b = graph_of({"a^2", "b"});
  CHECK(a2b.vertex_count() == 2);
  CHECK(graph_rank(a2b) == 2);

  const SubgroupGraph rose = graph_of({"a", "a b"});
  CHECK(rose.vertex_count() == 1);
  CHECK(graph_rank(rose) == 2);
  CHECK(contains(rose, parse_word("b", AB)));

  const SubgroupGraph empty = build_subgroup_graph({}, AB);
  CHECK(empty.vertex_count() == 1);
  CHECK(empty.edges().empty());
  CHECK(graph_rank(empty) == 0);
  CHECK(contains(empty, Word(AB)));
  CHECK_FALSE(contains(empty, parse_word("a", AB)));

  // Trivial generators contribute nothing.
  CHECK(graph_rank(build_subgroup_graph(words({"1", "a"}), AB)) == 1);
}

TEST_CASE("fold") {
  const SubgroupGraph folded = graph_of({"a b"});
  CHECK(fold(folded) == folded);

  const auto two_loops = SubgroupGraph::wedge(words({"a", "a"}), AB);
  CHECK(two_loops.edges().size() == 2);
  const SubgroupGraph one = fold(two_loops);
  CHECK(one.edges() == std::vector<Edge>{{0, 1, 0}});

  // The wedge has 3 vertices; folding the shared a-edge leaves 2.
  const auto abc_wedge = SubgroupGraph::wedge(words({"a b", "a c"}, ABC), ABC);
  CHECK(abc_wedge.vertex_count() == 3);
  const SubgroupGraph abc = fold(abc_wedge);
  CHECK(abc.vertex_count() == 2);
  CHECK(abc.edges().size() == 3);
  CHECK(graph_rank(abc) == 2);
  CHECK_FALSE(SubgroupGraph::wedge(words({"a"}), AB).folded());
  CHECK_THROWS_AS(graph_rank(SubgroupGraph::wedge(words({"a"}), AB)), NotFolded);
  CHECK_THROWS_AS(contains(SubgroupGraph::wedge(words({"a"}), AB), Word(AB)), NotFolded);
}

TEST_CASE("graph_rank") {
  CHECK(graph_rank(graph_of({"a", "b"})) == 2);
  CHECK(graph_rank(build_subgroup_graph(words({"a", "b", "c"}, ABC), ABC)) == 3);
  // Even-length words: index 2, rank 2(2-1)+1 = 3.
  CHECK(graph_rank(graph_of({"a^2", "a b", "a b^-1"})) == 3);
  CHECK(graph_of({"a^2", "a b", "a b^-1"}).vertex_count() == 2);
  // <a^2, b^2, (ab)^2> also has rank 3 but infinite index (ab is missing).
  CHECK(graph_rank(graph_of({"a^2", "b^2", "a b a b"})) == 3);
  CHECK(graph_of({"a^2", "b^2", "a b a b"}).vertex_count() == 4);
  CHECK_FALSE(contains(graph_of({"a^2", "b^2", "a b a b"}), parse_word("a b", AB)));
  // Hanging trees are trimmed: <a b a^-1> has rank 1.
  CHECK(graph_rank(graph_of({"a b a^-1"})) == 1);
  CHECK(graph_rank(graph_of({"a b a^-1", "a b^2 a^-1"})) == 1);
}

TEST_CASE("Nielsen-Schreier spot checks") {
  // Index-k subgroups of F_n have rank k(n-1)+1.
  CHECK(graph_rank(graph_of({"a^3", "b", "a b a^-1", "a^2 b a^-2"})) == 4);  // k=3, n=2
  CHECK(graph_of({"a^3", "b", "a b a^-1", "a^2 b a^-2"}).vertex_count() == 3);
  CHECK(graph_rank(build_subgroup_graph(words({"a^2", "b", "c", "a b a^-1", "a c a^-1"}, ABC), ABC)) == 5);
}

TEST_CASE("contains") {
  CHECK(contains(graph_of({"a b"}), Word(AB)));
  CHECK_FALSE(contains(graph_of({"a^2"}), parse_word("a", AB)));
  CHECK(contains(graph_of({"a^2", "b"}), parse_word("a^2 b a^-2", AB)));
  CHECK_FALSE(contains(graph_of({"a^2", "b"}), parse_word("a b a^-1", AB)));
  CHECK_THROWS_AS(contains(graph_of({"a"}), parse_word("a", ABC)), AlphabetMismatch);
}

TEST_CASE("dump format") {
  CHECK(graph_of({"a^2", "b"}).dump() == "0\n0 a 1\n0 b 0\n1 a 0\n");
}

TEST_CASE("is_injective") {
  const AlphabetPtr X = Alphabet::make({"x"});
  const AlphabetPtr XY = Alphabet::make({"x", "y"});
  const AlphabetPtr A = Alphabet::make({"a"});
  const auto square = is_injective(Homomorphism(X, A, {parse_word("a^2", A)}));
  CHECK(square.injective);
  CHECK(square.image_rank == 1);
  const auto collapse = is_injective(Homomorphism(XY, A, {parse_word("a", A), parse_word("a", A)}));
  CHECK_FALSE(collapse.injective);
  CHECK(collapse.image_rank == 1);
  CHECK(collapse.domain_rank == 2);
  CHECK_FALSE(is_injective(Homomorphism(XY, AB, {parse_word("a", AB), Word(AB)})).injective);
  // [a, b] and a: rank 2, injective.
  CHECK(is_injective(Homomorphism(XY, AB, {parse_word("a b a^-1 b^-1", AB), parse_word("a", AB)})).injective);

  const auto phi = is_injective(surface_map(FamilyParams::make(2, 3)));
  CHECK(phi.injective);
  CHECK(phi.image_rank == 4);
  CHECK(phi.domain_rank == 4);
}

TEST_CASE("folding is confluent") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    std::vector<Word> gens;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) gens.push_back(random_reduced_word(ABC, 1 + rng() % 7, rng()));
    const SubgroupGraph wedge = SubgroupGraph::wedge(gens, ABC);
    const SubgroupGraph reference = fold(wedge);
    check_immersion(reference);
    for (int s = 0; s < 4; ++s) REQUIRE(fold(wedge, rng()) == reference);
    const auto queries = oracle::all_reduced_words(3, 3);
    const SubgroupGraph other = fold(wedge, rng());
    for (const auto& q : queries) REQUIRE(contains(other, Word(ABC, q)) == contains(reference, Word(ABC, q)));
  }
  // The folded surface-map image graph is the same in any fold order.
  const auto phi = surface_map(FamilyParams::make(4, 5));
  const SubgroupGraph wedge = SubgroupGraph::wedge(phi.images(), phi.codomain());
  CHECK(fold(wedge, 17) == fold(wedge));
}

TEST_CASE("folding preserves the language") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    std::vector<Word> gens;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) gens.push_back(random_reduced_word(AB, 1 + rng() % 6, rng()));
    const SubgroupGraph wedge = SubgroupGraph::wedge(gens, AB);
    const SubgroupGraph folded = fold(wedge);
    for (const Word& g : gens) {
      REQUIRE(contains(folded, g));
      REQUIRE(oracle::reads_loop(wedge, {g.letters().begin(), g.letters().end()}));
    }
    for (int s = 0; s < 20; ++s) {
      std::vector<Letter> raw;
      Word product_word(AB);
      const int len = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < len; ++k) {
        const Word& g = gens[rng() % gens.size()];
        const Word piece = (rng() % 2) ? g : invert(g);
        raw.insert(raw.end(), piece.letters().begin(), piece.letters().end());
        product_word = concat(product_word, piece);
      }
      REQUIRE(oracle::reads_loop(wedge, raw));
      REQUIRE(contains(folded, product_word));
    }
  }
}

TEST_CASE("membership agrees with brute-force enumeration on small instances") {
  // A subset of the exhaustive sweep in the acceptance suite.
  oracle::SmallWordSet scratch;
  const auto queries = oracle::all_reduced_words(2, 6);
  const auto gens = oracle::all_reduced_words(2, 3);
  for (std::size_t i = 1; i < gens.size(); i += 5) {
    for (std::size_t j = i; j < gens.size(); j += 9) {
      const std::vector<oracle::Letters> pair{gens[i], gens[j]};
      const auto expected = oracle::enumerate_membership(pair, oracle::SmallWordSet::kMaxLen, queries, scratch);
      const SubgroupGraph g = build_subgroup_graph(std::vector<Word>{Word(AB, gens[i]), Word(AB, gens[j])}, AB);
      for (std::size_t q = 0; q < queries.size(); ++q) REQUIRE(contains(g, Word(AB, queries[q])) == expected[q]);
    }
  }
}
