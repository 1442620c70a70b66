#include "fgkit/stallings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

namespace fgkit {

namespace {

struct HalfEdge {
  int key;  // letter read when leaving along this half
  int to;
};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  /// Returns {survivor, absorbed}.
  std::pair<int, int> unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return {a, b};
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace

SubgroupGraph SubgroupGraph::wedge(std::span<const Word> generators, AlphabetPtr codomain) {
  int vertices = 1;
  std::vector<Edge> edges;
  for (const Word& w : generators) {
    if (!same_alphabet(w.alphabet(), codomain)) throw AlphabetMismatch("generator is not over the codomain");
    const auto letters = w.letters();
    int prev = 0;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const int next = (k + 1 == letters.size()) ? 0 : vertices++;
      const Letter x = letters[k];
      if (x.sign > 0) {
        edges.push_back({prev, x.gen, next});
      } else {
        edges.push_back({next, x.gen, prev});
      }
      prev = next;
    }
  }
  return SubgroupGraph(std::move(codomain), vertices, std::move(edges));
}

std::optional<int> SubgroupGraph::follow(int v, Letter x) const {
  if (!folded_) throw NotFolded();
  const int t = transitions_[static_cast<std::size_t>(v) * 2 * codomain_->rank() + x.key()];
  if (t < 0) return std::nullopt;
  return t;
}

std::string SubgroupGraph::dump() const {
  std::ostringstream out;
  out << base() << '\n';
  for (const Edge& e : edges_) out << e.from << ' ' << codomain_->name(e.gen) << ' ' << e.to << '\n';
  return out.str();
}

bool SubgroupGraph::operator==(const SubgroupGraph& other) const {
  return folded_ == other.folded_ && vertex_count_ == other.vertex_count_ && edges_ == other.edges_ &&
         same_alphabet(codomain_, other.codomain_);
}

SubgroupGraph fold(const SubgroupGraph& g, std::optional<std::uint64_t> order_seed) {
  const int n = g.vertex_count();
  const int keys = 2 * static_cast<int>(g.codomain()->rank());

  std::vector<std::vector<HalfEdge>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    const int out_key = Letter{e.gen, 1}.key();
    adj[e.from].push_back({out_key, e.to});
    adj[e.to].push_back({out_key + 1, e.from});
  }

  std::deque<int> work(static_cast<std::size_t>(n));
  std::iota(work.begin(), work.end(), 0);
  std::mt19937_64 rng(order_seed.value_or(0));
  if (order_seed) {
    std::shuffle(work.begin(), work.end(), rng);
    for (auto& list : adj) std::shuffle(list.begin(), list.end(), rng);
  }

  DisjointSets sets(n);
  std::vector<int> slot(static_cast<std::size_t>(keys));
  while (!work.empty()) {
    const int v = sets.find(work.front());
    work.pop_front();

    std::fill(slot.begin(), slot.end(), -1);
    std::vector<HalfEdge> kept;
    bool merged = false;
    for (const HalfEdge& h : adj[v]) {
      const int t = sets.find(h.to);
      int& seen = slot[h.key];
      if (seen < 0) {
        seen = t;
        kept.push_back({h.key, t});
      } else if (sets.find(seen) != t) {
        // Two edges with one label leave v: identify their endpoints.
        const auto [keep, gone] = sets.unite(seen, t);
        auto& into = adj[keep];
        auto& from = adj[gone];
        into.insert(into.end(), from.begin(), from.end());
        from.clear();
        from.shrink_to_fit();
        work.push_back(keep);
        merged = true;
        break;
      }
    }
    if (merged) {
      work.push_front(sets.find(v));
      continue;
    }
    adj[v] = std::move(kept);
  }

  // Transition table over representatives, then renumber breadth first.
  std::vector<int> table(static_cast<std::size_t>(n) * keys, -1);
  for (int v = 0; v < n; ++v) {
    const int r = sets.find(v);
    for (const HalfEdge& h : adj[v]) table[static_cast<std::size_t>(r) * keys + h.key] = sets.find(h.to);
  }
  std::vector<int> number(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  const int root = sets.find(0);
  number[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    for (int k = 0; k < keys; ++k) {
      const int t = table[static_cast<std::size_t>(v) * keys + k];
      if (t >= 0 && number[t] < 0) {
        number[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }

  const int count = static_cast<int>(order.size());
  std::vector<int> transitions(static_cast<std::size_t>(count) * keys, -1);
  std::vector<Edge> edges;
  for (int nv = 0; nv < count; ++nv) {
    const int v = order[nv];
    for (int k = 0; k < keys; ++k) {
      const int t = table[static_cast<std::size_t>(v) * keys + k];
      if (t < 0) continue;
      transitions[static_cast<std::size_t>(nv) * keys + k] = number[t];
      if (k % 2 == 0) edges.push_back({nv, k / 2 + 1, number[t]});
    }
  }

  SubgroupGraph out(g.codomain(), count, std::move(edges));
  out.folded_ = true;
  out.transitions_ = std::move(transitions);
  return out;
}

SubgroupGraph build_subgroup_graph(std::span<const Word> generators, const AlphabetPtr& codomain) {
  return fold(SubgroupGraph::wedge(generators, codomain));
}

std::size_t graph_rank(const SubgroupGraph& g) {
  if (!g.folded()) throw NotFolded();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> neighbours(n);
  for (const Edge& e : g.edges()) {
    ++degree[e.from];
    ++degree[e.to];
    neighbours[e.from].push_back(e.to);
    neighbours[e.to].push_back(e.from);
  }
  // Trim hanging trees; the base is never removed.
  std::vector<bool> removed(n, false);
  std::vector<int> stack;
  for (std::size_t v = 1; v < n; ++v) {
    if (degree[v] == 1) stack.push_back(static_cast<int>(v));
  }
  std::size_t vertices = n;
  std::size_t edges = g.edges().size();
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (removed[v] || degree[v] != 1) continue;
    removed[v] = true;
    --vertices;
    --edges;
    degree[v] = 0;
    for (int u : neighbours[v]) {
      if (removed[u]) continue;
      --degree[u];
      if (u != 0 && degree[u] == 1) stack.push_back(u);
    }
  }
  return edges + 1 - vertices;
}

bool contains(const SubgroupGraph& g, const Word& w) {
  if (!g.folded()) throw NotFolded();
  if (!same_alphabet(g.codomain(), w.alphabet())) throw AlphabetMismatch("word is not over the graph alphabet");
  int v = g.base();
  for (const Letter x : w.letters()) {
    const auto next = g.follow(v, x);
    if (!next) return false;
    v = *next;
  }
  return v == g.base();
}

InjectivityCertificate is_injective(const Homomorphism& h) {
  const SubgroupGraph graph = build_subgroup_graph(h.images(), h.codomain());
  const std::size_t rank = graph_rank(graph);
  return {rank == h.domain()->rank(), rank, h.domain()->rank()};
}

}  // namespace fgkit
