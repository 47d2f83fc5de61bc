#include "hpd/tree.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>

#include "hpd/errors.hpp"

namespace hpd {

Vertex::Vertex(std::vector<int> generators) : generators_(std::move(generators)) {
  for (int g : generators_) {
    if (g < 1) throw InputError("vertex generator indices must be >= 1");
  }
}

Vertex Vertex::child(int generator) const {
  if (generator < 1) throw InputError("vertex generator indices must be >= 1");
  Vertex out = *this;
  out.generators_.push_back(generator);
  return out;
}

Vertex Vertex::parent() const {
  if (is_root()) throw InputError("the root has no parent");
  Vertex out = *this;
  out.generators_.pop_back();
  return out;
}

bool Vertex::precedes(const Vertex& other) const {
  if (length() > other.length()) return false;
  return std::equal(generators_.begin(), generators_.end(), other.generators_.begin());
}

std::string Vertex::label() const {
  if (is_root()) return "e";
  std::string out;
  for (int g : generators_) {
    out += 's';
    out += std::to_string(g);
  }
  return out;
}

Vertex Vertex::parse(std::string_view label) {
  if (label == "e") return Vertex{};
  std::vector<int> gens;
  std::size_t pos = 0;
  while (pos < label.size()) {
    if (label[pos] != 's') throw InputError("bad vertex label '" + std::string(label) + "'");
    ++pos;
    int value = 0;
    auto [end, ec] = std::from_chars(label.data() + pos, label.data() + label.size(), value);
    if (ec != std::errc{} || end == label.data() + pos) {
      throw InputError("bad vertex label '" + std::string(label) + "'");
    }
    pos = static_cast<std::size_t>(end - label.data());
    gens.push_back(value);
  }
  if (gens.empty()) throw InputError("empty vertex label");
  return Vertex(std::move(gens));
}

Relation relation(const Vertex& a, const Vertex& b) {
  Relation rel;
  if (a.precedes(b)) {
    rel.comparable = true;
    rel.distance = static_cast<int>(b.length() - a.length());
    rel.ancestor = Ancestor::first;
  } else if (b.precedes(a)) {
    rel.comparable = true;
    rel.distance = static_cast<int>(a.length() - b.length());
    rel.ancestor = Ancestor::second;
  }
  return rel;
}

std::size_t homogeneous_vertex_count(int q, int depth, std::size_t cap) {
  if (q < 2) throw InputError("arity q must be >= 2");
  if (depth < 0) throw InputError("depth must be >= 0");
  std::size_t total = 0;
  std::size_t level = 1;
  for (int k = 0; k <= depth; ++k) {
    total += level;
    if (total > cap) {
      throw CapacityError("tree truncation q=" + std::to_string(q) + " depth=" +
                          std::to_string(depth) + " exceeds the vertex cap " + std::to_string(cap));
    }
    if (k < depth) {
      if (level > cap / static_cast<std::size_t>(q)) {
        throw CapacityError("tree truncation exceeds the vertex cap " + std::to_string(cap));
      }
      level *= static_cast<std::size_t>(q);
    }
  }
  return total;
}

TreeTruncation::TreeTruncation(int q, int depth, std::size_t cap) : q_(q), depth_(depth) {
  const std::size_t total = homogeneous_vertex_count(q, depth, cap);
  vertices_.reserve(total);
  level_offsets_.reserve(static_cast<std::size_t>(depth) + 2);
  vertices_.emplace_back();
  level_offsets_.push_back(0);
  level_offsets_.push_back(1);
  for (int k = 1; k <= depth; ++k) {
    const std::size_t begin = level_offsets_[static_cast<std::size_t>(k) - 1];
    const std::size_t end = level_offsets_[static_cast<std::size_t>(k)];
    for (std::size_t i = begin; i < end; ++i) {
      for (int g = 1; g <= q; ++g) vertices_.push_back(vertices_[i].child(g));
    }
    level_offsets_.push_back(vertices_.size());
  }
}

std::optional<std::size_t> TreeTruncation::index_of(const Vertex& v) const {
  if (v.length() > static_cast<std::size_t>(depth_)) return std::nullopt;
  std::size_t within = 0;
  for (int g : v.generators()) {
    if (g > q_) return std::nullopt;
    within = within * static_cast<std::size_t>(q_) + static_cast<std::size_t>(g - 1);
  }
  return level_offsets_[v.length()] + within;
}

std::size_t TreeTruncation::level_begin(int level) const {
  if (level < 0 || level > depth_) throw InputError("level outside the truncation");
  return level_offsets_[static_cast<std::size_t>(level)];
}

std::size_t TreeTruncation::level_size(int level) const {
  if (level < 0 || level > depth_) throw InputError("level outside the truncation");
  return level_offsets_[static_cast<std::size_t>(level) + 1] -
         level_offsets_[static_cast<std::size_t>(level)];
}

std::vector<std::string> TreeTruncation::labels() const {
  std::vector<std::string> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.label());
  return out;
}

TreeTruncation truncate(int q, int depth, std::size_t cap) { return TreeTruncation(q, depth, cap); }

GeneralRootedTree GeneralRootedTree::from_parents(std::span<const std::int64_t> parents) {
  const std::size_t n = parents.size();
  if (n == 0) throw InputError("parent array is empty");
  GeneralRootedTree tree;
  tree.parent_.assign(parents.begin(), parents.end());

  std::optional<std::size_t> root;
  std::vector<std::size_t> child_count(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const std::int64_t p = parents[v];
    if (p == -1 || p == static_cast<std::int64_t>(v)) {
      if (root) throw InputError("parent array has more than one root");
      root = v;
      tree.parent_[v] = -1;
      continue;
    }
    if (p < 0 || p >= static_cast<std::int64_t>(n)) {
      throw InputError("parent index " + std::to_string(p) + " out of range at vertex " +
                       std::to_string(v));
    }
    ++child_count[static_cast<std::size_t>(p)];
  }
  if (!root) throw InputError("parent array has no root");
  tree.root_ = *root;

  tree.child_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) tree.child_offsets_[v + 1] = tree.child_offsets_[v] + child_count[v];
  tree.child_list_.assign(tree.child_offsets_[n], 0);
  std::vector<std::size_t> fill(tree.child_offsets_.begin(), tree.child_offsets_.end() - 1);
  for (std::size_t v = 0; v < n; ++v) {
    const std::int64_t p = tree.parent_[v];
    if (p >= 0) tree.child_list_[fill[static_cast<std::size_t>(p)]++] = v;
  }

  // Reachability from the root rules out cycles among the non-root vertices.
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> queue{tree.root_};
  seen[tree.root_] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t c : tree.children(v)) {
      if (!seen[c]) {
        seen[c] = 1;
        ++reached;
        queue.push_back(c);
      }
    }
  }
  if (reached != n) throw InputError("parent array contains a cycle or unreachable vertices");
  return tree;
}

GeneralRootedTree GeneralRootedTree::homogeneous(int q, int depth, std::size_t cap) {
  const std::size_t total = homogeneous_vertex_count(q, depth, cap);
  std::vector<std::int64_t> parents(total);
  parents[0] = -1;
  // Breadth-first numbering: the children of i are q*i+1 .. q*i+q.
  for (std::size_t v = 1; v < total; ++v) {
    parents[v] = static_cast<std::int64_t>((v - 1) / static_cast<std::size_t>(q));
  }
  return from_parents(parents);
}

GeneralRootedTree GeneralRootedTree::tq1(int q, int n) {
  if (q < 2) throw InputError("arity q must be >= 2");
  if (n < 1) throw InputError("ray length n must be >= 1");
  std::vector<std::int64_t> parents;
  parents.reserve(1 + static_cast<std::size_t>(q) * static_cast<std::size_t>(n));
  parents.push_back(-1);
  for (int i = 0; i < q; ++i) {
    std::int64_t prev = 0;
    for (int k = 1; k <= n; ++k) {
      parents.push_back(prev);
      prev = static_cast<std::int64_t>(parents.size()) - 1;
    }
  }
  return from_parents(parents);
}

std::optional<std::size_t> GeneralRootedTree::parent(std::size_t v) const {
  const std::int64_t p = parent_.at(v);
  if (p < 0) return std::nullopt;
  return static_cast<std::size_t>(p);
}

std::span<const std::size_t> GeneralRootedTree::children(std::size_t v) const {
  return std::span<const std::size_t>(child_list_).subspan(child_offsets_.at(v),
                                                           child_offsets_[v + 1] - child_offsets_[v]);
}

std::size_t delta_n(const GeneralRootedTree& tree, int n) {
  if (n < 1) throw InputError("delta_n requires n >= 1");
  // counts[v] = number of descendants of v at distance k, advanced one level per pass.
  std::vector<std::size_t> counts(tree.size(), 1);
  std::vector<std::size_t> next(tree.size());
  for (int k = 1; k <= n; ++k) {
    for (std::size_t v = 0; v < tree.size(); ++v) {
      std::size_t sum = 0;
      for (std::size_t c : tree.children(v)) sum += counts[c];
      next[v] = sum;
    }
    counts.swap(next);
  }
  return *std::max_element(counts.begin(), counts.end());
}

std::vector<Vertex> tq1_truncation(int q, int n) {
  if (q < 2) throw InputError("arity q must be >= 2");
  if (n < 1) throw InputError("ray length n must be >= 1");
  std::vector<Vertex> out;
  out.reserve(1 + static_cast<std::size_t>(q) * static_cast<std::size_t>(n));
  out.emplace_back();
  for (int i = 1; i <= q; ++i) {
    Vertex v;
    for (int k = 1; k <= n; ++k) {
      v = v.child(i);
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace hpd
