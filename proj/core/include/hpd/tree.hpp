#pragma once

// Rooted-tree combinatorics: words of the free semigroup on q generators
// (the rooted q-homogeneous tree), finite truncations with a breadth-first
// index, and descendant counts on arbitrary finite rooted trees.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hpd {

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

/// A vertex of the rooted q-homogeneous tree, written as a word s_{i1}...s_{in}
/// with every generator index i >= 1. The empty word is the root e.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> generators);

  static Vertex root() { return Vertex{}; }

  std::span<const int> generators() const { return generators_; }
  std::size_t length() const { return generators_.size(); }
  bool is_root() const { return generators_.empty(); }

  Vertex child(int generator) const;
  Vertex parent() const;

  /// True when this word is a prefix of `other` (this vertex precedes `other`).
  bool precedes(const Vertex& other) const;

  /// "e" for the root, otherwise "s1s2s1".
  std::string label() const;
  static Vertex parse(std::string_view label);

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  std::vector<int> generators_;
};

enum class Ancestor { first, second };

struct Relation {
  bool comparable = false;
  int distance = 0;                    // meaningful only when comparable
  Ancestor ancestor = Ancestor::first;  // which argument is the prefix; first when equal
};

/// Comparability and graph distance. Generators are treated as abstract labels,
/// so vertices of different arities can be compared.
Relation relation(const Vertex& a, const Vertex& b);

/// sum_{k=0}^{depth} q^k; throws CapacityError when it exceeds `cap`.
std::size_t homogeneous_vertex_count(int q, int depth, std::size_t cap = kDefaultVertexCap);

/// All vertices of T_q with |word| <= depth, indexed breadth-first. Within a
/// level, words are ordered lexicographically, so index(root) = 0 and the
/// children of a vertex are contiguous.
class TreeTruncation {
 public:
  TreeTruncation(int q, int depth, std::size_t cap = kDefaultVertexCap);

  int arity() const { return q_; }
  int depth() const { return depth_; }
  std::size_t size() const { return vertices_.size(); }

  const Vertex& vertex(std::size_t index) const { return vertices_.at(index); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  std::optional<std::size_t> index_of(const Vertex& v) const;

  std::size_t level_begin(int level) const;
  std::size_t level_size(int level) const;

  std::vector<std::string> labels() const;

 private:
  int q_;
  int depth_;
  std::vector<std::size_t> level_offsets_;
  std::vector<Vertex> vertices_;
};

TreeTruncation truncate(int q, int depth, std::size_t cap = kDefaultVertexCap);

/// A finite rooted tree given by its parent array. Leaves are allowed.
class GeneralRootedTree {
 public:
  /// `parents[v]` is the parent of v; the root is marked by -1 or by itself.
  /// Throws InputError unless there is exactly one root and every vertex is
  /// reachable from it.
  static GeneralRootedTree from_parents(std::span<const std::int64_t> parents);
  static GeneralRootedTree homogeneous(int q, int depth, std::size_t cap = kDefaultVertexCap);
  /// T(q;1) cut after n vertices on each of its q rays.
  static GeneralRootedTree tq1(int q, int n);

  std::size_t size() const { return parent_.size(); }
  std::size_t root() const { return root_; }
  std::optional<std::size_t> parent(std::size_t v) const;
  std::span<const std::size_t> children(std::size_t v) const;

 private:
  GeneralRootedTree() = default;

  std::size_t root_ = 0;
  std::vector<std::int64_t> parent_;
  std::vector<std::size_t> child_offsets_;
  std::vector<std::size_t> child_list_;
};

/// Delta_n: the maximal number of descendants at distance exactly n from a
/// single vertex, over all vertices of the finite tree.
std::size_t delta_n(const GeneralRootedTree& tree, int n);

/// Pi_q^{(n)} ordered as (e, s1..s1^n, s2..s2^n, ..., sq..sq^n).
std::vector<Vertex> tq1_truncation(int q, int n);

}  // namespace hpd
