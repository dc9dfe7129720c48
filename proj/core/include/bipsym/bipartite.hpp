#pragma once

// Vertices and automorphisms of the complete bipartite graph K_{n,m}.
//
// Vertices are addressed two ways: as a VertexId (part + 1-based index, the
// form used in cycle notation such as "(v1 v2)(w1 w3)") and as a flat index
// in [0, n + m) where V occupies [0, n) and W occupies [n, n + m). All
// permutations are stored as flat image arrays.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bipsym {

enum class Part : std::uint8_t { V, W };

inline Part other(Part p) { return p == Part::V ? Part::W : Part::V; }

class BipartiteShape {
 public:
  // Throws Error(kInvalidShape) unless n >= 1 and m >= 1.
  BipartiteShape(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int size(Part p) const { return p == Part::V ? n_ : m_; }
  int vertex_count() const { return n_ + m_; }

  // The classification only speaks about n > 2 and m > 2.
  bool in_theorem_scope() const { return n_ > 2 && m_ > 2; }

  BipartiteShape transposed() const { return {m_, n_}; }

  friend bool operator==(const BipartiteShape&, const BipartiteShape&) = default;

 private:
  int n_;
  int m_;
};

struct VertexId {
  Part part = Part::V;
  int index = 1;  // 1-based

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(VertexId v);

// Parses "v3" / "w12". Throws Error(kParseError) on malformed tokens and
// Error(kInvalidVertex) when the index is outside the shape.
VertexId parse_vertex(std::string_view token, const BipartiteShape& shape);

int flat_index(const BipartiteShape& shape, VertexId v);
VertexId vertex_at(const BipartiteShape& shape, int flat);
inline Part part_of(const BipartiteShape& shape, int flat) {
  return flat < shape.n() ? Part::V : Part::W;
}

enum class SideAction : std::uint8_t { Preserving, Swapping };

std::string_view to_string(SideAction a);

class BipartiteAutomorphism {
 public:
  const BipartiteShape& shape() const { return shape_; }
  SideAction side_action() const { return side_; }

  int image(int flat) const { return image_[static_cast<std::size_t>(flat)]; }
  VertexId operator()(VertexId v) const;
  std::span<const int> images() const { return image_; }

  bool is_identity() const;
  std::int64_t order() const;

  // Cycle decomposition over flat indices. Every cycle (including fixed
  // points as 1-cycles) starts at its smallest element; cycles are sorted by
  // that element.
  std::vector<std::vector<int>> cycles() const;

  // Canonical cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycle_notation() const;

  friend bool operator==(const BipartiteAutomorphism& a,
                         const BipartiteAutomorphism& b) {
    return a.shape_ == b.shape_ && a.image_ == b.image_;
  }

 private:
  BipartiteAutomorphism(BipartiteShape shape, std::vector<int> image,
                        SideAction side)
      : shape_(shape), image_(std::move(image)), side_(side) {}

  friend BipartiteAutomorphism make_automorphism_flat(const BipartiteShape&,
                                                      std::vector<int>);

  BipartiteShape shape_;
  std::vector<int> image_;
  SideAction side_;
};

// Validates a flat image array. Errors: kNotBijective, kMixedParts,
// kSwapOnUnequalParts, kInvalidVertex (wrong length or out-of-range entry).
BipartiteAutomorphism make_automorphism_flat(const BipartiteShape& shape,
                                             std::vector<int> image);

// image[flat_index(v)] is the image of v.
BipartiteAutomorphism make_automorphism(const BipartiteShape& shape,
                                        std::span<const VertexId> image);

BipartiteAutomorphism identity_automorphism(const BipartiteShape& shape);

// Parenthesised cycles over whitespace-separated tokens v1..vn, w1..wm.
// Unlisted vertices are fixed; "" and "()" denote the identity.
BipartiteAutomorphism parse_cycles(const BipartiteShape& shape,
                                   std::string_view text);

// compose(a, b) is a after b: x -> a(b(x)).
BipartiteAutomorphism compose(const BipartiteAutomorphism& a,
                              const BipartiteAutomorphism& b);
BipartiteAutomorphism inverse(const BipartiteAutomorphism& a);
// Negative exponents are powers of the inverse.
BipartiteAutomorphism power(const BipartiteAutomorphism& a, std::int64_t k);

struct CycleSignature {
  BipartiteShape shape{1, 1};
  SideAction side_action = SideAction::Preserving;
  std::int64_t order = 1;
  int fixed_v = 0;
  int fixed_w = 0;
  // Sorted ascending; each entry >= 2.
  std::vector<int> pure_v_cycles;
  std::vector<int> pure_w_cycles;
  std::vector<int> mixed_cycles;

  friend bool operator==(const CycleSignature&, const CycleSignature&) = default;
};

CycleSignature signature(const BipartiteAutomorphism& aut);

// Relabels V <-> W: swaps n/m, the fixed counts and the pure cycle lists.
CycleSignature interchange_parts(const CycleSignature& sig);

std::string describe(const CycleSignature& sig);

// K_{n,m} with some edges subdivided by one extra vertex. Node indices:
// [0, n + m) are the original vertices (flat order), n + m + k is the k-th
// subdivision vertex.
class SubdividedGraph {
 public:
  struct Subdivision {
    int v = 0;  // flat index of the V endpoint
    int w = 0;  // flat index of the W endpoint
    std::string label;
  };

  explicit SubdividedGraph(BipartiteShape shape) : shape_(shape) {}

  const BipartiteShape& shape() const { return shape_; }
  const std::vector<Subdivision>& subdivisions() const { return subs_; }
  int node_count() const {
    return shape_.vertex_count() + static_cast<int>(subs_.size());
  }

  // Endpoints may be given in either order. Throws kInvalidVertex if the two
  // endpoints are not a V-W edge, kDuplicateVertex if the edge is already
  // subdivided. Returns the new node index.
  int add_subdivision(int a, int b, std::string label);

  std::optional<int> subdivision_on(int a, int b) const;

  // Every edge of the subdivided graph as (lower node, higher node).
  std::vector<std::pair<int, int>> adjacent_pairs() const;

  // Name of a node: "v3", "w1" or the subdivision label.
  std::string node_name(int node) const;

 private:
  BipartiteShape shape_;
  std::vector<Subdivision> subs_;
};

// Extends the automorphism to subdivision nodes (z_{vw} -> z_{a(v)a(w)}).
// Returns nullopt if the subdivided edge set is not invariant.
std::optional<std::vector<int>> extend_to_subdivision(
    const BipartiteAutomorphism& aut, const SubdividedGraph& graph);

// Enumeration of Aut(K_{n,m}) in lexicographic order over
// (V-permutation, W-permutation, swap flag). A swapping element with
// permutations (s, t) sends v_i to w_{s(i)} and w_j to v_{t(j)}.
struct EnumerationLimits {
  std::uint64_t max_part_product = 10'000'000;  // cap on n! * m!
};

// Saturates at UINT64_MAX.
std::uint64_t automorphism_count(const BipartiteShape& shape);

// The index-th element of the enumeration order (0-based).
BipartiteAutomorphism automorphism_at(const BipartiteShape& shape,
                                      std::uint64_t index);

class AutomorphismCursor {
 public:
  AutomorphismCursor(const BipartiteShape& shape, std::uint64_t index);

  std::uint64_t index() const { return index_; }
  BipartiteAutomorphism current() const;
  void advance();

 private:
  BipartiteShape shape_;
  std::uint64_t index_;
  std::vector<int> vperm_;
  std::vector<int> wperm_;
  bool swap_ = false;
};

// Streams the enumeration; iterators are single-pass.
class AutomorphismRange {
 public:
  class iterator {
   public:
    using value_type = BipartiteAutomorphism;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    BipartiteAutomorphism operator*() const { return cursor_->current(); }
    iterator& operator++() {
      cursor_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.cursor_->index() >= it.end_;
    }

   private:
    friend class AutomorphismRange;
    iterator(const BipartiteShape& shape, std::uint64_t first,
             std::uint64_t end)
        : cursor_(std::in_place, shape, first), end_(end) {}
    std::optional<AutomorphismCursor> cursor_;
    std::uint64_t end_ = 0;
  };

  AutomorphismRange(BipartiteShape shape, std::uint64_t first,
                    std::uint64_t last)
      : shape_(shape), first_(first), last_(last) {}

  iterator begin() const { return iterator(shape_, first_, last_); }
  std::default_sentinel_t end() const { return {}; }
  std::uint64_t size() const { return last_ - first_; }

 private:
  BipartiteShape shape_;
  std::uint64_t first_;
  std::uint64_t last_;
};

// Throws Error(kTooLarge) when n! * m! exceeds the cap.
AutomorphismRange enumerate_automorphisms(const BipartiteShape& shape,
                                          const EnumerationLimits& limits = {});

}  // namespace bipsym
