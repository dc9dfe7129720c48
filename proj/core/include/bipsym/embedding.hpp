#pragma once

#include <string>
#include <vector>

#include "bipsym/bipartite.hpp"
#include "bipsym/geometry.hpp"

namespace bipsym {

// A distinguished great circle, great sphere or antipodal point pair,
// described by an orthonormal basis of the linear span it cuts from S^3.
struct Landmark {
  std::string name;
  FixedSetKind kind = FixedSetKind::Circle;
  Basis4 basis;

  double distance_to(const Vector4& p) const {
    return (p - basis * (basis.transpose() * p)).norm();
  }
};

Landmark landmark_x();  // {x1 = x2 = 0}
Landmark landmark_y();  // {x3 = x4 = 0}
Landmark landmark_s();  // {x4 = 0}
Landmark landmark_f();  // (0, 0, ±1, 0)

// Coordinates for every node of a (possibly subdivided) K_{n,m}. The type
// does not enforce unit norms or separation: the verifier checks those, and
// tests build deliberately broken embeddings.
class SpatialEmbedding {
 public:
  SpatialEmbedding(SubdividedGraph graph, std::vector<Vector4> points,
                   std::vector<Landmark> landmarks);

  const BipartiteShape& shape() const { return graph_.shape(); }
  const SubdividedGraph& graph() const { return graph_; }
  const std::vector<Vector4>& points() const { return points_; }
  const Vector4& point(int node) const {
    return points_.at(static_cast<std::size_t>(node));
  }
  const Vector4& vertex(VertexId v) const {
    return point(flat_index(shape(), v));
  }
  void set_point(int node, const Vector4& p) {
    points_.at(static_cast<std::size_t>(node)) = p;
  }
  const std::vector<Landmark>& landmarks() const { return landmarks_; }

  bool has_subdivisions() const { return !graph_.subdivisions().empty(); }

 private:
  SubdividedGraph graph_;
  std::vector<Vector4> points_;
  std::vector<Landmark> landmarks_;
};

}  // namespace bipsym
