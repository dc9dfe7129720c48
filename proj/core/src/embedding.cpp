#include "bipsym/embedding.hpp"

#include "bipsym/error.hpp"

namespace bipsym {
namespace {

Landmark axis_landmark(std::string name, FixedSetKind kind,
                       std::initializer_list<int> axes) {
  Landmark l{std::move(name), kind, Basis4::Zero(4, static_cast<int>(axes.size()))};
  int col = 0;
  for (int axis : axes) l.basis(axis, col++) = 1.0;
  return l;
}

}  // namespace

Landmark landmark_x() { return axis_landmark("X", FixedSetKind::Circle, {2, 3}); }
Landmark landmark_y() { return axis_landmark("Y", FixedSetKind::Circle, {0, 1}); }
Landmark landmark_s() {
  return axis_landmark("S", FixedSetKind::Sphere, {0, 1, 2});
}
Landmark landmark_f() {
  return axis_landmark("F", FixedSetKind::TwoPoints, {2});
}

SpatialEmbedding::SpatialEmbedding(SubdividedGraph graph,
                                   std::vector<Vector4> points,
                                   std::vector<Landmark> landmarks)
    : graph_(std::move(graph)),
      points_(std::move(points)),
      landmarks_(std::move(landmarks)) {
  if (static_cast<int>(points_.size()) != graph_.node_count()) {
    throw Error(ErrorCode::kShapeMismatch,
                "embedding has " + std::to_string(points_.size()) +
                    " points for " + std::to_string(graph_.node_count()) +
                    " nodes");
  }
}

}  // namespace bipsym
