#include "bipsym/geometry.hpp"

#include <numeric>
#include <string>

#include "bipsym/error.hpp"

namespace bipsym {

Matrix4 matrix_power(const Matrix4& m, std::int64_t k) {
  if (k < 0) return matrix_power(m.transpose(), -k);
  Matrix4 out = Matrix4::Identity();
  for (std::int64_t i = 0; i < k; ++i) out = out * m;
  return out;
}

double max_deviation_from_identity(const Matrix4& m) {
  return (m - Matrix4::Identity()).cwiseAbs().maxCoeff();
}

double orthogonality_defect(const Matrix4& m) {
  return (m.transpose() * m - Matrix4::Identity()).cwiseAbs().maxCoeff();
}

Isometry4 Isometry4::make(const Matrix4& m, int claimed_order,
                          Orientation orientation) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidIsometry, what);
  };
  if (claimed_order < 1) fail("claimed order must be positive");
  if (orthogonality_defect(m) > kOrthogonalityTol) fail("matrix not orthogonal");
  const double det = m.determinant();
  const double expected = orientation == Orientation::Preserving ? 1.0 : -1.0;
  if (std::abs(det - expected) > kOrthogonalityTol) {
    fail("determinant " + std::to_string(det) + " does not match orientation");
  }
  Matrix4 p = Matrix4::Identity();
  for (int k = 1; k < claimed_order; ++k) {
    p = p * m;
    if (max_deviation_from_identity(p) <= kDistinctTol) {
      fail("matrix power " + std::to_string(k) + " is already the identity");
    }
  }
  p = p * m;
  if (max_deviation_from_identity(p) > kOrderTol) {
    fail("matrix^" + std::to_string(claimed_order) + " is not the identity");
  }
  return Isometry4(m, claimed_order, orientation);
}

Isometry4 Isometry4::unvalidated(const Matrix4& m, int claimed_order,
                                 Orientation orientation) {
  return Isometry4(m, claimed_order, orientation);
}

std::string_view to_string(FixedSetKind kind) {
  switch (kind) {
    case FixedSetKind::Empty: return "empty";
    case FixedSetKind::TwoPoints: return "two_points";
    case FixedSetKind::Circle: return "circle";
    case FixedSetKind::Sphere: return "sphere";
    case FixedSetKind::All: return "all";
  }
  return "unknown";
}

FixedSetKind kind_for_dimension(int dimension) {
  switch (dimension) {
    case 0: return FixedSetKind::Empty;
    case 1: return FixedSetKind::TwoPoints;
    case 2: return FixedSetKind::Circle;
    case 3: return FixedSetKind::Sphere;
    default: return FixedSetKind::All;
  }
}

double FixedSetDescriptor::distance_to(const Vector4& p) const {
  if (dimension() == 0) return p.norm();
  return (p - basis * (basis.transpose() * p)).norm();
}

FixedSetDescriptor fixed_subspace(const Matrix4& m, double tol) {
  const Matrix4 shifted = m - Matrix4::Identity();
  Eigen::JacobiSVD<Matrix4> svd(shifted, Eigen::ComputeFullV);
  const Eigen::Vector4d& sv = svd.singularValues();  // descending
  int dim = 0;
  for (int i = 3; i >= 0 && sv(i) <= tol; --i) ++dim;
  FixedSetDescriptor out;
  out.kind = kind_for_dimension(dim);
  out.basis = svd.matrixV().rightCols(dim);
  return out;
}

FixedSetDescriptor fixed_set(const Isometry4& iso, int power) {
  if (power < 1 || power > iso.claimed_order()) {
    throw Error(ErrorCode::kPrecondition,
                "power " + std::to_string(power) + " outside [1, " +
                    std::to_string(iso.claimed_order()) + "]");
  }
  return fixed_subspace(iso.power(power));
}

double subspace_gap(const Basis4& a, const Basis4& b) {
  if (a.cols() != b.cols()) return 1.0;
  if (a.cols() == 0) return 0.0;
  // Columns of (I - P_a) b have norms bounded by the sines of the principal
  // angles; its largest singular value is the largest sine.
  const Basis4 residual = b - a * (a.transpose() * b);
  Eigen::JacobiSVD<Basis4> svd(residual);
  return svd.singularValues()(0);
}

Isometry4 rotation_isometry(int r) {
  if (r < 1) {
    throw Error(ErrorCode::kPrecondition, "rotation order must be >= 1");
  }
  Matrix4 m = Matrix4::Identity();
  m.topLeftCorner<2, 2>() = rotation2(RationalAngle::full_turn_over(r));
  return Isometry4::make(m, r, Orientation::Preserving);
}

Isometry4 glide_isometry(const RationalAngle& alpha, const RationalAngle& beta,
                         std::optional<int> claimed_order) {
  const auto order = static_cast<int>(std::lcm(alpha.order(), beta.order()));
  if (claimed_order && *claimed_order != order) {
    throw Error(ErrorCode::kOrderMismatch,
                "glide rotation has order " + std::to_string(order) +
                    ", claimed " + std::to_string(*claimed_order));
  }
  Matrix4 m = Matrix4::Zero();
  m.topLeftCorner<2, 2>() = rotation2(alpha);
  m.bottomRightCorner<2, 2>() = rotation2(beta);
  return Isometry4::make(m, order, Orientation::Preserving);
}

Isometry4 reflection_isometry() {
  Matrix4 m = Matrix4::Identity();
  m(3, 3) = -1.0;
  return Isometry4::make(m, 2, Orientation::Reversing);
}

Isometry4 improper_isometry(const RationalAngle& theta,
                            std::optional<int> claimed_order) {
  const auto order = static_cast<int>(std::lcm(theta.order(), std::int64_t{2}));
  if (claimed_order && *claimed_order != order) {
    throw Error(ErrorCode::kOrderMismatch,
                "improper rotation has order " + std::to_string(order) +
                    ", claimed " + std::to_string(*claimed_order));
  }
  Matrix4 m = Matrix4::Identity();
  m.topLeftCorner<2, 2>() = rotation2(theta);
  m(3, 3) = -1.0;
  return Isometry4::make(m, order, Orientation::Reversing);
}

}  // namespace bipsym
