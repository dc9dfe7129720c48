#pragma once

// Finite-order isometries of the unit sphere S^3 in R^4, as 4x4 orthogonal
// matrices.
//
// Coordinate conventions used by every constructor:
//   X = S^3 ∩ {x1 = x2 = 0}   (circle in the x3,x4-plane)
//   Y = S^3 ∩ {x3 = x4 = 0}   (circle in the x1,x2-plane)
//   S = S^3 ∩ {x4 = 0}        (great 2-sphere)
//   F = X ∩ S = {(0, 0, ±1, 0)}
// "Rotation around X" fixes X pointwise and turns the x1,x2-plane, so it
// acts on Y; "rotation around Y" turns the x3,x4-plane and acts on X.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "bipsym/orientation.hpp"

namespace bipsym {

using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;
using Basis4 = Eigen::Matrix<double, 4, Eigen::Dynamic>;

inline constexpr double kOrthogonalityTol = 1e-12;
inline constexpr double kOrderTol = 1e-9;
inline constexpr double kDistinctTol = 1e-6;
inline constexpr double kEigenTol = 1e-9;

// 2*pi*num/den, kept as an exact fraction of a full turn reduced to [0, 1).
class RationalAngle {
 public:
  // Throws Error(kPrecondition) if den <= 0.
  RationalAngle(std::int64_t num, std::int64_t den);

  // 2*pi/k
  static RationalAngle full_turn_over(std::int64_t k) { return {1, k}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  // Smallest k >= 1 with k * angle a whole number of turns.
  std::int64_t order() const { return den_; }
  double radians() const;

  // Exact for multiples of a quarter turn and symmetric under reflection
  // about every multiple of an eighth turn.
  std::pair<double, double> cos_sin() const;

  RationalAngle times(std::int64_t k) const { return {num_ * k, den_}; }

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

Eigen::Matrix2d rotation2(const RationalAngle& a);

Matrix4 matrix_power(const Matrix4& m, std::int64_t k);
double max_deviation_from_identity(const Matrix4& m);
double orthogonality_defect(const Matrix4& m);

class Isometry4 {
 public:
  // Checks orthogonality (1e-12), determinant sign against the orientation
  // (1e-12), m^order = I (1e-9) and m^k != I for k < order (deviation above
  // 1e-6). Throws Error(kInvalidIsometry) on the first violated invariant.
  static Isometry4 make(const Matrix4& m, int claimed_order,
                        Orientation orientation);

  // Skips validation; for data read from files, which the verifier checks.
  static Isometry4 unvalidated(const Matrix4& m, int claimed_order,
                               Orientation orientation);

  const Matrix4& matrix() const { return matrix_; }
  int claimed_order() const { return order_; }
  Orientation orientation() const { return orientation_; }

  Matrix4 power(std::int64_t k) const { return matrix_power(matrix_, k); }

 private:
  Isometry4(const Matrix4& m, int order, Orientation o)
      : matrix_(m), order_(order), orientation_(o) {}

  Matrix4 matrix_;
  int order_;
  Orientation orientation_;
};

enum class FixedSetKind : std::uint8_t { Empty, TwoPoints, Circle, Sphere, All };

std::string_view to_string(FixedSetKind kind);
FixedSetKind kind_for_dimension(int dimension);

// Fixed points of an isometry on S^3: the unit sphere of the +1-eigenspace.
struct FixedSetDescriptor {
  FixedSetKind kind = FixedSetKind::Empty;
  Basis4 basis;  // orthonormal columns

  int dimension() const { return static_cast<int>(basis.cols()); }
  double distance_to(const Vector4& p) const;
};

// +1-eigenspace of m from the singular vectors of m - I whose singular
// values are at most tol.
FixedSetDescriptor fixed_subspace(const Matrix4& m, double tol = kEigenTol);

// Throws Error(kPrecondition) unless 1 <= power <= claimed_order.
FixedSetDescriptor fixed_set(const Isometry4& iso, int power);

// Largest sine of the principal angles between the column spans; 1 when the
// dimensions differ.
double subspace_gap(const Basis4& a, const Basis4& b);

// Identity for r = 1. Throws Error(kPrecondition) if r < 1.
Isometry4 rotation_isometry(int r);

// R(alpha) on (x1,x2) and R(beta) on (x3,x4). The order is the lcm of the
// two angle orders; a supplied claimed_order must equal it, otherwise
// Error(kOrderMismatch).
Isometry4 glide_isometry(const RationalAngle& alpha, const RationalAngle& beta,
                         std::optional<int> claimed_order = std::nullopt);

// diag(1, 1, 1, -1): reflection through S.
Isometry4 reflection_isometry();

// R(theta) on (x1,x2) composed with the reflection through S.
Isometry4 improper_isometry(const RationalAngle& theta,
                            std::optional<int> claimed_order = std::nullopt);

}  // namespace bipsym
