#include "bipsym/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "bipsym/error.hpp"

namespace bipsym {
namespace {

// A transformed point this close to a node is taken to be that node. Half
// the separation floor, so at most one node qualifies.
constexpr double kMatchRadius = kDistinctTol / 2.0;
constexpr double kSubspaceTol = 1e-9;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

CheckResult make_check(std::string name, bool pass, std::string detail,
                       std::optional<double> measured = std::nullopt) {
  return CheckResult{std::move(name), pass, std::move(detail), measured};
}

struct PowerData {
  int power;
  Matrix4 m;
  FixedSetDescriptor fix;
  std::vector<bool> fixed_nodes;
};

std::vector<PowerData> proper_powers(const Isometry4& iso,
                                     const std::vector<Vector4>& points) {
  std::vector<PowerData> out;
  Matrix4 p = Matrix4::Identity();
  for (int i = 1; i < iso.claimed_order(); ++i) {
    p = p * iso.matrix();
    PowerData d{i, p, fixed_subspace(p), {}};
    d.fixed_nodes.reserve(points.size());
    for (const Vector4& x : points) {
      d.fixed_nodes.push_back((p * x - x).norm() <= kMatchRadius &&
                              d.fix.distance_to(x) <= kMatchRadius);
    }
    out.push_back(std::move(d));
  }
  return out;
}

double min_separation(const std::vector<Vector4>& points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::min(best, (points[i] - points[j]).norm());
    }
  }
  return best;
}

CheckResult check_induces(const BipartiteAutomorphism& aut,
                          const Isometry4& iso, const SpatialEmbedding& emb,
                          double tol, double separation) {
  const auto sigma = extend_to_subdivision(aut, emb.graph());
  if (!sigma) {
    return make_check("induces", false,
                      "subdivided edges are not invariant under the automorphism");
  }
  const auto& pts = emb.points();
  double worst = 0.0;
  std::string first_bad;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vector4 q = iso.matrix() * pts[i];
    std::size_t nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double d = (q - pts[j]).norm();
      if (d < best) {
        best = d;
        nearest = j;
      }
    }
    const auto target = static_cast<std::size_t>((*sigma)[i]);
    worst = std::max(worst, (q - pts[target]).norm());
    if (nearest != target && first_bad.empty()) {
      first_bad = "M*" + emb.graph().node_name(static_cast<int>(i)) +
                  " is nearest to " +
                  emb.graph().node_name(static_cast<int>(nearest)) +
                  ", expected " +
                  emb.graph().node_name(static_cast<int>(target));
    }
  }
  if (!first_bad.empty()) return make_check("induces", false, first_bad, worst);
  if (worst > tol) {
    return make_check("induces", false,
                      "image displacement " + num(worst) + " exceeds " + num(tol),
                      worst);
  }
  if (separation < kDistinctTol) {
    return make_check("induces", false,
                      "nodes closer than " + num(kDistinctTol) +
                          " make the matching ambiguous",
                      worst);
  }
  return make_check("induces", true,
                    "every node maps onto its image node", worst);
}

CheckResult check_eel1(const SpatialEmbedding& emb,
                       const std::vector<PowerData>& powers) {
  double worst = 0.0;
  for (const auto& [a, b] : emb.graph().adjacent_pairs()) {
    const PowerData* first = nullptr;
    for (const PowerData& d : powers) {
      if (!d.fixed_nodes[static_cast<std::size_t>(a)] ||
          !d.fixed_nodes[static_cast<std::size_t>(b)]) {
        continue;
      }
      if (first == nullptr) {
        first = &d;
        continue;
      }
      const double gap = subspace_gap(first->fix.basis, d.fix.basis);
      worst = std::max(worst, gap);
      if (gap > kSubspaceTol) {
        return make_check(
            "eel1", false,
            "edge " + emb.graph().node_name(a) + "-" + emb.graph().node_name(b) +
                " is fixed by M^" + std::to_string(first->power) + " and M^" +
                std::to_string(d.power) + " with different fixed sets",
            gap);
      }
    }
  }
  return make_check("eel1", true,
                    "powers fixing an edge share one fixed set", worst);
}

CheckResult check_eel2(const SpatialEmbedding& emb,
                       const std::vector<PowerData>& powers) {
  const auto& pts = emb.points();
  for (const auto& [a, b] : emb.graph().adjacent_pairs()) {
    const Vector4& pa = pts[static_cast<std::size_t>(a)];
    const Vector4& pb = pts[static_cast<std::size_t>(b)];
    for (const PowerData& d : powers) {
      if ((d.m * pa - pb).norm() <= kMatchRadius &&
          (d.m * pb - pa).norm() <= kMatchRadius) {
        return make_check("eel2", false,
                          "M^" + std::to_string(d.power) + " interchanges " +
                              emb.graph().node_name(a) + " and " +
                              emb.graph().node_name(b));
      }
    }
  }
  return make_check("eel2", true, "no power interchanges an adjacent pair");
}

// Fixed V and W counts among original vertices.
std::pair<int, int> fixed_part_counts(const SpatialEmbedding& emb,
                                      const PowerData& d) {
  int fv = 0;
  int fw = 0;
  for (int node = 0; node < emb.shape().vertex_count(); ++node) {
    if (!d.fixed_nodes[static_cast<std::size_t>(node)]) continue;
    (part_of(emb.shape(), node) == Part::V ? fv : fw) += 1;
  }
  return {fv, fw};
}

CheckResult check_eel3(const SpatialEmbedding& emb,
                       const std::vector<PowerData>& powers) {
  const auto pairs = emb.graph().adjacent_pairs();
  for (const PowerData& d : powers) {
    std::vector<std::pair<int, int>> fixed_pairs;
    for (const auto& e : pairs) {
      if (d.fixed_nodes[static_cast<std::size_t>(e.first)] &&
          d.fixed_nodes[static_cast<std::size_t>(e.second)]) {
        fixed_pairs.push_back(e);
      }
    }
    if (fixed_pairs.empty()) continue;
    const std::string where = "fix(M^" + std::to_string(d.power) + ")";

    switch (d.fix.kind) {
      case FixedSetKind::Empty:
      case FixedSetKind::TwoPoints:
        return make_check("eel3", false,
                          where + " is " + std::string(to_string(d.fix.kind)) +
                              " but contains a fixed edge");
      case FixedSetKind::Circle: {
        const auto [fv, fw] = fixed_part_counts(emb, d);
        if (fv > 2 || fw > 2) {
          return make_check("eel3", false,
                            where + " is a circle with " + std::to_string(fv) +
                                " V and " + std::to_string(fw) +
                                " W vertices");
        }
        // Circular order of the nodes on the circle.
        std::vector<std::pair<double, int>> around;
        for (std::size_t node = 0; node < d.fixed_nodes.size(); ++node) {
          if (!d.fixed_nodes[node]) continue;
          const Vector4& p = emb.point(static_cast<int>(node));
          around.emplace_back(std::atan2(d.fix.basis.col(1).dot(p),
                                         d.fix.basis.col(0).dot(p)),
                              static_cast<int>(node));
        }
        std::sort(around.begin(), around.end());
        const auto count = static_cast<std::ptrdiff_t>(around.size());
        auto position = [&](int node) {
          return std::find_if(around.begin(), around.end(),
                              [&](const auto& x) { return x.second == node; }) -
                 around.begin();
        };
        for (const auto& [a, b] : fixed_pairs) {
          const std::ptrdiff_t gap = std::abs(position(a) - position(b));
          if (gap != 1 && gap != count - 1) {
            return make_check("eel3", false,
                              "edge " + emb.graph().node_name(a) + "-" +
                                  emb.graph().node_name(b) + " on " + where +
                                  " is separated by other vertices");
          }
        }
        break;
      }
      case FixedSetKind::Sphere: {
        const auto [fv, fw] = fixed_part_counts(emb, d);
        const bool k2n = (fv == emb.shape().n() && fw <= 2) ||
                         (fw == emb.shape().m() && fv <= 2);
        if (!k2n) {
          return make_check("eel3", false,
                            "indeterminate: " + where + " holds " +
                                std::to_string(fv) + " V and " +
                                std::to_string(fw) +
                                " W vertices, not a planar K_{2,n} pattern");
        }
        break;
      }
      case FixedSetKind::All:
        break;
    }
  }
  return make_check("eel3", true, "fixed edges bound arcs in their fixed sets");
}

CheckResult check_eel4(const SpatialEmbedding& emb,
                       const std::vector<PowerData>& powers) {
  for (const PowerData& d : powers) {
    if (d.fix.kind != FixedSetKind::Sphere) continue;
    const auto [fv, fw] = fixed_part_counts(emb, d);
    if (fv != emb.shape().n() && fw != emb.shape().m()) {
      return make_check("eel4", false,
                        "fix(M^" + std::to_string(d.power) +
                            ") is a sphere containing neither all of V nor all of W");
    }
  }
  return make_check("eel4", true,
                    "every fixed sphere contains all of V or all of W");
}

}  // namespace

bool RealizationCertificate::overall() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* RealizationCertificate::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

RealizationCertificate verify(const BipartiteAutomorphism& aut,
                              const Isometry4& iso,
                              const SpatialEmbedding& emb, double tol) {
  if (!(aut.shape() == emb.shape())) {
    throw Error(ErrorCode::kShapeMismatch,
                "automorphism and embedding are for different graphs");
  }
  RealizationCertificate cert;
  auto& out = cert.checks;
  const Matrix4& m = iso.matrix();
  const auto& pts = emb.points();

  double norm_dev = 0.0;
  for (const Vector4& p : pts) norm_dev = std::max(norm_dev, std::abs(p.norm() - 1.0));
  out.push_back(make_check("unit_norm", norm_dev <= kOrthogonalityTol,
                           "max |‖p‖ - 1| = " + num(norm_dev), norm_dev));

  const double defect = orthogonality_defect(m);
  out.push_back(make_check("orthogonal", defect <= kOrthogonalityTol,
                           "|M^T M - I|_inf = " + num(defect), defect));

  {
    const int r = iso.claimed_order();
    bool ok = r >= 1;
    std::string detail;
    Matrix4 p = Matrix4::Identity();
    for (int k = 1; ok && k < r; ++k) {
      p = p * m;
      if (max_deviation_from_identity(p) <= kDistinctTol) {
        ok = false;
        detail = "M^" + std::to_string(k) + " is already the identity";
      }
    }
    double last = 0.0;
    if (ok) {
      p = p * m;
      last = max_deviation_from_identity(p);
      ok = last <= tol;
      detail = "|M^" + std::to_string(r) + " - I|_inf = " + num(last);
    }
    if (aut.order() != r) {
      ok = false;
      detail = "matrix order " + std::to_string(r) +
               " differs from automorphism order " + std::to_string(aut.order());
    }
    out.push_back(make_check("order", ok, detail, last));
  }

  {
    const double det = m.determinant();
    const bool want_positive = iso.orientation() == Orientation::Preserving;
    out.push_back(make_check("orientation", (det > 0) == want_positive,
                             "det M = " + num(det) + ", expected " +
                                 (want_positive ? "+1" : "-1"),
                             det));
  }

  const double separation = min_separation(pts);
  out.push_back(make_check("separation", separation >= kDistinctTol,
                           "minimum node distance " + num(separation),
                           separation));
  out.push_back(check_induces(aut, iso, emb, tol, separation));

  {
    const RealizationCertificate smith = smith_check(iso);
    const CheckResult* bad = nullptr;
    for (const CheckResult& c : smith.checks) {
      if (!c.pass) {
        bad = &c;
        break;
      }
    }
    out.push_back(bad ? make_check("smith", false, bad->name + ": " + bad->detail)
                      : make_check("smith", true,
                                   "fixed sets match the determinant signs"));
  }

  const auto powers = proper_powers(iso, pts);
  out.push_back(check_eel1(emb, powers));
  out.push_back(check_eel2(emb, powers));
  out.push_back(check_eel3(emb, powers));
  out.push_back(check_eel4(emb, powers));
  return cert;
}

RealizationCertificate smith_check(const Isometry4& iso) {
  RealizationCertificate cert;
  Matrix4 p = Matrix4::Identity();
  for (int i = 1; i < iso.claimed_order(); ++i) {
    p = p * iso.matrix();
    if (max_deviation_from_identity(p) <= kDistinctTol) continue;
    const double det = p.determinant();
    const FixedSetKind kind = fixed_subspace(p).kind;
    const bool ok = det > 0 ? (kind == FixedSetKind::Empty || kind == FixedSetKind::Circle)
                            : (kind == FixedSetKind::TwoPoints ||
                               kind == FixedSetKind::Sphere);
    cert.checks.push_back(make_check(
        "power_" + std::to_string(i), ok,
        std::string(to_string(kind)) + " with det " + num(det), det));
  }
  return cert;
}

RealizationCertificate two_circle_check(const Isometry4& iso) {
  const Matrix4& m = iso.matrix();
  if (fixed_subspace(m).kind != FixedSetKind::Empty) {
    throw Error(ErrorCode::kPrecondition, "the isometry fixes points");
  }
  struct Circle {
    Basis4 basis;
    int power;
  };
  std::vector<Circle> circles;
  Matrix4 p = Matrix4::Identity();
  for (int i = 1; i < iso.claimed_order(); ++i) {
    p = p * m;
    FixedSetDescriptor fix = fixed_subspace(p);
    if (fix.kind != FixedSetKind::Circle) continue;
    const bool seen = std::any_of(circles.begin(), circles.end(), [&](const Circle& c) {
      return subspace_gap(c.basis, fix.basis) <= kSubspaceTol;
    });
    if (!seen) circles.push_back({std::move(fix.basis), i});
  }

  RealizationCertificate cert;
  auto& out = cert.checks;
  const auto count = static_cast<double>(circles.size());
  out.push_back(make_check("at_most_two_circles", circles.size() <= 2,
                           std::to_string(circles.size()) + " fixed circles", count));

  for (std::size_t c = 0; c < circles.size(); ++c) {
    const double gap = subspace_gap(circles[c].basis, m * circles[c].basis);
    out.push_back(make_check("invariant_" + std::to_string(c + 1),
                             gap <= kSubspaceTol,
                             "circle fixed by M^" +
                                 std::to_string(circles[c].power) +
                                 " moved by " + num(gap),
                             gap));
  }
  if (circles.size() == 2) {
    const double overlap =
        (circles[0].basis.transpose() * circles[1].basis).cwiseAbs().maxCoeff();
    out.push_back(make_check("complementary", overlap <= kSubspaceTol,
                             "max |<a, b>| = " + num(overlap), overlap));
    const auto l = std::lcm(circles[0].power, circles[1].power);
    out.push_back(make_check(
        "lcm", l == iso.claimed_order(),
        "lcm(" + std::to_string(circles[0].power) + ", " +
            std::to_string(circles[1].power) + ") = " + std::to_string(l) +
            ", order " + std::to_string(iso.claimed_order()),
        static_cast<double>(l)));
  }
  return cert;
}

}  // namespace bipsym
