#include "bipsym/realize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "bipsym/error.hpp"
#include "bipsym/seeded_generator.hpp"

namespace bipsym {
namespace {

constexpr int kMaxAttempts = 1000;

struct CycleInfo {
  std::vector<int> nodes;  // cycle order: aut(nodes[t]) == nodes[t + 1]
  bool mixed = false;
  Part part = Part::V;  // for pure cycles and fixed points
  bool placed = false;

  int length() const { return static_cast<int>(nodes.size()); }
};

Vector4 on_circle(const Landmark& circle, double angle) {
  return std::cos(angle) * circle.basis.col(0) +
         std::sin(angle) * circle.basis.col(1);
}

// Accumulates coordinates while keeping every point clear of the landmark
// sets and of everything placed so far.
class Placer {
 public:
  Placer(const Matrix4& g, int node_count, SeededGenerator& rng)
      : g_(g),
        points_(static_cast<std::size_t>(node_count)),
        set_(static_cast<std::size_t>(node_count), false),
        rng_(rng) {}

  void place(int node, const Vector4& p) {
    points_[static_cast<std::size_t>(node)] = p;
    set_[static_cast<std::size_t>(node)] = true;
  }

  // nodes[t] goes to g^t * p0, with p0 drawn by `draw` until the orbit
  // closes after nodes.size() steps and keeps clear of `avoid`.
  template <class Draw>
  void place_orbit(const std::vector<int>& nodes, Draw draw,
                   const std::vector<Landmark>& avoid) {
    const auto len = nodes.size();
    std::vector<Vector4> orbit(len);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      orbit[0] = draw();
      for (std::size_t t = 1; t < len; ++t) orbit[t] = g_ * orbit[t - 1];
      if ((g_ * orbit[len - 1] - orbit[0]).norm() > kOrderTol) continue;
      if (clear(orbit, avoid)) {
        for (std::size_t t = 0; t < len; ++t) place(nodes[t], orbit[t]);
        return;
      }
    }
    throw Error(ErrorCode::kPlacementFailure,
                "no clear orbit of length " + std::to_string(len) + " after " +
                    std::to_string(kMaxAttempts) + " draws");
  }

  std::vector<Vector4> take() {
    if (!std::all_of(set_.begin(), set_.end(), [](bool b) { return b; })) {
      throw Error(ErrorCode::kPlacementFailure, "some node was never placed");
    }
    return std::move(points_);
  }

  SeededGenerator& rng() { return rng_; }

 private:
  bool clear(const std::vector<Vector4>& orbit,
             const std::vector<Landmark>& avoid) const {
    for (std::size_t t = 0; t < orbit.size(); ++t) {
      for (const Landmark& l : avoid) {
        if (l.distance_to(orbit[t]) < kDistinctTol) return false;
      }
      for (std::size_t u = 0; u < t; ++u) {
        if ((orbit[t] - orbit[u]).norm() < kDistinctTol) return false;
      }
      for (std::size_t k = 0; k < points_.size(); ++k) {
        if (set_[k] && (orbit[t] - points_[k]).norm() < kDistinctTol) {
          return false;
        }
      }
    }
    return true;
  }

  Matrix4 g_;
  std::vector<Vector4> points_;
  std::vector<bool> set_;
  SeededGenerator& rng_;
};

struct Context {
  const BipartiteAutomorphism& aut;
  CycleSignature sig;
  CaseId chosen;
  Part vrole;  // the part that plays V in the matched case
  std::int64_t r;
  std::vector<CycleInfo> cycles;
  SubdividedGraph graph;

  Part wrole() const { return other(vrole); }
};

std::vector<CycleInfo> collect_cycles(const BipartiteAutomorphism& aut) {
  std::vector<CycleInfo> out;
  const auto& shape = aut.shape();
  for (auto& c : aut.cycles()) {
    CycleInfo info;
    const Part first = part_of(shape, c.front());
    info.mixed = std::any_of(c.begin(), c.end(), [&](int x) {
      return part_of(shape, x) != first;
    });
    info.part = first;
    info.nodes = std::move(c);
    out.push_back(std::move(info));
  }
  return out;
}

// Unplaced pure cycles of the given length in the given part.
std::vector<CycleInfo*> select(Context& ctx, Part part, std::int64_t length) {
  std::vector<CycleInfo*> out;
  for (CycleInfo& c : ctx.cycles) {
    if (!c.placed && !c.mixed && c.part == part && c.length() == length) {
      out.push_back(&c);
    }
  }
  return out;
}

std::vector<CycleInfo*> select_mixed(Context& ctx, std::int64_t length) {
  std::vector<CycleInfo*> out;
  for (CycleInfo& c : ctx.cycles) {
    if (!c.placed && c.mixed && c.length() == length) out.push_back(&c);
  }
  return out;
}

// Exceptional (non-r) pure cycle lengths in a part, ascending.
std::vector<int> exceptional_lengths(const Context& ctx, Part part) {
  std::vector<int> out;
  for (const CycleInfo& c : ctx.cycles) {
    if (!c.mixed && c.part == part && c.length() > 1 && c.length() != ctx.r &&
        std::find(out.begin(), out.end(), c.length()) == out.end()) {
      out.push_back(c.length());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void place_on_circle(Placer& placer, CycleInfo& c, const Landmark& circle,
                     const std::vector<Landmark>& avoid) {
  placer.place_orbit(
      c.nodes,
      [&] {
        return on_circle(circle,
                         placer.rng().next_in(0.0, 2.0 * std::numbers::pi));
      },
      avoid);
  c.placed = true;
}

void place_generic_rest(Context& ctx, Placer& placer,
                        const std::vector<Landmark>& avoid) {
  for (CycleInfo& c : ctx.cycles) {
    if (c.placed) continue;
    if (c.length() != ctx.r) {
      throw Error(ErrorCode::kPlacementFailure,
                  "cycle of length " + std::to_string(c.length()) +
                      " left without a special position (case " +
                      ctx.chosen.label() + ")");
    }
    placer.place_orbit(
        c.nodes, [&] { return placer.rng().next_on_s3(); }, avoid);
    c.placed = true;
  }
}

// --- rotations: cases 1 (preserving), 2, 3 and the identity ---------------

Isometry4 build_rotation(Context& ctx, SeededGenerator& rng,
                         std::vector<Landmark>& marks,
                         std::vector<Vector4>& points) {
  const Isometry4 g = rotation_isometry(static_cast<int>(ctx.r));
  Placer placer(g.matrix(), ctx.graph.node_count(), rng);
  marks = {landmark_x()};

  // Fixed vertices equally spaced on X, alternating parts while both last,
  // starting with the larger part.
  std::vector<int> fixed_v;
  std::vector<int> fixed_w;
  for (CycleInfo& c : ctx.cycles) {
    if (c.length() == 1) {
      (c.part == Part::V ? fixed_v : fixed_w).push_back(c.nodes[0]);
      c.placed = true;
    }
  }
  std::vector<int>* first = fixed_v.size() >= fixed_w.size() ? &fixed_v : &fixed_w;
  std::vector<int>* second = first == &fixed_v ? &fixed_w : &fixed_v;
  std::vector<int> order;
  for (std::size_t i = 0; i < first->size() || i < second->size(); ++i) {
    if (i < first->size()) order.push_back((*first)[i]);
    if (i < second->size()) order.push_back((*second)[i]);
  }
  const double step = 2.0 * std::numbers::pi / static_cast<double>(std::max<std::size_t>(order.size(), 1));
  for (std::size_t k = 0; k < order.size(); ++k) {
    placer.place(order[k], on_circle(marks[0], step * static_cast<double>(k)));
  }

  place_generic_rest(ctx, placer, marks);
  points = placer.take();
  return g;
}

// --- glide rotations: case 1 (swapping) and cases 4-9 ---------------------

Isometry4 build_glide(Context& ctx, SeededGenerator& rng,
                      std::vector<Landmark>& marks,
                      std::vector<Vector4>& points) {
  const std::int64_t r = ctx.r;
  const Landmark x = landmark_x();
  const Landmark y = landmark_y();
  marks = {x, y};

  std::optional<RationalAngle> alpha;  // acts on Y
  std::optional<RationalAngle> beta;   // acts on X
  const int number = ctx.chosen.number;
  const bool half_odd = (r / 2) % 2 == 1;
  const auto vx = exceptional_lengths(ctx, ctx.vrole);
  const auto wx = exceptional_lengths(ctx, ctx.wrole());

  switch (number) {
    case 1:
      if (half_odd) {
        alpha.emplace(2, r);
      } else {
        alpha.emplace(1, 4);
      }
      beta.emplace(1, r);
      break;
    case 4:
      alpha.emplace(1, vx.at(0));
      beta.emplace(1, r);
      break;
    case 5:
      alpha.emplace(1, vx.at(0));
      beta.emplace(1, vx.at(1));
      break;
    case 6:
      alpha.emplace(1, vx.at(0));
      beta.emplace(1, wx.at(0));
      break;
    case 7:
      alpha.emplace(1, 2);
      beta.emplace(1, r);
      break;
    case 8:
      alpha.emplace(1, 2);
      beta.emplace(2, r);
      break;
    case 9:
      alpha.emplace(1, 4);
      beta.emplace(1, r);
      break;
    default:
      throw Error(ErrorCode::kNotRealizable,
                  "no glide construction for " + ctx.chosen.label());
  }
  const Isometry4 g = glide_isometry(*alpha, *beta, static_cast<int>(r));

  // Subdivision vertices for case 1 with r/2 odd: g^{r/2} carries each
  // vertex of an r-cycle to the opposite part, inverting that edge.
  struct Midpoints {
    std::vector<int> nodes;
  };
  std::vector<Midpoints> midpoint_orbits;
  if (number == 1 && half_odd) {
    int label = 1;
    for (const CycleInfo& c : ctx.cycles) {
      Midpoints orbit;
      const auto half = static_cast<std::size_t>(r / 2);
      for (std::size_t t = 0; t < half; ++t) {
        orbit.nodes.push_back(ctx.graph.add_subdivision(
            c.nodes[t], c.nodes[t + half], "z" + std::to_string(label++)));
      }
      midpoint_orbits.push_back(std::move(orbit));
    }
  }

  Placer placer(g.matrix(), ctx.graph.node_count(), rng);
  for (const Midpoints& orbit : midpoint_orbits) {
    if (r == 2) {
      // g restricted to Y is the identity; each midpoint is its own orbit.
      for (int z : orbit.nodes) {
        placer.place_orbit(
            {z},
            [&] { return on_circle(y, placer.rng().next_in(0.0, 2.0 * std::numbers::pi)); },
            {x});
      }
    } else {
      placer.place_orbit(
          orbit.nodes,
          [&] { return on_circle(y, placer.rng().next_in(0.0, 2.0 * std::numbers::pi)); },
          {x});
    }
  }

  switch (number) {
    case 4:
      for (CycleInfo* c : select(ctx, ctx.vrole, vx[0])) place_on_circle(placer, *c, y, {x});
      break;
    case 5:
      for (CycleInfo* c : select(ctx, ctx.vrole, vx[0])) place_on_circle(placer, *c, y, {x});
      for (CycleInfo* c : select(ctx, ctx.vrole, vx[1])) place_on_circle(placer, *c, x, {y});
      break;
    case 6:
      for (CycleInfo* c : select(ctx, ctx.vrole, vx[0])) place_on_circle(placer, *c, y, {x});
      for (CycleInfo* c : select(ctx, ctx.wrole(), wx[0])) place_on_circle(placer, *c, x, {y});
      break;
    case 7:
    case 8: {
      // One 2-cycle per part on Y, alternating v, w, v, w around the circle.
      CycleInfo* cv = select(ctx, ctx.vrole, 2).at(0);
      CycleInfo* cw = select(ctx, ctx.wrole(), 2).at(0);
      const double q = std::numbers::pi / 2.0;
      placer.place(cv->nodes[0], on_circle(y, 0.0));
      placer.place(cw->nodes[0], on_circle(y, q));
      placer.place(cv->nodes[1], on_circle(y, 2.0 * q));
      placer.place(cw->nodes[1], on_circle(y, 3.0 * q));
      cv->placed = cw->placed = true;
      if (number == 8) {
        for (CycleInfo* c : select(ctx, ctx.vrole, r / 2)) place_on_circle(placer, *c, x, {y});
      }
      break;
    }
    case 9: {
      // The exceptional 4-cycle on Y; g turns Y by a quarter, so consecutive
      // cycle entries (which alternate parts) sit a quarter apart.
      CycleInfo* c = select_mixed(ctx, 4).at(0);
      for (std::size_t t = 0; t < 4; ++t) {
        placer.place(c->nodes[t],
                     on_circle(y, std::numbers::pi / 2.0 * static_cast<double>(t)));
      }
      c->placed = true;
      break;
    }
    default:
      break;
  }

  place_generic_rest(ctx, placer, marks);
  points = placer.take();
  return g;
}

// --- reflection: case 11 ---------------------------------------------------

Isometry4 build_reflection(Context& ctx, SeededGenerator& rng,
                           std::vector<Landmark>& marks,
                           std::vector<Vector4>& points) {
  const Isometry4 g = reflection_isometry();
  marks = {landmark_s()};
  Placer placer(g.matrix(), ctx.graph.node_count(), rng);

  // All of the V-role part on the equator x3 = x4 = 0 of S, the (at most
  // two) fixed vertices of the other part at the poles (0, 0, ±1, 0).
  std::vector<int> fixed_v;
  std::vector<int> fixed_w;
  for (CycleInfo& c : ctx.cycles) {
    if (c.length() == 1) {
      (c.part == ctx.vrole ? fixed_v : fixed_w).push_back(c.nodes[0]);
      c.placed = true;
    }
  }
  const Landmark equator = landmark_y();
  for (std::size_t k = 0; k < fixed_v.size(); ++k) {
    placer.place(fixed_v[k],
                 on_circle(equator, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                        static_cast<double>(fixed_v.size())));
  }
  for (std::size_t k = 0; k < fixed_w.size(); ++k) {
    placer.place(fixed_w[k], Vector4(0, 0, k == 0 ? 1.0 : -1.0, 0));
  }

  place_generic_rest(ctx, placer, marks);
  points = placer.take();
  return g;
}

// --- improper rotations: cases 10, 12, 13 ---------------------------------

Isometry4 build_improper(Context& ctx, SeededGenerator& rng,
                         std::vector<Landmark>& marks,
                         std::vector<Vector4>& points) {
  const std::int64_t r = ctx.r;
  const Landmark x = landmark_x();
  const Landmark s = landmark_s();
  const Landmark f = landmark_f();
  marks = {x, s, f};
  const char sub = ctx.chosen.sub;
  const int number = ctx.chosen.number;
  const bool double_angle = number == 12 && (sub == 'c' || sub == 'd');
  const Isometry4 g = improper_isometry(
      double_angle ? RationalAngle(2, r) : RationalAngle(1, r),
      static_cast<int>(r));
  const Vector4 f_plus(0, 0, 1, 0);
  const Vector4 f_minus(0, 0, -1, 0);

  // Case 13: each mixed 2-cycle (v w) gets a midpoint vertex at a point of F.
  std::vector<CycleInfo*> mixed_pairs;
  if (number == 13) {
    mixed_pairs = select_mixed(ctx, 2);
    int label = 1;
    for (CycleInfo* c : mixed_pairs) {
      ctx.graph.add_subdivision(c->nodes[0], c->nodes[1],
                                "z" + std::to_string(label++));
    }
  }

  Placer placer(g.matrix(), ctx.graph.node_count(), rng);

  // Fixed vertices (at most two, all in the V-role part) at F.
  int used_f = 0;
  for (CycleInfo& c : ctx.cycles) {
    if (c.length() == 1) {
      placer.place(c.nodes[0], used_f++ == 0 ? f_plus : f_minus);
      c.placed = true;
    }
  }

  if (r == 2) {
    place_generic_rest(ctx, placer, marks);
    points = placer.take();
    return g;
  }

  // g acts on X as the reflection t -> -t of the angle, so a 2-cycle sits at
  // a pair of angles (a, -a).
  const double q = std::numbers::pi / 2.0;
  const std::vector<Landmark> away_from_f = {f};
  if (number == 12 && (sub == 'a' || sub == 'd')) {
    for (CycleInfo* c : select(ctx, ctx.wrole(), 2)) {
      placer.place(c->nodes[0], on_circle(x, q));
      placer.place(c->nodes[1], on_circle(x, -q));
      c->placed = true;
    }
  }
  if (number == 12 && (sub == 'b' || sub == 'c')) {
    for (CycleInfo* c : select(ctx, ctx.vrole, 2)) {
      place_on_circle(placer, *c, x, away_from_f);
    }
  }
  if (double_angle) {
    // r/2-cycles on S away from F; g turns S about the x3-axis.
    const Part part = sub == 'c' ? ctx.wrole() : ctx.vrole;
    for (CycleInfo* c : select(ctx, part, r / 2)) {
      placer.place_orbit(
          c->nodes,
          [&] {
            for (;;) {
              Vector4 p(placer.rng().next_in(-1, 1), placer.rng().next_in(-1, 1),
                        placer.rng().next_in(-1, 1), 0.0);
              const double n = p.norm();
              if (n > 1e-3 && n <= 1.0) return Vector4(p / n);
            }
          },
          {x});
      c->placed = true;
    }
  }
  if (number == 13) {
    // z_k at F+ / F-, v at base + pi/4 and w at base - pi/4: around X this
    // reads z1 v1 w2 z2 v2 w1, so parts alternate and each z sits between
    // its own two endpoints.
    for (std::size_t k = 0; k < mixed_pairs.size(); ++k) {
      CycleInfo* c = mixed_pairs[k];
      const double base = k == 0 ? 0.0 : std::numbers::pi;
      int v = c->nodes[0];
      int w = c->nodes[1];
      if (part_of(ctx.aut.shape(), v) != Part::V) std::swap(v, w);
      const int z = *ctx.graph.subdivision_on(v, w);
      placer.place(z, k == 0 ? f_plus : f_minus);
      placer.place(v, on_circle(x, base + q / 2.0));
      placer.place(w, on_circle(x, base - q / 2.0));
      c->placed = true;
    }
  }

  place_generic_rest(ctx, placer, marks);
  points = placer.take();
  return g;
}

}  // namespace

CaseId dispatch_case(const RealizabilityVerdict& verdict,
                     Orientation orientation) {
  const auto& cases = verdict.cases(orientation);
  if (cases.empty()) {
    throw Error(ErrorCode::kNotRealizable,
                std::string("no ") +
                    (orientation == Orientation::Preserving
                         ? "orientation preserving"
                         : "orientation reversing") +
                    " case matches");
  }
  // Cases are listed in case order with the direct reading first, which is
  // the construction priority.
  return cases.front();
}

Realization realize(const BipartiteAutomorphism& aut, Orientation orientation,
                    std::uint64_t seed) {
  const CycleSignature sig = signature(aut);
  const RealizabilityVerdict verdict = classify(sig);
  const CaseId chosen = dispatch_case(verdict, orientation);

  Context ctx{aut,
              sig,
              chosen,
              chosen.interchanged ? Part::W : Part::V,
              sig.order,
              collect_cycles(aut),
              SubdividedGraph(aut.shape())};

  SeededGenerator rng(seed);
  std::vector<Landmark> marks;
  std::vector<Vector4> points;
  std::optional<Isometry4> iso;

  switch (chosen.number) {
    case 1:
      if (sig.side_action == SideAction::Preserving) {
        iso = build_rotation(ctx, rng, marks, points);
      } else {
        iso = build_glide(ctx, rng, marks, points);
      }
      break;
    case 2:
    case 3:
      iso = build_rotation(ctx, rng, marks, points);
      break;
    case 4: case 5: case 6: case 7: case 8: case 9:
      iso = build_glide(ctx, rng, marks, points);
      break;
    case 11:
      iso = build_reflection(ctx, rng, marks, points);
      break;
    case 10: case 12: case 13:
      iso = build_improper(ctx, rng, marks, points);
      break;
    default:
      throw Error(ErrorCode::kNotRealizable, "unknown case " + chosen.label());
  }

  SpatialEmbedding emb(std::move(ctx.graph), std::move(points), std::move(marks));
  return Realization{*iso, std::move(emb), chosen, seed};
}

}  // namespace bipsym
