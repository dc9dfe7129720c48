// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bipsym/census.hpp"
#include "bipsym/classifier.hpp"
#include "bipsym/error.hpp"
#include "bipsym/json_io.hpp"
#include "bipsym/realize.hpp"
#include "bipsym/verifier.hpp"
#include "support.hpp"

namespace {

using namespace bipsym;
using Clock = std::chrono::steady_clock;

constexpr double kVerifyTol = 1e-9;
constexpr double kCensusSeconds = 5.0;
constexpr double kSoundnessSeconds = 60.0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure messages; a criterion passes when none were recorded.
struct Tally {
  std::vector<std::string> failures;
  std::uint64_t checked = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

Tally census_totals() {
  Tally t;
  const std::vector<std::pair<BipartiteShape, std::uint64_t>> expected = {
      {{3, 3}, 72}, {{3, 4}, 144}, {{4, 4}, 1152}, {{4, 3}, 144}};
  for (const auto& [shape, total] : expected) {
    const auto start = Clock::now();
    const auto report = census(shape);
    const double s = seconds_since(start);
    const std::string name = testing::shape_name(shape);
    t.expect(report.total == total, name + " total " + std::to_string(report.total));
    t.expect(s < kCensusSeconds, name + " took " + std::to_string(s) + " s");
  }
  return t;
}

Tally closure() {
  Tally t;
  for (const auto& shape : testing::desk_shapes()) {
    const std::string name = testing::shape_name(shape);
    std::vector<BipartiteAutomorphism> all;
    std::vector<BipartiteAutomorphism> preserving;
    for (const auto& a : enumerate_automorphisms(shape)) {
      all.push_back(a);
      if (a.side_action() == SideAction::Preserving) preserving.push_back(a);
    }
    for (const auto& a : all) {
      const auto v = classify_aut(a);
      const std::string tag = name + " " + a.to_cycle_notation();
      const std::int64_t r = a.order();
      if (v.or_realizable()) {
        t.expect(r % 2 == 0, tag + ": reversing with odd order");
        t.expect(classify_aut(power(a, 2)).op_realizable(), tag + ": square not OP");
      }
      if (v.op_realizable()) {
        for (std::int64_t k = 1; k <= r; ++k) {
          t.expect(classify_aut(power(a, k)).op_realizable(),
                   tag + " ^ " + std::to_string(k) + " not OP");
        }
      }
      const auto inv = inverse(a);
      t.expect(signature(inv) == signature(a), tag + ": inverse changes signature");
      t.expect(classify_aut(inv) == v, tag + ": inverse changes verdict");
    }
    std::mt19937 rng(20240601);
    for (int i = 0; i < 100; ++i) {
      const auto& a = all[rng() % all.size()];
      const auto& b = preserving[rng() % preserving.size()];
      const auto c = compose(compose(b, a), inverse(b));
      t.expect(signature(c) == signature(a) && classify_aut(c) == classify_aut(a),
               name + ": conjugating " + a.to_cycle_notation() + " by " +
                   b.to_cycle_notation());
    }
  }
  return t;
}

Tally spot_checks() {
  Tally t;
  struct Spot {
    BipartiteShape shape;
    const char* perm;
    std::vector<std::string> op;
    std::vector<std::string> orr;
  };
  const std::vector<Spot> spots = {
      {{3, 3}, "(v1 v2 v3)(w1 w2 w3)", {"OP1"}, {}},
      {{3, 4}, "(w3 w4)", {}, {"OR11"}},
      {{4, 4}, "(v1 w1)(v2 w2)(v3 w3 v4 w4)", {}, {"OR13"}},
      {{4, 3}, "(v1 v2 v3)(w1 w2)", {}, {}},
  };
  for (const Spot& s : spots) {
    const auto v = classify_aut(parse_cycles(s.shape, s.perm));
    const std::string tag = testing::shape_name(s.shape) + " " + s.perm;
    t.expect(v.labels(Orientation::Preserving) == s.op, tag + ": OP labels differ");
    t.expect(v.labels(Orientation::Reversing) == s.orr, tag + ": OR labels differ");
  }
  return t;
}

Tally soundness() {
  Tally t;
  const auto start = Clock::now();
  for (const auto& shape : testing::desk_shapes()) {
    for (const auto& a : enumerate_automorphisms(shape)) {
      const auto v = classify_aut(a);
      for (Orientation o : {Orientation::Preserving, Orientation::Reversing}) {
        if (!v.realizable(o)) continue;
        const std::string tag = testing::shape_name(shape) + " " + a.to_cycle_notation() +
                                " " + std::string(short_name(o));
        try {
          const auto r = realize(a, o, 1);
          const auto cert = verify(a, r.isometry, r.embedding, kVerifyTol);
          std::string failed;
          for (const auto& c : cert.checks) {
            if (!c.pass) failed += " " + c.name;
          }
          t.expect(cert.overall(), tag + ": failed" + failed);
        } catch (const Error& e) {
          t.expect(false, tag + ": " + e.what());
        }
      }
    }
  }
  const double s = seconds_since(start);
  t.expect(s < kSoundnessSeconds, "took " + std::to_string(s) + " s");
  return t;
}

// Reduced fractions a/p with p in [1, max_den].
std::vector<RationalAngle> angles_up_to(int max_den) {
  std::vector<RationalAngle> out;
  for (int p = 1; p <= max_den; ++p) {
    for (int a = 0; a < p; ++a) {
      if (std::gcd(a, p) == 1) out.emplace_back(a, p);
    }
  }
  return out;
}

Tally topology() {
  Tally t;
  constexpr int kMaxOrder = 24;
  auto smith = [&](const Isometry4& iso, const std::string& tag) {
    const auto cert = smith_check(iso);
    t.expect(cert.overall(), "smith " + tag);
  };
  for (int r = 1; r <= kMaxOrder; ++r) smith(rotation_isometry(r), "rotation " + std::to_string(r));
  smith(reflection_isometry(), "reflection");
  const auto angles = angles_up_to(kMaxOrder);
  auto name = [](const RationalAngle& a) {
    return std::to_string(a.num()) + "/" + std::to_string(a.den());
  };
  for (const auto& alpha : angles) {
    for (const auto& beta : angles) {
      if (std::lcm(alpha.den(), beta.den()) > kMaxOrder) continue;
      smith(glide_isometry(alpha, beta), "glide " + name(alpha) + " " + name(beta));
    }
    if (std::lcm(alpha.den(), std::int64_t{2}) <= kMaxOrder) {
      smith(improper_isometry(alpha), "improper " + name(alpha));
    }
  }

  for (int j = 2; j <= 8; ++j) {
    for (int k = j + 1; k <= 8; ++k) {
      const std::string tag = "two circles " + std::to_string(j) + "," + std::to_string(k);
      const auto g = glide_isometry(RationalAngle(1, j), RationalAngle(1, k));
      t.expect(g.claimed_order() == std::lcm(j, k), tag + ": order");
      const auto cert = two_circle_check(g);
      t.expect(cert.overall(), tag + ": check failed");
      const auto* count = cert.find("at_most_two_circles");
      const double circles = k % j == 0 ? 1.0 : 2.0;
      t.expect(count && count->measured == circles, tag + ": circle count");
      if (circles == 2.0) {
        const auto* l = cert.find("lcm");
        t.expect(l && l->pass && l->measured == static_cast<double>(std::lcm(j, k)),
                 tag + ": lcm");
        const auto* comp = cert.find("complementary");
        t.expect(comp && comp->pass, tag + ": complementary");
      }
    }
  }
  return t;
}

Tally negative_controls() {
  Tally t;
  const BipartiteShape shape(3, 3);
  const auto aut = parse_cycles(shape, "(v1 v2 v3)(w1 w2 w3)");
  const auto r = realize(aut, Orientation::Preserving, 1);
  auto check = [&](std::vector<Vector4> pts, const char* name) {
    const SpatialEmbedding emb(r.embedding.graph(), std::move(pts), r.embedding.landmarks());
    const auto cert = verify(aut, r.isometry, emb, kVerifyTol);
    const auto* c = cert.find(name);
    return c != nullptr && !c->pass && !cert.overall();
  };
  t.expect(verify(aut, r.isometry, r.embedding, kVerifyTol).overall(), "baseline fails");

  auto swapped = r.embedding.points();
  std::swap(swapped[0], swapped[3]);
  t.expect(check(swapped, "induces"), "swapped pair not caught");

  auto off = r.embedding.points();
  off[1] *= 1.01;
  t.expect(check(off, "unit_norm"), "off-sphere vertex not caught");

  for (int coord = 0; coord < 4; ++coord) {
    auto moved = r.embedding.points();
    moved[4](coord) += 10 * kVerifyTol;
    t.expect(check(moved, "induces"),
             "perturbation of coordinate " + std::to_string(coord) + " not caught");
  }
  return t;
}

Tally determinism() {
  Tally t;
  for (const auto& shape : testing::desk_shapes()) {
    const std::string name = testing::shape_name(shape);
    CensusOptions o;
    o.seed = 17;
    o.realize_all = true;
    t.expect(canonical_dump(to_json(census(shape, o))) == canonical_dump(to_json(census(shape, o))),
             name + ": census bytes differ");
  }
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bipsym_acceptance_cache";
  fs::remove_all(dir);
  CensusOptions o;
  o.seed = 17;
  bool hit = true;
  const auto fresh = census_cached({4, 4}, o, dir, &hit);
  t.expect(!hit, "empty cache reported a hit");
  const auto cached = census_cached({4, 4}, o, dir, &hit);
  t.expect(hit, "second read missed the cache");
  t.expect(fresh == cached && cached == census({4, 4}, o), "cached report differs");
  fs::remove_all(dir);
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<Tally()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "census totals", census_totals},
      {2, "closure over full enumerations", closure},
      {3, "pinned spot checks", spot_checks},
      {4, "realization soundness", soundness},
      {5, "topology suites", topology},
      {6, "negative controls", negative_controls},
      {7, "determinism and cache", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = t.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("criterion %d %s: %s (%llu checks, %.2f s)\n", c.number, c.title,
                ok ? "PASS" : "FAIL", static_cast<unsigned long long>(t.checked),
                seconds_since(start));
    for (std::size_t i = 0; i < t.failures.size() && i < 10; ++i) {
      std::printf("    %s\n", t.failures[i].c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}
