#pragma once

// Helpers shared by the test binaries, including oracles that do not go
// through the library's own enumeration or classification code.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bipsym/bipartite.hpp"

namespace bipsym::testing {

inline const std::vector<BipartiteShape>& desk_shapes() {
  static const std::vector<BipartiteShape> shapes = {{3, 3}, {3, 4}, {4, 3}, {4, 4}};
  return shapes;
}

inline std::string shape_name(const BipartiteShape& s) {
  return "K" + std::to_string(s.n()) + std::to_string(s.m());
}

// Every permutation of the n + m vertices that maps edges to edges, found by
// running through all (n + m)! vertex permutations.
inline std::set<std::vector<int>> brute_force_automorphisms(const BipartiteShape& s) {
  const int total = s.vertex_count();
  auto adjacent = [&](int a, int b) { return (a < s.n()) != (b < s.n()); };
  std::vector<int> p(static_cast<std::size_t>(total));
  std::iota(p.begin(), p.end(), 0);
  std::set<std::vector<int>> out;
  do {
    bool ok = true;
    for (int a = 0; a < total && ok; ++a) {
      for (int b = a + 1; b < total && ok; ++b) {
        if (adjacent(a, b) != adjacent(p[static_cast<std::size_t>(a)],
                                       p[static_cast<std::size_t>(b)])) {
          ok = false;
        }
      }
    }
    if (ok) out.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> image_vector(const BipartiteAutomorphism& a) {
  return {a.images().begin(), a.images().end()};
}

// Order of a permutation by repeated application.
inline std::int64_t order_by_iteration(const std::vector<int>& img) {
  std::vector<int> cur = img;
  std::vector<int> id(img.size());
  std::iota(id.begin(), id.end(), 0);
  std::int64_t k = 1;
  while (cur != id) {
    std::vector<int> next(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] = img[static_cast<std::size_t>(cur[i])];
    cur = std::move(next);
    ++k;
  }
  return k;
}

}  // namespace bipsym::testing
