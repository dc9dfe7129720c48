#include "bipsym/bipartite.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "bipsym/error.hpp"

namespace bipsym {

BipartiteShape::BipartiteShape(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 1) {
    throw Error(ErrorCode::kInvalidShape,
                "K_{" + std::to_string(n) + "," + std::to_string(m) +
                    "} needs both parts non-empty");
  }
}

std::string to_string(VertexId v) {
  return (v.part == Part::V ? "v" : "w") + std::to_string(v.index);
}

VertexId parse_vertex(std::string_view token, const BipartiteShape& shape) {
  if (token.size() < 2 || (token[0] != 'v' && token[0] != 'w')) {
    throw Error(ErrorCode::kParseError,
                "bad vertex token '" + std::string(token) + "'");
  }
  const std::string_view digits = token.substr(1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw Error(ErrorCode::kParseError,
                "bad vertex token '" + std::string(token) + "'");
  }
  int index = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorCode::kParseError,
                "bad vertex token '" + std::string(token) + "'");
  }
  VertexId v{token[0] == 'v' ? Part::V : Part::W, index};
  if (index < 1 || index > shape.size(v.part)) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::string(token) + " outside K_{" +
                    std::to_string(shape.n()) + "," +
                    std::to_string(shape.m()) + "}");
  }
  return v;
}

int flat_index(const BipartiteShape& shape, VertexId v) {
  if (v.index < 1 || v.index > shape.size(v.part)) {
    throw Error(ErrorCode::kInvalidVertex, to_string(v) + " out of range");
  }
  return v.part == Part::V ? v.index - 1 : shape.n() + v.index - 1;
}

VertexId vertex_at(const BipartiteShape& shape, int flat) {
  if (flat < 0 || flat >= shape.vertex_count()) {
    throw Error(ErrorCode::kInvalidVertex,
                "flat index " + std::to_string(flat) + " out of range");
  }
  return flat < shape.n() ? VertexId{Part::V, flat + 1}
                          : VertexId{Part::W, flat - shape.n() + 1};
}

std::string_view to_string(SideAction a) {
  return a == SideAction::Preserving ? "preserving" : "swapping";
}

VertexId BipartiteAutomorphism::operator()(VertexId v) const {
  return vertex_at(shape_, image(flat_index(shape_, v)));
}

bool BipartiteAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::int64_t BipartiteAutomorphism::order() const {
  std::int64_t r = 1;
  for (const auto& c : cycles()) {
    r = std::lcm(r, static_cast<std::int64_t>(c.size()));
  }
  return r;
}

std::vector<std::vector<int>> BipartiteAutomorphism::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = static_cast<int>(start); !seen[static_cast<std::size_t>(x)];
         x = image(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string BipartiteAutomorphism::to_cycle_notation() const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ' ';
      out += to_string(vertex_at(shape_, c[i]));
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

BipartiteAutomorphism make_automorphism_flat(const BipartiteShape& shape,
                                             std::vector<int> image) {
  const int total = shape.vertex_count();
  if (static_cast<int>(image.size()) != total) {
    throw Error(ErrorCode::kInvalidVertex,
                "image has " + std::to_string(image.size()) +
                    " entries, expected " + std::to_string(total));
  }
  for (int x : image) {
    if (x < 0 || x >= total) {
      throw Error(ErrorCode::kInvalidVertex,
                  "image entry " + std::to_string(x) + " out of range");
    }
  }

  // Part structure first: the image of each part must land in a single part.
  auto landing = [&](int begin, int end) -> std::optional<Part> {
    const Part first = part_of(shape, image[static_cast<std::size_t>(begin)]);
    for (int i = begin + 1; i < end; ++i) {
      if (part_of(shape, image[static_cast<std::size_t>(i)]) != first) {
        return std::nullopt;
      }
    }
    return first;
  };
  const auto v_lands = landing(0, shape.n());
  const auto w_lands = landing(shape.n(), total);
  if (v_lands == Part::W && shape.n() != shape.m()) {
    throw Error(ErrorCode::kSwapOnUnequalParts,
                "V is sent to W but n != m");
  }
  if (!v_lands || !w_lands) {
    throw Error(ErrorCode::kMixedParts,
                "a part is mapped partly into V and partly into W");
  }

  std::vector<bool> hit(static_cast<std::size_t>(total), false);
  for (int x : image) {
    if (hit[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::kNotBijective,
                  to_string(vertex_at(shape, x)) + " has two preimages");
    }
    hit[static_cast<std::size_t>(x)] = true;
  }
  // Bijective and V lands in a single part: W lands in the other one.
  const SideAction side =
      *v_lands == Part::V ? SideAction::Preserving : SideAction::Swapping;
  return BipartiteAutomorphism(shape, std::move(image), side);
}

BipartiteAutomorphism make_automorphism(const BipartiteShape& shape,
                                        std::span<const VertexId> image) {
  std::vector<int> flat;
  flat.reserve(image.size());
  for (const VertexId& v : image) flat.push_back(flat_index(shape, v));
  return make_automorphism_flat(shape, std::move(flat));
}

BipartiteAutomorphism identity_automorphism(const BipartiteShape& shape) {
  std::vector<int> image(static_cast<std::size_t>(shape.vertex_count()));
  std::iota(image.begin(), image.end(), 0);
  return make_automorphism_flat(shape, std::move(image));
}

BipartiteAutomorphism parse_cycles(const BipartiteShape& shape,
                                   std::string_view text) {
  std::vector<int> image(static_cast<std::size_t>(shape.vertex_count()));
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> used(image.size(), false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParseError,
                what + " at offset " + std::to_string(pos) + " in '" +
                    std::string(text) + "'");
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      const std::size_t begin = pos;
      while (pos < text.size() && text[pos] != ')' && text[pos] != '(' &&
             !std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == begin) fail("expected a vertex");
      const VertexId v = parse_vertex(text.substr(begin, pos - begin), shape);
      const int f = flat_index(shape, v);
      if (used[static_cast<std::size_t>(f)]) {
        throw Error(ErrorCode::kDuplicateVertex,
                    to_string(v) + " appears twice in '" + std::string(text) +
                        "'");
      }
      used[static_cast<std::size_t>(f)] = true;
      cycle.push_back(f);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      image[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return make_automorphism_flat(shape, std::move(image));
}

BipartiteAutomorphism compose(const BipartiteAutomorphism& a,
                              const BipartiteAutomorphism& b) {
  if (!(a.shape() == b.shape())) {
    throw Error(ErrorCode::kShapeMismatch, "compose of different shapes");
  }
  std::vector<int> image(b.images().size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    image[i] = a.image(b.image(static_cast<int>(i)));
  }
  return make_automorphism_flat(a.shape(), std::move(image));
}

BipartiteAutomorphism inverse(const BipartiteAutomorphism& a) {
  std::vector<int> image(a.images().size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    image[static_cast<std::size_t>(a.image(static_cast<int>(i)))] =
        static_cast<int>(i);
  }
  return make_automorphism_flat(a.shape(), std::move(image));
}

BipartiteAutomorphism power(const BipartiteAutomorphism& a, std::int64_t k) {
  // Per cycle: x at position i goes to position (i + k) mod len.
  std::vector<int> image(a.images().size());
  for (const auto& c : a.cycles()) {
    const auto len = static_cast<std::int64_t>(c.size());
    const std::int64_t shift = ((k % len) + len) % len;
    for (std::size_t i = 0; i < c.size(); ++i) {
      image[static_cast<std::size_t>(c[i])] =
          c[static_cast<std::size_t>((static_cast<std::int64_t>(i) + shift) %
                                     len)];
    }
  }
  return make_automorphism_flat(a.shape(), std::move(image));
}

CycleSignature signature(const BipartiteAutomorphism& aut) {
  const BipartiteShape& shape = aut.shape();
  CycleSignature sig;
  sig.shape = shape;
  sig.side_action = aut.side_action();
  sig.order = 1;
  for (const auto& c : aut.cycles()) {
    const int len = static_cast<int>(c.size());
    sig.order = std::lcm(sig.order, static_cast<std::int64_t>(len));
    const bool has_v = std::any_of(c.begin(), c.end(), [&](int x) {
      return part_of(shape, x) == Part::V;
    });
    const bool has_w = std::any_of(c.begin(), c.end(), [&](int x) {
      return part_of(shape, x) == Part::W;
    });
    if (has_v && has_w) {
      sig.mixed_cycles.push_back(len);
    } else if (len == 1) {
      (has_v ? sig.fixed_v : sig.fixed_w) += 1;
    } else {
      (has_v ? sig.pure_v_cycles : sig.pure_w_cycles).push_back(len);
    }
  }
  std::sort(sig.pure_v_cycles.begin(), sig.pure_v_cycles.end());
  std::sort(sig.pure_w_cycles.begin(), sig.pure_w_cycles.end());
  std::sort(sig.mixed_cycles.begin(), sig.mixed_cycles.end());
  return sig;
}

CycleSignature interchange_parts(const CycleSignature& sig) {
  CycleSignature out = sig;
  out.shape = sig.shape.transposed();
  std::swap(out.fixed_v, out.fixed_w);
  std::swap(out.pure_v_cycles, out.pure_w_cycles);
  return out;
}

std::string describe(const CycleSignature& sig) {
  std::ostringstream os;
  auto list = [&os](const std::vector<int>& xs) {
    os << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << '}';
  };
  os << "K_{" << sig.shape.n() << ',' << sig.shape.m() << "} "
     << to_string(sig.side_action) << " r=" << sig.order
     << " fixed=(" << sig.fixed_v << ',' << sig.fixed_w << ") V=";
  list(sig.pure_v_cycles);
  os << " W=";
  list(sig.pure_w_cycles);
  os << " mixed=";
  list(sig.mixed_cycles);
  return os.str();
}

int SubdividedGraph::add_subdivision(int a, int b, std::string label) {
  const int total = shape_.vertex_count();
  if (a < 0 || b < 0 || a >= total || b >= total ||
      part_of(shape_, a) == part_of(shape_, b)) {
    throw Error(ErrorCode::kInvalidVertex,
                "subdivision endpoints must form a V-W edge");
  }
  if (part_of(shape_, a) == Part::W) std::swap(a, b);
  if (subdivision_on(a, b)) {
    throw Error(ErrorCode::kDuplicateVertex,
                "edge " + node_name(a) + "-" + node_name(b) +
                    " already subdivided");
  }
  subs_.push_back({a, b, std::move(label)});
  return total + static_cast<int>(subs_.size()) - 1;
}

std::optional<int> SubdividedGraph::subdivision_on(int a, int b) const {
  if (a >= shape_.n()) std::swap(a, b);
  for (std::size_t k = 0; k < subs_.size(); ++k) {
    if (subs_[k].v == a && subs_[k].w == b) {
      return shape_.vertex_count() + static_cast<int>(k);
    }
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> SubdividedGraph::adjacent_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int n = shape_.n();
  for (int v = 0; v < n; ++v) {
    for (int w = n; w < shape_.vertex_count(); ++w) {
      if (const auto z = subdivision_on(v, w)) {
        out.emplace_back(v, *z);
        out.emplace_back(w, *z);
      } else {
        out.emplace_back(v, w);
      }
    }
  }
  return out;
}

std::string SubdividedGraph::node_name(int node) const {
  if (node < shape_.vertex_count()) return to_string(vertex_at(shape_, node));
  return subs_.at(static_cast<std::size_t>(node - shape_.vertex_count())).label;
}

std::optional<std::vector<int>> extend_to_subdivision(
    const BipartiteAutomorphism& aut, const SubdividedGraph& graph) {
  if (!(aut.shape() == graph.shape())) {
    throw Error(ErrorCode::kShapeMismatch, "subdivided graph shape differs");
  }
  std::vector<int> image(static_cast<std::size_t>(graph.node_count()));
  for (int x = 0; x < aut.shape().vertex_count(); ++x) {
    image[static_cast<std::size_t>(x)] = aut.image(x);
  }
  const int base = aut.shape().vertex_count();
  for (std::size_t k = 0; k < graph.subdivisions().size(); ++k) {
    const auto& s = graph.subdivisions()[k];
    const auto target = graph.subdivision_on(aut.image(s.v), aut.image(s.w));
    if (!target) return std::nullopt;
    image[static_cast<std::size_t>(base) + k] = *target;
  }
  return image;
}

}  // namespace bipsym
