#include "bipsym/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bipsym/error.hpp"

namespace bipsym {
namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void emit(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
      out += buf;
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
      out += '[';
      bool first = true;
      for (const Json& item : j) {
        if (!first) out += ',';
        if (flat) {
          if (!first) out += ' ';
        } else {
          out += '\n';
          out += pad;
        }
        emit(item, out, depth + 1);
        first = false;
      }
      if (!flat) {
        out += '\n';
        out += close_pad;
      }
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      // nlohmann::json keeps object keys in a std::map, hence sorted.
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        out += '\n';
        out += pad;
        out += Json(it.key()).dump();
        out += ": ";
        emit(it.value(), out, depth + 1);
        first = false;
      }
      out += '\n';
      out += close_pad;
      out += '}';
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorCode::kFormat, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    format_error(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    format_error(std::string("field \"") + what + "\" has the wrong type");
  }
}

Json point_json(const Vector4& p) { return Json::array({p(0), p(1), p(2), p(3)}); }

Vector4 point_from(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 4) format_error(what + " needs 4 coordinates");
  Vector4 p;
  for (int i = 0; i < 4; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_number()) {
      format_error(what + " has a non-numeric coordinate");
    }
    p(i) = j[static_cast<std::size_t>(i)].get<double>();
  }
  return p;
}

Landmark landmark_named(const std::string& name) {
  if (name == "X") return landmark_x();
  if (name == "Y") return landmark_y();
  if (name == "S") return landmark_s();
  if (name == "F") return landmark_f();
  format_error("unknown landmark \"" + name + "\"");
}

Json verdict_side(const RealizabilityVerdict& v, Orientation o) {
  return Json{{"realizable", v.realizable(o)}, {"cases", v.labels(o)}};
}

}  // namespace

std::string canonical_dump(const Json& j) {
  std::string out;
  emit(j, out, 0);
  out += '\n';
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    format_error(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const BipartiteAutomorphism& aut) {
  return Json{{"n", aut.shape().n()},
              {"m", aut.shape().m()},
              {"perm", aut.to_cycle_notation()}};
}

BipartiteAutomorphism automorphism_from_json(const Json& j) {
  const BipartiteShape shape(get_as<int>(field(j, "n"), "n"),
                             get_as<int>(field(j, "m"), "m"));
  return parse_cycles(shape, get_as<std::string>(field(j, "perm"), "perm"));
}

Json to_json(const RealizabilityVerdict& verdict) {
  Json interchanged = Json::object();
  for (const auto* cases : {&verdict.op_cases, &verdict.or_cases}) {
    for (const CaseId& c : *cases) {
      const std::string label = c.label();
      const bool only_flipped = !interchanged.contains(label) || interchanged[label].get<bool>();
      interchanged[label] = only_flipped && c.interchanged;
    }
  }
  return Json{{"op", verdict_side(verdict, Orientation::Preserving)},
              {"or", verdict_side(verdict, Orientation::Reversing)},
              {"interchanged", interchanged}};
}

Json to_json(const Realization& realization, const BipartiteAutomorphism& aut) {
  const Isometry4& iso = realization.isometry;
  const SpatialEmbedding& emb = realization.embedding;
  Json matrix = Json::array();
  for (int i = 0; i < 4; ++i) {
    matrix.push_back(Json::array({iso.matrix()(i, 0), iso.matrix()(i, 1),
                                  iso.matrix()(i, 2), iso.matrix()(i, 3)}));
  }
  Json vertices = Json::object();
  for (int node = 0; node < emb.shape().vertex_count(); ++node) {
    vertices[emb.graph().node_name(node)] = point_json(emb.point(node));
  }
  Json subdivision = Json::object();
  const auto& subs = emb.graph().subdivisions();
  for (std::size_t k = 0; k < subs.size(); ++k) {
    const int node = emb.shape().vertex_count() + static_cast<int>(k);
    subdivision[subs[k].label] =
        Json{{"edge", Json::array({emb.graph().node_name(subs[k].v),
                                   emb.graph().node_name(subs[k].w)})},
             {"point", point_json(emb.point(node))}};
  }
  Json landmarks = Json::array();
  for (const Landmark& l : emb.landmarks()) landmarks.push_back(l.name);

  Json out = to_json(aut);
  out["matrix"] = matrix;
  out["order"] = iso.claimed_order();
  out["orientation"] = std::string(short_name(iso.orientation()));
  out["vertices"] = vertices;
  out["subdivision"] = subdivision;
  out["landmarks"] = landmarks;
  out["case"] = realization.realized_case.label();
  out["seed"] = realization.seed;
  return out;
}

LoadedRealization realization_from_json(const Json& j) {
  BipartiteAutomorphism aut = automorphism_from_json(j);
  const BipartiteShape& shape = aut.shape();

  const Json& mj = field(j, "matrix");
  if (!mj.is_array() || mj.size() != 4) format_error("matrix needs 4 rows");
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m.row(i) = point_from(mj[static_cast<std::size_t>(i)], "matrix row").transpose();

  const std::string orient = get_as<std::string>(field(j, "orientation"), "orientation");
  if (orient != "op" && orient != "or") format_error("orientation must be op or or");
  const int order = get_as<int>(field(j, "order"), "order");
  if (order < 1) format_error("order must be positive");
  const Isometry4 iso = Isometry4::unvalidated(
      m, order, orient == "op" ? Orientation::Preserving : Orientation::Reversing);

  SubdividedGraph graph(shape);
  struct Pending {
    std::string label;
    Vector4 point;
  };
  std::vector<Pending> pending;
  if (j.contains("subdivision")) {
    const Json& sj = j.at("subdivision");
    if (!sj.is_object()) format_error("subdivision must be an object");
    for (auto it = sj.begin(); it != sj.end(); ++it) {
      const Json& edge = field(it.value(), "edge");
      if (!edge.is_array() || edge.size() != 2) format_error("edge needs two endpoints");
      const int a = flat_index(shape, parse_vertex(get_as<std::string>(edge[0], "edge"), shape));
      const int b = flat_index(shape, parse_vertex(get_as<std::string>(edge[1], "edge"), shape));
      graph.add_subdivision(a, b, it.key());
      pending.push_back({it.key(), point_from(field(it.value(), "point"), it.key())});
    }
  }

  std::vector<Vector4> points(static_cast<std::size_t>(graph.node_count()));
  const Json& vj = field(j, "vertices");
  for (int node = 0; node < shape.vertex_count(); ++node) {
    const std::string name = graph.node_name(node);
    if (!vj.contains(name)) format_error("no coordinates for " + name);
    points[static_cast<std::size_t>(node)] = point_from(vj.at(name), name);
  }
  for (std::size_t k = 0; k < pending.size(); ++k) {
    points[static_cast<std::size_t>(shape.vertex_count()) + k] = pending[k].point;
  }

  std::vector<Landmark> landmarks;
  if (j.contains("landmarks")) {
    for (const Json& name : j.at("landmarks")) {
      landmarks.push_back(landmark_named(get_as<std::string>(name, "landmarks")));
    }
  }

  return LoadedRealization{
      std::move(aut), iso,
      SpatialEmbedding(std::move(graph), std::move(points), std::move(landmarks)),
      j.contains("case") ? get_as<std::string>(j.at("case"), "case") : std::string(),
      j.contains("seed") ? get_as<std::uint64_t>(j.at("seed"), "seed") : 0};
}

Json to_json(const RealizationCertificate& cert) {
  Json checks = Json::array();
  for (const CheckResult& c : cert.checks) {
    Json item{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    item["measured"] = c.measured ? Json(*c.measured) : Json(nullptr);
    checks.push_back(std::move(item));
  }
  return Json{{"overall", cert.overall()}, {"checks", checks}};
}

Json to_json(const CensusReport& report) {
  Json out{{"shape", Json{{"n", report.shape.n()}, {"m", report.shape.m()}}},
           {"total", report.total},
           {"per_case", report.per_case},
           {"realizable_op", report.realizable_op},
           {"realizable_or", report.realizable_or},
           {"unrealizable_op", report.unrealizable_op},
           {"unrealizable_or", report.unrealizable_or},
           {"tool_version", report.tool_version},
           {"seed", report.seed}};
  if (report.realized_verified) out["realized_verified"] = *report.realized_verified;
  return out;
}

CensusReport census_from_json(const Json& j) {
  CensusReport r;
  const Json& shape = field(j, "shape");
  r.shape = BipartiteShape(get_as<int>(field(shape, "n"), "n"),
                           get_as<int>(field(shape, "m"), "m"));
  r.total = get_as<std::uint64_t>(field(j, "total"), "total");
  r.per_case = get_as<std::map<std::string, std::uint64_t>>(field(j, "per_case"), "per_case");
  r.realizable_op = get_as<std::uint64_t>(field(j, "realizable_op"), "realizable_op");
  r.realizable_or = get_as<std::uint64_t>(field(j, "realizable_or"), "realizable_or");
  r.unrealizable_op = get_as<std::uint64_t>(field(j, "unrealizable_op"), "unrealizable_op");
  r.unrealizable_or = get_as<std::uint64_t>(field(j, "unrealizable_or"), "unrealizable_or");
  if (j.contains("realized_verified")) {
    r.realized_verified = get_as<std::uint64_t>(j.at("realized_verified"), "realized_verified");
  }
  r.tool_version = get_as<std::string>(field(j, "tool_version"), "tool_version");
  r.seed = get_as<std::uint64_t>(field(j, "seed"), "seed");
  return r;
}

}  // namespace bipsym
