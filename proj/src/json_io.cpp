#include "mt/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mt {

namespace {

height height_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw std::invalid_argument("json: height must be a string");
  return height::parse(j.get<std::string>());
}

}  // namespace

nlohmann::json tree_to_json(const merge_tree& t) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& nd : t.nodes()) {
    nlohmann::json jn{{"id", nd.id}, {"height", nd.h.str()}};
    if (nd.parent)
      jn["parent"] = *nd.parent;
    else
      jn["parent"] = nullptr;
    nodes.push_back(std::move(jn));
  }
  return nlohmann::json{{"nodes", std::move(nodes)}};
}

std::vector<tree_node> raw_nodes_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array())
    throw std::invalid_argument("json: tree must be an object with a \"nodes\" array");
  std::vector<tree_node> out;
  for (const auto& jn : j["nodes"]) {
    if (!jn.is_object() || !jn.contains("id") || !jn.contains("height") || !jn.contains("parent"))
      throw std::invalid_argument("json: node needs id, height and parent");
    if (!jn["id"].is_number_integer()) throw std::invalid_argument("json: node id must be an integer");
    tree_node nd;
    nd.id = jn["id"].get<int>();
    nd.h = height_from_json(jn["height"]);
    if (jn["parent"].is_null())
      nd.parent = std::nullopt;
    else if (jn["parent"].is_number_integer())
      nd.parent = jn["parent"].get<int>();
    else
      throw std::invalid_argument("json: parent must be an integer or null");
    out.push_back(std::move(nd));
  }
  return out;
}

merge_tree tree_from_json(const nlohmann::json& j) { return merge_tree(raw_nodes_from_json(j)); }

nlohmann::json point_to_json(const point& p) {
  if (p.is_root()) return nlohmann::json{{"carrier", nullptr}, {"height", "inf"}};
  return nlohmann::json{{"carrier", p.carrier}, {"height", p.h.str()}};
}

point point_from_json(const merge_tree& t, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("carrier") || !j.contains("height"))
    throw std::invalid_argument("json: point needs carrier and height");
  if (j["carrier"].is_null()) {
    height h = height_from_json(j["height"]);
    if (!h.is_infinite()) throw std::invalid_argument("json: null carrier requires height inf");
    return point::root();
  }
  if (!j["carrier"].is_number_integer())
    throw std::invalid_argument("json: carrier must be an integer or null");
  int c = j["carrier"].get<int>();
  if (c < 0 || c >= t.node_count() || t.root() == c)
    throw std::invalid_argument("json: carrier is not a finite vertex id");
  height h = height_from_json(j["height"]);
  if (h.is_infinite()) throw std::invalid_argument("json: finite carrier with infinite height");
  return t.normalized(c, h);
}

namespace {

nlohmann::json map_to_json(const partial_up_map& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : m.arrows)
    arr.push_back(nlohmann::json{{"src", point_to_json(a.src)}, {"tgt", point_to_json(a.tgt)}});
  return arr;
}

partial_up_map map_from_json(const tree_pair& tp, dir d, const nlohmann::json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("json: arrow list must be an array");
  std::vector<arrow> arrows;
  for (const auto& ja : arr) {
    if (!ja.is_object() || !ja.contains("src") || !ja.contains("tgt"))
      throw std::invalid_argument("json: arrow needs src and tgt");
    arrows.push_back(
        {point_from_json(tp.src(d), ja["src"]), point_from_json(tp.tgt(d), ja["tgt"])});
  }
  return make_up_map(tp, d, std::move(arrows));
}

}  // namespace

nlohmann::json interleaving_to_json(const partial_interleaving& p) {
  return nlohmann::json{{"forward", map_to_json(p.fwd)}, {"backward", map_to_json(p.bwd)}};
}

partial_interleaving interleaving_from_json(const tree_pair& tp, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("forward") || !j.contains("backward"))
    throw std::invalid_argument("json: interleaving needs forward and backward arrays");
  partial_interleaving p{map_from_json(tp, dir::forward, j["forward"]),
                         map_from_json(tp, dir::backward, j["backward"])};
  if (auto e = validate_interleaving(tp, p))
    throw std::invalid_argument("json: invalid interleaving: " + *e);
  return p;
}

nlohmann::json anchored_to_json(const anchored_interleaving& i) {
  return nlohmann::json{{"forward", map_to_json(i.fwd)}, {"backward", map_to_json(i.bwd)}};
}

anchored_interleaving anchored_from_json(const tree_pair& tp, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("forward") || !j.contains("backward"))
    throw std::invalid_argument("json: interleaving needs forward and backward arrays");
  anchored_interleaving i{map_from_json(tp, dir::forward, j["forward"]),
                          map_from_json(tp, dir::backward, j["backward"])};
  if (auto e = verify_complete(tp, i))
    throw std::invalid_argument("json: not a complete interleaving: " + *e);
  return i;
}

nlohmann::json trace_to_json(const std::vector<pipeline_step>& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (size_t i = 0; i < trace.size(); ++i)
    arr.push_back(nlohmann::json{{"iteration", i},
                                 {"delta", trace[i].delta.str()},
                                 {"added", interleaving_to_json(trace[i].added)}});
  return nlohmann::json{{"iterations", std::move(arr)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

nlohmann::json load_json(const std::string& path) {
  return nlohmann::json::parse(read_file(path));
}

}  // namespace mt
