#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mt/interleaving.hpp"
#include "mt/locally_correct.hpp"

namespace mt {

// Tree format: {"nodes":[{"id":0,"height":"0","parent":2},...]}; heights are
// exact rational strings or "inf", parent null on the root.
nlohmann::json tree_to_json(const merge_tree& t);
std::vector<tree_node> raw_nodes_from_json(const nlohmann::json& j);  // shape checks only
merge_tree tree_from_json(const nlohmann::json& j);                   // re-runs validate

// Point: {"carrier":0,"height":"2"}; the root point is {"carrier":null,"height":"inf"}.
nlohmann::json point_to_json(const point& p);
point point_from_json(const merge_tree& t, const nlohmann::json& j);

// Interleaving: {"forward":[{"src":...,"tgt":...}],"backward":[...]}.
nlohmann::json interleaving_to_json(const partial_interleaving& p);
partial_interleaving interleaving_from_json(const tree_pair& tp, const nlohmann::json& j);

nlohmann::json anchored_to_json(const anchored_interleaving& i);
anchored_interleaving anchored_from_json(const tree_pair& tp, const nlohmann::json& j);

nlohmann::json trace_to_json(const std::vector<pipeline_step>& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
nlohmann::json load_json(const std::string& path);

}  // namespace mt
