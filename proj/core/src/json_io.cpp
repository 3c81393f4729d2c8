#include "coarse/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coarse/error.hpp"

namespace coarse {

namespace {

using nlohmann::json;

json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

PermGroup group_from_json(const json& j, int max_elements) {
  try {
    const int degree = j.at("degree").get<int>();
    const std::string name = j.value("name", "");
    std::vector<Perm> gens;
    for (const auto& arr : j.at("generators"))
      gens.push_back(Perm(arr.get<std::vector<int>>()));
    return close_generators(degree, std::move(gens), name, max_elements);
  } catch (const json::exception& e) {
    throw ParseError(std::string("group object: ") + e.what());
  } catch (const StructureError& e) {
    throw ParseError(std::string("group object: ") + e.what());
  }
}

}  // namespace

InputKind sniff_kind(const std::string& path) {
  const json j = load(path);
  if (!j.is_object()) return InputKind::Unknown;
  if (j.contains("levels")) return InputKind::Tower;
  if (j.contains("generators")) return InputKind::Group;
  if (j.contains("triples")) return InputKind::Coarse;
  if (j.contains("nodes")) return InputKind::Tree;
  return InputKind::Unknown;
}

PermGroup read_group_file(const std::string& path, int max_elements) {
  return group_from_json(load(path), max_elements);
}

ProfiniteTower read_tower_file(const std::string& path, int max_elements) {
  const json j = load(path);
  ProfiniteTower T;
  try {
    for (const auto& lv : j.at("levels")) T.levels.push_back(group_from_json(lv, max_elements));
    T.maps.assign(T.levels.empty() ? 0 : T.levels.size() - 1, {});
    for (const auto& m : j.at("maps")) {
      const int from = m.at("from").get<int>();
      const int to = m.at("to").get<int>();
      if (to != from - 1 || from <= 0 || from >= static_cast<int>(T.levels.size()))
        throw ParseError("tower map endpoints must be adjacent levels");
      T.maps[static_cast<size_t>(to)] = m.at("element_map").get<std::vector<int>>();
    }
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return T;
}

CoarseStructure read_coarse_file(const std::string& path) {
  const json j = load(path);
  try {
    const int size = j.at("size").get<int>();
    std::vector<Triple> triples;
    for (const auto& t : j.at("triples")) {
      if (!t.is_array() || t.size() != 3) throw ParseError(path + ": malformed triple");
      triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return CoarseStructure(size, std::move(triples), std::move(labels));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const StructureError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

BinaryTree read_tree_file(const std::string& path) {
  const json j = load(path);
  try {
    return make_tree(j.at("nodes").get<std::vector<std::string>>(),
                     j.at("depth_bound").get<int>());
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const StructureError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string group_to_json(const PermGroup& G) {
  json j;
  j["name"] = G.name();
  j["degree"] = G.degree();
  j["generators"] = json::array();
  for (const Perm& g : G.generators()) j["generators"].push_back(g.images());
  return j.dump(2) + "\n";
}

std::string coarse_to_json(const CoarseStructure& M) {
  json j;
  j["size"] = M.size();
  j["triples"] = json::array();
  for (const Triple& t : M.triples()) j["triples"].push_back({t[0], t[1], t[2]});
  bool labelled = false;
  for (const std::string& s : M.labels())
    if (!s.empty()) labelled = true;
  if (labelled) j["labels"] = M.labels();
  return j.dump(2) + "\n";
}

std::string tree_to_json(const BinaryTree& T) {
  json j;
  j["nodes"] = T.nodes;
  j["depth_bound"] = T.depth_bound;
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

std::string coarse_to_dot(const CoarseStructure& M) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int a = 0; a < M.size(); ++a) {
    os << "  n" << a << " [label=\"" << a;
    if (!M.label(a).empty()) os << "\\n" << M.label(a);
    os << "\"";
    if (M.is_star_subgroup(a)) os << " shape=box";
    os << "];\n";
  }
  for (int a = 0; a < M.size(); ++a)
    for (int b = 0; b < M.size(); ++b) {
      if (a == b || !M.leq(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < M.size() && covering; ++c)
        if (c != a && c != b && M.leq(a, c) && M.leq(c, b)) covering = false;
      if (covering) os << "  n" << a << " -> n" << b << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string reports_to_json(const std::vector<AxiomReport>& reports, bool with_timings) {
  json arr = json::array();
  for (const AxiomReport& r : reports) {
    json j;
    j["axiom"] = r.axiom_id;
    j["holds"] = r.holds;
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (with_timings) j["elapsed_s"] = r.elapsed_s;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace coarse
