#include "covers/poset.hpp"

#include <sstream>

#include <json.hpp>

#include "covers/catalog.hpp"

namespace covers {

PosetReport cover_poset(const std::vector<PosetNode>& nodes, int budget) {
  const int n = static_cast<int>(nodes.size());
  for (const PosetNode& node : nodes) {
    if (!is_connected(node.graph)) throw error("cover_poset: graphs must be connected");
    if (node.graph.vertex_count() > 8) throw error("cover_poset: graphs must have at most 8 vertices");
  }
  PosetReport rep;
  rep.nodes = nodes;
  rep.budget = budget;
  rep.covers.assign(n, std::vector<bool>(n, false));
  rep.stronger.assign(n, std::vector<StrongerEvidence>(n));

  std::vector<WitnessSearchCache> caches(n);
  for (int i = 0; i < n; ++i) {
    rep.covers[i][i] = true;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      rep.covers[i][j] =
          find_cover(nodes[i].graph, nodes[j].graph, ProjectionKind::Cover).has_value();
      rep.stronger[i][j] = decide_stronger(nodes[i].graph, nodes[j].graph, budget, &caches[i]);
    }
  }

  // Consistency: a cover relation must imply a stronger verdict; both
  // relations must be transitively closed; no stronger verdict may stay
  // unknown next to a cover path.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rep.covers[i][j] && !rep.stronger[i][j].is_stronger())
        rep.anomalies.push_back(nodes[i].name + " covers " + nodes[j].name +
                                " but the stronger verdict disagrees");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        if (i == j || j == l || i == l) continue;
        if (rep.covers[i][j] && rep.covers[j][l] && !rep.covers[i][l])
          rep.anomalies.push_back("cover relation not transitive at " + nodes[i].name + " -> " +
                                  nodes[j].name + " -> " + nodes[l].name);
        if (rep.is_stronger(i, j) && rep.is_stronger(j, l) && !rep.is_stronger(i, l))
          rep.anomalies.push_back("stronger relation not transitive at " + nodes[i].name + " -> " +
                                  nodes[j].name + " -> " + nodes[l].name);
      }

  auto hasse = [&](auto relation) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !relation(i, j)) continue;
        if (relation(j, i)) continue;  // mutual pairs are left out of the diagram
        bool reduced = false;
        for (int l = 0; l < n && !reduced; ++l) {
          if (l == i || l == j) continue;
          if (relation(i, l) && relation(l, j) && !relation(l, i) && !relation(j, l)) reduced = true;
        }
        if (!reduced) out.push_back({i, j});
      }
    return out;
  };
  rep.cover_hasse = hasse([&](int i, int j) { return static_cast<bool>(rep.covers[i][j]); });
  auto stronger_hasse = hasse([&](int i, int j) { return rep.stronger[i][j].is_stronger(); });
  for (auto [i, j] : stronger_hasse)
    if (!rep.covers[i][j]) rep.stronger_only_hasse.push_back({i, j});
  return rep;
}

PosetReport figure5_poset(int budget) {
  std::vector<PosetNode> nodes;
  for (const std::string& name : figure5_names()) nodes.push_back({name, catalog(name).graph});
  return cover_poset(nodes, budget);
}

std::string poset_to_text(const PosetReport& rep) {
  std::ostringstream out;
  const int n = static_cast<int>(rep.nodes.size());
  out << "nodes: " << n << ", budget: " << rep.budget << "\n\n";
  out << "cover relation (rows cover columns):\n";
  for (int i = 0; i < n; ++i) {
    out << "  " << rep.nodes[i].name << " -> ";
    bool any = false;
    for (int j = 0; j < n; ++j)
      if (i != j && rep.covers[i][j]) {
        out << (any ? ", " : "") << rep.nodes[j].name;
        any = true;
      }
    if (!any) out << "(nothing)";
    out << "\n";
  }
  out << "\nstronger relation:\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const StrongerEvidence& ev = rep.stronger[i][j];
      out << "  " << rep.nodes[i].name << " vs " << rep.nodes[j].name << ": "
          << verdict_name(ev.verdict);
      if (ev.verdict == StrongerVerdict::StrongerByTheorem) out << " (" << ev.theorem << ")";
      if (ev.verdict == StrongerVerdict::NotStrongerByWitness && ev.witness)
        out << " (witness on " << ev.witness->vertex_count() << " vertices)";
      out << "\n";
    }
  if (!rep.anomalies.empty()) {
    out << "\nanomalies:\n";
    for (const std::string& s : rep.anomalies) out << "  " << s << "\n";
  }
  return out.str();
}

std::string poset_to_json(const PosetReport& rep) {
  nlohmann::ordered_json j;
  j["budget"] = rep.budget;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const PosetNode& node : rep.nodes) j["nodes"].push_back(node.name);
  auto cover_rows = nlohmann::ordered_json::object();
  const int n = static_cast<int>(rep.nodes.size());
  for (int i = 0; i < n; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j2 = 0; j2 < n; ++j2)
      if (i != j2 && rep.covers[i][j2]) row.push_back(rep.nodes[j2].name);
    cover_rows[rep.nodes[i].name] = row;
  }
  j["covers"] = cover_rows;
  auto stronger_rows = nlohmann::ordered_json::object();
  for (int i = 0; i < n; ++i) {
    auto row = nlohmann::ordered_json::object();
    for (int j2 = 0; j2 < n; ++j2) {
      if (i == j2) continue;
      const StrongerEvidence& ev = rep.stronger[i][j2];
      auto cell = nlohmann::ordered_json::object();
      cell["verdict"] = verdict_name(ev.verdict);
      if (!ev.theorem.empty()) cell["theorem"] = ev.theorem;
      if (ev.witness) cell["witness_vertices"] = ev.witness->vertex_count();
      if (ev.verdict == StrongerVerdict::NotStrongerByDivisibility) {
        cell["source_vertices"] = ev.source_vertices;
        cell["target_vertices"] = ev.target_vertices;
      }
      if (!ev.note.empty()) cell["note"] = ev.note;
      row[rep.nodes[j2].name] = cell;
    }
    stronger_rows[rep.nodes[i].name] = row;
  }
  j["stronger"] = stronger_rows;
  if (!rep.anomalies.empty()) j["anomalies"] = rep.anomalies;
  return j.dump(2) + "\n";
}

std::string poset_to_dot(const PosetReport& rep) {
  std::ostringstream out;
  out << "digraph poset {\n";
  for (const PosetNode& node : rep.nodes) out << "  \"" << node.name << "\";\n";
  for (auto [i, j] : rep.cover_hasse)
    out << "  \"" << rep.nodes[i].name << "\" -> \"" << rep.nodes[j].name
        << "\" [color=green];\n";
  for (auto [i, j] : rep.stronger_only_hasse)
    out << "  \"" << rep.nodes[i].name << "\" -> \"" << rep.nodes[j].name
        << "\" [color=purple];\n";
  out << "}\n";
  return out.str();
}

}  // namespace covers
