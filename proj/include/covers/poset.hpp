// Pairwise cover / stronger analysis of a family of connected graphs, with
// Hasse reduction and DOT emission (green arrows for covering projections,
// purple for stronger-only pairs).
#pragma once

#include <string>
#include <vector>

#include "covers/stronger.hpp"

namespace covers {

struct PosetNode {
  std::string name;
  Multigraph graph;
};

struct PosetReport {
  std::vector<PosetNode> nodes;
  std::vector<std::vector<bool>> covers;                 // covers[i][j]: node i covers node j
  std::vector<std::vector<StrongerEvidence>> stronger;   // stronger[i][j], diagonal untouched
  std::vector<std::pair<int, int>> cover_hasse;          // green arrows
  std::vector<std::pair<int, int>> stronger_only_hasse;  // purple arrows
  std::vector<std::string> anomalies;                    // consistency findings, normally empty
  int budget = 0;

  bool is_stronger(int i, int j) const { return i == j || stronger[i][j].is_stronger(); }
};

// Pre: all graphs connected with at most 8 vertices.
PosetReport cover_poset(const std::vector<PosetNode>& nodes, int budget);

PosetReport figure5_poset(int budget = 16);

std::string poset_to_text(const PosetReport& report);
std::string poset_to_json(const PosetReport& report);
std::string poset_to_dot(const PosetReport& report);

}  // namespace covers
