#pragma once

#include <string>
#include <vector>

namespace switchmix {

/// One labelled defect: the pair (x, y) carries label 2 or -1. Undirected
/// templates treat (x, y) as unordered, directed ones as the arc x -> y.
struct LabelledPair {
  int x = 0;
  int y = 0;
  int label = 0;
};

struct DefectTemplate {
  std::string name;
  int vertices = 0;
  std::vector<LabelledPair> pairs;
};

/// The five undirected configurations of four defect edges, each with its
/// free label set to 2 and to -1 (ten templates).
const std::vector<DefectTemplate>& undirected_catalog();

/// The eight directed configurations of five defect arcs, each under the two
/// label exchanges and full arc reversal (64 templates).
const std::vector<DefectTemplate>& directed_catalog();

/// True iff the labelled defects map injectively into the template,
/// preserving labels (and orientation when directed).
bool embeds(const std::vector<LabelledPair>& defects, const DefectTemplate& t, bool directed);

/// True iff the defects embed into some template of the matching catalog.
bool matches_catalog(const std::vector<LabelledPair>& defects, bool directed);

}  // namespace switchmix
