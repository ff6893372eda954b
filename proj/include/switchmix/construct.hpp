#pragma once

#include "switchmix/degseq.hpp"
#include "switchmix/graph.hpp"

namespace switchmix {

/// Deterministic Havel–Hakimi realization. The vertex with the largest
/// residual degree is connected to the vertices of largest residual degree;
/// ties go to the smaller index. Throws NotRealizable for non-graphical input.
Graph realize(const DegreeSequence& d);

/// Deterministic Kleitman–Wang realization. The smallest-index vertex with
/// residual out-degree sends arcs to the vertices of largest residual
/// in-degree (ties: larger residual out-degree, then smaller index).
/// Throws NotRealizable for non-digraphical input, including unequal totals.
Digraph realize_directed(const DirectedDegreeSequence& dd);

}  // namespace switchmix
