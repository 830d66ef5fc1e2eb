#pragma once

#include <optional>
#include <string>

#include "nbcolor/graph.hpp"

namespace nbcolor {

// Structural gate for all spectral operations: the non-backtracking operator
// has usable Perron data exactly when the 2-core is nonempty, not a cycle,
// non-bipartite and aperiodic.
struct EligibilityReport {
    bool connected = false;      // of the input graph
    int two_core_size = 0;
    bool is_cycle = false;       // 2-core is a single cycle
    bool is_bipartite = false;
    int period = 0;              // 0 when the 2-core is empty; cycles report their length
    int min_core_degree = -1;    // -1 when the 2-core is empty
    std::optional<int> girth_value; // nullopt = acyclic
    int m_max = 0;               // largest m with girth >= 2m+1 (0 when acyclic)
    bool eligible = false;
    std::string reason;          // first violated condition when ineligible
};

EligibilityReport classify(const Graph& g);

} // namespace nbcolor
