#include "nbcolor/eligibility.hpp"

#include <algorithm>

#include "nbcolor/nb_operator.hpp"

namespace nbcolor {

EligibilityReport classify(const Graph& g) {
    EligibilityReport rep;
    rep.connected = is_connected(g);
    rep.is_bipartite = bipartition(g).has_value();
    rep.girth_value = girth(g);
    rep.m_max = rep.girth_value ? (*rep.girth_value - 1) / 2 : 0;

    auto core = two_core(g);
    rep.two_core_size = core.core.vertex_count();
    if (rep.two_core_size == 0) {
        rep.eligible = false;
        rep.reason = "empty 2-core";
        return rep;
    }
    rep.min_core_degree = core.core.vertex_count() > 0
                              ? [&] {
                                    int d = core.core.degree(0);
                                    for (int v = 1; v < core.core.vertex_count(); ++v)
                                        d = std::min(d, core.core.degree(v));
                                    return d;
                                }()
                              : -1;
    rep.is_cycle = core.core.edge_count() == core.core.vertex_count() &&
                   core.core.max_degree() == 2 && is_connected(core.core);

    // period of B on the 2-core; for a disconnected core use its largest
    // component (eligibility then fails on connectivity anyway)
    auto comps = connected_components(core.core);
    const std::vector<int>* largest = &comps[0];
    for (const auto& c : comps)
        if (c.size() > largest->size()) largest = &c;
    Graph carrier = comps.size() == 1 ? core.core : induced_subgraph(core.core, *largest);
    rep.period = nb_period(carrier, edge_index(carrier));

    if (rep.is_cycle) {
        rep.eligible = false;
        rep.reason = "2-core is a cycle (B reducible)";
    } else if (rep.is_bipartite) {
        rep.eligible = false;
        rep.reason = "bipartite (B has even period)";
    } else if (comps.size() > 1) {
        rep.eligible = false;
        rep.reason = "2-core disconnected; analyze per component";
    } else if (rep.period != 1) {
        rep.eligible = false;
        rep.reason = "B has period " + std::to_string(rep.period) + " (subdivision)";
    } else {
        rep.eligible = true;
    }
    return rep;
}

} // namespace nbcolor
