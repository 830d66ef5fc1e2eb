#include "nbcolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nbcolor/errors.hpp"
#include "nbcolor/rng.hpp"

namespace nbcolor {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v)
            throw parse_error("self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.edge_count_;
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.check_invariants();
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max<int>(d, static_cast<int>(nbrs.size()));
    return d;
}

double Graph::average_degree() const {
    if (vertex_count() == 0) return 0.0;
    return 2.0 * static_cast<double>(edge_count_) / vertex_count();
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_invariants() const {
    std::int64_t half_degrees = 0;
    for (int u = 0; u < vertex_count(); ++u) {
        const auto& nbrs = adj_[u];
        if (!std::is_sorted(nbrs.begin(), nbrs.end()))
            throw std::logic_error("adjacency list not sorted");
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::logic_error("multi-edge in adjacency list");
        for (int v : nbrs) {
            if (v == u) throw std::logic_error("self-loop");
            if (v < 0 || v >= vertex_count()) throw std::logic_error("neighbor out of range");
            if (!has_edge(v, u)) throw std::logic_error("adjacency not symmetric");
        }
        half_degrees += static_cast<std::int64_t>(nbrs.size());
    }
    if (half_degrees != 2 * edge_count_)
        throw std::logic_error("edge count does not match degree sum");
}

// --- ingestion --------------------------------------------------------------

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::optional<int> header_n;
    int max_id = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        if (first == "n") {
            long n = 0;
            std::string rest;
            if (!(ls >> n) || n < 0 || (ls >> rest))
                throw parse_error("malformed header at line " + std::to_string(line_no));
            header_n = static_cast<int>(n);
            continue;
        }
        long u, v;
        std::string rest;
        try {
            size_t pos = 0;
            u = std::stol(first, &pos);
            if (pos != first.size()) throw std::invalid_argument(first);
        } catch (const std::exception&) {
            throw parse_error("malformed token '" + first + "' at line " + std::to_string(line_no));
        }
        if (!(ls >> v) || (ls >> rest))
            throw parse_error("malformed edge at line " + std::to_string(line_no));
        if (u < 0 || v < 0)
            throw parse_error("negative vertex id at line " + std::to_string(line_no));
        if (u == v)
            throw parse_error("self-loop at line " + std::to_string(line_no));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max<int>(max_id, static_cast<int>(std::max(u, v)));
    }
    int n = header_n.value_or(max_id + 1);
    if (max_id >= n)
        throw parse_error("vertex id " + std::to_string(max_id) + " exceeds header n " +
                          std::to_string(n));
    return Graph::from_edges(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

// --- random generation ------------------------------------------------------

Graph sample_er(int n, double d, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_er: n must be >= 2");
    if (!(d > 0.0) || d >= n)
        throw std::invalid_argument("sample_er: require 0 < d < n");
    const double p = d / n;
    auto rng = make_rng(split_seed(seed, 0xE5));
    std::vector<std::pair<int, int>> edges;
    if (p >= 0.25) {
        std::bernoulli_distribution coin(p);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
    } else {
        // geometric skipping over the C(n,2) pair sequence
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const double log1mp = std::log1p(-p);
        std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
        std::int64_t idx = -1;
        while (true) {
            double u01 = unif(rng);
            std::int64_t skip = static_cast<std::int64_t>(std::floor(std::log1p(-u01) / log1mp));
            idx += 1 + skip;
            if (idx >= total) break;
            // decode pair index -> (u, v)
            std::int64_t rem = idx;
            int u = 0;
            while (rem >= n - 1 - u) {
                rem -= n - 1 - u;
                ++u;
            }
            int v = u + 1 + static_cast<int>(rem);
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

// --- structural analyses ----------------------------------------------------

TwoCoreResult two_core(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    std::queue<int> q;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) q.push(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (removed[v]) continue;
        removed[v] = true;
        for (int w : g.neighbors(v)) {
            if (removed[w]) continue;
            if (--deg[w] == 1) q.push(w);
        }
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) keep.push_back(v);
    TwoCoreResult res;
    res.core = induced_subgraph(g, keep, &res.old_to_new);
    res.new_to_old = keep;
    return res;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[src] = 0;
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best != -1 && 2 * dist[u] >= best) break;
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    // first collision: cycle through src of this length
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

BfsBall bfs_ball(const Graph& g, int root, int radius) {
    const int n = g.vertex_count();
    BfsBall ball;
    ball.dist.assign(n, -1);
    ball.parent.assign(n, -1);
    ball.dist[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (ball.dist[u] == radius) continue;
        for (int v : g.neighbors(u)) {
            if (ball.dist[v] != -1) continue;
            ball.dist[v] = ball.dist[u] + 1;
            ball.parent[v] = u;
            q.push(v);
        }
    }
    return ball;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto ball = bfs_ball(g, 0, g.vertex_count());
    return std::none_of(ball.dist.begin(), ball.dist.end(), [](int d) { return d == -1; });
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int src = 0; src < n; ++src) {
        if (color[src] != -1) continue;
        color[src] = 0;
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int src = 0; src < n; ++src) {
        if (comp[src] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[src] = id;
        std::queue<int> q;
        q.push(src);
        out[id].push_back(src);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (comp[v] != -1) continue;
                comp[v] = id;
                out[id].push_back(v);
                q.push(v);
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* old_to_new) {
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    std::vector<int> map(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) map[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int v : g.neighbors(u))
            if (u < v && map[v] != -1) edges.emplace_back(map[u], map[v]);
    if (old_to_new) *old_to_new = map;
    return Graph::from_edges(static_cast<int>(verts.size()), edges);
}

std::vector<int> greedy_color_2degenerate(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> order;
    order.reserve(n);
    // min-degree peeling; picking the current minimum keeps trees at 2 colors
    std::set<std::pair<int, int>> by_deg;
    for (int v = 0; v < n; ++v) by_deg.insert({deg[v], v});
    while (!by_deg.empty()) {
        auto [d, v] = *by_deg.begin();
        if (d > 2)
            throw eligibility_error("nonempty 3-core: " + std::to_string(by_deg.size()) +
                                    " vertices of degree >= 3 remain");
        by_deg.erase(by_deg.begin());
        removed[v] = true;
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (removed[w]) continue;
            by_deg.erase({deg[w], w});
            --deg[w];
            by_deg.insert({deg[w], w});
        }
    }
    std::vector<int> color(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        bool used[4] = {false, false, false, false};
        for (int w : g.neighbors(v))
            if (color[w] != 0) used[color[w]] = true;
        for (int c = 1; c <= 3; ++c) {
            if (!used[c]) {
                color[v] = c;
                break;
            }
        }
    }
    return color;
}

} // namespace nbcolor
