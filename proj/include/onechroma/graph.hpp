#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "onechroma/errors.hpp"

namespace onechroma {

// Unordered vertex pair, stored normalized (u < v).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u == v) throw input_error("loop edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    return u < v ? Edge{u, v} : Edge{v, u};
}

inline std::string edge_str(const Edge& e) {
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept in
// ascending order so every traversal is deterministic.
class Graph {
  public:
    explicit Graph(int n = 0) : adj_(n >= 0 ? static_cast<std::size_t>(n) : 0) {
        if (n < 0) throw input_error("negative vertex count");
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        Edge e = make_edge(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it != edges_.end() && *it == e)
            throw input_error("duplicate edge " + edge_str(e));
        edges_.insert(it, e);
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v) return false;
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    // Lexicographically sorted normalized edge list.
    const std::vector<Edge>& edges() const { return edges_; }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    int min_degree() const {
        if (adj_.empty()) return 0;
        int d = vertex_count();
        for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
        return d;
    }

    bool is_connected() const {
        int n = vertex_count();
        if (n <= 1) return true;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj_[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    q.push(w);
                }
        }
        return reached == n;
    }

    // Neighbor-set intersection per edge; no triangle iff no edge endpoint
    // pair has a common neighbor.
    bool is_triangle_free() const {
        for (const auto& [u, v] : edges_)
            if (have_common_neighbor(u, v)) return false;
        return true;
    }

    bool have_common_neighbor(int u, int v) const {
        const auto& a = adj_[static_cast<std::size_t>(u)];
        const auto& b = adj_[static_cast<std::size_t>(v)];
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (*ia == *ib) return true;
            if (*ia < *ib) ++ia; else ++ib;
        }
        return false;
    }

    // BFS 2-coloring; nullopt iff some component has an odd cycle. Color 0
    // goes to the smallest vertex id of each component.
    std::optional<std::vector<int>> bipartition() const {
        int n = vertex_count();
        std::vector<int> color(static_cast<std::size_t>(n), -1);
        for (int s = 0; s < n; ++s) {
            if (color[static_cast<std::size_t>(s)] != -1) continue;
            color[static_cast<std::size_t>(s)] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : adj_[static_cast<std::size_t>(u)]) {
                    auto& cw = color[static_cast<std::size_t>(w)];
                    if (cw == -1) {
                        cw = 1 - color[static_cast<std::size_t>(u)];
                        q.push(w);
                    } else if (cw == color[static_cast<std::size_t>(u)]) {
                        return std::nullopt;
                    }
                }
            }
        }
        return color;
    }

    bool is_bipartite() const { return bipartition().has_value(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw input_error("vertex id " + std::to_string(v) + " out of range [0," +
                              std::to_string(vertex_count()) + ")");
    }

    static void insert_sorted(std::vector<int>& vec, int value) {
        vec.insert(std::lower_bound(vec.begin(), vec.end(), value), value);
    }

    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

// Diagnostic report for the density bounds of 1-planar graphs. Never throws
// on violation: the caller's 1-planarity assertion may itself be wrong.
struct SizeBoundReport {
    int n = 0;
    int e = 0;
    long long bound_general = 0;   // 4n - 8
    long long slack_general = 0;   // bound - e
    bool holds_general = false;
    bool triangle_free = false;
    long long bound_triangle_free = 0;  // 3n - 6, meaningful only when triangle_free
    long long slack_triangle_free = 0;
    bool holds_triangle_free = false;
};

inline SizeBoundReport check_size_bounds(const Graph& g, bool triangle_free) {
    SizeBoundReport r;
    r.n = g.vertex_count();
    r.e = g.edge_count();
    r.bound_general = 4LL * r.n - 8;
    r.slack_general = r.bound_general - r.e;
    r.holds_general = r.e <= r.bound_general;
    r.triangle_free = triangle_free;
    if (triangle_free) {
        r.bound_triangle_free = 3LL * r.n - 6;
        r.slack_triangle_free = r.bound_triangle_free - r.e;
        r.holds_triangle_free = r.e <= r.bound_triangle_free;
    }
    return r;
}

} // namespace onechroma
