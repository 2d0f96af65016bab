#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "onechroma/graph.hpp"

namespace onechroma {

// Two edges crossing at one point. Endpoint order inside `first` and
// `second` is significant: together with `orientation` it fixes the cyclic
// order of segment ends around the crossing vertex z,
//   orientation 0  ->  (a, c, b, d)
//   orientation 1  ->  (a, d, b, c)
// for first = (a,b), second = (c,d).
struct CrossingPair {
    std::array<int, 2> first;
    std::array<int, 2> second;
    int orientation = 0;

    Edge first_edge() const { return make_edge(first[0], first[1]); }
    Edge second_edge() const { return make_edge(second[0], second[1]); }

    friend bool operator==(const CrossingPair& x, const CrossingPair& y) {
        return x.first == y.first && x.second == y.second && x.orientation == y.orientation;
    }
};

// One entry of a vertex rotation: either the far end of an uncrossed edge,
// or the segment toward the crossing sitting on an incident crossed edge.
struct RotationToken {
    bool is_crossing = false;
    int neighbor = -1;  // uncrossed: the far endpoint
    Edge crossed{-1, -1};  // crossing: the incident crossed edge

    static RotationToken plain(int w) {
        RotationToken t;
        t.neighbor = w;
        return t;
    }
    static RotationToken toward_crossing(Edge e) {
        RotationToken t;
        t.is_crossing = true;
        t.crossed = e;
        return t;
    }

    friend bool operator==(const RotationToken& a, const RotationToken& b) {
        return a.is_crossing == b.is_crossing && a.neighbor == b.neighbor && a.crossed == b.crossed;
    }
};

// Combinatorial 1-planar drawing: no coordinates, just a rotation system
// plus crossing declarations.
struct OnePlanarDrawing {
    Graph graph;
    std::vector<CrossingPair> crossings;
    std::vector<std::vector<RotationToken>> rotations;  // one cyclic list per vertex

    OnePlanarDrawing() = default;
    explicit OnePlanarDrawing(Graph g)
        : graph(std::move(g)),
          rotations(static_cast<std::size_t>(graph.vertex_count())) {}

    // Crossed edge -> index into `crossings`; throws on a doubly-crossed edge.
    std::map<Edge, int> crossed_edge_index() const {
        std::map<Edge, int> m;
        for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
            for (Edge e : {crossings[static_cast<std::size_t>(i)].first_edge(),
                           crossings[static_cast<std::size_t>(i)].second_edge()}) {
                if (m.count(e))
                    throw input_error("edge " + edge_str(e) + " crossed twice");
                m[e] = i;
            }
        }
        return m;
    }

    friend bool operator==(const OnePlanarDrawing& a, const OnePlanarDrawing& b) {
        return a.graph == b.graph && a.crossings == b.crossings && a.rotations == b.rotations;
    }
};

struct Violation {
    std::string code;    // stable machine tag, e.g. "edge-crossed-twice"
    std::string detail;  // human-readable specifics with element identities
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }

    std::string str() const {
        if (ok()) return "OK";
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "\n";
            s += v.code + ": " + v.detail;
        }
        return s;
    }
};

// Thrown by operations whose precondition is a valid drawing.
struct invalid_drawing_error : input_error {
    explicit invalid_drawing_error(ValidationReport r)
        : input_error("invalid drawing:\n" + r.str()), report(std::move(r)) {}
    ValidationReport report;
};

} // namespace onechroma
