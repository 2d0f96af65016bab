#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "onechroma/drawing.hpp"

namespace onechroma {

// The associated plane graph G*: original vertices 0..n-1 plus one degree-4
// crossing vertex per crossing pair at ids n..n+c-1. Edges are the uncrossed
// edges of G plus two segments per crossed edge. Faces are traced from the
// rotation system: the successor of dart d = (u -> w) is the rotation
// successor, at w, of the reverse dart.
class PlanarizedGraph {
  public:
    int original_count() const { return n_; }
    int crossing_count() const { return static_cast<int>(base_.crossings.size()); }
    int vertex_count() const { return n_ + crossing_count(); }
    int edge_count() const { return static_cast<int>(dart_from_.size()) / 2; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    bool is_crossing_vertex(int pv) const { return pv >= n_ && pv < vertex_count(); }
    int crossing_vertex(int crossing_index) const { return n_ + crossing_index; }

    int planar_degree(int pv) const { return static_cast<int>(rotation_.at(static_cast<std::size_t>(pv)).size()); }

    int dart_from(int d) const { return dart_from_[static_cast<std::size_t>(d)]; }
    int dart_to(int d) const { return dart_to_[static_cast<std::size_t>(d)]; }
    int dart_twin(int d) const { return dart_twin_[static_cast<std::size_t>(d)]; }
    int dart_count() const { return static_cast<int>(dart_from_.size()); }

    const std::vector<int>& rotation(int pv) const { return rotation_.at(static_cast<std::size_t>(pv)); }

    // Face-walk successor.
    int next_dart(int d) const {
        int t = dart_to(d);
        const auto& rot = rotation_[static_cast<std::size_t>(t)];
        int pos = rot_pos_[static_cast<std::size_t>(dart_twin(d))];
        return rot[static_cast<std::size_t>((pos + 1) % static_cast<int>(rot.size()))];
    }

    const std::vector<int>& face_darts(int f) const { return faces_[static_cast<std::size_t>(f)]; }
    int face_of_dart(int d) const { return face_of_dart_[static_cast<std::size_t>(d)]; }
    int face_degree(int f) const { return static_cast<int>(faces_[static_cast<std::size_t>(f)].size()); }

    // Boundary vertices in walk order (one entry per corner, repeats possible).
    std::vector<int> face_corners(int f) const {
        std::vector<int> vs;
        vs.reserve(faces_[static_cast<std::size_t>(f)].size());
        for (int d : faces_[static_cast<std::size_t>(f)]) vs.push_back(dart_from(d));
        return vs;
    }

    // Sorted multiset of face degrees; sums to 2 * edge_count().
    std::vector<int> face_degrees() const {
        std::vector<int> ds;
        ds.reserve(faces_.size());
        for (const auto& f : faces_) ds.push_back(static_cast<int>(f.size()));
        std::sort(ds.begin(), ds.end());
        return ds;
    }

    // Distinct faces incident to a planarized vertex, ascending face id.
    std::vector<int> faces_at_vertex(int pv) const {
        std::vector<int> fs;
        for (int d : rotation_.at(static_cast<std::size_t>(pv))) fs.push_back(face_of_dart(d));
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        return fs;
    }

    // Number of distinct k-faces whose boundary contains the original vertex v.
    int fk_count(int v, int k) const {
        check_original(v);
        int count = 0;
        for (int f : faces_at_vertex(v))
            if (face_degree(f) == k) ++count;
        return count;
    }

    int f3_count(int v) const { return fk_count(v, 3); }

    // Crossing vertices adjacent to the original vertex v; equals the number
    // of crossed edges of G incident to v.
    int nc_count(int v) const {
        check_original(v);
        int count = 0;
        for (int d : rotation_.at(static_cast<std::size_t>(v)))
            if (is_crossing_vertex(dart_to(d))) ++count;
        return count;
    }

    const OnePlanarDrawing& base() const { return base_; }

    friend PlanarizedGraph build_planarization(const OnePlanarDrawing& d);

  private:
    void check_original(int v) const {
        if (v < 0 || v >= vertex_count())
            throw input_error("vertex id " + std::to_string(v) + " out of range");
        if (is_crossing_vertex(v))
            throw input_error("vertex " + std::to_string(v) +
                              " is a crossing vertex; quantity is defined for original vertices");
    }

    OnePlanarDrawing base_;
    int n_ = 0;
    std::vector<int> dart_from_, dart_to_, dart_twin_;
    std::vector<std::vector<int>> rotation_;  // per planarized vertex
    std::vector<int> rot_pos_;                // dart -> index within rotation_[from]
    std::vector<std::vector<int>> faces_;
    std::vector<int> face_of_dart_;
};

// Builds G* straight from the rotation tokens, assuming the drawing already
// passed the structural checks (each edge crossed at most once, rotations
// consistent). Traces faces but performs no validity judgment.
inline PlanarizedGraph build_planarization(const OnePlanarDrawing& d) {
    PlanarizedGraph p;
    p.base_ = d;
    const Graph& g = d.graph;
    p.n_ = g.vertex_count();
    const int n = p.n_;
    const int c = static_cast<int>(d.crossings.size());

    std::map<Edge, int> crossed = d.crossed_edge_index();

    // Dart table. Uncrossed edge {u,v}: darts u->v, v->u. Crossing i with
    // first=(a,b), second=(c,d): segments x<->z for x in {a,b,c,d}, z = n+i.
    std::map<std::pair<int, int>, int> plain_dart;      // (u, v) -> dart id
    std::map<std::pair<int, int>, int> segment_dart;    // (x, crossing) -> dart x->z
    std::map<std::pair<int, int>, int> segment_back;    // (crossing, x) -> dart z->x

    auto new_dart = [&p](int from, int to) {
        int id = static_cast<int>(p.dart_from_.size());
        p.dart_from_.push_back(from);
        p.dart_to_.push_back(to);
        p.dart_twin_.push_back(-1);
        return id;
    };

    for (const auto& [u, v] : g.edges()) {
        if (crossed.count({u, v})) continue;
        int duv = new_dart(u, v);
        int dvu = new_dart(v, u);
        p.dart_twin_[static_cast<std::size_t>(duv)] = dvu;
        p.dart_twin_[static_cast<std::size_t>(dvu)] = duv;
        plain_dart[{u, v}] = duv;
        plain_dart[{v, u}] = dvu;
    }
    for (int i = 0; i < c; ++i) {
        const CrossingPair& cp = d.crossings[static_cast<std::size_t>(i)];
        int z = n + i;
        for (int x : {cp.first[0], cp.first[1], cp.second[0], cp.second[1]}) {
            int dxz = new_dart(x, z);
            int dzx = new_dart(z, x);
            p.dart_twin_[static_cast<std::size_t>(dxz)] = dzx;
            p.dart_twin_[static_cast<std::size_t>(dzx)] = dxz;
            segment_dart[{x, i}] = dxz;
            segment_back[{i, x}] = dzx;
        }
    }

    // Rotations: original vertices follow the token lists; a crossing vertex
    // gets the interleaving selected by its orientation bit.
    p.rotation_.assign(static_cast<std::size_t>(n + c), {});
    for (int v = 0; v < n; ++v) {
        for (const RotationToken& t : d.rotations[static_cast<std::size_t>(v)]) {
            int dart;
            if (t.is_crossing) {
                dart = segment_dart.at({v, crossed.at(t.crossed)});
            } else {
                dart = plain_dart.at({v, t.neighbor});
            }
            p.rotation_[static_cast<std::size_t>(v)].push_back(dart);
        }
    }
    for (int i = 0; i < c; ++i) {
        const CrossingPair& cp = d.crossings[static_cast<std::size_t>(i)];
        int a = cp.first[0], b = cp.first[1];
        int x = cp.second[0], y = cp.second[1];
        std::array<int, 4> order = cp.orientation == 0 ? std::array<int, 4>{a, x, b, y}
                                                       : std::array<int, 4>{a, y, b, x};
        for (int w : order)
            p.rotation_[static_cast<std::size_t>(n + i)].push_back(segment_back.at({i, w}));
    }

    p.rot_pos_.assign(p.dart_from_.size(), -1);
    for (std::size_t pv = 0; pv < p.rotation_.size(); ++pv)
        for (std::size_t k = 0; k < p.rotation_[pv].size(); ++k)
            p.rot_pos_[static_cast<std::size_t>(p.rotation_[pv][k])] = static_cast<int>(k);

    // Face tracing: orbits of the successor permutation. Every dart lies on
    // exactly one face walk; walks start from the smallest unvisited dart.
    p.face_of_dart_.assign(p.dart_from_.size(), -1);
    for (int d0 = 0; d0 < static_cast<int>(p.dart_from_.size()); ++d0) {
        if (p.face_of_dart_[static_cast<std::size_t>(d0)] != -1) continue;
        int fid = static_cast<int>(p.faces_.size());
        std::vector<int> walk;
        int cur = d0;
        do {
            walk.push_back(cur);
            p.face_of_dart_[static_cast<std::size_t>(cur)] = fid;
            cur = p.next_dart(cur);
        } while (cur != d0);
        p.faces_.push_back(std::move(walk));
    }
    return p;
}

// Full validation: structural checks first; if those pass, the drawing is
// planarized and the embedding-level conditions (connectivity, Euler,
// crossing adjacency, degenerate faces) are checked on G*.
inline ValidationReport validate_drawing(const OnePlanarDrawing& d) {
    ValidationReport rep;
    const Graph& g = d.graph;
    const int n = g.vertex_count();

    if (static_cast<int>(d.rotations.size()) != n)
        rep.violations.push_back({"rotation-mismatch",
                                  "expected " + std::to_string(n) + " rotation lists, have " +
                                      std::to_string(d.rotations.size())});

    // Crossing pair sanity.
    std::map<Edge, int> crossed_count;
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
        const CrossingPair& cp = d.crossings[static_cast<std::size_t>(i)];
        std::array<int, 4> ends = {cp.first[0], cp.first[1], cp.second[0], cp.second[1]};
        bool endpoints_ok = true;
        for (int x : ends)
            if (x < 0 || x >= n) {
                rep.violations.push_back({"crossing-bad-vertex",
                                          "crossing " + std::to_string(i) + " references vertex " +
                                              std::to_string(x)});
                endpoints_ok = false;
            }
        if (!endpoints_ok) continue;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (ends[static_cast<std::size_t>(a)] == ends[static_cast<std::size_t>(b)])
                    rep.violations.push_back({"crossing-shared-endpoint",
                                              "crossing " + std::to_string(i) +
                                                  " endpoints not pairwise distinct (vertex " +
                                                  std::to_string(ends[static_cast<std::size_t>(a)]) + ")"});
        for (Edge e : {cp.first_edge(), cp.second_edge()}) {
            if (!g.has_edge(e.first, e.second))
                rep.violations.push_back({"crossing-edge-missing",
                                          "crossing " + std::to_string(i) + " uses " + edge_str(e) +
                                              " which is not an edge of the graph"});
            else
                crossed_count[e] += 1;
        }
    }
    for (const auto& [e, cnt] : crossed_count)
        if (cnt > 1)
            rep.violations.push_back({"edge-crossed-twice",
                                      "edge " + edge_str(e) + " appears in " + std::to_string(cnt) +
                                          " crossing pairs"});

    // Rotation consistency: at v, exactly one token per incidence.
    if (static_cast<int>(d.rotations.size()) == n && rep.ok()) {
        for (int v = 0; v < n; ++v) {
            std::map<Edge, int> expected;  // incident edge -> crossed flag
            for (int w : g.neighbors(v)) {
                Edge e = make_edge(v, w);
                expected[e] = crossed_count.count(e) ? 1 : 0;
            }
            std::map<Edge, int> seen;
            bool bad = false;
            for (const RotationToken& t : d.rotations[static_cast<std::size_t>(v)]) {
                Edge e = t.is_crossing ? t.crossed : make_edge(v, t.neighbor);
                auto it = expected.find(e);
                if (it == expected.end() || it->second != (t.is_crossing ? 1 : 0)) {
                    rep.violations.push_back({"rotation-mismatch",
                                              "vertex " + std::to_string(v) +
                                                  ": token for " + edge_str(e) +
                                                  (t.is_crossing ? " (crossing)" : "") +
                                                  " does not match an incidence"});
                    bad = true;
                    continue;
                }
                if (++seen[e] > 1) {
                    rep.violations.push_back({"rotation-mismatch",
                                              "vertex " + std::to_string(v) + ": duplicate token for " +
                                                  edge_str(e)});
                    bad = true;
                }
            }
            if (!bad && static_cast<int>(d.rotations[static_cast<std::size_t>(v)].size()) != g.degree(v))
                rep.violations.push_back({"rotation-mismatch",
                                          "vertex " + std::to_string(v) + " lists " +
                                              std::to_string(d.rotations[static_cast<std::size_t>(v)].size()) +
                                              " darts, degree is " + std::to_string(g.degree(v))});
        }
    }

    if (!rep.ok()) return rep;

    if (!g.is_connected()) {
        rep.violations.push_back({"disconnected", "drawing is not connected"});
        return rep;
    }

    PlanarizedGraph p = build_planarization(d);

    for (int dart = 0; dart < p.dart_count(); ++dart)
        if (p.is_crossing_vertex(p.dart_from(dart)) && p.is_crossing_vertex(p.dart_to(dart)))
            rep.violations.push_back({"crossing-adjacent",
                                      "crossing vertices " + std::to_string(p.dart_from(dart)) + " and " +
                                          std::to_string(p.dart_to(dart)) + " are adjacent in G*"});

    long long euler = static_cast<long long>(p.vertex_count()) - p.edge_count() + p.face_count();
    if (euler != 2)
        rep.violations.push_back({"euler-failure",
                                  "v - e + f = " + std::to_string(euler) +
                                      ", embedding is not spherical"});

    bool tree = g.edge_count() == n - 1 && d.crossings.empty();
    if (n >= 3 && !tree)
        for (int f = 0; f < p.face_count(); ++f)
            if (p.face_degree(f) < 3)
                rep.violations.push_back({"degenerate-face",
                                          "face " + std::to_string(f) + " has degree " +
                                              std::to_string(p.face_degree(f))});

    return rep;
}

// Planarization with the validity precondition enforced.
inline PlanarizedGraph planarize(const OnePlanarDrawing& d) {
    ValidationReport rep = validate_drawing(d);
    if (!rep.ok()) throw invalid_drawing_error(std::move(rep));
    return build_planarization(d);
}

} // namespace onechroma
