#pragma once

// Brute-force ground truth: explicit perfect-matching enumeration of the
// order-n Aztec graph, with octahedral / conventional weights, boundary
// refinement indices, and the matching -> nonintersecting-lattice-path
// bijection. Intended for small n only (enumeration is capped).
//
// Vertices live at half-integer points (u,v), |u|+|v| <= n, stored as doubled
// integer coordinates (2u, 2v). Faces at integer points as in lattice.hpp.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aztec/lattice.hpp"
#include "aztec/rational.hpp"

namespace aztec {

constexpr int kMatchingEnumerationCap = 5;

struct AztecGraph {
    int n = 0;
    // Doubled coordinates (2u, 2v) of vertices, sorted lexicographically.
    std::vector<std::pair<int, int>> verts;
    // Edges as index pairs (i < j) into verts.
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> incident;  // vertex -> incident edge indices

    bool edge_is_horizontal(int e) const {
        return verts[edges[e].first].second == verts[edges[e].second].second;
    }
};

inline AztecGraph make_aztec_graph(int n) {
    AztecGraph g;
    g.n = n;
    std::map<std::pair<int, int>, int> index;
    for (int du = -2 * n + 1; du <= 2 * n - 1; du += 2)
        for (int dv = -2 * n + 1; dv <= 2 * n - 1; dv += 2)
            if (std::abs(du) + std::abs(dv) <= 2 * n) {
                index[{du, dv}] = static_cast<int>(g.verts.size());
                g.verts.emplace_back(du, dv);
            }
    g.incident.resize(g.verts.size());
    for (int i = 0; i < static_cast<int>(g.verts.size()); ++i) {
        auto [du, dv] = g.verts[i];
        for (auto [eu, ev] : {std::pair{du + 2, dv}, std::pair{du, dv + 2}}) {
            auto it = index.find({eu, ev});
            if (it == index.end()) continue;
            int e = static_cast<int>(g.edges.size());
            g.edges.emplace_back(i, it->second);
            g.incident[i].push_back(e);
            g.incident[it->second].push_back(e);
        }
    }
    return g;
}

// A matching is a sorted list of edge indices covering every vertex once.
using Matching = std::vector<int>;

inline std::vector<Matching> enumerate_matchings(const AztecGraph& g) {
    if (g.n > kMatchingEnumerationCap)
        throw std::invalid_argument("matching enumeration capped at order 5");
    std::vector<Matching> out;
    std::vector<char> covered(g.verts.size(), 0);
    Matching cur;
    auto rec = [&](auto&& self) -> void {
        int v = -1;
        for (int i = 0; i < static_cast<int>(covered.size()); ++i)
            if (!covered[i]) {
                v = i;
                break;
            }
        if (v < 0) {
            out.push_back(cur);
            std::sort(out.back().begin(), out.back().end());
            return;
        }
        for (int e : g.incident[v]) {
            int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
            if (covered[w]) continue;
            covered[v] = covered[w] = 1;
            cur.push_back(e);
            self(self);
            cur.pop_back();
            covered[v] = covered[w] = 0;
        }
    };
    rec(rec);
    return out;
}

// Counts N_{k,l}, the matched edges bordering each face of the extended graph;
// faces indexed by the grid passed in (which must have order >= n).
inline std::map<std::pair<int, int>, int> face_edge_counts(const AztecGraph& g, const Matching& m) {
    std::map<std::pair<int, int>, int> N;
    for (int e : m) {
        auto [i, j] = g.edges[e];
        auto [du, dv] = g.verts[i];
        auto [du2, dv2] = g.verts[j];
        if (dv == dv2) {  // horizontal edge: faces above and below its midpoint
            int k = (du + du2) / 4;  // midpoint x = (du+du2)/4 in face units
            N[{k, (dv - 1) / 2}]++;
            N[{k, (dv + 1) / 2}]++;
        } else {  // vertical edge: faces left and right
            int l = (dv + dv2) / 4;
            N[{(du - 1) / 2, l}]++;
            N[{(du + 1) / 2, l}]++;
        }
    }
    return N;
}

inline Rational octahedral_weight(const AztecGraph& g, const FaceWeightGrid& grid, const Matching& m) {
    auto N = face_edge_counts(g, m);
    Rational w = 1;
    for (int l = -g.n; l <= g.n; ++l)
        for (int k = -(g.n - std::abs(l)); k <= g.n - std::abs(l); ++k) {
            auto it = N.find({k, l});
            int cnt = it == N.end() ? 0 : it->second;
            w *= pow_rational(grid.at(k, l), 1 - cnt);
        }
    return w;
}

inline Rational conventional_weight(const AztecGraph& g, const FaceWeightGrid& grid, const Matching& m) {
    auto N = face_edge_counts(g, m);
    Rational w = 1;
    for (const auto& [face, cnt] : N) {
        auto [k, l] = face;
        if (std::abs(k) + std::abs(l) <= g.n - 1) w *= pow_rational(grid.at(k, l), cnt);
    }
    return w;
}

enum class Measure { Octahedral, Conventional };

// The NW boundary faces are (k-n, k) and the NE ones (n-l, l), k,l = 0..n,
// sharing the top face (0,n). For every matching exactly one face on each
// boundary has no matched edge next to it; its index is the refinement index
// (equivalently, the number of matched vertical edges along that boundary).
inline std::pair<int, int> refinement_indices(const AztecGraph& g, const Matching& m) {
    auto N = face_edge_counts(g, m);
    int kzero = -1, lzero = -1;
    for (int k = 0; k <= g.n; ++k)
        if (N.find({k - g.n, k}) == N.end()) {
            if (kzero >= 0) throw std::logic_error("multiple untouched NW faces");
            kzero = k;
        }
    for (int l = 0; l <= g.n; ++l)
        if (N.find({g.n - l, l}) == N.end()) {
            if (lzero >= 0) throw std::logic_error("multiple untouched NE faces");
            lzero = l;
        }
    if (kzero < 0 || lzero < 0) throw std::logic_error("no untouched boundary face");
    return {kzero, lzero};
}

// Weighted refinement table: entry (k,l) sums the weights of the matchings
// with refinement indices (k,l).
inline std::vector<std::vector<Rational>> refined_counts(const AztecGraph& g,
                                                         const FaceWeightGrid& grid,
                                                         Measure measure) {
    std::vector<std::vector<Rational>> table(g.n + 1, std::vector<Rational>(g.n + 1, Rational(0)));
    for (const auto& m : enumerate_matchings(g)) {
        auto [k, l] = refinement_indices(g, m);
        Rational w = measure == Measure::Octahedral ? octahedral_weight(g, grid, m)
                                                    : conventional_weight(g, grid, m);
        table[k][l] += w;
    }
    return table;
}

// --- matchings -> large Schroder paths ------------------------------------

// Path nodes use coordinates (x, y) with x integer and y integer after the
// global shift y = v - 1/2; steps are (1,1), (2,0), (1,-1). The j-th path
// (j = 0..n-1) runs from (-1-j, j-n) to (1+j, j-n).
using PathPoint = std::pair<int, int>;
using PathSet = std::vector<std::vector<PathPoint>>;

// Retained vertices are those with u+v = n (mod 2). A vertical domino whose retained
// vertex is the bottom (top) one carries an up (down) step; a horizontal
// domino whose retained vertex is the left one carries a flat step; with the
// retained vertex on the right it carries no step.
inline PathSet tiling_to_paths(const AztecGraph& g, const Matching& m) {
    std::map<PathPoint, PathPoint> next;  // segment start -> segment end
    for (int e : m) {
        auto [i, j] = g.edges[e];
        auto [du, dv] = g.verts[i];   // lexicographically smaller endpoint
        bool horizontal = g.edge_is_horizontal(e);
        // (du+dv)/2 = u+v; retained endpoints satisfy u+v = n (mod 2).
        bool first_retained = (((du + dv) / 2 - g.n) % 2) == 0;
        // In shifted units: vertex (u,v) -> node (u - 1/2, v - 1/2) = ((du-1)/2, (dv-1)/2).
        int x = (du - 1) / 2, y = (dv - 1) / 2;
        if (horizontal) {
            if (first_retained) next[{x, y}] = {x + 2, y};  // flat step
        } else {
            if (first_retained)
                next[{x, y}] = {x + 1, y + 1};  // up step from bottom vertex
            else
                next[{x, y + 1}] = {x + 1, y};  // down step from top vertex
        }
    }
    PathSet paths;
    size_t used = 0;
    for (int j = 0; j < g.n; ++j) {
        std::vector<PathPoint> p;
        PathPoint cur{-1 - j, j - g.n};
        p.push_back(cur);
        for (auto it = next.find(cur); it != next.end(); it = next.find(cur)) {
            cur = it->second;
            p.push_back(cur);
            ++used;
        }
        if (cur != PathPoint{1 + j, j - g.n}) throw std::logic_error("path endpoint mismatch");
        paths.push_back(std::move(p));
    }
    if (used != next.size()) throw std::logic_error("unconsumed path segments");
    return paths;
}

// Validates step shapes and vertex-disjointness of a path family.
inline bool path_set_valid(const PathSet& paths) {
    std::map<PathPoint, int> seen;
    for (const auto& p : paths) {
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            int dx = p[i + 1].first - p[i].first, dy = p[i + 1].second - p[i].second;
            bool ok = (dx == 1 && (dy == 1 || dy == -1)) || (dx == 2 && dy == 0);
            if (!ok) return false;
        }
        for (const auto& pt : p)
            if (++seen[pt] > 1) return false;
    }
    return true;
}

}  // namespace aztec
