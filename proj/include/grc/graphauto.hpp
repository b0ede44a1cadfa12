/**
 * @file graphauto.hpp
 * @brief Automorphism generators of vertex-colored graphs by partition
 *        refinement and backtracking, sized for incidence geometries of a
 *        few hundred vertices.
 *
 * The search individualizes a vertex of the first non-singleton cell,
 * refines with iterated neighbor-color counting, and compares leaves
 * against the first leaf reached.  Subtrees off the first path are
 * abandoned after their first automorphism; siblings along the first path
 * are pruned through the orbits of the automorphisms found so far that fix
 * the already-individualized prefix.
 */

#ifndef GRC_GRAPHAUTO_HPP
#define GRC_GRAPHAUTO_HPP

#include <functional>

#include "grc/perm.hpp"

namespace grc {

struct ColoredGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted adjacency lists
    std::vector<int> color;

    void add_edge(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    void finalize() {
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    }

    bool is_automorphism(const Permutation& p) const {
        for (int v = 0; v < n; ++v) {
            if (color[p(v)] != color[v]) return false;
            std::vector<int> mapped;
            mapped.reserve(adj[v].size());
            for (int w : adj[v]) mapped.push_back(p(w));
            std::sort(mapped.begin(), mapped.end());
            if (mapped != adj[p(v)]) return false;
        }
        return true;
    }
};

namespace detail {

// Iterated neighbor-color refinement; colors are renumbered canonically
// (by sorted signature) each round until stable.
inline std::vector<int> refine_colors(const ColoredGraph& g, std::vector<int> colors) {
    while (true) {
        std::vector<std::pair<std::vector<long>, int>> sigs(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<long> s;
            s.push_back(colors[v]);
            std::vector<int> nb;
            nb.reserve(g.adj[v].size());
            for (int w : g.adj[v]) nb.push_back(colors[w]);
            std::sort(nb.begin(), nb.end());
            for (int c : nb) s.push_back(c);
            sigs[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<long>, int>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(g.n);
        int cls = -1;
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (i == 0 || sorted[i].first != sorted[i - 1].first) ++cls;
            next[sorted[i].second] = cls;
        }
        if (next == colors) return colors;
        bool same_count = true;
        {
            std::set<int> before(colors.begin(), colors.end());
            if (static_cast<int>(before.size()) != cls + 1) same_count = false;
        }
        colors = std::move(next);
        if (same_count) return colors;  // stable partition, renumbered
    }
}

struct AutoSearch {
    const ColoredGraph* g;
    std::vector<Permutation> found;
    std::vector<int> first_leaf;             // vertex -> position
    std::vector<std::vector<long>> first_trace;  // node invariant along first path
    std::vector<int> first_bases;            // individualized vertices on first path

    std::vector<long> node_invariant(const std::vector<int>& colors) const {
        std::vector<long> counts;
        std::vector<int> per_color(g->n, 0);
        int maxc = 0;
        for (int c : colors) {
            ++per_color[c];
            maxc = std::max(maxc, c);
        }
        for (int c = 0; c <= maxc; ++c) counts.push_back(per_color[c]);
        return counts;
    }

    // first non-singleton cell (smallest color id); -1 when discrete
    int target_cell(const std::vector<int>& colors) const {
        std::vector<int> per_color(g->n, 0);
        for (int c : colors) ++per_color[c];
        for (int c = 0; c < g->n; ++c)
            if (per_color[c] > 1) return c;
        return -1;
    }

    bool leaf(const std::vector<int>& colors) {
        std::vector<int> pos(g->n);
        for (int v = 0; v < g->n; ++v) pos[v] = colors[v];
        if (first_leaf.empty()) {
            first_leaf = pos;
            return true;
        }
        // candidate automorphism: vertex occupying position p in the first
        // leaf goes to the vertex occupying p here
        std::vector<int> by_pos_first(g->n), by_pos_now(g->n);
        for (int v = 0; v < g->n; ++v) {
            by_pos_first[first_leaf[v]] = v;
            by_pos_now[pos[v]] = v;
        }
        std::vector<int> images(g->n);
        for (int p = 0; p < g->n; ++p) images[by_pos_first[p]] = by_pos_now[p];
        Permutation cand(std::move(images));
        if (cand.is_identity() || !g->is_automorphism(cand)) return false;
        found.push_back(cand);
        return true;
    }

    bool same_orbit_under_stabilizer(size_t depth, int a, int b) const {
        std::vector<int> parent(g->n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Permutation& p : found) {
            bool fixes = true;
            for (size_t i = 0; i < depth && fixes; ++i) fixes = (p(first_bases[i]) == first_bases[i]);
            if (!fixes) continue;
            for (int x = 0; x < g->n; ++x) {
                int ra = find(x), rb = find(p(x));
                if (ra != rb) parent[ra] = rb;
            }
        }
        return find(a) == find(b);
    }

    // returns true when the subtree produced at least one automorphism leaf
    bool search(std::vector<int> colors, size_t depth, bool on_first_path) {
        colors = refine_colors(*g, std::move(colors));
        const std::vector<long> inv = node_invariant(colors);
        if (on_first_path) {
            if (depth == first_trace.size())
                first_trace.push_back(inv);
        } else if (depth < first_trace.size() && inv != first_trace[depth]) {
            return false;  // cannot match the first leaf
        }
        const int cell = target_cell(colors);
        if (cell < 0) return leaf(colors);

        std::vector<int> members;
        for (int v = 0; v < g->n; ++v)
            if (colors[v] == cell) members.push_back(v);

        bool any = false;
        std::vector<int> tried;
        for (size_t ci = 0; ci < members.size(); ++ci) {
            const int v = members[ci];
            const bool first_child = on_first_path && ci == 0;
            if (on_first_path) {
                if (ci > 0) {
                    bool pruned = false;
                    for (int t : tried)
                        if (same_orbit_under_stabilizer(depth, t, v)) {
                            pruned = true;
                            break;
                        }
                    if (pruned) continue;
                }
                tried.push_back(v);
                if (first_child && depth == first_bases.size()) first_bases.push_back(v);
            }
            std::vector<int> next = colors;
            for (int w = 0; w < g->n; ++w)
                if (next[w] >= cell) ++next[w];  // shift to open a singleton slot
            next[v] = cell;
            const bool sub = search(std::move(next), depth + 1, first_child);
            if (sub) {
                any = true;
                if (!on_first_path) return true;
            }
        }
        return any;
    }
};

}  // namespace detail

/// Generators of the color-preserving automorphism group.
inline std::vector<Permutation> graph_automorphism_generators(const ColoredGraph& g) {
    detail::AutoSearch s;
    s.g = &g;
    std::vector<int> colors = g.color;
    // renumber initial colors densely
    {
        std::map<int, int> remap;
        for (int c : colors) remap.emplace(c, 0);
        int next = 0;
        for (auto& [c, id] : remap) id = next++;
        for (int& c : colors) c = remap[c];
    }
    s.search(std::move(colors), 0, true);
    return s.found;
}

inline PermGroup graph_automorphism_group(const ColoredGraph& g) {
    return PermGroup(g.n, graph_automorphism_generators(g));
}

}  // namespace grc

#endif  // GRC_GRAPHAUTO_HPP
