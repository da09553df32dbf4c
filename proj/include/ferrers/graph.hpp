#pragma once

#include <algorithm>
#include <deque>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ferrers/partition.hpp"

namespace ferrers {

class isolated_vertex_error : public std::invalid_argument {
public:
    isolated_vertex_error(const std::string& vertex)
        : std::invalid_argument("graph has isolated vertex " + vertex), vertex(vertex) {}
    std::string vertex;  // e.g. "x3" or "y2"
};

// Bipartite graph on X = {x_1..x_nx} and Y = {y_1..y_ny}; all indices in
// the public interface are 1-based.
struct BipartiteGraph {
    int nx = 0;
    int ny = 0;
    std::vector<std::vector<bool>> adj;  // adj[i-1][j-1]

    BipartiteGraph() = default;
    BipartiteGraph(int nx, int ny)
        : nx(nx), ny(ny), adj(static_cast<std::size_t>(nx), std::vector<bool>(static_cast<std::size_t>(ny), false)) {}

    bool has_edge(int i, int j) const { return adj[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1]; }
    void add_edge(int i, int j) {
        if (i < 1 || i > nx || j < 1 || j > ny)
            throw std::out_of_range("edge index out of bounds");
        adj[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] = true;
    }

    int row_degree(int i) const {
        int d = 0;
        for (int j = 1; j <= ny; ++j)
            if (has_edge(i, j)) ++d;
        return d;
    }
    int col_degree(int j) const {
        int d = 0;
        for (int i = 1; i <= nx; ++i)
            if (has_edge(i, j)) ++d;
        return d;
    }
    long long edge_count() const {
        long long e = 0;
        for (int i = 1; i <= nx; ++i) e += row_degree(i);
        return e;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> list;
        for (int i = 1; i <= nx; ++i)
            for (int j = 1; j <= ny; ++j)
                if (has_edge(i, j)) list.emplace_back(i, j);
        return list;
    }
    std::vector<int> neighborhood(int i) const {
        std::vector<int> nb;
        for (int j = 1; j <= ny; ++j)
            if (has_edge(i, j)) nb.push_back(j);
        return nb;
    }
};

inline BipartiteGraph ferrers_graph(const Partition& p) {
    BipartiteGraph g(p.n(), p.m());
    for (int i = 1; i <= p.n(); ++i)
        for (int j = 1; j <= p.part(i); ++j) g.add_edge(i, j);
    return g;
}

// True iff the labeling is already in staircase form: row neighborhoods are
// prefixes {1..lambda_i} with lambda weakly decreasing, and the extreme
// edges (1, ny) and (nx, 1) are present.
inline bool is_ferrers_labeled(const BipartiteGraph& g) {
    if (g.nx == 0 || g.ny == 0) return false;
    int prev = g.ny;
    for (int i = 1; i <= g.nx; ++i) {
        int d = g.row_degree(i);
        if (d < 1 || d > prev) return false;
        for (int j = 1; j <= d; ++j)
            if (!g.has_edge(i, j)) return false;
        prev = d;
    }
    return g.has_edge(1, g.ny) && g.has_edge(g.nx, 1);
}

// A 2x2 switch: (row1, col1) and (row2, col2)... stored as the tuple
// (i, i2, j, k) with (i, k), (i2, j) edges and (i, j), (i2, k) non-edges.
struct SwitchObstruction {
    int i = 0;
    int i2 = 0;
    int j = 0;
    int k = 0;
};

struct RecognitionResult {
    bool ferrers = false;
    // When ferrers: row_perm[a] is the original X-vertex placed at row a+1,
    // col_perm[b] the original Y-vertex placed at column b+1.
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    std::optional<Partition> lambda;  // recovered partition (row degrees)
    std::optional<SwitchObstruction> obstruction;
};

inline BipartiteGraph apply_relabeling(const BipartiteGraph& g, const RecognitionResult& r) {
    BipartiteGraph h(g.nx, g.ny);
    for (int i = 1; i <= g.nx; ++i)
        for (int j = 1; j <= g.ny; ++j)
            if (g.has_edge(r.row_perm[static_cast<std::size_t>(i) - 1], r.col_perm[static_cast<std::size_t>(j) - 1]))
                h.add_edge(i, j);
    return h;
}

// Decides whether g is a Ferrers graph up to relabeling. The criterion is
// that the X-neighborhoods form a chain under inclusion; rows are ordered
// by degree descending (ties by lexicographic neighborhood, then index) and
// columns by degree descending (ties by index). A failed chain check yields
// a 2x2 switch witnessing the obstruction.
inline RecognitionResult recognize_ferrers(const BipartiteGraph& g) {
    if (g.nx == 0 || g.ny == 0) throw std::invalid_argument("recognition needs a nonempty graph");
    for (int i = 1; i <= g.nx; ++i)
        if (g.row_degree(i) == 0) throw isolated_vertex_error("x" + std::to_string(i));
    for (int j = 1; j <= g.ny; ++j)
        if (g.col_degree(j) == 0) throw isolated_vertex_error("y" + std::to_string(j));

    std::vector<std::vector<int>> nb(static_cast<std::size_t>(g.nx));
    std::vector<int> rows(static_cast<std::size_t>(g.nx));
    for (int i = 1; i <= g.nx; ++i) {
        nb[static_cast<std::size_t>(i) - 1] = g.neighborhood(i);
        rows[static_cast<std::size_t>(i) - 1] = i;
    }
    std::stable_sort(rows.begin(), rows.end(), [&](int a, int b) {
        const auto& na = nb[static_cast<std::size_t>(a) - 1];
        const auto& nbv = nb[static_cast<std::size_t>(b) - 1];
        if (na.size() != nbv.size()) return na.size() > nbv.size();
        if (na != nbv) return na < nbv;
        return a < b;
    });

    RecognitionResult result;
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
        int u = rows[k], v = rows[k + 1];
        const auto& nu = nb[static_cast<std::size_t>(u) - 1];
        const auto& nv = nb[static_cast<std::size_t>(v) - 1];
        if (std::includes(nu.begin(), nu.end(), nv.begin(), nv.end())) continue;

        // Not a chain: some column of v is missing from u, and u has at
        // least as many columns, so a column of u is missing from v.
        int j = 0, col_k = 0;
        for (int c : nv)
            if (!g.has_edge(u, c)) {
                j = c;
                break;
            }
        for (int c : nu)
            if (!g.has_edge(v, c)) {
                col_k = c;
                break;
            }
        SwitchObstruction sw;
        if (u < v)
            sw = {u, v, j, col_k};
        else
            sw = {v, u, col_k, j};
        result.ferrers = false;
        result.obstruction = sw;
        return result;
    }

    result.ferrers = true;
    result.row_perm = rows;
    std::vector<int> cols(static_cast<std::size_t>(g.ny));
    for (int j = 1; j <= g.ny; ++j) cols[static_cast<std::size_t>(j) - 1] = j;
    std::stable_sort(cols.begin(), cols.end(), [&](int a, int b) {
        int da = g.col_degree(a), db = g.col_degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    result.col_perm = cols;
    std::vector<int> degrees;
    for (int r : rows) degrees.push_back(static_cast<int>(nb[static_cast<std::size_t>(r) - 1].size()));
    result.lambda = Partition{degrees};
    return result;
}

// Undirected loop-free graph, 1-based vertices.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int n)
        : n(n), adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false)) {}

    bool has_edge(int u, int v) const { return adj[static_cast<std::size_t>(u) - 1][static_cast<std::size_t>(v) - 1]; }
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loops not allowed");
        adj[static_cast<std::size_t>(u) - 1][static_cast<std::size_t>(v) - 1] = true;
        adj[static_cast<std::size_t>(v) - 1][static_cast<std::size_t>(u) - 1] = true;
    }
    long long edge_count() const {
        long long e = 0;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (has_edge(u, v)) ++e;
        return e;
    }
};

// Complement of g viewed as a simple graph on X + Y: X-vertices come first,
// then Y-vertices. All X-X and Y-Y pairs become edges.
inline SimpleGraph complement(const BipartiteGraph& g) {
    SimpleGraph h(g.nx + g.ny);
    for (int u = 1; u <= h.n; ++u)
        for (int v = u + 1; v <= h.n; ++v) {
            bool cross_edge = false;
            if (u <= g.nx && v > g.nx) cross_edge = g.has_edge(u, v - g.nx);
            if (!cross_edge) h.add_edge(u, v);
        }
    return h;
}

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> elimination_order;  // perfect elimination order when chordal
    std::vector<int> hole;               // chordless cycle (length >= 4) otherwise
};

namespace detail {

// Maximum cardinality search: number vertices n..1, always picking an
// unnumbered vertex with the most numbered neighbors. The resulting order
// is a perfect elimination order iff the graph is chordal.
inline std::vector<int> mcs_order(const SimpleGraph& g) {
    std::vector<int> weight(static_cast<std::size_t>(g.n), 0);
    std::vector<bool> numbered(static_cast<std::size_t>(g.n), false);
    std::vector<int> order(static_cast<std::size_t>(g.n));
    for (int pos = g.n; pos >= 1; --pos) {
        int best = -1;
        for (int v = 1; v <= g.n; ++v)
            if (!numbered[static_cast<std::size_t>(v) - 1] &&
                (best == -1 || weight[static_cast<std::size_t>(v) - 1] > weight[static_cast<std::size_t>(best) - 1]))
                best = v;
        numbered[static_cast<std::size_t>(best) - 1] = true;
        order[static_cast<std::size_t>(pos) - 1] = best;
        for (int u = 1; u <= g.n; ++u)
            if (!numbered[static_cast<std::size_t>(u) - 1] && g.has_edge(best, u))
                ++weight[static_cast<std::size_t>(u) - 1];
    }
    return order;
}

inline bool is_perfect_elimination_order(const SimpleGraph& g, const std::vector<int>& order) {
    std::vector<int> position(static_cast<std::size_t>(g.n) + 1);
    for (int pos = 0; pos < g.n; ++pos) position[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
    for (int pos = 0; pos < g.n; ++pos) {
        int v = order[static_cast<std::size_t>(pos)];
        std::vector<int> later;
        for (int u = 1; u <= g.n; ++u)
            if (g.has_edge(v, u) && position[static_cast<std::size_t>(u)] > pos) later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

// Finds a chordless cycle of length >= 4 in a non-chordal graph: for some
// vertex v with nonadjacent neighbors a, b, a shortest a-b path avoiding
// N[v] \ {a, b} closes up with v to an induced cycle. Every hole produces
// such a triple, so the search cannot fail on a non-chordal input.
inline std::vector<int> find_hole(const SimpleGraph& g) {
    for (int v = 1; v <= g.n; ++v) {
        std::vector<int> nbrs;
        for (int u = 1; u <= g.n; ++u)
            if (g.has_edge(v, u)) nbrs.push_back(u);
        for (std::size_t x = 0; x < nbrs.size(); ++x)
            for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
                int a = nbrs[x], b = nbrs[y];
                if (g.has_edge(a, b)) continue;
                std::vector<bool> blocked(static_cast<std::size_t>(g.n) + 1, false);
                blocked[static_cast<std::size_t>(v)] = true;
                for (int u : nbrs)
                    if (u != a && u != b) blocked[static_cast<std::size_t>(u)] = true;
                // BFS from a to b in the remaining graph; parents give the path.
                std::vector<int> parent(static_cast<std::size_t>(g.n) + 1, 0);
                std::deque<int> queue{a};
                parent[static_cast<std::size_t>(a)] = a;
                bool reached = false;
                while (!queue.empty() && !reached) {
                    int u = queue.front();
                    queue.pop_front();
                    for (int w = 1; w <= g.n; ++w) {
                        if (!g.has_edge(u, w) || blocked[static_cast<std::size_t>(w)] ||
                            parent[static_cast<std::size_t>(w)] != 0)
                            continue;
                        parent[static_cast<std::size_t>(w)] = u;
                        if (w == b) {
                            reached = true;
                            break;
                        }
                        queue.push_back(w);
                    }
                }
                if (!reached) continue;
                std::vector<int> cycle{v};
                for (int u = b; u != a; u = parent[static_cast<std::size_t>(u)]) cycle.push_back(u);
                cycle.push_back(a);
                std::reverse(cycle.begin() + 1, cycle.end());
                return cycle;  // v, a, ..., b around the hole
            }
    }
    throw std::logic_error("find_hole called on a chordal graph");
}

}  // namespace detail

inline ChordalityResult is_chordal(const SimpleGraph& g) {
    ChordalityResult result;
    std::vector<int> order = detail::mcs_order(g);
    if (detail::is_perfect_elimination_order(g, order)) {
        result.chordal = true;
        result.elimination_order = order;
    } else {
        result.chordal = false;
        result.hole = detail::find_hole(g);
    }
    return result;
}

// Froberg criterion: the edge ideal of g has a 2-linear resolution iff the
// complement of g is chordal.
inline bool has_two_linear_resolution(const BipartiteGraph& g) {
    return is_chordal(complement(g)).chordal;
}

// --- edge-list file format: "nx ny" header, then "i j" lines; '#' comments
// --- and blank lines ignored.

inline BipartiteGraph parse_edge_list(std::istream& in) {
    std::string line;
    auto next_payload = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream probe(line);
            std::string token;
            if (probe >> token) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string payload;
    if (!next_payload(payload)) throw std::invalid_argument("edge list: missing 'nx ny' header");
    std::istringstream header(payload);
    int nx = 0, ny = 0;
    if (!(header >> nx >> ny) || nx < 1 || ny < 1)
        throw std::invalid_argument("edge list: bad header '" + payload + "'");
    BipartiteGraph g(nx, ny);
    while (next_payload(payload)) {
        std::istringstream row(payload);
        int i = 0, j = 0;
        if (!(row >> i >> j)) throw std::invalid_argument("edge list: bad edge line '" + payload + "'");
        if (i < 1 || i > nx || j < 1 || j > ny)
            throw std::invalid_argument("edge list: edge out of range '" + payload + "'");
        g.add_edge(i, j);
    }
    return g;
}

struct StrippedGraph {
    BipartiteGraph graph;
    std::vector<int> removed_x;
    std::vector<int> removed_y;
    std::vector<int> kept_x;  // original labels of the surviving vertices
    std::vector<int> kept_y;
};

// Drops isolated vertices, keeping the original labels of the survivors.
inline StrippedGraph strip_isolated(const BipartiteGraph& g) {
    StrippedGraph out;
    for (int i = 1; i <= g.nx; ++i)
        (g.row_degree(i) > 0 ? out.kept_x : out.removed_x).push_back(i);
    for (int j = 1; j <= g.ny; ++j)
        (g.col_degree(j) > 0 ? out.kept_y : out.removed_y).push_back(j);
    out.graph = BipartiteGraph(static_cast<int>(out.kept_x.size()), static_cast<int>(out.kept_y.size()));
    for (std::size_t a = 0; a < out.kept_x.size(); ++a)
        for (std::size_t b = 0; b < out.kept_y.size(); ++b)
            if (g.has_edge(out.kept_x[a], out.kept_y[b]))
                out.graph.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return out;
}

}  // namespace ferrers
