#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lalpha {

/// Simple undirected graph: vertex count plus a canonical edge set
/// (unordered pairs stored as u < v, sorted, no loops, no duplicates).
/// Immutable after construction; all operations below are pure.
class Graph {
public:
    Graph() = default;

    /// Validates and canonicalizes the edge list. Throws ParameterOutOfRange
    /// for a negative vertex count, InvalidVertex for endpoints out of range,
    /// and ParameterOutOfRange for loops or duplicate edges.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    /// Sorted adjacency lists, one per vertex.
    std::vector<std::vector<int>> neighbor_lists() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
};

// Named families. Vertex labelings are fixed so matrix layouts are
// deterministic (see each constructor).
Graph make_complete(int n);
Graph make_path(int n);
Graph make_cycle(int n);                      // n >= 3
Graph make_complete_bipartite(int p, int q);  // part one = vertices 0..p-1
Graph make_star(int n);                       // K_{1,n-1}, center 0
Graph make_empty(int n);

/// Dispatch by family name: complete, path, cycle, complete_bipartite, star, empty.
Graph make_named(const std::string& family, const std::vector<int>& params);

/// K_p with q pendant vertices attached to clique vertex p-1.
Graph make_pineapple(int p, int q);  // p >= 3, q >= 1

/// Two copies of K_n joined by a matching on the first l vertices of each
/// copy (i in copy one paired with n+i). Construction allows l = n even
/// though the closed-form spectrum requires l < n.
Graph make_h_graph(int n, int l);  // n >= 3, 1 <= l <= n

/// Two copies of K_n with l edges from vertex 0 of copy one to vertices
/// n..n+l-1 of copy two.
Graph make_kk_graph(int n, int l);  // n >= 3, 1 <= l <= n

/// K_c joined to eta disjoint copies of K_s; core vertices first.
Graph make_core_satellite(int c, int s, int eta);  // c,s >= 1, eta >= 2

/// Adds one shadow vertex v+n per vertex v, adjacent to every neighbor of v.
Graph make_splitting(const Graph& g);

// Binary operations. The second operand is relabeled to keep vertex sets
// disjoint; product vertices (i,j) sit at index i*n2 + j.
Graph graph_union(const Graph& g, const Graph& h);
Graph graph_join(const Graph& g, const Graph& h);
Graph graph_cartesian(const Graph& g, const Graph& h);
Graph graph_direct(const Graph& g, const Graph& h);
Graph graph_strong(const Graph& g, const Graph& h);

/// Identifies vertex u of g with vertex v of h. The merged vertex gets
/// index 0, followed by V(g)\{u} and then V(h)\{v}, both in original order.
Graph graph_coalesce(const Graph& g, int u, const Graph& h, int v);

struct TwinClass {
    enum class Kind { true_twin, false_twin };
    Kind kind;
    std::vector<int> vertices;  // size >= 2, sorted
    int degree;                 // shared degree of all members
};

struct StructuralReport {
    std::vector<int> degrees;
    bool regular = false;
    int regular_degree = 0;  // valid when regular
    bool bipartite = false;
    std::vector<int> side;   // 0/1 per vertex when bipartite, else empty
    bool connected = false;
    std::vector<TwinClass> twin_classes;  // maximal, disjoint
};

StructuralReport structural_report(const Graph& g);
bool is_regular(const Graph& g, int* k = nullptr);
bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr);
bool is_connected(const Graph& g);

// Edge-list text format: line 1 is the vertex count, then one "u v" pair per
// non-empty line with 0 <= u < v < n; lines starting with '#' are ignored.
// Duplicate or loop lines are a parse error.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
Graph parse_edge_list(const std::string& text);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);
std::string format_edge_list(const Graph& g);

} // namespace lalpha
