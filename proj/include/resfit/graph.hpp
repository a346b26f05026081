#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace resfit {

using NodeId = std::int32_t;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact ratio, used where a conductance value must not lose precision.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct LoadStats {
    std::int64_t self_loops_dropped = 0;
    std::int64_t duplicate_edges_dropped = 0;
};

// Undirected simple graph in CSR form. Node ids are compacted to 0..n-1;
// the original ids survive in original_ids() (sorted, so compact ids are ranks).
class Graph {
public:
    Graph() = default;

    // Edges may contain duplicates and self loops; they are dropped (counted in
    // stats if a non-null pointer is given). Original ids can be arbitrary
    // non-negative 64-bit values.
    static Graph from_edges(const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                            LoadStats* stats = nullptr);

    NodeId n() const { return n_; }
    std::int64_t m() const { return m_; }
    std::int64_t total_volume() const { return 2 * m_; }

    std::int32_t degree(NodeId u) const {
        return static_cast<std::int32_t>(offsets_[u + 1] - offsets_[u]);
    }
    std::span<const NodeId> neighbors(NodeId u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }
    bool has_edge(NodeId u, NodeId v) const;

    std::int64_t original_id(NodeId u) const { return original_ids_[u]; }
    const std::vector<std::int64_t>& original_ids() const { return original_ids_; }
    // Compact id for an original id, if present.
    std::optional<NodeId> compact_id(std::int64_t original) const;

    std::int32_t max_degree() const;

    // Order-independent content hash (n plus the sorted compacted edge list).
    std::uint64_t hash() const;

private:
    NodeId n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> offsets_ = {0};
    std::vector<NodeId> adj_;
    std::vector<std::int64_t> original_ids_;
};

// Set of nodes held as a sorted unique id list (compact ids).
struct NodeSet {
    std::vector<NodeId> ids;

    static NodeSet of(std::vector<NodeId> raw);
    std::size_t size() const { return ids.size(); }
    bool empty() const { return ids.empty(); }
    bool contains(NodeId u) const;
    // Indicator flags of length n.
    std::vector<char> flags(NodeId n) const;
    NodeSet complement(NodeId n) const;
};

// Partition of 0..n-1 into k clusters labelled 0..k-1 (first-appearance order).
struct Clustering {
    std::vector<std::int32_t> labels;
    std::int32_t k = 0;

    static Clustering from_labels(std::vector<std::int32_t> raw);
    std::vector<std::vector<NodeId>> groups() const;
};

// I/O ------------------------------------------------------------------

// Whitespace-separated pairs, one edge per line, '#' starts a comment.
// Malformed lines raise ParseError with the 1-based line number.
std::pair<Graph, LoadStats> load_edge_list(std::istream& in);
std::pair<Graph, LoadStats> load_edge_list_file(const std::string& path);
// Writes original ids; loading the output reproduces an identical graph.
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

// One original node id per line. Unknown ids raise ParseError.
NodeSet load_node_set(std::istream& in, const Graph& g);
NodeSet load_node_set_file(const std::string& path, const Graph& g);
void save_node_set(const NodeSet& s, const Graph& g, std::ostream& out);

// Lines of "original_node_id<TAB>cluster_label". Every node must be covered.
Clustering load_clustering(std::istream& in, const Graph& g);
Clustering load_clustering_file(const std::string& path, const Graph& g);
void save_clustering(const Clustering& c, const Graph& g, std::ostream& out);
void save_clustering_file(const Clustering& c, const Graph& g, const std::string& path);

// Set primitives --------------------------------------------------------

// Number of edges with exactly one endpoint in S.
std::int64_t cut(const Graph& g, const NodeSet& s);
std::int64_t cut(const Graph& g, const std::vector<char>& in_s);
// Sum of degrees of S.
std::int64_t vol(const Graph& g, const NodeSet& s);

// cut(S) / min(vol(S), vol(V\S)). Undefined for empty or volume-less sides.
Rational conductance(const Graph& g, const NodeSet& s);

// Grow X by BFS layers until target_size nodes are collected. Whole layers are
// added while they fit; the final partial layer is filled lowest-id-first.
NodeSet bfs_grow(const Graph& g, const NodeSet& x, std::size_t target_size);

// Nodes of the largest connected component (ties: the one with the smallest
// member id).
NodeSet largest_component(const Graph& g);

// Subgraph induced on S; original ids of the result are the original ids of
// the kept nodes.
Graph induced_subgraph(const Graph& g, const NodeSet& s);

bool is_connected(const Graph& g);

}  // namespace resfit
