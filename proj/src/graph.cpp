#include "resfit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace resfit {

Graph Graph::from_edges(const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                        LoadStats* stats) {
    LoadStats local;
    std::vector<std::pair<std::int64_t, std::int64_t>> cleaned;
    cleaned.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b) {
            local.self_loops_dropped++;
            continue;
        }
        cleaned.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(cleaned.begin(), cleaned.end());
    auto last = std::unique(cleaned.begin(), cleaned.end());
    local.duplicate_edges_dropped = static_cast<std::int64_t>(cleaned.end() - last);
    cleaned.erase(last, cleaned.end());

    Graph g;
    g.original_ids_.reserve(2 * cleaned.size());
    for (const auto& [a, b] : cleaned) {
        g.original_ids_.push_back(a);
        g.original_ids_.push_back(b);
    }
    std::sort(g.original_ids_.begin(), g.original_ids_.end());
    g.original_ids_.erase(std::unique(g.original_ids_.begin(), g.original_ids_.end()),
                          g.original_ids_.end());
    g.n_ = static_cast<NodeId>(g.original_ids_.size());
    g.m_ = static_cast<std::int64_t>(cleaned.size());

    auto rank = [&g](std::int64_t orig) {
        return static_cast<NodeId>(
            std::lower_bound(g.original_ids_.begin(), g.original_ids_.end(), orig) -
            g.original_ids_.begin());
    };

    std::vector<std::int32_t> deg(g.n_, 0);
    std::vector<std::pair<NodeId, NodeId>> compact;
    compact.reserve(cleaned.size());
    for (const auto& [a, b] : cleaned) {
        NodeId u = rank(a), v = rank(b);
        compact.emplace_back(u, v);
        deg[u]++;
        deg[v]++;
    }
    g.offsets_.assign(g.n_ + 1, 0);
    for (NodeId u = 0; u < g.n_; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];
    g.adj_.resize(2 * g.m_);
    std::vector<std::int64_t> pos(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : compact) {
        g.adj_[pos[u]++] = v;
        g.adj_[pos[v]++] = u;
    }
    for (NodeId u = 0; u < g.n_; ++u)
        std::sort(g.adj_.begin() + g.offsets_[u], g.adj_.begin() + g.offsets_[u + 1]);

    if (stats) *stats = local;
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeId> Graph::compact_id(std::int64_t original) const {
    auto it = std::lower_bound(original_ids_.begin(), original_ids_.end(), original);
    if (it == original_ids_.end() || *it != original) return std::nullopt;
    return static_cast<NodeId>(it - original_ids_.begin());
}

std::int32_t Graph::max_degree() const {
    std::int32_t best = 0;
    for (NodeId u = 0; u < n_; ++u) best = std::max(best, degree(u));
    return best;
}

std::uint64_t Graph::hash() const {
    const std::uint64_t prime = 1099511628211ULL;
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h, prime](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= prime;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : neighbors(u))
            if (u < v) {
                mix(static_cast<std::uint64_t>(u));
                mix(static_cast<std::uint64_t>(v));
            }
    return h;
}

NodeSet NodeSet::of(std::vector<NodeId> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return NodeSet{std::move(raw)};
}

bool NodeSet::contains(NodeId u) const {
    return std::binary_search(ids.begin(), ids.end(), u);
}

std::vector<char> NodeSet::flags(NodeId n) const {
    std::vector<char> f(n, 0);
    for (NodeId u : ids) {
        if (u < 0 || u >= n) throw std::out_of_range("node set id out of range");
        f[u] = 1;
    }
    return f;
}

NodeSet NodeSet::complement(NodeId n) const {
    NodeSet out;
    out.ids.reserve(n - ids.size());
    std::size_t j = 0;
    for (NodeId u = 0; u < n; ++u) {
        if (j < ids.size() && ids[j] == u) {
            ++j;
        } else {
            out.ids.push_back(u);
        }
    }
    return out;
}

Clustering Clustering::from_labels(std::vector<std::int32_t> raw) {
    Clustering c;
    c.labels.assign(raw.size(), -1);
    std::vector<std::pair<std::int32_t, std::int32_t>> seen;  // (raw label, new label)
    for (std::size_t i = 0; i < raw.size(); ++i) {
        std::int32_t lab = raw[i];
        std::int32_t mapped = -1;
        for (const auto& [r, m] : seen)
            if (r == lab) {
                mapped = m;
                break;
            }
        if (mapped < 0) {
            mapped = static_cast<std::int32_t>(seen.size());
            seen.emplace_back(lab, mapped);
        }
        c.labels[i] = mapped;
    }
    c.k = static_cast<std::int32_t>(seen.size());
    return c;
}

std::vector<std::vector<NodeId>> Clustering::groups() const {
    std::vector<std::vector<NodeId>> gs(k);
    for (std::size_t i = 0; i < labels.size(); ++i)
        gs[labels[i]].push_back(static_cast<NodeId>(i));
    return gs;
}

std::pair<Graph, LoadStats> load_edge_list(std::istream& in) {
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.resize(hash_pos);
        std::istringstream ls(line);
        std::int64_t a, b;
        if (!(ls >> a)) continue;  // blank or comment-only line
        if (!(ls >> b)) {
            throw ParseError("edge list line " + std::to_string(lineno) +
                             ": expected two node ids");
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError("edge list line " + std::to_string(lineno) +
                             ": trailing content '" + extra + "'");
        }
        if (a < 0 || b < 0) {
            throw ParseError("edge list line " + std::to_string(lineno) +
                             ": negative node id");
        }
        edges.emplace_back(a, b);
    }
    LoadStats stats;
    Graph g = Graph::from_edges(edges, &stats);
    return {std::move(g), stats};
}

std::pair<Graph, LoadStats> load_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open edge list file: " + path);
    return load_edge_list(f);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.n(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open output file: " + path);
    save_edge_list(g, f);
}

NodeSet load_node_set(std::istream& in, const Graph& g) {
    std::vector<NodeId> ids;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.resize(hash_pos);
        std::istringstream ls(line);
        std::int64_t orig;
        if (!(ls >> orig)) continue;
        auto cid = g.compact_id(orig);
        if (!cid) {
            throw ParseError("node set line " + std::to_string(lineno) + ": id " +
                             std::to_string(orig) + " not present in graph");
        }
        ids.push_back(*cid);
    }
    return NodeSet::of(std::move(ids));
}

NodeSet load_node_set_file(const std::string& path, const Graph& g) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open node set file: " + path);
    return load_node_set(f, g);
}

void save_node_set(const NodeSet& s, const Graph& g, std::ostream& out) {
    for (NodeId u : s.ids) out << g.original_id(u) << '\n';
}

Clustering load_clustering(std::istream& in, const Graph& g) {
    std::vector<std::int32_t> raw(g.n(), -1);
    std::vector<char> seen(g.n(), 0);
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.resize(hash_pos);
        std::istringstream ls(line);
        std::int64_t orig, label;
        if (!(ls >> orig)) continue;
        if (!(ls >> label)) {
            throw ParseError("clustering line " + std::to_string(lineno) +
                             ": expected node id and cluster label");
        }
        auto cid = g.compact_id(orig);
        if (!cid) {
            throw ParseError("clustering line " + std::to_string(lineno) + ": id " +
                             std::to_string(orig) + " not present in graph");
        }
        if (seen[*cid]) {
            throw ParseError("clustering line " + std::to_string(lineno) + ": id " +
                             std::to_string(orig) + " assigned twice");
        }
        seen[*cid] = 1;
        raw[*cid] = static_cast<std::int32_t>(label);
    }
    for (NodeId u = 0; u < g.n(); ++u) {
        if (!seen[u]) {
            throw ParseError("clustering is missing node " +
                             std::to_string(g.original_id(u)));
        }
    }
    return Clustering::from_labels(std::move(raw));
}

Clustering load_clustering_file(const std::string& path, const Graph& g) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open clustering file: " + path);
    return load_clustering(f, g);
}

void save_clustering(const Clustering& c, const Graph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.n(); ++u)
        out << g.original_id(u) << '\t' << c.labels[u] << '\n';
}

void save_clustering_file(const Clustering& c, const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open output file: " + path);
    save_clustering(c, g, f);
}

std::int64_t cut(const Graph& g, const std::vector<char>& in_s) {
    std::int64_t c = 0;
    for (NodeId u = 0; u < g.n(); ++u) {
        if (!in_s[u]) continue;
        for (NodeId v : g.neighbors(u))
            if (!in_s[v]) ++c;
    }
    return c;
}

std::int64_t cut(const Graph& g, const NodeSet& s) { return cut(g, s.flags(g.n())); }

std::int64_t vol(const Graph& g, const NodeSet& s) {
    std::int64_t v = 0;
    for (NodeId u : s.ids) v += g.degree(u);
    return v;
}

Rational conductance(const Graph& g, const NodeSet& s) {
    if (s.empty() || s.size() >= static_cast<std::size_t>(g.n()))
        throw std::invalid_argument("conductance needs a nonempty proper subset");
    std::int64_t v = vol(g, s);
    std::int64_t side = std::min(v, g.total_volume() - v);
    if (side == 0) throw std::invalid_argument("conductance undefined: zero-volume side");
    return Rational{cut(g, s), side};
}

NodeSet bfs_grow(const Graph& g, const NodeSet& x, std::size_t target_size) {
    if (x.empty()) throw std::invalid_argument("bfs_grow needs a nonempty seed set");
    if (target_size <= x.size()) return x;
    std::vector<char> visited = x.flags(g.n());
    std::vector<NodeId> result = x.ids;
    std::vector<NodeId> frontier = x.ids;
    while (result.size() < target_size && !frontier.empty()) {
        std::vector<NodeId> layer;
        for (NodeId u : frontier) {
            for (NodeId v : g.neighbors(u)) {
                if (!visited[v]) {
                    visited[v] = 1;
                    layer.push_back(v);
                }
            }
        }
        std::sort(layer.begin(), layer.end());
        std::size_t room = target_size - result.size();
        if (layer.size() <= room) {
            result.insert(result.end(), layer.begin(), layer.end());
        } else {
            result.insert(result.end(), layer.begin(), layer.begin() + room);
        }
        frontier = std::move(layer);
    }
    return NodeSet::of(std::move(result));
}

namespace {

std::vector<NodeId> component_of(const Graph& g, NodeId start, std::vector<char>& visited) {
    std::vector<NodeId> comp;
    std::queue<NodeId> q;
    q.push(start);
    visited[start] = 1;
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        comp.push_back(u);
        for (NodeId v : g.neighbors(u)) {
            if (!visited[v]) {
                visited[v] = 1;
                q.push(v);
            }
        }
    }
    return comp;
}

}  // namespace

NodeSet largest_component(const Graph& g) {
    std::vector<char> visited(g.n(), 0);
    std::vector<NodeId> best;
    for (NodeId u = 0; u < g.n(); ++u) {
        if (visited[u]) continue;
        auto comp = component_of(g, u, visited);
        if (comp.size() > best.size()) best = std::move(comp);
    }
    return NodeSet::of(std::move(best));
}

Graph induced_subgraph(const Graph& g, const NodeSet& s) {
    auto in_s = s.flags(g.n());
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (NodeId u : s.ids)
        for (NodeId v : g.neighbors(u))
            if (u < v && in_s[v]) edges.emplace_back(g.original_id(u), g.original_id(v));
    Graph sub = Graph::from_edges(edges);
    if (sub.n() != static_cast<NodeId>(s.size())) {
        // isolated members of S have no incident edges; keep them by adding
        // them explicitly
        std::vector<std::int64_t> keep;
        for (NodeId u : s.ids) keep.push_back(g.original_id(u));
        // rebuild with sentinel self-edges is not an option; instead build CSR
        // manually through from_edges on the edge set plus isolated handling.
        // Simplest correct route: construct via edges and then verify; an
        // isolated node cannot be represented in an edge list, so reject.
        throw std::invalid_argument(
            "induced_subgraph: set contains isolated nodes, not representable "
            "as an edge list");
    }
    return sub;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    std::vector<char> visited(g.n(), 0);
    auto comp = component_of(g, 0, visited);
    return comp.size() == static_cast<std::size_t>(g.n());
}

}  // namespace resfit
