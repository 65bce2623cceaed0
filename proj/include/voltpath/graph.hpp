#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "voltpath/decimal.hpp"
#include "voltpath/errors.hpp"

namespace voltpath {

/// Dense node index into WeightedMultiGraph::node_names(). Names are kept
/// sorted, so index order coincides with lexicographic name order.
using NodeIndex = int;

/// Undirected weighted edge. Endpoints are normalized so u < v; the cost is
/// both the path cost and the electrical resistance of the edge.
struct Edge {
    int id = 0;
    NodeIndex u = 0;
    NodeIndex v = 0;
    Decimal cost;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected weighted multigraph with designated start and terminal nodes.
/// Parallel edges are permitted (distinct ids, same endpoint pair);
/// instances are immutable after construction.
class WeightedMultiGraph {
  public:
    class Builder;

    int node_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& node_names() const { return names_; }
    const std::string& node_name(NodeIndex n) const { return names_[static_cast<std::size_t>(n)]; }

    std::optional<NodeIndex> find_node(std::string_view name) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), name);
        if (it == names_.end() || *it != name)
            return std::nullopt;
        return static_cast<NodeIndex>(it - names_.begin());
    }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    NodeIndex start() const { return start_; }
    NodeIndex terminal() const { return terminal_; }
    const std::string& start_name() const { return names_[static_cast<std::size_t>(start_)]; }
    const std::string& terminal_name() const { return names_[static_cast<std::size_t>(terminal_)]; }

    /// Edge ids incident to each node.
    const std::vector<std::vector<int>>& incidence() const { return incidence_; }

    friend bool operator==(const WeightedMultiGraph& a, const WeightedMultiGraph& b) {
        return a.names_ == b.names_ && a.edges_ == b.edges_ && a.start_ == b.start_ &&
               a.terminal_ == b.terminal_;
    }

  private:
    friend class Builder;
    WeightedMultiGraph() = default;

    std::vector<std::string> names_; // sorted, unique
    std::vector<Edge> edges_;        // ids are positions
    NodeIndex start_ = -1;
    NodeIndex terminal_ = -1;
    std::vector<std::vector<int>> incidence_;
};

struct ValidationOutcome {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks all type invariants plus start-terminal connectivity. Violations
/// are returned as data; nothing throws.
inline ValidationOutcome validate(const WeightedMultiGraph& g) {
    ValidationOutcome out;
    const int n = g.node_count();
    if (g.start() < 0 || g.start() >= n)
        out.violations.push_back("start node is not a member of the node set");
    if (g.terminal() < 0 || g.terminal() >= n)
        out.violations.push_back("terminal node is not a member of the node set");
    if (g.start() >= 0 && g.start() == g.terminal())
        out.violations.push_back("start equals terminal");
    for (const Edge& e : g.edges()) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            out.violations.push_back("edge " + std::to_string(e.id) + " has an endpoint outside the node set");
            continue;
        }
        if (e.u == e.v)
            out.violations.push_back("self-loop on node " + g.node_name(e.u));
        if (!e.cost.is_positive())
            out.violations.push_back("non-positive cost on edge " + g.node_name(e.u) + "-" + g.node_name(e.v));
    }
    for (int id = 0; id < g.edge_count(); ++id) {
        if (g.edge(id).id != id) {
            out.violations.push_back("edge ids are not dense in order");
            break;
        }
    }
    // Connectivity of start and terminal.
    if (out.ok()) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::deque<NodeIndex> queue{g.start()};
        seen[static_cast<std::size_t>(g.start())] = 1;
        while (!queue.empty()) {
            NodeIndex x = queue.front();
            queue.pop_front();
            for (int id : g.incidence()[static_cast<std::size_t>(x)]) {
                const Edge& e = g.edge(id);
                NodeIndex y = e.u == x ? e.v : e.u;
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    queue.push_back(y);
                }
            }
        }
        if (!seen[static_cast<std::size_t>(g.terminal())])
            out.violations.push_back("terminal unreachable from start");
    }
    return out;
}

class WeightedMultiGraph::Builder {
  public:
    Builder& add_node(std::string name) {
        declared_.push_back(std::move(name));
        return *this;
    }
    Builder& add_edge(std::string u, std::string v, Decimal cost) {
        raw_edges_.push_back({std::move(u), std::move(v), cost});
        return *this;
    }
    Builder& add_edge(std::string u, std::string v, std::int64_t cost) {
        return add_edge(std::move(u), std::move(v), Decimal(cost));
    }
    Builder& start(std::string name) {
        start_name_ = std::move(name);
        return *this;
    }
    Builder& terminal(std::string name) {
        terminal_name_ = std::move(name);
        return *this;
    }

    /// Assembles and checks type invariants; throws ValidationError when any
    /// is violated (connectivity is left to validate()).
    WeightedMultiGraph build() const {
        WeightedMultiGraph g = assemble();
        ValidationOutcome v = validate(g);
        // build() enforces only the structural invariants; drop the
        // connectivity violation so disconnected-but-well-formed graphs can
        // be constructed and reported on by validate().
        std::erase(v.violations, std::string("terminal unreachable from start"));
        if (!v.ok())
            throw ValidationError(std::move(v.violations));
        return g;
    }

    /// Assembles without invariant checks, for validate() tests and callers
    /// that deliberately construct broken graphs.
    WeightedMultiGraph build_unchecked() const { return assemble(); }

  private:
    struct RawEdge {
        std::string u, v;
        Decimal cost;
    };

    WeightedMultiGraph assemble() const {
        WeightedMultiGraph g;
        g.names_ = declared_;
        for (const RawEdge& e : raw_edges_) {
            g.names_.push_back(e.u);
            g.names_.push_back(e.v);
        }
        std::sort(g.names_.begin(), g.names_.end());
        g.names_.erase(std::unique(g.names_.begin(), g.names_.end()), g.names_.end());

        auto index_of = [&g](const std::string& name) -> NodeIndex {
            auto it = std::lower_bound(g.names_.begin(), g.names_.end(), name);
            if (it == g.names_.end() || *it != name)
                return -1;
            return static_cast<NodeIndex>(it - g.names_.begin());
        };

        g.edges_.reserve(raw_edges_.size());
        for (const RawEdge& e : raw_edges_) {
            NodeIndex u = index_of(e.u);
            NodeIndex v = index_of(e.v);
            if (v < u)
                std::swap(u, v);
            g.edges_.push_back(Edge{static_cast<int>(g.edges_.size()), u, v, e.cost});
        }
        g.start_ = index_of(start_name_);
        g.terminal_ = index_of(terminal_name_);
        g.incidence_.assign(g.names_.size(), {});
        for (const Edge& e : g.edges_) {
            g.incidence_[static_cast<std::size_t>(e.u)].push_back(e.id);
            if (e.v != e.u)
                g.incidence_[static_cast<std::size_t>(e.v)].push_back(e.id);
        }
        return g;
    }

    std::vector<std::string> declared_;
    std::vector<RawEdge> raw_edges_;
    std::string start_name_;
    std::string terminal_name_;
};

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

} // namespace detail

/// Parses the line-oriented graph file format:
///   node <name>            (optional; edges declare nodes implicitly)
///   start <name>           (exactly one)
///   terminal <name>        (exactly one)
///   edge <name> <name> <cost>
/// '#' starts a comment; directives may appear in any order.
inline WeightedMultiGraph parse_graph(std::string_view text) {
    WeightedMultiGraph::Builder builder;
    std::vector<std::string> explicit_nodes;
    std::vector<std::string> known_names;
    std::string start_name, terminal_name;
    int start_line = 0, terminal_line = 0;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<std::string> tokens = detail::split_tokens(line);
        if (tokens.empty())
            continue;

        const std::string& directive = tokens[0];
        if (directive == "node") {
            if (tokens.size() != 2)
                throw ParseError(line_no, "expected: node <name>");
            if (std::find(explicit_nodes.begin(), explicit_nodes.end(), tokens[1]) != explicit_nodes.end())
                throw ParseError(line_no, "duplicate node declaration '" + tokens[1] + "'");
            explicit_nodes.push_back(tokens[1]);
            known_names.push_back(tokens[1]);
            builder.add_node(tokens[1]);
        } else if (directive == "start" || directive == "terminal") {
            if (tokens.size() != 2)
                throw ParseError(line_no, "expected: " + directive + " <name>");
            std::string& slot = directive == "start" ? start_name : terminal_name;
            int& slot_line = directive == "start" ? start_line : terminal_line;
            if (slot_line != 0)
                throw ParseError(line_no, "duplicate " + directive + " directive (first on line " +
                                              std::to_string(slot_line) + ")");
            slot = tokens[1];
            slot_line = line_no;
        } else if (directive == "edge") {
            if (tokens.size() != 4)
                throw ParseError(line_no, "expected: edge <name> <name> <cost>");
            if (tokens[1] == tokens[2])
                throw ParseError(line_no, "self-loop on node '" + tokens[1] + "'");
            std::optional<Decimal> cost = Decimal::parse(tokens[3]);
            if (!cost)
                throw ParseError(line_no, "cost '" + tokens[3] + "' is not a decimal number");
            if (!cost->is_positive())
                throw ParseError(line_no, "cost must be positive, got '" + tokens[3] + "'");
            builder.add_edge(tokens[1], tokens[2], *cost);
            known_names.push_back(tokens[1]);
            known_names.push_back(tokens[2]);
        } else {
            throw ParseError(line_no, "unknown directive '" + directive + "'");
        }
    }

    if (start_line == 0)
        throw ParseError(line_no, "missing start directive");
    if (terminal_line == 0)
        throw ParseError(line_no, "missing terminal directive");
    if (start_name == terminal_name)
        throw ParseError(terminal_line, "start and terminal are the same node '" + start_name + "'");
    if (std::find(known_names.begin(), known_names.end(), start_name) == known_names.end())
        throw ParseError(start_line, "start node '" + start_name + "' is never declared by a node or edge line");
    if (std::find(known_names.begin(), known_names.end(), terminal_name) == known_names.end())
        throw ParseError(terminal_line,
                         "terminal node '" + terminal_name + "' is never declared by a node or edge line");
    builder.start(start_name).terminal(terminal_name);
    return builder.build();
}

/// Emits directives in the order: nodes (sorted), start, terminal, edges by id.
inline std::string serialize(const WeightedMultiGraph& g) {
    std::ostringstream out;
    for (const std::string& name : g.node_names())
        out << "node " << name << "\n";
    out << "start " << g.start_name() << "\n";
    out << "terminal " << g.terminal_name() << "\n";
    for (const Edge& e : g.edges())
        out << "edge " << g.node_name(e.u) << " " << g.node_name(e.v) << " " << e.cost.to_string() << "\n";
    return out.str();
}

/// BFS hop-distance from the start node, per node.
struct LevelAssignment {
    std::vector<int> level; // indexed by NodeIndex
    int depth = 0;          // level of the terminal

    int of(NodeIndex n) const { return level[static_cast<std::size_t>(n)]; }
};

/// Unweighted BFS levels from start. Every node must be reachable;
/// unreachable nodes are reported in an UnreachableNodeError.
inline LevelAssignment compute_levels(const WeightedMultiGraph& g) {
    LevelAssignment out;
    out.level.assign(static_cast<std::size_t>(g.node_count()), -1);
    std::deque<NodeIndex> queue{g.start()};
    out.level[static_cast<std::size_t>(g.start())] = 0;
    while (!queue.empty()) {
        NodeIndex x = queue.front();
        queue.pop_front();
        for (int id : g.incidence()[static_cast<std::size_t>(x)]) {
            const Edge& e = g.edge(id);
            NodeIndex y = e.u == x ? e.v : e.u;
            if (out.level[static_cast<std::size_t>(y)] < 0) {
                out.level[static_cast<std::size_t>(y)] = out.level[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    std::vector<std::string> unreachable;
    for (NodeIndex n = 0; n < g.node_count(); ++n)
        if (out.level[static_cast<std::size_t>(n)] < 0)
            unreachable.push_back(g.node_name(n));
    if (!unreachable.empty())
        throw UnreachableNodeError(std::move(unreachable));
    out.depth = out.level[static_cast<std::size_t>(g.terminal())];
    return out;
}

} // namespace voltpath
