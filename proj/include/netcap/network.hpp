#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netcap/common.hpp"

namespace netcap {

struct Edge {
    std::string tail;
    std::string head;
    double lower = 0.0;
    double upper = 0.0;
    bool operator==(const Edge&) const = default;
};

// Validation knobs. The strict defaults match the on-disk format contract;
// circulation-style graphs (cycles, no declared roles) relax them.
struct NetworkOptions {
    bool require_acyclic = true;
    bool require_roles = true;            // nonempty source and sink sets
    bool allow_edges_into_sources = false;
};

// A cut is identified by its member node set M; the cutset is derived.
struct Cut {
    std::vector<std::string> members;
};

class Network {
  public:
    static Network create(std::vector<std::string> nodes, std::vector<Edge> edges,
                          std::vector<std::string> sources, std::vector<std::string> sinks,
                          const NetworkOptions& opts = {});

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& sources() const { return sources_; }
    const std::vector<int>& sinks() const { return sinks_; }

    int node_index(const std::string& name) const;   // throws on unknown node
    std::optional<int> find_node(const std::string& name) const;
    const std::string& node_name(int i) const { return nodes_[i]; }
    bool is_source(int i) const;
    bool is_sink(int i) const;

    int tail_index(int e) const { return edge_tail_[e]; }
    int head_index(int e) const { return edge_head_[e]; }

    std::uint64_t node_mask(const std::vector<std::string>& names) const;
    std::uint64_t source_mask() const;
    std::uint64_t sink_mask() const;

    // Optional source/sink pairing used by interference-type routing,
    // carried from "pair" lines of the network file.
    const std::vector<std::pair<int, int>>& pairings() const { return pairings_; }
    void set_pairings(std::vector<std::pair<int, int>> p) { pairings_ = std::move(p); }

  private:
    std::vector<std::string> nodes_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<int> edge_tail_, edge_head_;
    std::vector<int> sources_, sinks_;
    std::vector<std::pair<int, int>> pairings_;
};

Network parse_network(const std::string& text, const NetworkOptions& opts = {});
std::string render_network(const Network& net);

// Sum of upper capacities over edges leaving M.
double cut_value(const Network& net, std::uint64_t member_mask);
double cut_value(const Network& net, const Cut& cut);

// Sum of lower capacities over edges entering M.
double reverse_lower_value(const Network& net, std::uint64_t member_mask);
double reverse_lower_value(const Network& net, const Cut& cut);

// Deterministic order (Kahn, ties broken by node-name order); throws
// ValidationError naming one cycle if the graph is cyclic.
std::vector<int> topological_order(const Network& net);

Cut cut_from_mask(const Network& net, std::uint64_t mask);

namespace fixtures {
Network butterfly();
Network noisy_butterfly(double p);
Network broken_butterfly();          // butterfly with the m1->m2 edge removed
Network interference_example();      // two-commodity graph with region 0 <= R1 <= R2 <= 1
}  // namespace fixtures

}  // namespace netcap
