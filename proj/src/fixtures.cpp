#include "netcap/network.hpp"
#include "netcap/setfn.hpp"

namespace netcap::fixtures {

namespace {

Network butterfly_like(double mid_cap, bool with_middle_edge) {
    std::vector<Edge> edges = {
        {"s1", "t1", 0, 1}, {"s2", "t2", 0, 1},       {"s1", "m1", 0, mid_cap},
        {"s2", "m1", 0, mid_cap},
    };
    if (with_middle_edge) edges.push_back({"m1", "m2", 0, 1});
    edges.push_back({"m2", "t1", 0, 1});
    edges.push_back({"m2", "t2", 0, 1});
    return Network::create({"s1", "s2", "m1", "m2", "t1", "t2"}, edges, {"s1", "s2"},
                           {"t1", "t2"});
}

}  // namespace

Network butterfly() { return butterfly_like(1.0, true); }

Network noisy_butterfly(double p) { return butterfly_like(binary_entropy(p), true); }

Network broken_butterfly() { return butterfly_like(1.0, false); }

Network interference_example() {
    Network net = Network::create(
        {"s1", "s2", "a", "t1", "t2"},
        {{"s1", "t2", 0, 1}, {"s2", "a", 0, 1}, {"a", "t1", 0, 1}, {"a", "t2", 0, 1}},
        {"s1", "s2"}, {"t1", "t2"});
    net.set_pairings({{net.node_index("s1"), net.node_index("t1")},
                      {net.node_index("s2"), net.node_index("t2")}});
    return net;
}

}  // namespace netcap::fixtures
