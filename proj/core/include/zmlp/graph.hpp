#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zmlp/laurent.hpp"

namespace zmlp {

struct GraphOptions {
    Int max_size = 3;               // bound on polygon_size of every node
    Int max_direction = 0;          // bound on |coordinates| of mutation directions; 0 means max_size
    bool include_products = false;  // close the node set under products as well
};

struct MutationGraph {
    std::vector<LaurentPoly> nodes;                        // canonical representatives; nodes[0] is 1
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted, no repeats

    std::optional<std::size_t> find(const LaurentPoly& f) const;
    // Component of node 0.
    std::vector<bool> reachable_from_one() const;
};

// Breadth-first closure of {1} under mutations whose images stay within the
// size bound. Mutations with constant phi are only used when they keep the
// polynomial collinear, unless products are included.
MutationGraph build_mutation_graph(const GraphOptions& options = {});

// Coefficient rows bottom to top, e.g. "1,3,3,1/2,2/1"; lattice points of the
// Newton polygon without a term print as 0.
std::string coefficient_array(const LaurentPoly& f);

std::string to_dot(const MutationGraph& graph);

}  // namespace zmlp
