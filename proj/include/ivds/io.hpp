#pragma once

#include <string>

#include "ivds/instances.hpp"

namespace ivds {

/// Interval-instance interchange schema:
/// {version, intervals: [[[ln,ld],[rn,rd]], ...], terminals: [bool...], meta}.
/// Rationals travel as numerator/denominator pairs for bit-exact round trips.
std::string instance_to_json(const Instance &G, const std::string &name = "",
                             uint64_t seed = 0);
Instance instance_from_json(const std::string &text);

std::string digraph_to_json(const WeightedDigraph &d,
                            const std::string &name = "");
WeightedDigraph digraph_from_json(const std::string &text);

std::string subgraph_to_json(const Subgraph &h);
/// Re-attaches the edge list to the given host.
Subgraph subgraph_from_json(const std::string &text, const Graph &host);

std::string instance_to_dot(const Instance &G);
std::string subgraph_to_dot(const Instance &G, const Subgraph &h);

}  // namespace ivds
