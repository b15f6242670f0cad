#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mist/graph.hpp"

namespace mist {

// Platform-independent draws on top of mt19937_64.
double uniform_unit(std::mt19937_64& rng);
int uniform_below(std::mt19937_64& rng, int bound);
std::uint64_t splitmix64(std::uint64_t x);

// G(n, p) redrawn until connected. Throws BadParams when p gives up.
Graph random_connected_gnp(int n, double p, std::mt19937_64& rng);

// Each vertex after the first attaches to a uniformly chosen earlier vertex.
Graph random_tree(int n, std::mt19937_64& rng);

enum class Family { Gnp, Cycle, Path, Theta, Twins };

std::optional<Family> parse_family(const std::string& name);

// Throws BadParams on sizes the family cannot realise.
Graph generate(Family family, int n, double p, std::uint64_t seed);

// One representative per isomorphism class of connected graphs on n <= 8 vertices.
std::vector<Graph> connected_graphs(int n);

}  // namespace mist
