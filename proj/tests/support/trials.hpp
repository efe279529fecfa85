#pragma once

// Randomized checks shared by the property tests and the acceptance runner.
// Each returns an empty string on success, otherwise a description of the
// first discrepancy found.

#include <random>
#include <string>

namespace kgatlas::testing {

// Random corpus, random mode/seeds/depth in [0, 4]; compares the extracted
// view against the brute-force BFS, induced-edge and tooltip oracles.
std::string subgraph_trial(std::mt19937_64& rng);

// Node sets grow monotonically with depth and stop changing once depth
// reaches the number of nodes in the graph.
std::string depth_trial(std::mt19937_64& rng);

// Serialize, reparse, compare up to blank-node renaming; serialization of
// the reparsed graph is byte-identical.
std::string roundtrip_trial(std::mt19937_64& rng);

}  // namespace kgatlas::testing
