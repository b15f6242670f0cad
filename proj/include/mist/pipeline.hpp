#pragma once

#include <optional>
#include <vector>

#include "mist/cover.hpp"
#include "mist/cover_solver.hpp"
#include "mist/exact.hpp"
#include "mist/graph.hpp"
#include "mist/preprocess.hpp"
#include "mist/reduction.hpp"
#include "mist/tree_builder.hpp"

namespace mist {

enum class Algorithm { Simple, Refined, Exact };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

struct PipelineOptions {
  Algorithm algorithm = Algorithm::Refined;
  bool retain_state = false;  // keep trace and per-leaf cover records
  int base_case_max = 8;      // irreducible graphs this small are solved exactly
  ReductionOptions reduction;
  const TfpccSolver* solver = nullptr;  // defaults to the exact solver
};

// Everything the cover path produced for one irreducible graph.
struct CoverStepRecord {
  Graph graph;
  std::vector<PiPair> pairs;
  Cover initial;
  PreprocessResult preprocessed;
  std::optional<StageState> stages;  // refined only
  TreeResult tree;
};

struct RunReport {
  Algorithm algorithm = Algorithm::Refined;
  TreeResult tree;
  int upper_bound = 0;  // >= opt of the input
  int exact_leaves = 0;
  int cover_leaves = 0;
  std::optional<ReductionTrace> trace;
  std::vector<CoverStepRecord> cover_steps;
};

// Throws DisconnectedInput, SizeCapExceeded.
RunReport solve(const Graph& g, const PipelineOptions& options = {});

TreeResult solve_simple(const Graph& g);
TreeResult solve_refined(const Graph& g);

}  // namespace mist
