#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "oumv/driver.hpp"
#include "oumv/graph.hpp"
#include "oumv/instance.hpp"
#include "oumv/layout.hpp"

namespace oumv {

enum class PartialFamily { stpath, matching };

// Decremental constructions. Rounds are 1-based; every update after the build is a deletion.
struct DecrementalLayout {
  PartialFamily family = PartialFamily::stpath;
  int n = 0;
  int log_n = 0;
  Layout labels;
  NodeId s = -1, t = -1;  // st only
  // st: (L4[i,j], P[i,j]) and (R4[i,j], Q[i,j]) by [i][j].
  // matching: (L2[j,i], L3[i,j]) and (R2[j,i], R3[i,j]) by [i][j].
  std::vector<std::vector<Edge>> left_input, right_input;
  // matching: (L1[j,0], L2[j,0]), (L2[j,0], L1[j,1]) and mirrors by [j].
  std::vector<Edge> l_head, l_link, r_head, r_link;
};

struct DecrementalBuild {
  DynamicGraph graph;
  DecrementalLayout layout;
};

DecrementalBuild build_decremental_st(int n, const BitMatrix& m);
DecrementalBuild build_decremental_matching(int n, const BitMatrix& m);

// Round-j value that decodes to 1: the (s,t) distance 6 log n + 5 + 2j, or 4j - 2 unmatched nodes.
std::int64_t decremental_target(const DecrementalLayout& layout, int round);

// Deletions made when round j's pair arrives, before the query.
int begin_round(DynamicGraph& g, const DecrementalLayout& layout, int round, const BitVector& u, const BitVector& v);
// Deletions made after round j's query.
int end_round(DynamicGraph& g, const DecrementalLayout& layout, int round);

// Query value: distance for st, number of unmatched nodes for matching.
std::int64_t decremental_value(const DynamicGraph& g, const DecrementalLayout& layout);

// Start graph, update stream and query positions of one partially dynamic run.
struct ReplayLog {
  DynamicGraph start;
  std::vector<UpdateOp> ops;
  std::vector<std::size_t> queries;  // query after this many ops, ascending
};

// Applies every pair of the instance as rounds 1..n and records the run.
ReplayLog record_decremental(DecrementalBuild build, const OuMvInstance& inst);

DynamicGraph replay_final(const ReplayLog& log);
// Starts from the final graph and undoes the stream: deletions become insertions.
ReplayLog reverse_to_incremental(const ReplayLog& log);
// Query values at each query position.
std::vector<std::int64_t> replay_values(const ReplayLog& log, const DecrementalLayout& layout);

// Thresholds of an insertion-only replay, measured on a planted-one probe run. Round r of
// the replay decodes to 1 iff its value is at most thresholds[r - 1].
std::vector<std::int64_t> measure_incremental_thresholds(PartialFamily family, int n);

std::unique_ptr<ReductionDriver> make_decremental_driver(PartialFamily family, const BitMatrix& m);
// Built from the whole instance: the decremental run of the reversed pair order is recorded
// and undone, so round r of the replay answers pair r.
std::unique_ptr<ReductionDriver> make_incremental_driver(PartialFamily family, const OuMvInstance& inst);

}  // namespace oumv
