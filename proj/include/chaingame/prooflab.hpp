#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaingame/chain_partition.hpp"
#include "chaingame/semi_order.hpp"
#include "chaingame/transcript.hpp"

// Structure behind the golden upper bound for ALG, computed from a finished
// up-growing game and checked statement by statement.
namespace chaingame::prooflab {

struct LayerDecomposition {
  /// e_1..e_{m-1}, in presentation order.
  std::vector<PointId> significant;
  /// D_1..D_m stored at indices 0..m-1.
  std::vector<PointSet> layers;
  /// Layer index (1-based) of every point.
  std::vector<std::size_t> layer_of;

  std::size_t m() const { return layers.size(); }
  const PointSet& layer(std::size_t i) const { return layers.at(i - 1); }
  /// D_lo | ... | D_hi (1-based, inclusive; empty when lo > hi).
  PointSet span(std::size_t lo, std::size_t hi) const;
};

enum class PathKind { UpPath, DownPath };

/// q_0 is an ALG-chain bottom; odd steps follow the optimal partition
/// downwards, even steps follow ALG upwards.
struct AlternatingPath {
  std::vector<PointId> points;
  PathKind kind = PathKind::UpPath;
  /// Set when a same-parity point repeated and the walk was cut.
  bool repeated = false;

  PointId last() const { return points.back(); }
};

struct PathStatistics {
  std::size_t x_u = 0;
  /// Layers i_0 < ... < i_s holding down-path ends.
  std::vector<std::size_t> end_layers;
  /// x_0..x_s followed by x_{s+1} = 0.
  std::vector<std::uint64_t> xs;

  std::uint64_t x0() const { return xs.empty() ? 0 : xs.front(); }
};

/// Points of an up-growing order dominating a point that was maximal when
/// they arrived (presentation order = id order).
std::vector<PointId> significant_points(const SemiOrder& order);

/// D_i = e_i down - e_{i-1} down for i < m and D_m = P - e_{m-1} down; a
/// single layer when nothing is significant.
LayerDecomposition layers(const SemiOrder& order);

/// One path per ALG chain, in chain-id order.
std::vector<AlternatingPath> alternating_paths(const ChainPartition& alg, const ChainPartition& opt);

PathStatistics path_statistics(const std::vector<AlternatingPath>& paths, const LayerDecomposition& layers);

/// Number of leading events kept for analysis: everything up to the last
/// assignment that opened a new chain. Later points never change the chain
/// count.
std::size_t analysed_prefix(const Transcript& transcript);

/// Everything the checks need, built from the analysed prefix.
struct Analysis {
  std::uint64_t w = 0;
  std::size_t events_used = 0;
  std::size_t chains_used = 0;
  SemiOrder order;
  ChainPartition alg;
  ChainPartition opt;
  LayerDecomposition decomposition;
  std::vector<AlternatingPath> paths;
  /// good[p]: o-(p) exists and was an ALG top when p arrived.
  std::vector<bool> good;
  /// Per point, the valid chain tops seen when it arrived.
  std::vector<std::vector<PointId>> valid_tops;
  PathStatistics stats;
};

/// Throws ModeMismatch for general-mode games and the referee's Error for
/// transcripts that do not replay.
Analysis analyse(const Transcript& transcript);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<PointId> witness;
};

struct Report {
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

Report check_facts(const Analysis& analysis);
Report check_lemmas(const PathStatistics& stats, std::uint64_t w);

OrderedJson report_to_json(const Report& report);
/// Layers, paths, statistics and both reports.
OrderedJson analysis_to_json(const Analysis& analysis, const Report& facts, const Report& lemmas);

}  // namespace chaingame::prooflab
