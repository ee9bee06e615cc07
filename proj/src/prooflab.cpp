#include "chaingame/prooflab.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chaingame/arena.hpp"
#include "chaingame/game_value.hpp"
#include "chaingame/oracle.hpp"

namespace chaingame::prooflab {

PointSet LayerDecomposition::span(std::size_t lo, std::size_t hi) const {
  PointSet out;
  for (std::size_t i = std::max<std::size_t>(lo, 1); i <= hi && i <= m(); ++i) out |= layer(i);
  return out;
}

std::vector<PointId> significant_points(const SemiOrder& order) {
  std::vector<PointId> out;
  for (PointId p = 0; p < order.size(); ++p) {
    bool dominates_maximal = false;
    order.down(p).for_each([&](PointId q) {
      // q was maximal in the prefix before p if nothing earlier than p lies above it.
      const auto first_above = order.up(q).first();
      if (!first_above || *first_above >= p) dominates_maximal = true;
    });
    if (dominates_maximal) out.push_back(p);
  }
  return out;
}

LayerDecomposition layers(const SemiOrder& order) {
  LayerDecomposition d;
  d.significant = significant_points(order);
  PointSet below;
  for (PointId e : d.significant) {
    d.layers.push_back(order.down(e) - below);
    below = order.down(e);
  }
  d.layers.push_back(order.all() - below);
  d.layer_of.assign(order.size(), 0);
  for (std::size_t i = 0; i < d.layers.size(); ++i) {
    d.layers[i].for_each([&](PointId p) {
      if (p < d.layer_of.size()) d.layer_of[p] = i + 1;
    });
  }
  return d;
}

std::vector<AlternatingPath> alternating_paths(const ChainPartition& alg, const ChainPartition& opt) {
  std::vector<AlternatingPath> paths;
  for (ChainId c = 0; c < alg.chain_count(); ++c) {
    AlternatingPath path;
    path.points.push_back(alg.bottom(c));
    std::map<PointId, bool> even_seen;
    std::map<PointId, bool> odd_seen;
    even_seen[path.points.back()] = true;
    while (true) {
      const bool at_even = path.points.size() % 2 == 1;
      const auto next = at_even ? opt.predecessor(path.last()) : alg.successor(path.last());
      if (!next) break;
      auto& seen = at_even ? odd_seen : even_seen;
      if (seen[*next]) {
        path.repeated = true;
        break;
      }
      seen[*next] = true;
      path.points.push_back(*next);
    }
    path.kind = path.points.size() % 2 == 1 ? PathKind::UpPath : PathKind::DownPath;
    paths.push_back(std::move(path));
  }
  return paths;
}

PathStatistics path_statistics(const std::vector<AlternatingPath>& paths, const LayerDecomposition& layers) {
  PathStatistics s;
  std::vector<std::size_t> ends;
  for (const auto& path : paths) {
    if (path.kind == PathKind::UpPath) {
      ++s.x_u;
    } else {
      ends.push_back(layers.layer_of.at(path.last()));
    }
  }
  s.end_layers = ends;
  std::sort(s.end_layers.begin(), s.end_layers.end());
  s.end_layers.erase(std::unique(s.end_layers.begin(), s.end_layers.end()), s.end_layers.end());
  for (std::size_t i : s.end_layers) {
    s.xs.push_back(static_cast<std::uint64_t>(std::count_if(ends.begin(), ends.end(), [&](std::size_t l) { return l >= i; })));
  }
  s.xs.push_back(0);
  return s;
}

std::size_t analysed_prefix(const Transcript& t) {
  std::size_t chains = 0;
  std::size_t keep = 0;
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    const auto* a = std::get_if<AssignEvent>(&t.events[i]);
    if (!a) continue;
    if (a->chain >= chains) {
      chains = a->chain + 1;
      keep = i + 1;
    }
  }
  return keep;
}

Analysis analyse(const Transcript& t) {
  if (t.config.mode != Mode::UpGrowing) {
    throw Error(Errc::ModeMismatch, "the layer analysis needs an up-growing game");
  }
  Analysis a;
  a.w = t.config.w;
  a.events_used = analysed_prefix(t);
  ReplayedGame game = rebuild(t, a.events_used);
  a.order = std::move(game.order);
  a.alg = std::move(game.partition);
  a.chains_used = a.alg.chain_count();
  a.opt = oracle::min_chain_partition(a.order);
  a.decomposition = layers(a.order);
  a.paths = alternating_paths(a.alg, a.opt);
  a.stats = path_statistics(a.paths, a.decomposition);

  // Good points and valid tops are properties of the moment of arrival.
  const std::size_t n = a.order.size();
  a.good.assign(n, false);
  a.valid_tops.assign(n, {});
  ChainPartition live;
  for (std::size_t i = 0; i < a.events_used; ++i) {
    const auto* assign = std::get_if<AssignEvent>(&t.events[i]);
    if (!assign) continue;
    const PointId p = assign->id;
    if (const auto below = a.opt.predecessor(p)) {
      a.good[p] = live.assigned(*below) && !live.successor(*below).has_value();
    }
    for (ChainId c : live.valid_chains(a.order, p)) a.valid_tops[p].push_back(live.top(c));
    live.assign(a.order, p, assign->chain == live.chain_count() ? ChainChoice::fresh() : ChainChoice::existing(assign->chain));
  }
  return a;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

class Checker {
 public:
  explicit Checker(Report& report) : report_(report) {}

  // Records the first failure only; later ones add nothing a reader needs.
  CheckResult& begin(std::string name) {
    report_.checks.push_back(CheckResult{std::move(name), true, {}, {}});
    return report_.checks.back();
  }

  static void fail(CheckResult& check, std::string detail, std::vector<PointId> witness = {}) {
    if (!check.passed) return;
    check.passed = false;
    check.detail = std::move(detail);
    check.witness = std::move(witness);
  }

 private:
  Report& report_;
};

std::string set_str(const PointSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](PointId p) {
    out << (first ? "" : ",") << p;
    first = false;
  });
  out << '}';
  return out.str();
}

}  // namespace

Report check_facts(const Analysis& a) {
  Report report;
  Checker checker(report);
  const SemiOrder& order = a.order;
  const LayerDecomposition& d = a.decomposition;
  const std::size_t n = order.size();
  const std::size_t m = d.m();
  auto layer = [&](PointId p) { return d.layer_of.at(p); };

  {
    auto& c = checker.begin("layers_partition_points");
    PointSet seen;
    for (const auto& l : d.layers) {
      if (l.intersects(seen)) Checker::fail(c, "layers overlap", (l & seen).ids());
      seen |= l;
    }
    if (!(seen == order.all())) Checker::fail(c, "layers miss points", (order.all() - seen).ids());
  }
  {
    auto& c = checker.begin("layer_upsets_strictly_nested");
    for (PointId p = 0; p < n; ++p) {
      for (PointId q = 0; q < n; ++q) {
        if (layer(p) >= layer(q)) continue;
        const PointSet& up_p = order.up(p);
        const PointSet& up_q = order.up(q);
        if (!up_q.is_subset_of(up_p) || up_q == up_p) {
          Checker::fail(c, "up-set of " + std::to_string(q) + " is not strictly inside that of " + std::to_string(p), {p, q});
        }
      }
    }
  }
  {
    auto& c = checker.begin("last_layer_is_maximal_points");
    if (n > 0 && !(d.layer(m) == order.maximal_points())) {
      Checker::fail(c, "top layer " + set_str(d.layer(m)) + " differs from maximal points " + set_str(order.maximal_points()));
    }
  }
  {
    auto& c = checker.begin("layers_are_antichains");
    for (PointId p = 0; p < n; ++p) {
      const PointSet clash = order.down(p) & d.layer(layer(p));
      if (!clash.empty()) Checker::fail(c, "layer " + std::to_string(layer(p)) + " holds a comparable pair", {*clash.first(), p});
    }
  }
  {
    auto& c = checker.begin("lower_layers_below_any_point_above_a_layer");
    for (PointId di = 0; di < n; ++di) {
      const PointSet lower = d.span(1, layer(di) - 1);
      order.up(di).for_each([&](PointId p) {
        if (!lower.is_subset_of(order.down(p))) Checker::fail(c, "point above a layer misses a lower layer", {di, p});
      });
    }
  }
  {
    auto& c = checker.begin("downsets_inside_layers_up_to_unrelated_point");
    for (PointId di = 0; di < n; ++di) {
      const PointSet allowed = d.span(1, layer(di));
      for (PointId p = 0; p < n; ++p) {
        if (order.less(di, p)) continue;
        if (!order.down(p).is_subset_of(allowed)) Checker::fail(c, "down-set leaves the allowed layers", {di, p});
      }
    }
  }
  {
    auto& c = checker.begin("earlier_points_below_layer");
    for (PointId di = 0; di < n; ++di) {
      const PointSet allowed = d.span(1, layer(di) - 1);
      for (PointId p = 0; p < di; ++p) {
        if (!order.down(p).is_subset_of(allowed)) Checker::fail(c, "earlier point reaches the layer or above", {di, p});
      }
    }
  }
  {
    auto& c = checker.begin("alg_is_greedy");
    for (PointId p = 0; p < n; ++p) {
      const auto chain = a.alg.chain_of(p);
      if (chain && a.alg.bottom(*chain) == p && !a.valid_tops[p].empty()) {
        Checker::fail(c, "new chain opened although a chain was valid", {p, a.valid_tops[p].front()});
      }
    }
  }
  {
    auto& c = checker.begin("alg_prefers_highest_layer");
    for (PointId x = 0; x < n; ++x) {
      const auto chosen = a.alg.predecessor(x);
      if (!chosen) continue;
      for (PointId t : a.valid_tops[x]) {
        if (layer(t) > layer(*chosen)) {
          Checker::fail(c, "point " + std::to_string(x) + " took top " + std::to_string(*chosen) + " in layer " +
                               std::to_string(layer(*chosen)) + " while top " + std::to_string(t) + " in layer " +
                               std::to_string(layer(t)) + " was valid",
                        {x, *chosen, t});
        }
      }
    }
  }
  {
    auto& c = checker.begin("paths_parity_distinct");
    std::vector<int> even(n, 0);
    std::vector<int> odd(n, 0);
    for (const auto& path : a.paths) {
      if (path.repeated) Checker::fail(c, "a path repeats a point at the same parity", path.points);
      for (std::size_t i = 0; i < path.points.size(); ++i) {
        auto& count = (i % 2 == 0 ? even : odd)[path.points[i]];
        if (++count > 1) Checker::fail(c, "point appears twice with the same parity", {path.points[i]});
      }
    }
  }

  const auto& ends = a.stats.end_layers;
  std::vector<PointId> alg_tops = a.alg.tops();
  const PointSet top_set = PointSet::of(alg_tops);
  {
    auto& c = checker.begin("alg_top_in_every_end_layer");
    for (std::size_t i : ends) {
      if (!d.layer(i).intersects(top_set)) Checker::fail(c, "layer " + std::to_string(i) + " holds no ALG top");
    }
  }
  {
    auto& c = checker.begin("layers_above_first_end_form_antichain");
    if (!ends.empty()) {
      const PointSet middle = d.span(ends.front() + 1, m - 1);
      middle.for_each([&](PointId p) {
        const PointSet clash = order.down(p) & middle;
        if (!clash.empty()) Checker::fail(c, "comparable pair between the first end layer and the top", {*clash.first(), p});
      });
    }
  }
  {
    auto& c = checker.begin("penultimate_down_point_good_and_maximal");
    for (const auto& path : a.paths) {
      if (path.kind != PathKind::DownPath) continue;
      const PointId pen = path.points[path.points.size() - 2];
      if (!a.good[pen] || layer(pen) != m) Checker::fail(c, "penultimate point is bad or below the top layer", path.points);
    }
  }
  {
    auto& c = checker.begin("down_paths_carry_bad_up_points");
    for (const auto& path : a.paths) {
      if (path.kind != PathKind::DownPath) continue;
      const std::size_t end = layer(path.last());
      const auto j_end = static_cast<std::size_t>(std::find(ends.begin(), ends.end(), end) - ends.begin());
      for (std::size_t k = 0; k <= j_end && k < ends.size(); ++k) {
        bool found = false;
        for (std::size_t i = 0; i + 1 < path.points.size(); i += 2) {
          const PointId y = path.points[i];
          if (!a.good[y] && layer(path.points[i + 1]) == ends[k]) found = true;
        }
        if (!found) Checker::fail(c, "no bad up-point over layer " + std::to_string(ends[k]), path.points);
      }
    }
  }
  {
    auto& c = checker.begin("injection_point_exists");
    for (std::size_t j = 0; j < ends.size(); ++j) {
      for (const auto& path : a.paths) {
        if (path.kind != PathKind::DownPath) continue;
        bool found = false;
        for (std::size_t i = 0; i + 1 < path.points.size() && !found; i += 2) {
          const PointId u = path.points[i];
          const std::size_t below = layer(path.points[i + 1]);
          const bool high = layer(u) > ends[j] && below == ends.front();
          const bool good_middle = a.good[u] && below > ends.front() && below < ends[j];
          found = high || good_middle;
        }
        if (!found) Checker::fail(c, "no injection point for end layer " + std::to_string(ends[j]), path.points);
      }
    }
  }
  {
    auto& c = checker.begin("up_paths_at_most_width");
    if (a.stats.x_u > a.w) Checker::fail(c, std::to_string(a.stats.x_u) + " up-paths exceed w = " + std::to_string(a.w));
  }
  {
    auto& c = checker.begin("path_count_equals_chains");
    if (a.stats.x_u + a.stats.x0() != a.chains_used) {
      Checker::fail(c, "x_U + x_0 = " + std::to_string(a.stats.x_u + a.stats.x0()) + " but ALG used " +
                           std::to_string(a.chains_used) + " chains");
    }
  }
  return report;
}

Report check_lemmas(const PathStatistics& s, std::uint64_t w) {
  Report report;
  Checker checker(report);
  const auto& xs = s.xs;
  {
    auto& c = checker.begin("path_counts_non_increasing");
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
      if (xs[j] < xs[j + 1]) Checker::fail(c, "x_" + std::to_string(j) + " < x_" + std::to_string(j + 1));
    }
    if (xs.empty() || xs.back() != 0) Checker::fail(c, "sequence does not end in 0");
  }
  if (xs.size() >= 2) {
    auto& c = checker.begin("first_down_path_inequality");
    // x_0 + x_0 - x_1 <= w, kept in unsigned form.
    if (2 * xs[0] > w + xs[1]) {
      Checker::fail(c, std::to_string(xs[0]) + " + " + std::to_string(xs[0]) + " - " + std::to_string(xs[1]) + " > " + std::to_string(w));
    }
  }
  std::uint64_t prefix = xs.empty() ? 0 : xs[0];
  for (std::size_t j = 1; j + 1 < xs.size(); ++j) {
    prefix += xs[j];
    auto& c = checker.begin("down_path_inequality[" + std::to_string(j) + "]");
    if (prefix + xs[j] > w + xs[j + 1]) {
      Checker::fail(c, "x_0 + ... + x_" + std::to_string(j) + " + (x_" + std::to_string(j) + " - x_" +
                           std::to_string(j + 1) + ") = " + std::to_string(prefix + xs[j] - xs[j + 1]) + " > " + std::to_string(w));
    }
  }
  {
    auto& c = checker.begin("x0_within_golden_fraction");
    const std::uint64_t cap = floor_golden_fraction(w);
    if (s.x0() > cap) Checker::fail(c, "x_0 = " + std::to_string(s.x0()) + " > " + std::to_string(cap));
  }
  return report;
}

OrderedJson report_to_json(const Report& report) {
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : report.checks) {
    OrderedJson j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.witness.empty()) j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  OrderedJson out;
  out["failures"] = report.failures();
  out["checks"] = std::move(checks);
  return out;
}

OrderedJson analysis_to_json(const Analysis& a, const Report& facts, const Report& lemmas) {
  OrderedJson out;
  out["w"] = a.w;
  out["events_used"] = a.events_used;
  out["chains_used"] = a.chains_used;
  out["significant"] = a.decomposition.significant;
  OrderedJson layers = OrderedJson::array();
  for (const auto& l : a.decomposition.layers) layers.push_back(l.ids());
  out["layers"] = std::move(layers);
  OrderedJson paths = OrderedJson::array();
  for (const auto& p : a.paths) {
    OrderedJson j;
    j["points"] = p.points;
    j["kind"] = p.kind == PathKind::UpPath ? "up_path" : "down_path";
    paths.push_back(std::move(j));
  }
  out["paths"] = std::move(paths);
  OrderedJson stats;
  stats["x_u"] = a.stats.x_u;
  stats["end_layers"] = a.stats.end_layers;
  stats["xs"] = a.stats.xs;
  out["statistics"] = std::move(stats);
  out["facts"] = report_to_json(facts);
  out["lemmas"] = report_to_json(lemmas);
  out["passed"] = facts.all_passed() && lemmas.all_passed();
  return out;
}

}  // namespace chaingame::prooflab
