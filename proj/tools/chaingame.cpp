#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chaingame/arena.hpp"
#include "chaingame/game_value.hpp"
#include "chaingame/oracle.hpp"
#include "chaingame/prooflab.hpp"
#include "chaingame/service.hpp"

using namespace chaingame;

namespace {

// Exit codes: 0 success, 1 a check failed, 2 bad request.
constexpr int kCheckFailed = 1;
constexpr int kBadRequest = 2;

struct PlayOptions {
  std::uint64_t w = 2;
  std::string mode = "up_growing";
  std::string spoiler = "golden";
  std::string algorithm = "alg";
  std::uint64_t seed = 0;
  std::size_t points = 0;
  std::string out;
};

void add_game_flags(CLI::App* cmd, PlayOptions& o) {
  cmd->add_option("--w", o.w, "Width budget")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1000000}));
  cmd->add_option("--mode", o.mode, "up_growing or general");
  cmd->add_option("--spoiler", o.spoiler, "golden, doubler or random");
  cmd->add_option("--algorithm", o.algorithm, "alg, first-fit, random or random-greedy");
  cmd->add_option("--seed", o.seed, "Seed for randomized players");
  cmd->add_option("--points", o.points, "Points presented by the random spoiler");
}

GameConfig to_config(const PlayOptions& o) {
  GameConfig c;
  c.mode = parse_mode(o.mode);
  c.w = o.w;
  c.spoiler = o.spoiler;
  c.algorithm = o.algorithm;
  c.seed = o.seed;
  if (o.points > 0) c.points = o.points;
  return c;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << text;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

int cmd_value(std::uint64_t max_w) {
  for (std::uint64_t w = 1; w <= max_w; ++w) std::cout << w << '\t' << game_value(w) << '\n';
  return 0;
}

int cmd_play(const PlayOptions& o) {
  const Transcript t = run_game(to_config(o));
  if (!o.out.empty()) save_transcript(t, o.out);
  std::cout << "chains=" << t.chains_used << " bound=" << game_value(o.w) << '\n';
  if (t.fault) {
    std::cerr << outcome_name(t.outcome) << " at event " << t.fault->event_index << ": "
              << errc_title(t.fault->code) << ": " << t.fault->message << '\n';
    return kCheckFailed;
  }
  return 0;
}

// Golden must reach the bound (ALG exactly), doubler 2w-1, and on random
// instances ALG stays within the bound and greedy players within 2w-1.
int cmd_sweep(std::uint64_t max_w, const std::string& algorithms, const PlayOptions& base) {
  bool all_ok = true;
  std::cout << "w\talgorithm\tchains\tbound\tok\n";
  for (std::uint64_t w = 1; w <= max_w; ++w) {
    for (const std::string& name : split(algorithms)) {
      PlayOptions o = base;
      o.w = w;
      o.algorithm = name;
      const GameConfig config = to_config(o);
      const Transcript t = run_game(config);
      const std::uint64_t bound = base.spoiler == "doubler" ? 2 * w - 1 : game_value(w);
      const std::string canonical = canonical_algorithm_name(name);
      bool ok = t.outcome == Outcome::Completed && replay(t).ok;
      if (base.spoiler == "random") {
        if (canonical == "alg") ok = ok && t.chains_used <= game_value(w);
        if (canonical != "random") ok = ok && t.chains_used <= 2 * w - 1;
      } else if (base.spoiler == "golden" && canonical == "alg") {
        ok = ok && t.chains_used == bound;
      } else {
        ok = ok && t.chains_used >= bound;
      }
      all_ok = all_ok && ok;
      std::cout << w << '\t' << canonical << '\t' << t.chains_used << '\t' << bound << '\t' << (ok ? "yes" : "no") << '\n';
    }
  }
  return all_ok ? 0 : kCheckFailed;
}

int cmd_verify(const std::string& path) {
  const Verdict v = replay(load_transcript(path));
  std::cout << verdict_to_json(v).dump() << '\n';
  if (!v.ok) {
    std::cerr << outcome_name(v.outcome);
    if (v.event_index) std::cerr << " at event " << *v.event_index;
    std::cerr << ": " << v.code << ": " << v.message << '\n';
  }
  return v.ok ? 0 : kCheckFailed;
}

int cmd_prooflab(const std::string& path, const std::string& out) {
  const Transcript t = load_transcript(path);
  const prooflab::Analysis a = prooflab::analyse(t);
  const prooflab::Report facts = prooflab::check_facts(a);
  const prooflab::Report lemmas = prooflab::check_lemmas(a.stats, a.w);
  const std::string text = prooflab::analysis_to_json(a, facts, lemmas).dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
  }
  std::cerr << "facts failed: " << facts.failures() << ", lemmas failed: " << lemmas.failures() << '\n';
  return facts.all_passed() && lemmas.all_passed() ? 0 : kCheckFailed;
}

int cmd_adversary(std::uint64_t w, const std::string& spoiler, const std::string& mode, std::uint64_t cap) {
  const auto result = oracle::exhaustive_adversary(spoiler, w, parse_mode(mode), cap);
  std::cout << result.min_chains << '\n';
  std::cerr << "nodes=" << result.nodes << " memo=" << result.memo_entries << '\n';
  return 0;
}

int default_port() {
  if (const char* env = std::getenv("GC_PORT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, std::string("GC_PORT is not a port: ") + env);
    }
  }
  return 8080;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"On-line chain partition game on up-growing semi-orders"};
  app.require_subcommand(1);

  std::uint64_t max_w = 10;
  auto* value = app.add_subcommand("value", "Print floor(phi * w) for w = 1..max-w");
  value->add_option("--max-w,max_w", max_w, "Largest width")->check(CLI::PositiveNumber);

  PlayOptions play_opts;
  auto* play = app.add_subcommand("play", "Play one game and write its transcript");
  add_game_flags(play, play_opts);
  play->add_option("--out", play_opts.out, "Transcript path");

  PlayOptions sweep_opts;
  std::uint64_t sweep_max = 10;
  std::string sweep_algorithms = "alg";
  auto* sweep = app.add_subcommand("sweep", "Play w = 1..max-w for several algorithms");
  add_game_flags(sweep, sweep_opts);
  sweep->add_option("--max-w", sweep_max, "Largest width")->check(CLI::PositiveNumber);
  sweep->add_option("--algorithms", sweep_algorithms, "Comma-separated algorithm names");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Replay a transcript through the referee");
  verify->add_option("path", verify_path, "Transcript file")->required();

  std::string lab_path;
  std::string lab_out;
  auto* lab = app.add_subcommand("prooflab", "Layer and alternating-path checks on an ALG transcript");
  lab->add_option("path", lab_path, "Transcript file")->required();
  lab->add_option("--out", lab_out, "Report path");

  std::uint64_t adv_w = 2;
  std::string adv_spoiler = "golden";
  std::string adv_mode;
  std::uint64_t adv_cap = 100'000'000;
  auto* adversary = app.add_subcommand("adversary", "Minimum chains over every algorithm, by exhaustive search");
  adversary->add_option("--w", adv_w, "Width budget")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{6}));
  adversary->add_option("--spoiler", adv_spoiler, "golden or doubler");
  adversary->add_option("--mode", adv_mode, "Defaults to general for doubler, up_growing otherwise");
  adversary->add_option("--node-cap", adv_cap, "Search budget");

  int port = 0;
  std::string host = "127.0.0.1";
  auto* serve = app.add_subcommand("serve", "Serve the session API");
  serve->add_option("--port", port, "Port (default $GC_PORT or 8080)");
  serve->add_option("--host", host, "Bind address");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*value) return cmd_value(max_w);
    if (*play) return cmd_play(play_opts);
    if (*sweep) return cmd_sweep(sweep_max, sweep_algorithms, sweep_opts);
    if (*verify) return cmd_verify(verify_path);
    if (*lab) return cmd_prooflab(lab_path, lab_out);
    if (*adversary) {
      if (adv_mode.empty()) adv_mode = adv_spoiler == "doubler" ? "general" : "up_growing";
      return cmd_adversary(adv_w, adv_spoiler, adv_mode, adv_cap);
    }
    if (*serve) return service::serve(host, port > 0 ? port : default_port()) ? 0 : kCheckFailed;
  } catch (const Error& e) {
    std::cerr << errc_title(e.code()) << ": " << e.what() << '\n';
    return e.code() == Errc::BudgetExceeded ? kCheckFailed : kBadRequest;
  }
  return kBadRequest;
}
