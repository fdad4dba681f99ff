/*
 * Copyright 2026 The coordgames authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "coordgames/coalition.hpp"
#include "coordgames/dynamics.hpp"
#include "coordgames/game.hpp"
#include "coordgames/graph_classes.hpp"
#include "coordgames/instances.hpp"
#include "coordgames/io.hpp"
#include "coordgames/oracle.hpp"

namespace cg = coordgames;

namespace {

// stable exit-code contract, documented in the README
enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kNotGuaranteed = 2,
  kNoEquilibrium = 3,
  kBudgetExceeded = 4,
  kInvalidInput = 5,
};

int code_for(const cg::GameError& e) {
  switch (e.kind()) {
    case cg::ErrorKind::NotGuaranteed: return kNotGuaranteed;
    case cg::ErrorKind::SizeLimit: return kBudgetExceeded;
    default: return kInvalidInput;
  }
}

struct InputOpts {
  std::string path;
  std::string fixture;

  cg::LoadedGame load() const {
    if (!fixture.empty()) {
      cg::LabeledInstance inst = cg::paper_example(fixture);
      return {std::move(inst.game), std::move(inst.initial)};
    }
    if (path.empty())
      cg::fail(cg::ErrorKind::Parse, "no input: give a game file or --fixture");
    return cg::load_game_file(path);
  }
};

void add_input(CLI::App* cmd, InputOpts* in) {
  cmd->add_option("game", in->path, "game file (JSON)");
  cmd->add_option("--fixture", in->fixture,
                  "built-in instance name instead of a file");
}

struct InitOpts {
  bool lowest = false;
  std::optional<uint64_t> random_seed;

  cg::JointStrategy pick(const cg::LoadedGame& lg) const {
    if (random_seed) {
      std::mt19937_64 rng(*random_seed);
      return cg::random_strategy(lg.game, rng);
    }
    if (!lowest && lg.initial) return *lg.initial;
    return cg::lowest_colour_strategy(lg.game);
  }
};

void add_init(CLI::App* cmd, InitOpts* init) {
  cmd->add_flag("--init-lowest", init->lowest,
                "start from every node's lowest colour");
  cmd->add_option("--init-random", init->random_seed,
                  "start from a seeded uniform-random strategy")
      ->expected(1);
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) cg::fail(cg::ErrorKind::Parse, "cannot write: " + path);
  out << text;
}

int report_trace(const cg::Game& game, const cg::Trace& trace,
                 const std::string& trace_path) {
  if (!trace_path.empty())
    cg::save_trace_file(trace_path, game, trace);
  std::cout << "verdict: " << cg::to_string(trace.verdict)
            << "  steps: " << trace.num_steps()
            << "  regime: " << trace.measures.regime << "\n";
  switch (trace.verdict) {
    case cg::TerminalVerdict::Nash:
    case cg::TerminalVerdict::Strong:
      return kOk;
    case cg::TerminalVerdict::Budget:
    case cg::TerminalVerdict::CycleDetected:
      return kBudgetExceeded;
  }
  return kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coordination games on weighted directed graphs"};
  app.require_subcommand(1);

  InputOpts in_classify, in_solve, in_csolve, in_oracle, in_sim, in_verify;
  InitOpts init_solve, init_csolve, init_sim;
  std::string dot_path, trace_out_solve, trace_out_csolve, trace_out_sim;
  std::string report_path, trace_in, gen_out, gen_class;
  std::string oracle_mode = "singleton";
  bool oracle_from_initial = false;
  uint64_t sim_seed = 0;
  std::optional<uint64_t> sim_budget;
  uint64_t profile_budget = cg::kDefaultProfileBudget;
  uint64_t coalition_budget = cg::kDefaultCoalitionProfileBudget;
  uint64_t gen_seed = 0;
  cg::GenParams gen_params;

  auto* c_classify =
      app.add_subcommand("classify", "detect the graph class of a game");
  add_input(c_classify, &in_classify);
  c_classify->add_option("--dot", dot_path, "write a Graphviz rendering");

  auto* c_solve = app.add_subcommand(
      "solve", "run the improvement-path scheduler for the graph class");
  add_input(c_solve, &in_solve);
  add_init(c_solve, &init_solve);
  c_solve->add_option("--trace", trace_out_solve, "write the trace (JSON)");

  auto* c_csolve = app.add_subcommand(
      "csolve", "run the coalition-improvement pipeline where supported");
  add_input(c_csolve, &in_csolve);
  add_init(c_csolve, &init_csolve);
  c_csolve->add_option("--trace", trace_out_csolve, "write the trace (JSON)");

  auto* c_oracle = app.add_subcommand(
      "oracle", "exhaustive state-graph analysis of a small game");
  add_input(c_oracle, &in_oracle);
  c_oracle->add_option("--mode", oracle_mode,
                       "deviation mode: singleton or full");
  c_oracle->add_option("--profile-budget", profile_budget,
                       "state budget for singleton mode");
  c_oracle->add_option("--coalition-budget", coalition_budget,
                       "state budget for full mode");
  c_oracle->add_option("--report", report_path, "write the report (JSON)");
  c_oracle->add_flag("--reachable-from-initial", oracle_from_initial,
                     "also check Nash reachability from the initial strategy");

  auto* c_sim = app.add_subcommand("simulate",
                                   "fair random unilateral dynamics");
  add_input(c_sim, &in_sim);
  add_init(c_sim, &init_sim);
  c_sim->add_option("--seed", sim_seed, "random seed")->required();
  c_sim->add_option("--budget", sim_budget,
                    "step budget (default: 10x the state count)");
  c_sim->add_option("--trace", trace_out_sim, "write the trace (JSON)");

  auto* c_verify = app.add_subcommand("verify", "replay and check a trace");
  add_input(c_verify, &in_verify);
  c_verify->add_option("--trace", trace_in, "trace file to verify")->required();

  auto* c_gen = app.add_subcommand("gen", "generate a seeded class instance");
  c_gen->add_option("--class", gen_class,
                    "dag | simple-cycle | open-chain | closed-chain | "
                    "partition-cycle")
      ->required();
  c_gen->add_option("--seed", gen_seed, "generator seed")->required();
  c_gen->add_option("--out", gen_out, "output file")->required();
  c_gen->add_option("--nodes", gen_params.num_nodes, "node count");
  c_gen->add_option("--cycles", gen_params.num_cycles, "chain cycle count");
  c_gen->add_option("--colours", gen_params.num_colours, "colour count");
  c_gen->add_option("--max-weight", gen_params.max_weight, "max edge weight");
  c_gen->add_option("--max-bonus", gen_params.max_bonus, "max bonus value");
  std::string gen_regime = "plain";
  c_gen->add_option("--regime", gen_regime,
                    "plain | bonuses | weighted-two-bonuses | "
                    "bonuses-two-weights | weighted-distinct | "
                    "top-cross-weights | cross-weights-bonuses");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_classify) {
      cg::LoadedGame lg = in_classify.load();
      cg::GraphClass cls = cg::classify(lg.game);
      std::cout << "class: " << cg::to_string(cls.tag) << "\n";
      if (const auto* chain = std::get_if<cg::ChainPayload>(&cls.payload))
        std::cout << "cycles: " << chain->num_cycles()
                  << "  max-cycle: " << chain->max_cycle_size() << "\n";
      if (const auto* part = std::get_if<cg::PartitionPayload>(&cls.payload))
        std::cout << "top: " << part->top_size
                  << "  bottom: " << part->bottom_size()
                  << "  cross-edges: " << part->cross_edges.size() << "\n";
      if (!dot_path.empty()) write_or_print(dot_path, cg::to_dot(lg.game, &cls));
      return kOk;
    }

    if (*c_solve) {
      cg::LoadedGame lg = in_solve.load();
      cg::GraphClass cls = cg::classify(lg.game);
      cg::Trace trace = cg::solve_by_class(lg.game, cls, init_solve.pick(lg));
      return report_trace(lg.game, trace, trace_out_solve);
    }

    if (*c_csolve) {
      cg::LoadedGame lg = in_csolve.load();
      cg::GraphClass cls = cg::classify(lg.game);
      cg::JointStrategy s0 = init_csolve.pick(lg);
      cg::Trace trace;
      switch (cls.tag) {
        case cg::ClassTag::SimpleCycle:
          trace = cg::c_improve_simple_cycle(
              lg.game, std::get<cg::CyclePayload>(cls.payload), s0);
          break;
        case cg::ClassTag::OpenChain:
          trace = cg::c_improve_open_chain(
              lg.game, std::get<cg::ChainPayload>(cls.payload), s0);
          break;
        case cg::ClassTag::ClosedChain:
          trace = cg::c_improve_closed_chain(
              lg.game, std::get<cg::ChainPayload>(cls.payload), s0);
          break;
        default:
          cg::fail(cg::ErrorKind::NotGuaranteed,
                   "coalition pipeline covers simple cycles and unweighted "
                   "chains only");
      }
      return report_trace(lg.game, trace, trace_out_csolve);
    }

    if (*c_oracle) {
      cg::LoadedGame lg = in_oracle.load();
      cg::CoalitionMode mode = oracle_mode == "full"
                                   ? cg::CoalitionMode::Full
                                   : cg::CoalitionMode::Singleton;
      cg::OracleBudgets budgets{profile_budget, coalition_budget};
      cg::StateGraphReport report =
          cg::build_state_graph(lg.game, mode, budgets);
      nlohmann::ordered_json doc = cg::report_to_json(lg.game, report);
      if (oracle_from_initial && lg.initial)
        doc["nash_reachable_from_initial"] =
            cg::nash_reachable_from(lg.game, *lg.initial, mode, budgets);
      if (!report_path.empty()) write_or_print(report_path, cg::canonical_dump(doc));
      std::cout << "states: " << report.num_states
                << "  nash: " << report.nash_states.size()
                << "  strong: " << report.strong_states.size()
                << "  weakly-acyclic: "
                << (report.weakly_acyclic ? "yes" : "no");
      if (report.c_weakly_acyclic)
        std::cout << "  c-weakly-acyclic: "
                  << (*report.c_weakly_acyclic ? "yes" : "no");
      std::cout << "\n";
      return report.nash_states.empty() ? kNoEquilibrium : kOk;
    }

    if (*c_sim) {
      cg::LoadedGame lg = in_sim.load();
      uint64_t budget =
          sim_budget.value_or(10 * lg.game.num_profiles());
      cg::Trace trace =
          cg::run_fair_random(lg.game, init_sim.pick(lg), sim_seed, budget);
      return report_trace(lg.game, trace, trace_out_sim);
    }

    if (*c_verify) {
      cg::LoadedGame lg = in_verify.load();
      cg::Trace trace = cg::load_trace_file(lg.game, trace_in);
      cg::TraceCheck check = cg::verify_trace(lg.game, trace);
      if (check.valid) {
        std::cout << "trace valid (" << trace.num_steps() << " steps)\n";
        return kOk;
      }
      std::cout << "trace invalid at step " << check.step_index << ": "
                << check.reason << "\n";
      return kInvalidInput;
    }

    if (*c_gen) {
      cg::ClassTag tag;
      if (gen_class == "dag") tag = cg::ClassTag::Dag;
      else if (gen_class == "simple-cycle") tag = cg::ClassTag::SimpleCycle;
      else if (gen_class == "open-chain") tag = cg::ClassTag::OpenChain;
      else if (gen_class == "closed-chain") tag = cg::ClassTag::ClosedChain;
      else if (gen_class == "partition-cycle") tag = cg::ClassTag::PartitionCycle;
      else cg::fail(cg::ErrorKind::Generation, "unknown class: " + gen_class);
      if (gen_regime == "plain") gen_params.regime = cg::GenRegime::Plain;
      else if (gen_regime == "bonuses") gen_params.regime = cg::GenRegime::Bonuses;
      else if (gen_regime == "weighted-two-bonuses")
        gen_params.regime = cg::GenRegime::WeightedTwoBonuses;
      else if (gen_regime == "bonuses-two-weights")
        gen_params.regime = cg::GenRegime::BonusesTwoWeights;
      else if (gen_regime == "weighted-distinct")
        gen_params.regime = cg::GenRegime::WeightedDistinct;
      else if (gen_regime == "top-cross-weights")
        gen_params.regime = cg::GenRegime::TopCrossWeights;
      else if (gen_regime == "cross-weights-bonuses")
        gen_params.regime = cg::GenRegime::CrossWeightsBonuses;
      else cg::fail(cg::ErrorKind::Generation, "unknown regime: " + gen_regime);
      cg::LabeledInstance inst = cg::generate(tag, gen_seed, gen_params);
      cg::save_game_file(gen_out, inst.game, inst.initial);
      std::cout << "wrote " << gen_out << " ("
                << cg::to_string(inst.expected_class) << ", "
                << inst.game.num_nodes() << " nodes)\n";
      return kOk;
    }
  } catch (const cg::GameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
