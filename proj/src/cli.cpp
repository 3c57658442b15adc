#include "ivc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "ivc/codes.hpp"
#include "ivc/decomposition.hpp"
#include "ivc/errors.hpp"
#include "ivc/fpt_md.hpp"
#include "ivc/generators.hpp"
#include "ivc/io.hpp"
#include "ivc/reductions.hpp"

namespace ivc::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

// Prefixes parse diagnostics with the file name.
template <class F>
auto parse_file(const std::string& path, F reader) {
  auto in = open_input(path);
  try {
    return reader(in);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

IntervalModel load_model(const std::string& path) {
  return parse_file(path, [](std::istream& in) { return read_model(in); });
}

Graph load_graph(const std::string& path) {
  return parse_file(path, [](std::istream& in) { return read_edge_list(in); });
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

json members_json(const VertexSet& s) { return s.members(); }

std::string set_line(const char* key, const VertexSet& s) {
  std::ostringstream line;
  line << key;
  for (VertexId v : s.members()) line << ' ' << v;
  line << '\n';
  return line.str();
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return {{"n", g.order()}, {"edges", edges}};
}

// Graph input from either an interval model or an edge list.
struct GraphInput {
  std::string model_path, graph_path;
  std::optional<IntervalModel> model;
  Graph graph;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--model", model_path, "interval model (text or JSON)");
    cmd->add_option("--graph", graph_path, "edge list");
  }
  void load() {
    if (model_path.empty() == graph_path.empty()) throw UsageError("give exactly one of --model or --graph");
    if (!model_path.empty()) {
      model = load_model(model_path);
      graph = build_graph(*model);
    } else {
      graph = load_graph(graph_path);
    }
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinguishing sets on interval graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  int threads = 1;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "random seed");

  std::function<int()> action;

  // gen-random
  auto* gen_random = app.add_subcommand("gen-random", "random interval model");
  int n = 10, window = 2;
  std::string style = "uniform", out_path;
  gen_random->add_option("--n", n)->check(CLI::NonNegativeNumber);
  gen_random->add_option("--style", style, "uniform | unit-length | long-thin");
  gen_random->add_option("--window", window, "long-thin reach")->check(CLI::PositiveNumber);
  gen_random->add_option("--out", out_path);
  gen_random->callback([&] {
    action = [&] {
      auto model = random_model(n, seed, parse_model_style(style), window);
      emit(as_json ? model_to_json(model).dump() + "\n" : write_model_text(model), out_path, out);
      return kYes;
    };
  });

  // gen-family
  auto* gen_family = app.add_subcommand("gen-family", "named model or graph family");
  std::string family = "path";
  int size = 4;
  gen_family->add_option("--family", family, "path | clique | cycle-graph | chordal-fig7");
  gen_family->add_option("--size", size, "order, or pendant length for chordal-fig7");
  gen_family->add_option("--out", out_path);
  gen_family->callback([&] {
    action = [&] {
      auto fam = parse_family(family);
      auto result = make_family({fam, size});
      std::string text;
      if (result.model) {
        text = as_json ? model_to_json(*result.model).dump() + "\n" : write_model_text(*result.model);
      } else if (as_json) {
        json j = graph_json(result.graph);
        if (fam == Family::ChordalFig7) {
          j["black"] = members_json(result.black);
          j["unresolved"] = {result.u, result.v};
        }
        text = j.dump() + "\n";
      } else {
        if (fam == Family::ChordalFig7) {
          auto b = result.black.members();
          text = "c black " + std::to_string(b[0]) + " " + std::to_string(b[1]) + " (0-indexed)\n" +
                 "c unresolved " + std::to_string(result.u) + " " + std::to_string(result.v) + " (0-indexed)\n";
        }
        text += write_edge_list(result.graph);
      }
      emit(text, out_path, out);
      return kYes;
    };
  });

  // gen-reduction
  auto* gen_reduction = app.add_subcommand("gen-reduction", "hardness instance from a 3DM instance");
  std::string kind = "ld", instance_path, matching_path, roles_path, manifest_path, solution_path;
  gen_reduction->add_option("--kind", kind, "ld | id | old");
  gen_reduction->add_option("--instance", instance_path)->required();
  gen_reduction->add_option("--matching", matching_path, "triple indices of a perfect matching");
  gen_reduction->add_option("--out", out_path, "model file (default stdout)");
  gen_reduction->add_option("--roles", roles_path, "roles JSON file");
  gen_reduction->add_option("--manifest", manifest_path, "manifest JSON file");
  gen_reduction->add_option("--solution", solution_path, "certified solution file");
  gen_reduction->callback([&] {
    action = [&] {
      auto instance = parse_file(instance_path, [](std::istream& in) { return read_3dm(in); });
      auto gk = parse_gadget_kind(kind);
      auto built = build_reduction(instance, gk);
      std::optional<VertexSet> solution;
      if (!matching_path.empty()) {
        auto matching = parse_file(matching_path, [](std::istream& in) { return read_index_list(in); });
        solution = standard_solution(built, instance, matching);
      }
      if (as_json) {
        json j = {{"model", model_to_json(built.model)},
                  {"roles", roles_json(built)},
                  {"manifest", manifest_json(built)}};
        if (solution) j["solution"] = members_json(*solution);
        emit(j.dump() + "\n", out_path, out);
      } else {
        emit(write_model_text(built.model), out_path, out);
        if (!out_path.empty()) {
          out << "order " << built.model.size() << "\n";
          out << "solution_size " << built.expected_solution_size << "\n";
        }
      }
      if (!roles_path.empty()) emit(roles_json(built).dump(2) + "\n", roles_path, out);
      if (!manifest_path.empty()) emit(manifest_json(built).dump(2) + "\n", manifest_path, out);
      if (!solution_path.empty()) {
        if (!solution) throw UsageError("--solution needs --matching");
        emit(set_line("set", *solution), solution_path, out);
      }
      return kYes;
    };
  });

  // transform
  auto* transform = app.add_subcommand("transform", "diameter-2 transformation of an edge list");
  std::string op = "f1", input_path;
  transform->add_option("--op", op, "f1 | f2 | f3");
  transform->add_option("--input", input_path)->required();
  transform->add_option("--out", out_path);
  transform->callback([&] {
    action = [&] {
      Graph g = load_graph(input_path);
      Graph h;
      if (op == "f1") h = f1(g);
      else if (op == "f2") h = f2(g);
      else if (op == "f3") h = f3(g);
      else throw UsageError("unknown --op '" + op + "' (expected f1, f2 or f3)");
      emit(as_json ? graph_json(h).dump() + "\n" : write_edge_list(h), out_path, out);
      return kYes;
    };
  });

  // decompose
  auto* decompose = app.add_subcommand("decompose", "nice path decomposition of a model or its power");
  std::string model_path;
  int power = 1;
  decompose->add_option("--model", model_path)->required();
  decompose->add_option("--power", power, "decompose G^d instead of G")->check(CLI::PositiveNumber);
  decompose->callback([&] {
    action = [&] {
      auto model = load_model(model_path);
      if (power > 1) model = power_model(model, power);
      auto dec = build_path_decomposition(model);
      if (as_json) {
        json events = json::array();
        for (const auto& e : dec.events)
          events.push_back({{"kind", std::string(1, event_code(e.kind))}, {"vertex", e.vertex}, {"bag", e.bag}});
        out << json{{"width", dec.width()}, {"events", events}}.dump() << "\n";
      } else {
        out << dump(dec);
      }
      return kYes;
    };
  });

  // power
  auto* power_cmd = app.add_subcommand("power", "interval model of G^d");
  int d = 2;
  power_cmd->add_option("--model", model_path)->required();
  power_cmd->add_option("--d", d);
  power_cmd->add_option("--out", out_path);
  power_cmd->callback([&] {
    action = [&] {
      auto model = power_model(load_model(model_path), d);
      emit(as_json ? model_to_json(model).dump() + "\n" : write_model_text(model), out_path, out);
      return kYes;
    };
  });

  // solve
  auto* solve = app.add_subcommand("solve", "minimum distinguishing set up to k");
  std::string problem = "md", algo;
  std::optional<int> k;
  GraphInput solve_input;
  solve->add_option("--problem", problem, "md | ld | id | old");
  solve->add_option("--algo", algo, "fpt | brute (default fpt for md)");
  solve->add_option("--k", k, "budget");
  solve_input.add_to(solve);
  solve->callback([&] {
    action = [&] {
      auto pk = parse_problem_kind(problem);
      if (algo.empty()) algo = pk == ProblemKind::MD ? "fpt" : "brute";
      if (algo != "fpt" && algo != "brute") throw UsageError("unknown --algo '" + algo + "'");
      if (algo == "fpt" && pk != ProblemKind::MD) throw UsageError("--algo fpt is only available for md");
      if (k && *k < 0) throw UsageError("--k must be non-negative");
      solve_input.load();
      const int order = solve_input.graph.order();
      const int budget = k.value_or(order);

      std::optional<VertexSet> found;
      std::string reason = "k exceeded";
      if (algo == "fpt") {
        if (!solve_input.model) throw UsageError("--algo fpt needs --model");
        FptOptions opts;
        opts.threads = threads;
        auto res = fpt_metric_dimension(*solve_input.model, budget, opts);
        if (res.size) found = res.witness;
      } else {
        if (order > 64) throw UsageError("--algo brute supports at most 64 vertices");
        // a graph with an LD, ID or OLD set of size k has at most k + 2^k - 1 vertices
        bool too_big = pk != ProblemKind::MD && budget < 7 && order > budget + (1 << budget) - 1;
        if (!too_big) {
          auto res = brute_force_min(solve_input.graph, pk, budget, threads);
          if (res.found()) found = res.set;
          if (res.reason == NoSolutionReason::NoValidSet) reason = "no valid set";
        }
      }
      if (as_json) {
        json j = found ? json{{"size", found->size()}, {"witness", members_json(*found)}}
                       : json{{"size", nullptr}, {"reason", reason}};
        out << j.dump() << "\n";
      } else if (found) {
        out << "size " << found->size() << "\n" << set_line("witness", *found);
      } else {
        out << "no (" << reason << ")\n";
      }
      return found ? kYes : kNo;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check a vertex set against a problem");
  std::string set_path;
  GraphInput verify_input;
  verify->add_option("--problem", problem, "md | ld | id | old");
  verify->add_option("--set", set_path)->required();
  verify_input.add_to(verify);
  verify->callback([&] {
    action = [&] {
      auto pk = parse_problem_kind(problem);
      verify_input.load();
      const int order = verify_input.graph.order();
      auto s = parse_file(set_path, [&](std::istream& in) { return read_vertex_set(in, order); });
      auto violation = first_violation(verify_input.graph, criterion_for(pk), s);
      if (as_json) {
        json j = {{"pass", !violation}};
        if (violation) j["violation"] = describe(*violation);
        out << j.dump() << "\n";
      } else if (violation) {
        out << "fail " << describe(*violation) << "\n";
      } else {
        out << "pass\n";
      }
      return violation ? kNo : kYes;
    };
  });

  // trace-dp
  auto* trace = app.add_subcommand("trace-dp", "per-event configuration counts of the md program");
  trace->add_option("--model", model_path)->required();
  trace->add_option("--k", k)->required();
  trace->callback([&] {
    action = [&] {
      if (*k < 0) throw UsageError("--k must be non-negative");
      FptOptions opts;
      opts.threads = threads;
      opts.trace = &out;
      auto res = fpt_metric_dimension(load_model(model_path), *k, opts);
      return res.size ? kYes : kNo;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    return action();
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const LayoutError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace ivc::cli
