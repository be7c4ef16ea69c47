#include "spg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "spg/constructions.hpp"
#include "spg/corpus.hpp"
#include "spg/error.hpp"
#include "spg/geodesics.hpp"
#include "spg/io.hpp"
#include "spg/spg.hpp"
#include "spg/verify.hpp"

namespace spg {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1;

std::size_t default_limit() {
  if (const char* env = std::getenv("SPG_LIMIT")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("SPG_LIMIT is not a positive integer: ") + env);
  }
  return kDefaultGeodesicLimit;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw PreconditionError("cannot write " + path);
  file << text;
}

std::vector<std::size_t> parse_list(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw PreconditionError(what + ": expected comma separated non-negative integers, got '" + text + "'");
    out.push_back(std::stoul(part));
  }
  if (out.empty()) throw PreconditionError(what + ": empty list");
  return out;
}

std::vector<long> parse_signed_list(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::vector<long> out;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stol(part, &pos));
      if (pos != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw PreconditionError("--point: bad coordinate '" + part + "'");
    }
  }
  return out;
}

struct CorpusSpec {
  std::string label;
  std::vector<BaseInstance> instances;
};

CorpusSpec load_corpus(const std::string& spec) {
  auto fields = [&] {
    std::vector<std::string> out;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ':')) out.push_back(part);
    return out;
  }();
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw PreconditionError("--corpus: bad number '" + s + "' in " + spec);
    return static_cast<std::size_t>(std::stoull(s));
  };
  if (fields.size() == 2 && fields[0] == "exhaustive") return {spec, exhaustive_instances(number(fields[1]))};
  if (fields.size() == 4 && fields[0] == "random")
    return {spec, random_instances(number(fields[1]), number(fields[2]), number(fields[3]))};
  if (fields.size() >= 2 && fields[0] == "file") return {spec, load_instances(spec.substr(5))};
  throw PreconditionError("--corpus must be exhaustive:n, random:count:n:seed or file:path");
}

void print_failure(std::ostream& out, const std::string& where, const CheckReport& report) {
  out << "FAIL " << report.name << " [" << where << "]";
  if (report.witness) out << ": " << report.witness->description << " witness=" << json(report.witness->tuples).dump();
  out << '\n';
}

void print_report(std::ostream& out, const CheckReport& report) {
  out << (report.passed ? "PASS " : "FAIL ") << report.name;
  for (const auto& [key, value] : report.stats) out << ' ' << key << '=' << value;
  out << '\n';
  if (report.witness) out << "  witness: " << report.witness->description << ' ' << json(report.witness->tuples).dump() << '\n';
}

ConstructionResult construct_family(const std::string& family, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw PreconditionError("construct " + family + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (family == "path") return need(1), path_base(params[0]);
  if (family == "complete") return need(1), complete_base(params[0]);
  if (family == "cycle") {
    need(1);
    if (params[0] < 4 || params[0] % 2 != 0) throw PreconditionError("construct cycle takes an even length >= 4");
    return even_cycle_base(params[0] / 2);
  }
  if (family == "oddhost") return need(1), odd_cycle_host_base(params[0]);
  if (family == "hypercube") return need(1), hypercube_base(params[0]);
  if (family == "parallel") return need(2), parallel_paths(params[0], params[1]);
  throw PreconditionError("unknown family '" + family + "' (path, complete, cycle, oddhost, hypercube, parallel)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest path reconfiguration graphs", "spg"};
  app.require_subcommand(1);

  std::size_t limit = 0;
  std::uint64_t seed = kDefaultSeed;
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", limit, "Maximum number of geodesics / words / permutations");
  };

  std::string in, out_path, dot_path, format = "json";
  std::optional<std::string> source, target;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--in", in, "Graph file (JSON or edge list)")->required();
    sub->add_option("--a", source, "Source vertex");
    sub->add_option("--b", target, "Target vertex");
  };

  auto* compute = app.add_subcommand("compute", "Build S(G,a,b)");
  add_input(compute);
  add_limit(compute);
  bool count_only = false;
  compute->add_option("--out", out_path, "Write SpGraph JSON here");
  compute->add_option("--dot", dot_path, "Write DOT here");
  compute->add_flag("--count", count_only, "Only count geodesics (exact, no enumeration)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduced base graph");
  add_input(reduce_cmd);
  add_limit(reduce_cmd);
  reduce_cmd->add_option("--out", out_path, "Write JSON here");

  auto* construct = app.add_subcommand("construct", "Build a base graph family");
  std::string family;
  std::vector<std::size_t> params;
  bool check = false;
  construct->add_option("family", family, "path|complete|cycle|oddhost|hypercube|parallel")->required();
  construct->add_option("params", params, "Family parameters")->required();
  construct->add_flag("--check", check, "Verify S against the predicted graph");
  construct->add_option("--out", out_path, "Write the instance JSON here");
  add_limit(construct);

  auto* grid = app.add_subcommand("grid", "Grid geodesics and the lattice embedding");
  grid->require_subcommand(1);
  std::string dims_text, seq_text, point_text;
  std::size_t n1 = 0, n2 = 0;
  bool as_json = false;
  auto* phi_cmd = grid->add_subcommand("phi", "Lattice point of a move word");
  phi_cmd->add_option("--dims", dims_text)->required();
  phi_cmd->add_option("--seq", seq_text)->required();
  phi_cmd->add_flag("--json", as_json);
  auto* phi_inv_cmd = grid->add_subcommand("phi-inv", "Move word of a lattice point");
  phi_inv_cmd->add_option("--dims", dims_text)->required();
  phi_inv_cmd->add_option("--point", point_text)->required();
  auto* count_cmd = grid->add_subcommand("count", "Number of grid geodesics");
  count_cmd->add_option("--dims", dims_text)->required();
  auto* stair_cmd = grid->add_subcommand("staircase", "Staircase graph S_{n1,n2}");
  stair_cmd->add_option("--n1", n1)->required();
  stair_cmd->add_option("--n2", n2)->required();
  stair_cmd->add_flag("--check", check, "Compare with S(P_n1 x P_n2)");
  stair_cmd->add_option("--out", out_path);
  auto* embed_cmd = grid->add_subcommand("embed", "Check the lattice embedding exhaustively");
  embed_cmd->add_option("--dims", dims_text)->required();
  for (auto* sub : {phi_cmd, phi_inv_cmd, count_cmd, stair_cmd, embed_cmd}) add_limit(sub);

  auto* cayley = app.add_subcommand("cayley", "Cay(S_m; adjacent transpositions)");
  std::size_t m = 0;
  cayley->add_option("m", m)->required();
  cayley->add_flag("--check", check, "Compare with S(Q_m) and check tournaments");
  cayley->add_option("--out", out_path);
  add_limit(cayley);

  auto* verify = app.add_subcommand("verify", "Run theorem checkers over a corpus");
  std::string which, corpus = "exhaustive:5";
  std::optional<std::size_t> index;
  std::size_t one_sums = 50, two_sums = 50, unions = 25;
  verify->add_option("check", which, "all|p3c4|noc5|claw|oddcycle|girth5|decomp|complete|sums")->required();
  verify->add_option("--corpus", corpus, "exhaustive:n | random:count:n:seed | file:path");
  verify->add_option("--index", index, "Decomposition index (decomp only)");
  verify->add_option("--seed", seed, "Seed for generated sum corpora");
  verify->add_option("--one-sums", one_sums);
  verify->add_option("--two-sums", two_sums);
  verify->add_option("--unions", unions);
  verify->add_flag("--json", as_json, "Print reports as JSON");
  add_limit(verify);

  auto* export_cmd = app.add_subcommand("export", "Export S(G,a,b)");
  add_input(export_cmd);
  export_cmd->add_option("--format", format, "json|dot|geodesics")->check(CLI::IsMember({"json", "dot", "geodesics"}));
  export_cmd->add_option("--out", out_path);
  add_limit(export_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (limit == 0) limit = default_limit();
    err << "seed=" << seed << " limit=" << limit << '\n';

    if (compute->parsed() || export_cmd->parsed()) {
      BaseInstance inst = load_instance(in, source, target);
      if (compute->parsed() && count_only) {
        GeodesicDag dag = build_dag(inst);
        out << "distance " << dag.distance() << "\ngeodesics " << count_geodesics(dag).str() << '\n';
        return 0;
      }
      SpGraph h = build_spg(inst, limit);
      if (export_cmd->parsed()) {
        std::string text = format == "dot"         ? spgraph_to_dot(h, inst.graph())
                           : format == "geodesics" ? geodesics_to_json(inst.graph(), h.geodesics()).dump(2) + "\n"
                                                   : spgraph_to_json(h, inst.graph()).dump(2) + "\n";
        write_text(out_path, text, out);
        return 0;
      }
      out << "distance " << h.distance() << "\ngeodesics " << h.order() << "\nedges " << h.size() << '\n';
      if (!out_path.empty()) write_text(out_path, spgraph_to_json(h, inst.graph()).dump(2) + "\n", out);
      if (!dot_path.empty()) write_text(dot_path, spgraph_to_dot(h, inst.graph()), out);
      return 0;
    }

    if (reduce_cmd->parsed()) {
      BaseInstance inst = load_instance(in, source, target);
      ReducedInstance red = reduce(inst);
      json doc = graph_to_json(red.graph);
      doc["source"] = red.source;
      doc["target"] = red.target;
      doc["collapsed"] = red.collapsed;
      json map = json::object();
      for (const auto& [from, to] : red.vertex_map) map[from] = to ? json(*to) : json(nullptr);
      doc["vertex_map"] = std::move(map);
      write_text(out_path, doc.dump(2) + "\n", out);
      return 0;
    }

    if (construct->parsed()) {
      ConstructionResult built = construct_family(family, params);
      if (!check || !out_path.empty()) write_text(out_path, instance_to_json(built.instance).dump(2) + "\n", out);
      if (!check) return 0;
      CheckReport report = check_construction(built, limit);
      print_report(out, report);
      return report.passed ? 0 : 1;
    }

    if (grid->parsed()) {
      if (phi_cmd->parsed()) {
        GridSpec spec(parse_list(dims_text, "--dims"));
        LatticePoint p = phi(MoveSequence::parse(spec, seq_text));
        out << (as_json ? lattice_point_to_json(p).dump() : p.to_string()) << '\n';
        return 0;
      }
      if (phi_inv_cmd->parsed()) {
        GridSpec spec(parse_list(dims_text, "--dims"));
        out << phi_inverse(LatticePoint(spec, parse_signed_list(point_text))).to_string() << '\n';
        return 0;
      }
      if (count_cmd->parsed()) {
        out << GridSpec(parse_list(dims_text, "--dims")).sequence_count().str() << '\n';
        return 0;
      }
      if (stair_cmd->parsed()) {
        Graph g = staircase(n1, n2);
        if (!check || !out_path.empty()) write_text(out_path, graph_to_json(g).dump(2) + "\n", out);
        if (!check) return 0;
        CheckReport report = check_staircase(n1, n2, limit);
        print_report(out, report);
        return report.passed ? 0 : 1;
      }
      CheckReport report = check_grid_embedding(GridSpec(parse_list(dims_text, "--dims")), limit);
      print_report(out, report);
      return report.passed ? 0 : 1;
    }

    if (cayley->parsed()) {
      Graph g = cayley_adjacent_transpositions(m, limit);
      if (!check || !out_path.empty()) write_text(out_path, graph_to_json(g).dump(2) + "\n", out);
      if (!check) return 0;
      CheckReport report = check_cayley(m, limit);
      print_report(out, report);
      return report.passed ? 0 : 1;
    }

    // verify
    if (which == "sums") {
      std::vector<std::pair<std::string, CheckReport>> reports;
      for (const auto& [first, second] : one_sum_corpus(one_sums, seed))
        reports.emplace_back(describe(first) + " | " + describe(second), check_one_sum(first, second, limit));
      for (const auto& parts : two_sum_corpus(two_sums, seed))
        reports.emplace_back(describe(BaseInstance(parts.g1, parts.a, parts.x)) + " | " +
                                 describe(BaseInstance(parts.g2, parts.x, parts.b)),
                             check_two_sum(parts.g1, parts.g2, parts.x, parts.y, parts.a, parts.b, limit));
      for (const auto& [first, second] : union_corpus(unions, seed))
        reports.emplace_back(describe(first) + " | " + describe(second), check_union(first, second, limit));
      std::map<std::string, std::pair<std::size_t, std::size_t>> rows;
      bool ok = true;
      json failures = json::array();
      for (const auto& [where, report] : reports) {
        auto& row = rows[report.name];
        ++row.first;
        if (report.passed) continue;
        ok = false;
        ++row.second;
        failures.push_back({{"instance", where}, {"report", report_to_json(report)}});
        if (!as_json) print_failure(out, where, report);
      }
      if (as_json) {
        json doc{{"seed", seed}, {"rows", json::array()}, {"failures", failures}};
        for (const auto& [name, counts] : rows)
          doc["rows"].push_back({{"check", name}, {"examined", counts.first}, {"failed", counts.second}});
        out << doc.dump(2) << '\n';
      } else {
        for (const auto& [name, counts] : rows)
          out << name << " seed=" << seed << " examined=" << counts.first << " failed=" << counts.second << '\n';
      }
      return ok ? 0 : 1;
    }

    std::vector<std::string> checks;
    if (which == "all") {
      checks = spgraph_check_names();
      checks.push_back("decomp");
      checks.push_back("complete");
    } else if (which == "decomp" || which == "complete" ||
               std::count(spgraph_check_names().begin(), spgraph_check_names().end(), which) > 0) {
      checks = {which};
    } else {
      throw PreconditionError("unknown check '" + which + "'");
    }
    if (index && which != "decomp") throw PreconditionError("--index applies to decomp only");
    CorpusSpec loaded = load_corpus(corpus);

    CorpusRun run;
    if (index) {
      SummaryRow row{"decomp", loaded.label, 0, 0};
      for (const auto& inst : loaded.instances) {
        GeodesicDag dag = build_dag(inst);
        if (*index < 1 || *index + 1 > dag.distance()) continue;
        CheckReport report = check_decomposition(inst, *index, limit);
        ++row.examined;
        if (!report.passed) {
          ++row.failed;
          run.failures.emplace_back(describe(inst), report);
        }
      }
      run.rows.push_back(row);
    } else {
      run = run_corpus(loaded.instances, checks, loaded.label, limit);
    }
    if (as_json) {
      json doc{{"corpus", loaded.label}, {"instances", loaded.instances.size()}, {"rows", json::array()},
               {"failures", json::array()}};
      for (const auto& row : run.rows)
        doc["rows"].push_back({{"check", row.check}, {"slice", row.slice}, {"examined", row.examined}, {"failed", row.failed}});
      for (const auto& [where, report] : run.failures)
        doc["failures"].push_back({{"instance", where}, {"report", report_to_json(report)}});
      out << doc.dump(2) << '\n';
    } else {
      out << format_summary(run);
      for (const auto& [where, report] : run.failures) print_failure(out, where, report);
    }
    return run.passed() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace spg
