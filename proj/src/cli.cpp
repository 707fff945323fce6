#include "graphonlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "graphonlab/forcing.hpp"
#include "graphonlab/io.hpp"
#include "graphonlab/quadrature.hpp"
#include "graphonlab/sampling.hpp"
#include "graphonlab/vertexspace.hpp"

namespace graphonlab {

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
  int threads = 1;
  int grid = 10;
  std::string out_path;
  bool json = false;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("GRAPHONLAB_SEED");
  if (env == nullptr) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    return 0;
  }
}

void add_common(CLI::App* cmd, Common& common) {
  common.seed = default_seed();
  cmd->add_option("--seed", common.seed, "random seed (default: GRAPHONLAB_SEED or 0)");
  cmd->add_option("--budget", common.budget, "sample budget for Monte Carlo estimates");
  cmd->add_option("--threads", common.threads, "worker threads (results are thread-count independent)");
  cmd->add_option("--grid", common.grid, "log2 quadrature grid resolution per axis");
  cmd->add_option("--out", common.out_path, "write output to this file instead of stdout");
  cmd->add_flag("--json", common.json, "emit JSON instead of CSV");
}

EvalOptions eval_options(const Common& c, Method method = Method::Auto) {
  EvalOptions opts;
  opts.method = method;
  opts.budget = c.budget;
  opts.seed = c.seed;
  opts.threads = c.threads;
  opts.grid_log2 = c.grid;
  return opts;
}

struct Table {
  std::string command;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << '\n';
    }
    return os.str();
  }

  std::string to_json() const {
    std::ostringstream os;
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    os << "{" << quote("command") << ":" << quote(command) << "," << quote("rows") << ":[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      os << (r ? "," : "") << "{";
      for (std::size_t i = 0; i < header.size(); ++i) {
        os << (i ? "," : "") << quote(header[i]) << ":" << quote(rows[r][i]);
      }
      os << "}";
    }
    os << "]}\n";
    return os.str();
  }
};

void emit(const Table& table, const Common& common, std::ostream& out) {
  std::string text = common.json ? table.to_json() : table.to_csv();
  if (!common.out_path.empty()) {
    write_file(common.out_path, text);
  } else {
    out << text;
  }
}

void emit_raw(const std::string& text, const Common& common, std::ostream& out) {
  if (!common.out_path.empty()) {
    write_file(common.out_path, text);
  } else {
    out << text;
  }
}

std::vector<int> parse_orders(const std::string& csv) {
  std::vector<int> orders;
  std::istringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) orders.push_back(std::stoi(item));
  }
  if (orders.empty()) throw parse_error("--orders: expected a comma-separated list");
  return orders;
}

Method parse_method(const std::string& name) {
  if (name == "mc") return Method::MonteCarlo;
  if (name == "quad") return Method::Quadrature;
  if (name == "exact-step") return Method::ExactStep;
  return Method::Auto;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graphonlab: graphon densities, constraints, and vertex-space diagnostics"};
  app.require_subcommand(1);

  // density
  auto* density_cmd = app.add_subcommand("density", "density of a graph in a graphon");
  Common density_common;
  std::string density_graph, density_graphon, density_method = "auto";
  density_cmd->add_option("--graph", density_graph, "graph file")->required();
  density_cmd->add_option("--graphon", density_graphon, "graphon spec file or builtin:NAME")->required();
  density_cmd->add_option("--method", density_method, "auto|mc|quad|exact-step")
      ->check(CLI::IsMember({"auto", "mc", "quad", "exact-step"}));
  add_common(density_cmd, density_common);

  // degree
  auto* degree_cmd = app.add_subcommand("degree", "degree of a vertex of a graphon");
  Common degree_common;
  std::string degree_graphon;
  double degree_x = 0.5;
  degree_cmd->add_option("--graphon", degree_graphon, "graphon spec")->required();
  degree_cmd->add_option("--x", degree_x, "vertex coordinate in [0,1]")->required();
  add_common(degree_cmd, degree_common);

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "sample a W-random graph");
  Common sample_common;
  std::string sample_graphon;
  int sample_order = 10;
  sample_cmd->add_option("--graphon", sample_graphon, "graphon spec")->required();
  sample_cmd->add_option("--order", sample_order, "number of vertices")->required();
  add_common(sample_cmd, sample_common);

  // converge
  auto* converge_cmd = app.add_subcommand("converge", "density convergence along W-random graphs");
  Common converge_common;
  std::string converge_graph, converge_graphon, converge_orders = "50,100,200,400";
  converge_cmd->add_option("--graph", converge_graph, "graph file")->required();
  converge_cmd->add_option("--graphon", converge_graphon, "graphon spec")->required();
  converge_cmd->add_option("--orders", converge_orders, "comma-separated increasing orders");
  add_common(converge_cmd, converge_common);

  // check
  auto* check_cmd = app.add_subcommand("check", "check a constraint file against a graphon");
  Common check_common;
  std::string check_file, check_graphon;
  check_cmd->add_option("--constraints", check_file, "constraint file")->required();
  check_cmd->add_option("--graphon", check_graphon, "graphon spec")->required();
  add_common(check_cmd, check_common);

  // verify-wr
  auto* verify_cmd = app.add_subcommand("verify-wr", "verify the Rademacher graphon identities");
  Common verify_common;
  std::string verify_graphon = "builtin:rademacher", verify_filter;
  verify_cmd->add_option("--graphon", verify_graphon, "graphon spec (default builtin:rademacher)");
  verify_cmd->add_option("--filter", verify_filter, "only run identities whose name contains this");
  add_common(verify_cmd, verify_common);

  // vertex-space
  auto* vs_cmd = app.add_subcommand("vertex-space", "packing witnesses around the limit section g");
  Common vs_common;
  double vs_eps = 1.0 / 64.0;
  int vs_count = 8;
  std::string vs_sections;
  vs_cmd->add_option("--eps", vs_eps, "ball radius in (0, 1/4)")->required();
  vs_cmd->add_option("--count", vs_count, "number of witnesses")->required();
  vs_cmd->add_option("--emit-sections", vs_sections, "dump grid samples of g and the witnesses to this CSV file");
  add_common(vs_cmd, vs_common);

  // heatmap
  auto* heatmap_cmd = app.add_subcommand("heatmap", "evaluate a graphon on a uniform midpoint grid");
  Common heatmap_common;
  std::string heatmap_graphon;
  int heatmap_res = 64;
  heatmap_cmd->add_option("--graphon", heatmap_graphon, "graphon spec")->required();
  heatmap_cmd->add_option("--res", heatmap_res, "grid resolution");
  add_common(heatmap_cmd, heatmap_common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (density_cmd->parsed()) {
      ParsedGraph pg = load_graph_file(density_graph);
      if (pg.rooted()) throw parse_error("density: rooted graphs need root coordinates; use the library API");
      Graphon w = load_graphon(density_graphon);
      EvalOptions opts = eval_options(density_common, parse_method(density_method));
      Estimate est = pg.decorated() ? decorated_density(DecoratedGraph(pg.graph, pg.parts), w, opts)
                                    : graphon_density(pg.graph, w, opts);
      Table t{"density", {"value", "stderr", "method"},
              {{format_double(est.value), format_double(est.stderr_), method_name(est.method)}}};
      emit(t, density_common, out);
      return 0;
    }

    if (degree_cmd->parsed()) {
      Graphon w = load_graphon(degree_graphon);
      Estimate est = graphon_degree(w, degree_x, std::max(12, degree_common.grid));
      Table t{"degree", {"x", "value", "stderr", "method"},
              {{format_double(degree_x), format_double(est.value), format_double(est.stderr_),
                method_name(est.method)}}};
      emit(t, degree_common, out);
      return 0;
    }

    if (sample_cmd->parsed()) {
      Graphon w = load_graphon(sample_graphon);
      Graph g = sample_w_random_graph(w, sample_order, sample_common.seed, sample_common.threads);
      if (sample_common.json) {
        std::ostringstream os;
        os << "{\"command\":\"sample\",\"order\":" << g.order() << ",\"edges\":[";
        auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
          os << (i ? "," : "") << "[" << edges[i].first << "," << edges[i].second << "]";
        }
        os << "]}\n";
        emit_raw(os.str(), sample_common, out);
      } else {
        emit_raw(graph_to_text(g), sample_common, out);
      }
      return 0;
    }

    if (converge_cmd->parsed()) {
      ParsedGraph pg = load_graph_file(converge_graph);
      Graphon w = load_graphon(converge_graphon);
      auto rows = convergence_experiment(w, pg.graph, parse_orders(converge_orders), converge_common.seed,
                                         eval_options(converge_common));
      Table t{"converge", {"order", "estimate", "stderr", "deviation"}, {}};
      for (const auto& r : rows) {
        t.rows.push_back({std::to_string(r.order), format_double(r.estimate), format_double(r.stderr_),
                          format_double(r.deviation)});
      }
      emit(t, converge_common, out);
      return 0;
    }

    if (check_cmd->parsed()) {
      Graphon w = load_graphon(check_graphon);
      auto specs = load_constraints(check_file);
      Table t{"check", {"name", "lhs", "rhs", "residual", "stderr", "verdict"}, {}};
      bool violated = false;
      for (const auto& spec : specs) {
        CheckResult r = check_constraint(spec.constraint, w, spec.tol, eval_options(check_common));
        violated = violated || r.verdict == Verdict::Violated;
        t.rows.push_back({spec.constraint.name, format_double(r.lhs.value), format_double(r.rhs.value),
                          format_double(r.residual), format_double(r.stderr_), verdict_name(r.verdict)});
      }
      emit(t, check_common, out);
      return violated ? 1 : 0;
    }

    if (verify_cmd->parsed()) {
      Graphon w = load_graphon(verify_graphon);
      WrReport report = verify_wr_identities(w, eval_options(verify_common), verify_filter);
      Table t{"verify-wr", {"identity", "target", "estimate", "stderr", "verdict"}, {}};
      for (const auto& item : report.items) {
        t.rows.push_back({item.name, format_double(item.target), format_double(item.estimate.value),
                          format_double(item.estimate.stderr_), verdict_name(item.verdict)});
      }
      emit(t, verify_common, out);
      return report.all_satisfied() ? 0 : 1;
    }

    if (vs_cmd->parsed()) {
      PackingDiagnostic diag = packing_diagnostic(vs_eps, vs_count, std::max(12, vs_common.grid));
      Table t{"vertex-space", {"index", "delta", "dist_to_g", "min_pairwise", "certified"}, {}};
      for (const auto& wit : diag.witnesses) {
        t.rows.push_back({std::to_string(wit.index), format_double(wit.delta), format_double(wit.dist_to_g),
                          format_double(diag.min_pairwise), diag.certified ? "1" : "0"});
      }
      emit(t, vs_common, out);
      if (!vs_sections.empty()) {
        Table sections{"sections", {"x", "g"}, {}};
        SectionFunction g = witness_g();
        std::vector<SectionFunction> wits;
        for (const auto& wit : diag.witnesses) {
          sections.header.push_back("g_" + std::to_string(wit.index));
          wits.push_back(witness_g_i_delta(wit.index, wit.delta));
        }
        int res = 1 << 10;
        for (int i = 0; i < res; ++i) {
          double x = (i + 0.5) / res;
          std::vector<std::string> row{format_double(x), format_double(g(x))};
          for (const auto& wf : wits) row.push_back(format_double(wf(x)));
          sections.rows.push_back(std::move(row));
        }
        write_file(vs_sections, sections.to_csv());
      }
      return diag.certified ? 0 : 1;
    }

    if (heatmap_cmd->parsed()) {
      Graphon w = load_graphon(heatmap_graphon);
      if (heatmap_res < 1) throw parse_error("heatmap: --res must be positive");
      Table t{"heatmap", {}, {}};
      for (int j = 0; j < heatmap_res; ++j) t.header.push_back(format_double((j + 0.5) / heatmap_res));
      for (int i = 0; i < heatmap_res; ++i) {
        std::vector<std::string> row;
        double x = (i + 0.5) / heatmap_res;
        for (int j = 0; j < heatmap_res; ++j) row.push_back(format_double(w(x, (j + 0.5) / heatmap_res)));
        t.rows.push_back(std::move(row));
      }
      emit(t, heatmap_common, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << app.help();
  return 2;
}

}  // namespace graphonlab
