#include "gp/cli.hpp"

#include "gp/classify.hpp"
#include "gp/error.hpp"
#include "gp/qmcheck.hpp"
#include "gp/specfile.hpp"
#include "gp/walls.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace gp {

namespace {

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot read spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec_file(ss.str(),
                         std::filesystem::path(path).parent_path().string());
}

// Export targets accept "-" for the report stream.
void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw domain_error("cannot write '" + path + "'");
  f << text;
}

bool triangle_free(const FiniteGraph& g) {
  for (int v = 0; v < g.size(); ++v)
    for (int a : g.neighbors(v))
      for (int b : g.neighbors(v))
        if (a < b && g.adjacent(a, b)) return false;
  return true;
}

FiniteGraph interior_graph(const Ball& b) {
  FiniteGraph g = to_graph(b);
  g.set_interior(interior_mask(b, 1));
  g.set_deep_interior(interior_mask(b, 2));
  return g;
}

template <size_t N>
void report_axiom(std::ostream& out, const char* name, bool ok,
                  const std::array<int, N>& witness) {
  out << name;
  if (ok) {
    out << " ok\n";
    return;
  }
  out << " fail";
  for (int v : witness) out << " " << v;
  out << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Graph product word, ball, wall, and classification toolkit"};
  app.name("graphprod");
  app.require_subcommand(1);

  std::string spec_path;
  int radius = 0;
  long long bound = 0;
  int cap = 200000;
  auto add_common = [&](CLI::App* sub, bool with_ball) {
    sub->add_option("--spec", spec_path, "Product description file")
        ->required();
    if (with_ball) {
      sub->add_option("--radius", radius, "Ball radius")->required();
      sub->add_option("--bound", bound,
                      "Syllable bound for infinite vertex groups");
      sub->add_option("--cap", cap, "Vertex cap for the ball");
    }
  };

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "Print the canonical form of a word");
  std::string reduce_expr;
  add_common(reduce_cmd, false);
  reduce_cmd->add_option("word", reduce_expr, "Word expression or named word")
      ->required();

  CLI::App* dist_cmd =
      app.add_subcommand("dist", "Distance between two group elements");
  std::string dist_a, dist_b;
  bool weighted = false;
  add_common(dist_cmd, false);
  dist_cmd->add_option("a", dist_a, "First word")->required();
  dist_cmd->add_option("b", dist_b, "Second word")->required();
  dist_cmd->add_flag("--weighted", weighted,
                     "Use the generating sets declared in the spec file");

  CLI::App* ball_cmd =
      app.add_subcommand("ball", "Explore a ball of the Cayley graph");
  std::string dot_path, json_path;
  add_common(ball_cmd, true);
  CLI::Option* dot_opt =
      ball_cmd->add_option("--dot", dot_path, "Write DOT to this file, - for stdout");
  CLI::Option* json_opt =
      ball_cmd->add_option("--json", json_path, "Write JSON to this file, - for stdout");
  dot_opt->excludes(json_opt);

  CLI::App* check_cmd =
      app.add_subcommand("check", "Verify the quasi-median axioms on a ball");
  add_common(check_cmd, true);

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Hyperbolicity and relative hyperbolicity report");
  bool maximal_joins = false;
  add_common(classify_cmd, false);
  classify_cmd->add_flag("--maximal-joins", maximal_joins,
                         "Seed the fixpoint with maximal joins only");

  CLI::App* cubulate_cmd = app.add_subcommand(
      "cubulate", "Cubulate a ball by its sector walls");
  add_common(cubulate_cmd, true);

  CLI::App* trees_cmd = app.add_subcommand(
      "trees", "Embed a ball into a product of tree factors");
  add_common(trees_cmd, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (reduce_cmd->parsed()) {
      SpecFile f = load_spec(spec_path);
      out << format_word(f.spec, resolve_word(f, reduce_expr)) << "\n";
    } else if (dist_cmd->parsed()) {
      SpecFile f = load_spec(spec_path);
      NormalWord a = resolve_word(f, dist_a);
      NormalWord b = resolve_word(f, dist_b);
      if (weighted)
        out << weighted_distance(f.spec, generating_sets(f), a, b) << "\n";
      else
        out << distance(f.spec, a, b) << "\n";
    } else if (ball_cmd->parsed()) {
      SpecFile f = load_spec(spec_path);
      Ball b = ball(f.spec, radius, bound, cap);
      if (!dot_path.empty()) {
        write_text(dot_path, ball_dot(b), out);
      } else if (!json_path.empty()) {
        write_text(json_path, ball_json(b), out);
      } else {
        int truncated = 0;
        for (int v = 0; v < b.size(); ++v)
          if (b.truncated(v)) ++truncated;
        out << "vertices " << b.size() << "\n";
        out << "edges " << b.edges().size() << "\n";
        out << "truncated " << truncated << "\n";
      }
    } else if (check_cmd->parsed()) {
      SpecFile f = load_spec(spec_path);
      Ball b = ball(f.spec, radius, bound, cap);
      AxiomReport rep = check_axioms(interior_graph(b));
      report_axiom(out, "triangle", rep.triangle_ok, rep.triangle_witness);
      report_axiom(out, "quadrangle", rep.quadrangle_ok, rep.quadrangle_witness);
      report_axiom(out, "k4minus", rep.k4minus_free, rep.k4minus_witness);
      report_axiom(out, "k32", rep.k32_free, rep.k32_witness);
      out << "axioms " << (rep.ok() ? "ok" : "fail") << "\n";
    } else if (classify_cmd->parsed()) {
      SpecFile f = load_spec(spec_path);
      out << classification_json(f.spec, maximal_joins);
    } else if (cubulate_cmd->parsed()) {
      SpecFile f = load_spec(spec_path);
      Ball b = ball(f.spec, radius, bound, cap);
      FiniteGraph g = to_graph(b);
      Cubulation c = cubulate_sector_walls(g);
      auto dg = g.all_distances();
      auto dc = c.graph.all_distances();
      bool isometric = true;
      for (int x = 0; x < g.size() && isometric; ++x)
        for (int y = x + 1; y < g.size(); ++y)
          if (dc[c.point_vertex[x]][c.point_vertex[y]] != dg[x][y]) {
            isometric = false;
            break;
          }
      nlohmann::ordered_json j;
      j["schema"] = 1;
      j["ball_vertices"] = g.size();
      j["ball_edges"] = g.edge_count();
      j["walls"] =
          c.orientations.empty() ? 0 : c.orientations.front().size();
      j["cubulation_vertices"] = c.graph.size();
      j["cubulation_edges"] = c.graph.edge_count();
      j["median"] = triangle_free(c.graph) && check_axioms(c.graph).ok();
      j["isometric"] = isometric;
      out << j.dump(2) << "\n";
    } else if (trees_cmd->parsed()) {
      SpecFile f = load_spec(spec_path);
      Ball b = ball(f.spec, radius, bound, cap);
      Coloring col = chromatic_number(f.spec.graph());
      TreeFactors t = tree_embedding(f.spec, b, col.color);
      std::vector<char> interior = interior_mask(b, 1);
      bool isometric = true;
      for (int x = 0; x < b.size() && isometric; ++x) {
        if (!interior[x]) continue;
        for (int y = x + 1; y < b.size(); ++y) {
          if (!interior[y]) continue;
          if (tree_distance(t, x, y) != distance(f.spec, b.word(x), b.word(y))) {
            isometric = false;
            break;
          }
        }
      }
      nlohmann::ordered_json j;
      j["schema"] = 1;
      j["colors"] = col.colors;
      j["factors"] = nlohmann::ordered_json::array();
      for (const FiniteGraph& factor : t.factors) {
        nlohmann::ordered_json fj;
        fj["vertices"] = factor.size();
        fj["edges"] = factor.edge_count();
        j["factors"].push_back(fj);
      }
      j["isometric_interior"] = isometric;
      out << j.dump(2) << "\n";
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace gp
