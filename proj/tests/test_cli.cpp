// Tests for the spec-file format and the command-line driver.  The driver
// is exercised in process through run_cli, so exit codes and both output
// streams are visible without spawning child processes.  Golden outputs
// live next to the spec corpus in tests/golden.
#include "doctest.h"

#include "gp/cayley.hpp"
#include "gp/cli.hpp"
#include "gp/error.hpp"
#include "gp/specfile.hpp"
#include "gp/words.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace gp;

namespace {

std::string golden_dir() { return std::string(GP_TEST_DIR) + "/golden"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Scratch directory for specs that only exist to trigger errors.
std::string scratch_file(const std::string& name, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gp_cli_scratch";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream out(p);
  out << text;
  out.close();
  return p.string();
}

} // namespace

TEST_CASE("spec files parse into graph products") {
  SUBCASE("vertices, groups and edges in declaration order") {
    SpecFile f = parse_spec_file("# a comment\n"
                                 "vertex u C2\n"
                                 "vertex v C6\n"
                                 "vertex t Z\n"
                                 "edge u v\n"
                                 "edge v t\n");
    CHECK(f.spec.vertex_count() == 3);
    CHECK(f.spec.graph().vertex_name(0) == "u");
    CHECK(f.spec.graph().vertex_name(2) == "t");
    CHECK(f.spec.group(0).order() == 2);
    CHECK(f.spec.group(1).order() == 6);
    CHECK_FALSE(f.spec.group(2).finite());
    CHECK(f.spec.graph().adjacent(0, 1));
    CHECK(f.spec.graph().adjacent(1, 2));
    CHECK_FALSE(f.spec.graph().adjacent(0, 2));
    CHECK(f.group_texts == std::vector<std::string>{"C2", "C6", "Z"});
    CHECK(f.words.empty());
    CHECK(f.gens_overrides.empty());
  }

  SUBCASE("word lines are reduced and named") {
    SpecFile f = parse_spec_file("vertex u C2\n"
                                 "vertex v C2\n"
                                 "edge u v\n"
                                 "word back v:1*u:1\n"
                                 "word null u:1*u:1\n");
    REQUIRE(f.words.size() == 2);
    CHECK(f.words[0].first == "back");
    // u and v commute, so the stored form starts at the lower vertex.
    CHECK(format_word(f.spec, f.words[0].second) == "u:1*v:1");
    CHECK(f.words[1].first == "null");
    CHECK(format_word(f.spec, f.words[1].second) == "e");
  }

  SUBCASE("word lines may appear before the vertices they use") {
    SpecFile f = parse_spec_file("word w v:1\n"
                                 "vertex v C3\n");
    REQUIRE(f.words.size() == 1);
    CHECK(format_word(f.spec, f.words[0].second) == "v:1");
  }

  SUBCASE("gens lines are recorded and applied") {
    SpecFile f = parse_spec_file("vertex z Z\n"
                                 "gens z 2,3\n");
    REQUIRE(f.gens_overrides.size() == 1);
    CHECK(f.gens_overrides[0].first == 0);
    CHECK(f.gens_overrides[0].second == std::vector<GroupElement>{2, 3});
    GeneratingSets sets = generating_sets(f);
    NormalWord g = resolve_word(f, "z:5");
    NormalWord id = empty_word(f.spec);
    // 5 = 2 + 3, two generator steps.
    CHECK(weighted_distance(f.spec, sets, id, g) == 2);
  }

  SUBCASE("named words resolve anywhere a word is accepted") {
    SpecFile f = parse_spec_file("vertex u C5\n"
                                 "word twice u:2\n");
    CHECK(format_word(f.spec, resolve_word(f, "twice")) == "u:2");
    CHECK(format_word(f.spec, resolve_word(f, "u:4*u:3")) == "u:2");
    CHECK(format_word(f.spec, resolve_word(f, "e")) == "e");
  }

  SUBCASE("table groups resolve relative to the table directory") {
    SpecFile f = parse_spec_file(read_file(golden_dir() + "/klein.spec"),
                                 golden_dir());
    CHECK(f.spec.group(0).order() == 4);
    CHECK(format_word(f.spec, resolve_word(f, "ab")) == "k:3");
  }
}

TEST_CASE("spec files print canonically") {
  SUBCASE("comments vanish and sections are reordered") {
    SpecFile f = parse_spec_file("word w u:1*v:1   # mid-line comment\n"
                                 "vertex u C2\n"
                                 "\n"
                                 "vertex v C2\n"
                                 "edge v u\n");
    CHECK(format_spec_file(f) == "vertex u C2\n"
                                 "vertex v C2\n"
                                 "edge u v\n"
                                 "word w u:1*v:1\n");
  }

  SUBCASE("printing is idempotent") {
    for (const char* name : {"/k2_c2.spec", "/mixed_zc2.spec", "/star_z.spec",
                             "/path4_z.spec"}) {
      std::string text = read_file(golden_dir() + name);
      std::string once = format_spec_file(parse_spec_file(text, golden_dir()));
      std::string twice =
          format_spec_file(parse_spec_file(once, golden_dir()));
      CHECK(once == twice);
    }
  }

  SUBCASE("gens and words survive a round trip") {
    std::string text = read_file(golden_dir() + "/mixed_zc2.spec");
    SpecFile f = parse_spec_file(text, golden_dir());
    CHECK(format_spec_file(f) == "vertex z Z\n"
                                 "vertex s C2\n"
                                 "edge z s\n"
                                 "gens z 2,3\n"
                                 "word far z:5*s:1\n");
  }
}

TEST_CASE("spec file errors carry line numbers") {
  auto bad = [](const std::string& text, const std::string& message) {
    CHECK_THROWS_WITH_AS(parse_spec_file(text), message.c_str(), parse_error);
  };

  SUBCASE("vertex lines") {
    bad("vertex u\n", "line 1: vertex needs a name and a group");
    bad("vertex u C2 extra\n", "line 1: unexpected trailing input 'extra'");
    bad("vertex u C2\nvertex u C3\n", "line 2: duplicate vertex 'u'");
    bad("vertex u C1\n", "line 1: trivial vertex group");
    bad("vertex u C\n", "line 1: malformed group 'C'");
    bad("vertex u C0\n", "line 1: malformed group 'C0'");
    bad("vertex u Cx\n", "line 1: malformed group 'Cx'");
    bad("vertex u Q8\n", "line 1: malformed group 'Q8'");
    bad("vertex u table:\n", "line 1: malformed group 'table:'");
  }

  SUBCASE("edge lines") {
    bad("vertex u C2\nedge u\n", "line 2: edge needs two vertices");
    bad("vertex u C2\nedge u w\n", "line 2: unknown vertex 'w'");
    bad("edge u u\n", "line 1: unknown vertex 'u'");
    bad("vertex u C2\nedge u u\n", "line 2: loop edge at vertex: u");
    bad("vertex u C2\nvertex v C2\nedge u v\nedge v u\n",
        "line 4: duplicate edge: v u");
  }

  SUBCASE("word lines") {
    bad("word w\n", "line 1: word needs a name and an expression");
    bad("vertex u C2\nword e u:1\n", "line 2: word name 'e' is reserved");
    bad("vertex u C2\nword w u:1\nword w u:1\n",
        "line 3: duplicate word 'w'");
    bad("vertex u C2\nword w v:1\n", "line 2: unknown vertex in word: v");
    bad("vertex u C2\nword w u\n", "line 2: malformed syllable: 'u'");
    bad("vertex u C2\nword w u:one\n",
        "line 2: malformed syllable value: 'one'");
    bad("vertex u C2\nword w u:1*\n", "line 2: trailing '*' in word");
  }

  SUBCASE("gens lines") {
    bad("vertex z Z\ngens z\n", "line 2: gens needs a vertex and a list");
    bad("gens z 2\n", "line 1: unknown vertex 'z'");
    bad("vertex z Z\ngens w 2\n", "line 2: unknown vertex 'w'");
    bad("vertex z Z\ngens z 1\ngens z 2\n",
        "line 3: duplicate gens for vertex 'z'");
    bad("vertex z Z\ngens z 2,x\n", "line 2: malformed generator list '2,x'");
    bad("vertex z Z\ngens z 2a\n", "line 2: malformed generator list '2a'");
    bad("vertex z Z\ngens z ,\n", "line 2: malformed generator list ','");
    bad("vertex z Z\ngens z 0\n",
        "line 2: identity is not allowed as a generator");
    bad("vertex z Z\ngens z 2,4\n",
        "line 2: generators do not generate the group");
    bad("vertex u C2\ngens u 5\n", "line 2: group element out of range");
  }

  SUBCASE("unknown directives") {
    bad("vertx u C2\n", "line 1: unknown directive 'vertx'");
    bad("vertex u C2\nball 3\n", "line 2: unknown directive 'ball'");
  }
}

TEST_CASE("table files validate before becoming groups") {
  auto bad_table = [](const std::string& name, const std::string& text,
                      const std::string& tail) {
    std::string path = scratch_file(name, text);
    std::string spec = "vertex k table:" + path + "\n";
    std::string expected = "line 1: table file '" + path + "' " + tail;
    CHECK_THROWS_WITH_AS(parse_spec_file(spec), expected.c_str(), parse_error);
  };

  SUBCASE("missing file") {
    std::string path = scratch_file("present.tab", "2\n0 1\n1 0\n");
    std::string missing = path + ".does-not-exist";
    CHECK_THROWS_WITH_AS(
        parse_spec_file("vertex k table:" + missing + "\n"),
        ("line 1: cannot read table file '" + missing + "'").c_str(),
        parse_error);
  }

  SUBCASE("shape errors") {
    bad_table("empty.tab", "", "must start with the group order");
    bad_table("huge.tab", "600\n", "order is too large");
    bad_table("short.tab", "2\n0 1 1\n", "has too few entries");
    bad_table("long.tab", "2\n0 1\n1 0\n7\n", "has trailing entries");
  }

  SUBCASE("tables that are not groups") {
    std::string path = scratch_file("zeros.tab", "2\n0 0\n0 0\n");
    std::string expected = "line 1: table file '" + path +
                           "': multiplication table has no identity";
    CHECK_THROWS_WITH_AS(parse_spec_file("vertex k table:" + path + "\n"),
                         expected.c_str(), parse_error);
  }

  SUBCASE("order one is rejected like C1") {
    std::string path = scratch_file("one.tab", "1\n0\n");
    std::string expected =
        "line 1: table file '" + path + "': trivial vertex group";
    CHECK_THROWS_WITH_AS(parse_spec_file("vertex k table:" + path + "\n"),
                         expected.c_str(), parse_error);
  }
}

TEST_CASE("the command line reproduces golden outputs") {
  const std::string dir = golden_dir();
  struct GoldenCase {
    std::vector<std::string> args;
    std::string file;
  };
  const GoldenCase cases[] = {
      {{"reduce", "--spec", dir + "/k2_c2.spec", "u:1*u:1"},
       "k2_c2.reduce.golden"},
      {{"dist", "--spec", dir + "/k2_c2.spec", "e", "u:1*v:1"},
       "k2_c2.dist.golden"},
      {{"ball", "--spec", dir + "/k2_c2.spec", "--radius", "2"},
       "k2_c2.ball.golden"},
      {{"classify", "--spec", dir + "/square_c2.spec"},
       "square_c2.classify.golden"},
      {{"check", "--spec", dir + "/square_c2.spec", "--radius", "2"},
       "square_c2.check.golden"},
      {{"ball", "--spec", dir + "/free_c2c2.spec", "--radius", "3", "--dot",
        "-"},
       "free_c2c2.dot.golden"},
      {{"ball", "--spec", dir + "/single_z.spec", "--radius", "1", "--bound",
        "2", "--json", "-"},
       "single_z.json.golden"},
      {{"classify", "--spec", dir + "/edge_zz.spec"},
       "edge_zz.classify.golden"},
      {{"classify", "--spec", dir + "/path3_c2.spec"},
       "path3_c2.classify.golden"},
      {{"cubulate", "--spec", dir + "/path3_c2.spec", "--radius", "2"},
       "path3_c2.cubulate.golden"},
      {{"cubulate", "--spec", dir + "/triangle_c2.spec", "--radius", "2"},
       "triangle_c2.cubulate.golden"},
      {{"trees", "--spec", dir + "/triangle_c2.spec", "--radius", "2"},
       "triangle_c2.trees.golden"},
      {{"classify", "--spec", dir + "/star_z.spec"}, "star_z.classify.golden"},
      {{"reduce", "--spec", dir + "/klein.spec", "ab"}, "klein.reduce.golden"},
      {{"ball", "--spec", dir + "/klein.spec", "--radius", "1", "--json", "-"},
       "klein.json.golden"},
      {{"classify", "--spec", dir + "/c5_c2.spec"}, "c5_c2.classify.golden"},
      {{"classify", "--spec", dir + "/path4_z.spec"},
       "path4_z.classify.golden"},
      {{"dist", "--spec", dir + "/mixed_zc2.spec", "--weighted", "e", "z:5"},
       "mixed_zc2.wdist.golden"},
  };
  for (const GoldenCase& c : cases) {
    CAPTURE(c.file);
    CliResult r = run(c.args);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == read_file(dir + "/" + c.file));
  }
}

TEST_CASE("exports can go to files as well as stdout") {
  namespace fs = std::filesystem;
  const std::string spec = golden_dir() + "/free_c2c2.spec";
  fs::path out_path = fs::temp_directory_path() / "gp_cli_scratch" / "b.dot";
  fs::create_directories(out_path.parent_path());
  CliResult r = run({"ball", "--spec", spec, "--radius", "3", "--dot",
                     out_path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(out_path.string()) ==
        read_file(golden_dir() + "/free_c2c2.dot.golden"));

  CliResult denied = run({"ball", "--spec", spec, "--radius", "3", "--dot",
                          "/nonexistent-gp-dir/b.dot"});
  CHECK(denied.code == 1);
  CHECK(denied.err ==
        "error: cannot write '/nonexistent-gp-dir/b.dot'\n");
}

TEST_CASE("command line errors map onto exit codes") {
  const std::string k2 = golden_dir() + "/k2_c2.spec";

  SUBCASE("usage problems exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"reduce", "u:1"}).code == 2);          // missing --spec
    CHECK(run({"ball", "--spec", k2}).code == 2);     // missing --radius
    CHECK(run({"dist", "--spec", k2, "e"}).code == 2); // one endpoint
    CHECK(run({"ball", "--spec", k2, "--radius", "1", "--dot", "-", "--json",
               "-"})
              .code == 2);
  }

  SUBCASE("help exits 0") {
    CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("reduce") != std::string::npos);
    CHECK(run({"ball", "--help"}).code == 0);
  }

  SUBCASE("domain problems exit 1") {
    CliResult gone = run({"reduce", "--spec", "/no/such/file.spec", "e"});
    CHECK(gone.code == 1);
    CHECK(gone.err == "error: cannot read spec file '/no/such/file.spec'\n");

    std::string z = scratch_file("z.spec", "vertex t Z\n");
    CliResult unbounded = run({"ball", "--spec", z, "--radius", "2"});
    CHECK(unbounded.code == 1);
    CHECK(unbounded.err.find("enumeration bound must be at least 1") !=
          std::string::npos);

    CliResult negative = run({"ball", "--spec", k2, "--radius", "-1"});
    CHECK(negative.code == 1);
    CHECK(negative.err == "error: radius must be non-negative\n");

    CliResult capped =
        run({"ball", "--spec", k2, "--radius", "2", "--cap", "2"});
    CHECK(capped.code == 1);
    CHECK(capped.err == "error: ball exceeds vertex cap\n");
  }

  SUBCASE("spec parse problems exit 2 with the line number") {
    std::string broken = scratch_file("broken.spec", "vertex u C2\n"
                                                     "edge u w\n");
    CliResult r = run({"classify", "--spec", broken});
    CHECK(r.code == 2);
    CHECK(r.err == "error: line 2: unknown vertex 'w'\n");
  }

  SUBCASE("word errors on the command line exit 2") {
    CliResult r = run({"reduce", "--spec", k2, "u:1*"});
    CHECK(r.code == 2);
    CHECK(r.err == "error: trailing '*' in word\n");
  }
}
