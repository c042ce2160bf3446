#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "pgr/io.hpp"

using namespace pgr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run pgr_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "pgr_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string p = temp_path(name);
  write_file(p, text);
  return p;
}

}  // namespace

TEST_CASE("cli recognize verdicts and exit codes") {
  const std::string c4 = write_temp("c4.graph", "4\n0 1\n1 2\n2 3\n0 3\n");
  const std::string c3 = write_temp("c3.graph", "3\n0 1\n1 2\n0 2\n");
  const std::string witness = temp_path("c4.witness.json");
  std::filesystem::remove(witness);

  const Run yes = pgr_run({"recognize", c4, "--out", witness});
  CHECK(yes.code == cli::kYes);
  CHECK(yes.out.rfind("yes", 0) == 0);
  const Graph g = parse_graph(read_file(c4));
  CHECK(validate_embedding(g, embedding_from_json(nlohmann::json::parse(read_file(witness)))));

  const Run no = pgr_run({"recognize", c3});
  CHECK(no.code == cli::kNo);

  const Run j = pgr_run({"recognize", c3, "--json"});
  CHECK(nlohmann::json::parse(j.out)["verdict"] == "no");
}

TEST_CASE("cli ascii rendering") {
  const std::string c4 = write_temp("c4.graph", "4\n0 1\n1 2\n2 3\n0 3\n");
  const Run a = pgr_run({"recognize", c4, "--format", "ascii"});
  const Run b = pgr_run({"recognize", c4, "--format", "ascii"});
  CHECK(a.out == b.out);
  CHECK(a.out.find("+-+\n| |\n+-+\n") != std::string::npos);
  const Run three = pgr_run({"recognize", c4, "--dim", "3", "--format", "ascii"});
  CHECK(three.code == cli::kUsage);
  CHECK(three.out.empty());
}

TEST_CASE("cli usage errors") {
  const std::string c4 = write_temp("c4.graph", "4\n0 1\n1 2\n2 3\n0 3\n");
  CHECK(pgr_run({}).code == cli::kUsage);
  CHECK(pgr_run({"recognize"}).code == cli::kUsage);
  CHECK(pgr_run({"recognize", c4, "--budget", "0"}).code == cli::kUsage);
  CHECK(pgr_run({"recognize", c4, "--dim", "4"}).code == cli::kUsage);
  CHECK(pgr_run({"recognize", temp_path("missing.graph")}).code == cli::kUsage);
  const std::string bad = write_temp("bad.graph", "3\n0 7\n");
  const Run r = pgr_run({"recognize", bad});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("line") != std::string::npos);
  CHECK(pgr_run({"--help"}).code == cli::kYes);
}

TEST_CASE("cli embed honors orientation and budget") {
  const std::string c4 = write_temp("c4.graph", "4\n0 1\n1 2\n2 3\n0 3\n");
  const std::string good = write_temp("c4.good", "0 1 H\n1 2 V\n2 3 H\n0 3 V\n");
  const std::string flat = write_temp("c4.flat", "0 1 H\n1 2 H\n2 3 H\n0 3 H\n");
  CHECK(pgr_run({"embed", c4, "--orientation", good}).code == cli::kYes);
  CHECK(pgr_run({"embed", c4, "--orientation", flat}).code == cli::kNo);

  // K2,3 needs a full search to refute
  const std::string k23 = write_temp("k23.graph", "5\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
  CHECK(pgr_run({"embed", k23}).code == cli::kNo);
  CHECK(pgr_run({"embed", k23, "--budget", "1"}).code == cli::kInconclusive);

  const std::string two = write_temp("two.graph", "4\n0 1\n2 3\n");
  const Run r = pgr_run({"embed", two, "--json"});
  CHECK(r.code == cli::kYes);
  const Embedding e = embedding_from_json(nlohmann::json::parse(r.out)["witness"]);
  CHECK(validate_embedding(parse_graph(read_file(two)), e));
}

TEST_CASE("cli reduce and orient") {
  const std::string phi = write_temp("phi.cnf", "p cnf 2 1\n1 2 -1 0\n");
  const std::string out = temp_path("phi.123");
  const std::string orient = temp_path("phi.123.orient");
  CHECK(pgr_run({"reduce", phi, "--target", "123-tree"}).code == cli::kUsage);
  CHECK(pgr_run({"reduce", phi, "--nae", "--target", "bogus"}).code == cli::kUsage);
  CHECK(pgr_run({"reduce", phi, "--nae", "--target", "24-graph", "--orientation", orient}).code ==
        cli::kUsage);
  REQUIRE(pgr_run({"reduce", phi, "--nae", "--target", "123-tree", "--out", out, "--orientation",
                   orient})
              .code == cli::kYes);
  const Graph t = parse_graph(read_file(out));
  CHECK(is_tree(t));
  CHECK(degree_set(t).subset_of({1, 2, 3}));
  CHECK(pgr_run({"embed", out, "--orientation", orient}).code == cli::kYes);

  const Run o = pgr_run({"orient", phi, "--json"});
  CHECK(o.code == cli::kYes);
  const auto edges = nlohmann::json::parse(o.out)["edges"];
  const Graph s = parse_graph(pgr_run({"reduce", phi, "--nae", "--target", "124-tree"}).out);
  CHECK(static_cast<int>(edges.size()) == s.edge_count());
}

TEST_CASE("cli prism, classify, gadget-verify") {
  const std::string c4 = write_temp("c4.graph", "4\n0 1\n1 2\n2 3\n0 3\n");
  const Graph p = parse_graph(pgr_run({"prism", c4}).out);
  CHECK(p.vertex_count() == 8);
  CHECK(p.edge_count() == 12);

  const Run c = pgr_run({"classify", "1,4", "--json"});
  CHECK(nlohmann::json::parse(c.out)["tag"] == "P");
  CHECK(pgr_run({"classify", "1,x"}).code == cli::kUsage);
  CHECK(pgr_run({"classify", "2", "--dim", "3", "--trees"}).code == cli::kUsage);

  const Run g = pgr_run({"gadget-verify", "square", "--json"});
  CHECK(g.code == cli::kYes);
  CHECK(nlohmann::json::parse(g.out)["square"]["passed"] == true);
  CHECK(pgr_run({"gadget-verify", "nothing"}).code == cli::kUsage);
}
