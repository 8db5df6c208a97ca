#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "catena/cli.hpp"
#include "catena/dot.hpp"
#include "catena/error.hpp"
#include "catena/json_io.hpp"

using namespace catena;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "catena_test_" + std::to_string(counter++) + ".json";
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

const char* kM3 =
    R"({"elements": ["k","k1","k2","k3","L"], "covers": [["k","k1"],["k","k2"],["k","k3"],["k1","L"],["k2","L"],["k3","L"]]})";

}  // namespace

TEST_CASE("lattice JSON round trip") {
  FiniteLattice L = parse_lattice_json(kM3);
  CHECK(L.size() == 5);
  CHECK(L.covers().size() == 6);
  FiniteLattice back = parse_lattice_json(lattice_to_json(L));
  CHECK(back == L);

  CHECK_THROWS_AS(parse_lattice_json("{"), Error);
  CHECK_THROWS_AS(parse_lattice_json(R"({"elements": ["a"]})"), Error);
}

TEST_CASE("ring recipes parse") {
  FiniteCommRing z = parse_ring_spec(R"({"construct":"zmod","n":4})");
  CHECK(z.n == 4);
  FiniteCommRing f = parse_ring_spec(R"({"construct":"gf","p":2,"deg":2})");
  CHECK(f.n == 4);
  FiniteCommRing fp =
      parse_ring_spec(R"({"construct":"gf","p":2,"poly":[1,1,1]})");
  CHECK(fp.mul_tab == f.mul_tab);
  FiniteCommRing pr = parse_ring_spec(
      R"({"construct":"product","factors":[{"construct":"gf","p":2,"deg":1},{"construct":"gf","p":2,"deg":2}]})");
  CHECK(pr.n == 8);
  FiniteCommRing q = parse_ring_spec(
      R"({"construct":"quotient","base":{"construct":"zmod","n":8},"ideal_generators":[4]})");
  CHECK(q.n == 4);
  FiniteCommRing pq = parse_ring_spec(
      R"({"construct":"poly_quotient","base":{"construct":"gf","p":2,"deg":1},"poly":[0,0,1]})");
  CHECK(pq.n == 4);
  FiniteCommRing id = parse_ring_spec(
      R"({"construct":"idealization","base":{"construct":"gf","p":2,"deg":1},"module":{"kind":"free","rank":2}})");
  CHECK(id.n == 8);
  FiniteCommRing iq = parse_ring_spec(
      R"({"construct":"idealization","base":{"construct":"zmod","n":4},"module":{"kind":"quotient","ideal_generators":[2]}})");
  CHECK(iq.n == 8);

  CHECK_THROWS_AS(parse_ring_spec(R"({"construct":"weird"})"), Error);
}

TEST_CASE("extension, group and tower specs parse") {
  RingExtension ext = parse_extension_spec(
      R"({"ring": {"construct":"product","factors":[{"construct":"gf","p":2,"deg":1},{"construct":"gf","p":2,"deg":2}]}, "subring_generators": []})");
  CHECK(ext.R->n == 2);
  CHECK(ext.S->n == 8);

  // generators enlarge the subring
  RingExtension gen = parse_extension_spec(
      R"({"ring": {"construct":"gf","p":2,"deg":2}, "subring_generators": [2]})");
  CHECK(gen.R->n == 4);

  FiniteGroup G = parse_group_spec(R"({"points": 4, "generators": [[2,1,3,4],[2,3,4,1]]})");
  CHECK(G.order() == 24);
  CHECK_THROWS_AS(parse_group_spec(R"({"points": 3, "generators": [[4,1,2]]})"), Error);

  FieldTower T = parse_tower_spec(R"({"p":2,"n":12})");
  CHECK(T.n == 12);
}

TEST_CASE("DOT emission round trips") {
  FiniteLattice L = parse_lattice_json(kM3);
  std::string dot = to_dot(L);
  auto [labels, covers] = parse_dot_covers(dot);
  FiniteLattice back = FiniteLattice::build_labeled(labels, covers);
  CHECK(back == L);
}

TEST_CASE("cli lattice reports the requested checks") {
  TempFile f(kM3);
  std::string out;
  int code = run_cli({"lattice", "--input", f.path, "--checks", "graded,distributive"},
                     &out);
  CHECK(code == 0);
  CHECK(out.find("\"graded\": true") != std::string::npos);
  CHECK(out.find("\"distributive\": false") != std::string::npos);
  CHECK(out.find("loewy") == std::string::npos);

  // unknown names are rejected before any computation
  CHECK(run_cli({"lattice", "--input", f.path, "--checks", "graded,bogus"}) == 2);
  CHECK(run_cli({"lattice", "--input", "no_such_file.json"}) == 2);
}

TEST_CASE("cli ring reports the classified chain") {
  TempFile f(
      R"({"ring": {"construct":"product","factors":[{"construct":"gf","p":2,"deg":1},{"construct":"gf","p":2,"deg":2}]}, "subring_generators": []})");
  std::string out;
  CHECK(run_cli({"ring", "--input", f.path, "--format", "text"}, &out) == 0);
  CHECK(out.find("decomposed") != std::string::npos);
  CHECK(out.find("inert") != std::string::npos);
  CHECK(out.find("graded: true") != std::string::npos);

  std::string dot;
  CHECK(run_cli({"ring", "--input", f.path, "--format", "dot"}, &dot) == 0);
  auto [labels, covers] = parse_dot_covers(dot);
  CHECK(labels.size() == 3);
  CHECK(covers.size() == 2);

  // byte-identical reports across runs
  std::string again;
  run_cli({"ring", "--input", f.path, "--format", "text"}, &again);
  CHECK(out == again);
}

TEST_CASE("cli group and tower") {
  TempFile g(R"({"points": 4, "generators": [[2,1,3,4],[2,3,4,1]]})");
  std::string out;
  CHECK(run_cli({"group", "--input", g.path}, &out) == 0);
  CHECK(out.find("\"supersolvable_group\": false") != std::string::npos);
  CHECK(out.find("\"lattice_graded\": false") != std::string::npos);

  TempFile t(R"({"p":2,"n":6})");
  CHECK(run_cli({"tower", "--input", t.path}, &out) == 0);
  CHECK(out.find("\"length\": 2") != std::string::npos);
}

TEST_CASE("cli verify exit codes") {
  // a small deterministic sample keeps this test quick
  CHECK(run_cli({"verify", "--sample", "6", "--seed", "3"}) == 0);
  CHECK(run_cli({"verify", "--sample", "6", "--seed", "3", "--inject-fault"}) == 1);
}
