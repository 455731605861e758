#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "modloc/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "--deterministic");
  const int code = modloc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("modloc_unit_" + std::to_string(std::rand()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = (path_ / name).string();
    std::ofstream(p) << content;
    return p;
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("header carries the seed") {
  const auto r = run({"--seed", "5", "gen", "cycles", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# modloc gen seed=5\n", 0) == 0);
  CHECK(contains(r.out, "E: (0,1) (1,2) (2,0)"));
  CHECK(r.err.empty());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gen", "torus", "--height", "3"}).code == 2);
  CHECK(run({"eval", "/nonexistent/file"}).code == 2);
  CHECK(run({"gen", "formula", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("eval") {
  TempDir dir;
  const auto cyc = dir.file("c.txt", run({"gen", "cycles", "2", "2"}).out);
  const auto phi = dir.file("f.txt", run({"gen", "formula", "even_cycles"}).out);
  auto r = run({"eval", cyc, phi});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "embedding: identity\ntrue\n"));
  r = run({"eval", cyc, "--named", "even_cycles", "--embedding", "3,2,1,0"});
  CHECK(contains(r.out, "true\n"));
  CHECK(run({"eval", cyc, phi, "--embedding", "0,0,1,2"}).code == 2);
  CHECK(run({"eval", cyc}).code == 2);

  const auto partial = dir.file("p.txt", "signature: E/2 P/1\nuniverse: 2\nE: (0,1)\n");
  const auto q = dir.file("q.txt", "(exists x (P x))\n");
  r = run({"eval", partial, q});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "false\n"));
  const auto free = dir.file("fr.txt", "(E x y)\n");
  CHECK(contains(run({"eval", partial, free, "--assign", "x=0", "--assign", "y=1"}).out, "true\n"));
}

TEST_CASE("invariance") {
  TempDir dir;
  const auto cyc = dir.file("c.txt", run({"gen", "cycles", "2", "3"}).out);
  auto r = run({"invariance", cyc, "--named", "even_cycles"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "invariant (120 embeddings)"));
  const auto big = dir.file("b.txt", run({"gen", "cycles", "9"}).out);
  r = run({"invariance", big, "--named", "even_cycles"});
  CHECK(r.code == 2);
  const auto least = dir.file("l.txt", "(exists x (and (P x) (forall y (or (= x y) (num< x y)))))\n");
  const auto s = dir.file("s.txt", "signature: E/2 P/1\nuniverse: 3\nP: (0)\n");
  r = run({"invariance", s, least});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "not invariant"));
  const auto a = run({"--seed", "3", "invariance", s, least, "--mode", "sampled", "--samples", "20"});
  const auto b = run({"--seed", "3", "invariance", s, least, "--mode", "sampled", "--samples", "20"});
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "mode: sampled 20 seed=3"));
}

TEST_CASE("locality") {
  TempDir dir;
  const auto hose = dir.file("h.txt", run({"gen", "hose", "--height", "3", "--width", "4"}).out);
  auto r = run({"locality", "gaifman", hose, "--named", "hose_query", "--param", "3", "--radius", "2"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "(0)/(4) in=(0) out=(4)"));
  r = run({"locality", "weak-gaifman", hose, "--named", "hose_query", "--param", "3", "--radius", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: no-violation"));

  const auto pair = dir.file("w.txt", run({"gen", "hanf-witness", "--ell", "2"}).out);
  r = run({"locality", "hanf", pair, "--named", "language_L", "--radius", "2"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "in=#1() out=#0()"));

  const auto reach = dir.file("r.txt", run({"gen", "family", "reach", "--t", "3", "--ell", "2"}).out);
  r = run({"locality", "shift", reach, "--graph-query", "reach", "--t", "3", "--radius", "2"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "(2)(7)(12) in, rotation out"));
  const auto rot = dir.file("rot.txt", "(and (= x0 x0) (= x1 x1) (= x2 x2))\n");
  r = run({"locality", "shift", reach, rot, "--t", "3", "--radius", "1"});
  CHECK(r.code == 2);  // formula given positionally is not accepted
  r = run({"locality", "shift", reach, "--formula", rot, "--t", "3", "--radius", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: no-violation"));
}

TEST_CASE("compile and transform") {
  TempDir dir;
  const auto f = dir.file("f.txt", "(exists x (E x x))\n");
  auto r = run({"compile", f, "--n", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "# depth=1, size=1"));
  r = run({"compile", f, "--n", "2", "--emit", dir.path("c.circ")});
  CHECK(fs::exists(dir.path("c.circ")));

  r = run({"transform", "lemma2", "--counter-m", "10", "--t", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "r=3\n"));
  CHECK(contains(r.out, " ok\n"));
  r = run({"transform", "lemma2", "--counter-m", "9", "--t", "3"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "m > 9"));

  const auto fam = dir.file("p.txt", run({"gen", "family", "reach", "--t", "2", "--ell", "1"}).out);
  run({"compile", "--named", "reach_shift", "--param", "2", "--param", "5", "--n", "6", "--free", "x0,x1", "--emit",
       dir.path("r.circ")});
  r = run({"transform", "lemma1", dir.path("r.circ"), fam, "--anchor", "1", "--anchor", "4", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "# pi="));
  r = run({"transform", "lemma1", dir.path("r.circ"), fam, "--anchor", "4", "--anchor", "1", "--m", "1"});
  CHECK(r.code == 2);  // rotated tuple is accepted, so hypothesis (2) fails
}

TEST_CASE("swap-check") {
  auto r = run({"swap-check", "00111100001111000", "--cuts", "2,6,10,14", "--radius", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "swap: 00111100001111000"));
  r = run({"swap-check", "--closure", "--alphabet", "012", "--n", "13", "--radius", "1", "--language", "L"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "1110001112000"));
  r = run({"swap-check", "--closure", "--alphabet", "01", "--n", "6", "--radius", "0", "--language", "M"});
  CHECK(r.code == 0);
  CHECK(run({"swap-check", "0101", "--cuts", "0,1,2,3"}).code == 2);
}

TEST_CASE("repeated runs are identical") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gen", "torus", "--height", "3", "--width", "4", "--twist", "2"},
           {"gen", "family", "cycle", "--t", "3", "--ell", "2"},
           {"gen", "counter", "--m", "10", "--t", "3"},
           {"transform", "lemma2", "--counter-m", "11", "--t", "2"}}) {
    const auto a = run(args), b = run(args), c = run(args);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
  }
}

}  // TEST_SUITE
