#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bookbind/io.hpp"
#include "cli_runner.hpp"

using namespace bookbind;

namespace {

const auto dir = cli::scratch_dir("bookbind_cli_test");

std::string at(const char* name) { return "\"" + (dir / name).string() + "\""; }

// Puts two edges that meet at a vertex on the same page.
bool collide(Json& emb) {
  auto& pages = emb["pages"];
  for (std::size_t i = 0; i < pages.size(); ++i)
    for (std::size_t j = 0; j < pages.size(); ++j) {
      if (i == j || pages[i][2] == pages[j][2]) continue;
      if (pages[i][0] == pages[j][0] || pages[i][0] == pages[j][1] || pages[i][1] == pages[j][0] ||
          pages[i][1] == pages[j][1]) {
        pages[j][2] = pages[i][2];
        return true;
      }
    }
  return false;
}

}  // namespace

TEST_CASE("build") {
  CHECK(cli::run("build s=5,t=7,phi=shift:3", dir / "b.json") == 0);
  const auto g = graph_from_json(read_json_file(dir / "b.json"));
  CHECK(g == bundle({5, 7, Shift{3}}));
  CHECK(cli::run("build circulant:n=35,S=1,10", dir / "c.json") == 0);
  CHECK(graph_from_json(read_json_file(dir / "c.json")).size() == 70);
  CHECK(cli::run("build s=2,t=7,phi=shift:3") == 65);
  CHECK(cli::run("build s=5,t=7,phi=shift:3,phi=refl:one") == 64);
  CHECK(cli::run("build nonsense") == 64);
  CHECK(cli::run("build s=5,t=7,phi=shift:3 --format dot", dir / "b.dot") == 0);
  CHECK(cli::slurp(dir / "b.dot").rfind("graph G {", 0) == 0);
  CHECK(cli::run("build s=5,t=7,phi=shift:3 --out " + at("out.json")) == 0);
  CHECK(cli::slurp(dir / "out.json") == cli::slurp(dir / "b.json"));
}

TEST_CASE("embed and verify") {
  CHECK(cli::run("embed s=6,t=10,phi=shift:4", dir / "e.json") == 0);
  const auto doc = read_json_file(dir / "e.json");
  CHECK(doc["m"] == 4);
  CHECK(doc["lemma"] == "shift-even-gcd");
  CHECK(cli::run("embed s=8,t=10,phi=refl:none", dir / "e2.json") == 0);
  CHECK(read_json_file(dir / "e2.json")["m"] == 5);

  CHECK(cli::run("embed s=5,t=7,phi=shift:3", dir / "u.json") == 3);
  const auto u = read_json_file(dir / "u.json");
  CHECK(u["reduction"]["n"] == 35);
  CHECK(u["reduction"]["jump"] == 10);
  CHECK(cli::run("embed s=6,t=6,phi=shift:0", dir / "u0.json") == 3);

  CHECK(cli::run("build s=6,t=8,phi=refl:two", dir / "g.json") == 0);
  CHECK(cli::run("embed s=6,t=8,phi=refl:two", dir / "good.json") == 0);
  CHECK(cli::run("verify " + at("g.json") + " " + at("good.json"), dir / "report.json") == 0);
  CHECK(read_json_file(dir / "report.json")["valid"] == true);

  auto bad = read_json_file(dir / "good.json");
  REQUIRE(collide(bad));
  write_text_file(dir / "bad.json", bad.dump());
  CHECK(cli::run("verify " + at("g.json") + " " + at("bad.json"), dir / "bad_report.json") == 2);
  const auto report = read_json_file(dir / "bad_report.json");
  CHECK(report["valid"] == false);
  CHECK(report["violations"].size() >= 1);
  CHECK(report["violations"][0]["reason"] == "shared-endpoint");

  const auto text = cli::slurp(dir / "good.json");
  write_text_file(dir / "trunc.json", text.substr(0, text.size() / 2));
  CHECK(cli::run("verify " + at("g.json") + " " + at("trunc.json")) == 66);
  CHECK(cli::run("verify " + at("g.json") + " " + at("missing.json")) == 66);
}

TEST_CASE("decompose and reduce") {
  CHECK(cli::run("decompose s=5,t=8,phi=shift:4", dir / "d.json") == 0);
  CHECK(read_json_file(dir / "d.json")["cycles"].size() == 4);
  CHECK(cli::run("decompose s=5,t=8,phi=shift:4 --fibers", dir / "f.json") == 0);
  CHECK(read_json_file(dir / "f.json")["cycles"].size() == 5);
  CHECK(cli::run("reduce s=5,t=7,phi=shift:4", dir / "r.json") == 0);
  const auto r = read_json_file(dir / "r.json");
  std::vector<Vertex> relabel(35);
  for (const auto& row : r["relabel"]) relabel[row[0].get<int>() * 7 + row[1].get<int>()] = row[2].get<int>();
  CHECK(check_isomorphism(bundle({5, 7, Shift{4}}), circulant(35, {1, r["jump"].get<int>()}), relabel));
  CHECK(cli::run("reduce s=4,t=8,phi=shift:2") == 65);
}

TEST_CASE("mbt") {
  CHECK(cli::run("build circulant:n=9,S=1,3", dir / "c9.json") == 0);
  CHECK(cli::run("mbt " + at("c9.json"), dir / "m.json") == 0);
  const auto m = read_json_file(dir / "m.json");
  CHECK(m["value"]["kind"] == "exact");
  CHECK(m["value"]["m"] == 5);
  CHECK(m["witness"]["m"] == 5);

  CHECK(cli::run("build circulant:n=6,S=1", dir / "c6.json") == 0);
  CHECK(cli::run("mbt " + at("c6.json"), dir / "m6.json") == 0);
  CHECK(read_json_file(dir / "m6.json")["value"]["m"] == 2);

  CHECK(cli::run("build s=5,t=12,phi=shift:4", dir / "big.json") == 0);
  CHECK(cli::run("mbt " + at("big.json") + " --max-orders 5", dir / "mb.json") == 4);
  CHECK(read_json_file(dir / "mb.json")["value"]["kind"] == "inconclusive");
  CHECK(read_json_file(dir / "mb.json")["witness"].is_null());
  CHECK(cli::run("mbt " + at("c9.json") + " --pages 4") == 4);
  CHECK(cli::run("mbt " + at("c9.json") + " --max-orders 0") == 65);
  CHECK(cli::run("mbt " + at("nope.json")) == 66);
}

TEST_CASE("render") {
  CHECK(cli::run("build s=5,t=13,phi=refl:one", dir / "rg.json") == 0);
  CHECK(cli::run("embed s=5,t=13,phi=refl:one", dir / "re.json") == 0);
  CHECK(cli::run("render " + at("rg.json") + " " + at("re.json"), dir / "a.svg") == 0);
  CHECK(cli::run("render " + at("rg.json") + " " + at("re.json"), dir / "b.svg") == 0);
  const auto svg = cli::slurp(dir / "a.svg");
  CHECK(svg == cli::slurp(dir / "b.svg"));
  CHECK(svg.find(">(5,13)</text>") != std::string::npos);
  CHECK(cli::run("render " + at("rg.json") + " " + at("re.json") + " --labels flat --palette a,b,c,d,e", dir / "c.svg") == 0);
  CHECK(cli::slurp(dir / "c.svg").find("stroke=\"e\"") != std::string::npos);
  CHECK(cli::run("render " + at("rg.json") + " " + at("re.json") + " --palette a,b") == 65);

  write_text_file(dir / "empty.json", R"({"n":0,"edges":[]})");
  write_text_file(dir / "empty_e.json", R"({"order":[],"pages":[],"m":1})");
  CHECK(cli::run("render " + at("empty.json") + " " + at("empty_e.json")) == 65);

  auto bad = read_json_file(dir / "re.json");
  REQUIRE(collide(bad));
  write_text_file(dir / "re_bad.json", bad.dump());
  CHECK(cli::run("render " + at("rg.json") + " " + at("re_bad.json")) == 2);
}

TEST_CASE("sweep") {
  CHECK(cli::run("sweep --s 3:5 --t 4:8 --family shift-even-gcd", dir / "sw.txt") == 0);
  CHECK(cli::slurp(dir / "sw.txt").find("FAIL") == std::string::npos);
  CHECK(cli::run("sweep --s 3:4 --t 3:6 --family reflection --format json", dir / "sw.json") == 0);
  const auto rows = read_json_file(dir / "sw.json");
  CHECK(rows.size() == 2 * (1 + 2 + 1 + 2));
  for (const auto& row : rows) CHECK(row["ok"] == true);
  CHECK(cli::run("sweep --s 8:3") == 65);
  CHECK(cli::run("sweep --family twist") == 64);
}
