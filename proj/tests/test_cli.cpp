#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cornerkit/cli.hpp"
#include "cornerkit/fixtures.hpp"
#include "cornerkit/json_io.hpp"
#include "cornerkit/suite.hpp"

using namespace cornerkit;
namespace fs = std::filesystem;

namespace {
  struct Run {
    int         code;
    std::string text;
    json        report;
  };

  Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int  code = run(args, out, err);
    Run  r{code, out.str(), json()};
    try {
      r.report = json::parse(r.text);
    } catch (json::parse_error const&) {
    }
    return r;
  }

  std::string fixture(std::string const& file) {
    return std::string(CORNERKIT_FIXTURE_DIR) + "/" + file;
  }

  json const* verdict(json const& report, std::string const& name) {
    for (auto const& v : report["verdicts"]) {
      if (v["name"] == name) {
        return &v;
      }
    }
    return nullptr;
  }

  fs::path scratch(std::string const& name) {
    auto p = fs::temp_directory_path() / ("cornerkit_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }

  void write(fs::path const& p, std::string const& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
  }

  long binomial(int n, int k) {
    long out = 1;
    for (int i = 1; i <= k; ++i) {
      out = out * (n - k + i) / i;
    }
    return out;
  }
}  // namespace

TEST_CASE("analyze") {
  auto r = cli({"analyze", fixture("sq_walking_arrow.json")});
  CHECK(r.code == 0);
  CHECK(r.report["result"]["properties"]["catead"] == true);
  CHECK(r.report["result"]["properties"]["crossed"] == false);
  CHECK(r.report["status"] == "pass");

  auto e = cli({"analyze", fixture("sq_walking_arrow.json"), "--expect", "catead,crossed"});
  CHECK(e.code == 1);
  REQUIRE(verdict(e.report, "expect:crossed"));
  CHECK((*verdict(e.report, "expect:crossed"))["witness"]["clause"].is_string());
  CHECK(cli({"analyze", fixture("sq_walking_arrow.json"), "--expect", "shiny"}).code == 2);
  // not a double category
  CHECK(cli({"analyze", fixture("walking_arrow.json")}).code == 2);
}

TEST_CASE("report layout") {
  auto r = cli({"analyze", fixture("perm_ord2.json"), "--no-timing"});
  std::vector<std::string> keys;
  for (auto const& [k, v] : r.report.items()) {
    keys.push_back(k);
  }
  CHECK(keys == std::vector<std::string>{"tool", "version", "command", "status", "exit_code",
                                         "verdicts", "result", "error", "seedless"});
  CHECK(r.report["version"] == tool_version);
  CHECK(r.report["command"][0] == "analyze");
  // deterministic apart from timing
  CHECK(cli({"analyze", fixture("perm_ord2.json"), "--no-timing"}).text == r.text);
  auto t = cli({"--seedless", "analyze", fixture("perm_ord2.json")});
  CHECK(t.code == 0);
  CHECK(t.report["timing"]["seconds"].is_number());
}

TEST_CASE("factsys") {
  auto ofs = cli({"factsys", "check", fixture("finset_leq2.json"), "--kind", "ofs", "--E",
                  "surj", "--M", "inj"});
  CHECK(ofs.code == 0);
  CHECK(ofs.report["result"]["holds"] == true);

  // (surj, inj) is not strict: factorizations are unique only up to iso
  auto sfs = cli({"factsys", "check", fixture("finset_leq2.json"), "--kind", "sfs", "--E",
                  "surj", "--M", "inj"});
  CHECK(sfs.code == 1);
  // the witness names morphisms of the input
  auto C = category_from_json(read_json_file(fixture("finset_leq2.json")));
  bool named = false;
  for (auto const& v : sfs.report["verdicts"]) {
    if (!v["holds"].get<bool>() && v["witness"].contains("morphism")) {
      named = C.find_morphism(v["witness"]["morphism"].get<std::string>()).has_value();
    }
  }
  CHECK(named);

  CHECK(cli({"factsys", "check", fixture("finset_leq2.json"), "--kind", "ofs"}).code == 2);
  CHECK(cli({"factsys", "check", fixture("finset_leq2.json"), "--kind", "xfs", "--E", "surj",
             "--M", "inj"}).code == 2);
  CHECK(cli({"factsys", "check", fixture("finset_leq2.json"), "--E", "nope", "--M", "inj"}).code
        == 2);

  auto dir = scratch("factsys");
  auto out = (dir / "d.json").string();
  auto b   = cli({"factsys", "build-double", fixture("finset_leq2.json"), "--E", "surj", "--M",
                  "inj", "--out", out});
  CHECK(b.code == 0);
  auto D = double_from_json(read_json_file(out));
  CHECK(D == commutative_squares(C, surjections(C), injections(C)));
  CHECK(b.report["result"]["counts"]["squares"] == D.square_count());

  auto rt = cli({"factsys", "roundtrip", "ofs", fixture("finset_leq2.json"), "--E", "surj",
                 "--M", "inj"});
  CHECK(rt.code == 0);
  CHECK(cli({"factsys", "roundtrip", "ofs", out}).code == 0);
  CHECK(cli({"factsys", "roundtrip", "sfs", fixture("x_prod_z2_walking_arrow.json")}).code == 0);
  fs::remove_all(dir);
}

TEST_CASE("codescent") {
  auto r = cli({"codescent", fixture("comonad_const0.json"), "--route", "corners", "--probe", "4"});
  CHECK(r.code == 0);
  REQUIRE(verdict(r.report, "iso_to_oracle"));
  CHECK((*verdict(r.report, "iso_to_oracle"))["holds"] == true);
  CHECK((*verdict(r.report, "universal_property"))["holds"] == true);
  CHECK(r.report["result"]["route"] == "corners");
  // the result is the coKleisli category
  auto got = category_from_json(r.report["result"]["category"]);
  CHECK(find_isomorphism(got, cokleisli(const0_comonad())).has_value());

  auto a = cli({"codescent", fixture("sq_triangle.json")});
  CHECK(a.code == 0);
  CHECK(a.report["result"]["route"] == "catead");

  auto g = cli({"codescent", fixture("perm_ord2.json"), "--route", "genrel"});
  CHECK(g.code == 0);
  CHECK(g.report["result"]["oracle_route"] == "corners");

  // bound exceeded
  auto b = cli({"codescent", fixture("perm_ord2.json"), "--route", "genrel", "--cap", "1"});
  CHECK(b.code == 3);
  CHECK(b.report["error"]["type"] == "bound");
  // the catead route needs a catead
  CHECK(cli({"codescent", fixture("comonad_const0.json"), "--route", "catead"}).code == 2);
  CHECK(cli({"codescent", fixture("perm_ord2.json"), "--route", "fastest"}).code == 2);
  // probes above the guard
  CHECK(cli({"codescent", fixture("sq_walking_arrow.json"), "--probe", "5"}).code == 2);
}

TEST_CASE("malformed input") {
  auto dir = scratch("malformed");
  json j   = read_json_file(fixture("sq_walking_arrow.json"));
  j["vertical"]["morphisms"][2]["weight"] = 3;
  write(dir / "extra.json", j.dump());
  auto r = cli({"analyze", (dir / "extra.json").string()});
  CHECK(r.code == 2);
  CHECK(r.report["error"]["path"] == "/vertical/morphisms/2/weight");

  json k = read_json_file(fixture("finset_leq2.json"));
  k["composition"][0][2] = "2->2:22";
  write(dir / "dangling.json", k.dump());
  auto d = cli({"factsys", "check", (dir / "dangling.json").string(), "--E", "surj", "--M", "inj"});
  CHECK(d.code == 2);
  CHECK(d.report["error"]["path"] == "/composition/0/2");

  write(dir / "broken.json", "{\"objects\": [");
  CHECK(cli({"analyze", (dir / "broken.json").string()}).code == 2);
  CHECK(cli({"analyze", (dir / "missing.json").string()}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("monoidal commands") {
  auto s = cli({"moncat", "strictify", fixture("min_poset.json"), "--depth", "3"});
  CHECK(s.code == 0);
  CHECK(verdict(s.report, "colax:coassociativity"));
  CHECK(verdict(s.report, "strict:associativity"));
  CHECK(verdict(s.report, "unit:lax_associativity"));

  auto a = cli({"moncat", "adjunction", fixture("min_poset.json"), "--depth", "3"});
  CHECK(a.code == 0);
  CHECK((*verdict(a.report, "triangle_P"))["holds"] == true);
  CHECK((*verdict(a.report, "triangle_Q"))["holds"] == true);
  CHECK(cli({"moncat", "adjunction", fixture("free_terminal3.json")}).code == 2);

  auto p = cli({"moncat", "primes", fixture("free_terminal3.json"), "--bound", "3"});
  CHECK(p.code == 0);
  CHECK(p.report["result"]["primes"].size() == 1);
  CHECK((*verdict(p.report, "roundtrip"))["holds"] == true);
  CHECK(cli({"moncat", "primes", fixture("min_poset.json"), "--bound", "2"}).code == 0);
  CHECK(cli({"moncat", "strictify", fixture("free_terminal3.json"), "--depth", "2"}).code == 0);
  // length bound above the arity bound
  CHECK(cli({"moncat", "primes", fixture("free_terminal3.json"), "--bound", "4"}).code == 2);

  auto f = cli({"multicat", "free", fixture("multicat_terminal3.json"), "--bound", "3"});
  CHECK(f.code == 0);
  // one object: hom(n, k) counts the ways to cut n letters into k blocks
  for (auto const& row : f.report["result"]["hom_counts"]) {
    auto letters = [](json const& w) {
      auto s = w.get<std::string>();
      return static_cast<int>(std::count(s.begin(), s.end(), '*'));
    };
    int n = letters(row[0]);
    int k = letters(row[1]);
    long want = k == 0 ? (n == 0 ? 1 : 0) : binomial(n + k - 1, k - 1);
    CHECK_MESSAGE(row[2] == want, row.dump());
  }
  auto v = cli({"multicat", "free", fixture("multicat_endo2_3.json"), "--bound", "2",
                "--validate"});
  CHECK(v.code == 0);
  CHECK(verdict(v.report, "multicategory:associativity"));
}

TEST_CASE("fixtures emit") {
  auto e = cli({"fixtures", "emit", "walking_arrow"});
  CHECK(e.code == 0);
  std::ifstream in(fixture("walking_arrow.json"));
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(e.text == ss.str());
  CHECK(cli({"fixtures", "emit", "perm_ord", "9"}).code == 2);
  CHECK(cli({"fixtures", "emit", "unheard_of"}).code == 2);
  auto l = cli({"fixtures", "list"});
  CHECK(l.code == 0);
  CHECK(l.report["result"]["goldens"].size() >= suite_fixture_files().size());
}

TEST_CASE("suite") {
  auto clean = cli({"suite", "--no-timing"});
  CHECK(clean.code == 0);
  CHECK(clean.report["verdicts"].size() == 12);

  // copy the goldens, then break one composite of finset_leq2
  auto dir = scratch("suite");
  for (auto const& f : suite_fixture_files()) {
    fs::copy_file(fixture(f), dir / f);
  }
  json k = read_json_file(fixture("finset_leq2.json"));
  auto C = category_from_json(k);
  bool mutated = false;
  for (auto& e : k["composition"]) {
    int  gf  = C.morphism_index(e[2].get<std::string>());
    auto hom = C.hom(C.src(gf), C.tgt(gf));
    if (hom.size() > 1) {
      e[2]    = C.morphism(hom[0] == gf ? hom[1] : hom[0]).id;
      mutated = true;
      break;
    }
  }
  REQUIRE(mutated);
  write(dir / "finset_leq2.json", k.dump());
  auto bad = cli({"suite", "--fixtures", dir.string()});
  CHECK(bad.code == 1);
  REQUIRE(verdict(bad.report, "3:ofs_round_trip"));
  CHECK((*verdict(bad.report, "3:ofs_round_trip"))["holds"] == false);
  CHECK((*verdict(bad.report, "1:finset_coincidence"))["holds"] == true);

  fs::remove(dir / "min_poset.json");
  auto missing = cli({"suite", "--fixtures", dir.string()});
  CHECK(missing.code == 2);
  CHECK(missing.report["error"]["message"].get<std::string>().find("min_poset.json")
        != std::string::npos);
  fs::remove_all(dir);
}
