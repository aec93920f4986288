#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cornerkit/fixtures.hpp"
#include "cornerkit/goldens.hpp"
#include "cornerkit/json_io.hpp"
#include "oracles.hpp"

using namespace cornerkit;

namespace {
  std::string slurp(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string golden_path(std::string const& file) {
    return std::string(CORNERKIT_FIXTURE_DIR) + "/" + file;
  }

  json reserialize(json const& j) {
    auto kind = document_kind(j);
    if (kind == "category") {
      return category_to_json(category_from_json(j));
    }
    if (kind == "double") {
      return double_to_json(double_from_json(j));
    }
    if (kind == "codcolax") {
      return codcolax_to_json(codcolax_from_json(j));
    }
    if (kind == "multicat") {
      return multicat_to_json(multicat_from_json(j));
    }
    if (kind == "moncat") {
      auto m = moncat_from_json(j);
      return m.colax ? moncat_to_json(*m.colax) : free_moncat_to_json(*m.multicategory);
    }
    FAIL("unexpected kind " << kind);
    return {};
  }

  // The InputError path raised by parse, or "-" if it parses.
  template <typename F>
  std::string error_path(F parse) {
    try {
      parse();
    } catch (InputError const& e) {
      return e.path();
    }
    return "-";
  }
}  // namespace

TEST_CASE("goldens match their builders") {
  for (auto const& g : golden_fixtures()) {
    CAPTURE(g.file);
    std::string text = dump_json(g.build());
    CHECK(text == slurp(golden_path(g.file)));
    // deterministic across calls
    CHECK(dump_json(g.build()) == text);
  }
}

TEST_CASE("every golden round-trips") {
  for (auto const& g : golden_fixtures()) {
    CAPTURE(g.file);
    json j = read_json_file(golden_path(g.file));
    CHECK(reserialize(j) == j);
    CHECK(dump_json(reserialize(j)) == slurp(golden_path(g.file)));
  }
}

TEST_CASE("builder outputs pass their validators") {
  for (auto const& g : golden_fixtures()) {
    CAPTURE(g.file);
    json j    = g.build();
    auto kind = document_kind(j);
    if (kind == "category") {
      auto C = category_from_json(j);
      CHECK(validate_category(C).ok());
      CHECK(oracle::is_category(C));
    } else if (kind == "double") {
      CHECK(validate_double(double_from_json(j)).ok());
    } else if (kind == "codcolax") {
      for (auto const& v : validate_codomain_colax(codcolax_from_json(j)).verdicts) {
        CHECK_MESSAGE(v.holds, v.name);
      }
    } else if (kind == "moncat") {
      auto m = moncat_from_json(j);
      if (m.colax) {
        for (auto const& v : validate_colax_monoidal(*m.colax, 2).verdicts) {
          CHECK_MESSAGE(v.holds, v.name);
        }
      } else {
        for (auto const& v : validate_multicategory(*m.multicategory, 2).verdicts) {
          CHECK_MESSAGE(v.holds, v.name);
        }
      }
    } else if (kind == "multicat") {
      auto M = multicat_from_json(j);
      for (auto const& v : validate_multicategory(M, 2).verdicts) {
        CHECK_MESSAGE(v.holds, v.name);
      }
    } else {
      FAIL("unexpected kind " << kind);
    }
  }
}

TEST_CASE("parsed goldens equal the builder values") {
  CHECK(category_from_json(read_json_file(golden_path("finset_leq2.json"))) == finset_leq(2));
  CHECK(double_from_json(read_json_file(golden_path("perm_ord2.json"))) == perm_ord(2));
  CHECK(double_from_json(read_json_file(golden_path("sq_triangle.json"))) == sq_of(triangle()));
  auto K = codcolax_from_json(read_json_file(golden_path("comonad_const0.json")));
  auto B = comonad_codcolax(const0_comonad());
  CHECK(K.vertical == B.vertical);
  CHECK(K.squares == B.squares);
  CHECK(K.gamma == B.gamma);
  CHECK(K.iota == B.iota);
  CHECK(K.iota_hat == B.iota_hat);
  CHECK(K.gamma_hat == B.gamma_hat);
}

TEST_CASE("emit by name") {
  CHECK(emit_fixture("perm_ord", {2}) == double_to_json(perm_ord(2)));
  CHECK_THROWS_AS(emit_fixture("perm_ord", {}), InputError);
  CHECK_THROWS_AS(emit_fixture("no_such_fixture", {}), InputError);
  CHECK_THROWS_AS(emit_fixture("perm_ord", {5}), GuardError);
  CHECK_THROWS_AS(emit_fixture("finset_leq", {4}), InputError);
  // every golden is reachable by its emit name
  auto names = fixture_names();
  for (auto const& g : golden_fixtures()) {
    bool found = false;
    for (auto const& [n, k] : names) {
      found = found || (n == g.name && k == static_cast<int>(g.params.size()));
    }
    CHECK_MESSAGE(found, g.file);
  }
}

TEST_CASE("schema violations carry JSON pointers") {
  json C = category_to_json(triangle());

  SUBCASE("extra field at the top") {
    json bad     = C;
    bad["extra"] = 1;
    CHECK(error_path([&] { category_from_json(bad); }) == "/extra");
  }
  SUBCASE("extra field in a morphism") {
    json bad = C;
    bad["morphisms"][2]["colour"] = "red";
    CHECK(error_path([&] { category_from_json(bad); }) == "/morphisms/2/colour");
  }
  SUBCASE("dangling morphism id in a composition") {
    json bad = C;
    bad["composition"][0][1] = "nope";
    CHECK(error_path([&] { category_from_json(bad); }) == "/composition/0/1");
  }
  SUBCASE("dangling object id") {
    json bad = C;
    bad["morphisms"][0]["tgt"] = "w";
    CHECK(error_path([&] { category_from_json(bad); }) == "/morphisms/0/tgt");
  }
  SUBCASE("missing field") {
    json bad = C;
    bad.erase("identities");
    CHECK(error_path([&] { category_from_json(bad); }) == "/identities");
  }
  SUBCASE("non-composable entry") {
    json bad = C;
    bad["composition"][0] = {"g", "f", "h"};
    CHECK(error_path([&] { category_from_json(bad); }) == "/composition/0");
  }
  SUBCASE("duplicate ids") {
    json bad = C;
    bad["objects"].push_back("x");
    CHECK(error_path([&] { category_from_json(bad); }) == "/objects/3");
  }
  SUBCASE("wrong type") {
    json bad       = C;
    bad["objects"] = "x";
    CHECK(error_path([&] { category_from_json(bad); }) == "/objects");
  }

  json D = double_to_json(sq_of(walking_arrow()));
  SUBCASE("nested category inside a double") {
    json bad = D;
    bad["squares"]["morphisms"][0]["src"] = "ghost";
    CHECK(error_path([&] { double_from_json(bad); }) == "/squares/morphisms/0/src");
  }
  SUBCASE("functor misses an object") {
    json bad = D;
    bad["d1"]["objects"].erase(bad["d1"]["objects"].begin().key());
    CHECK(error_path([&] { double_from_json(bad); }) == "/d1/objects");
  }
  SUBCASE("functor with a dangling value") {
    json bad = D;
    auto key = bad["s"]["morphisms"].begin().key();
    bad["s"]["morphisms"][key] = "missing";
    CHECK(error_path([&] { double_from_json(bad); }) == "/s/morphisms/" + pointer_escape(key));
  }
  SUBCASE("codomain-colax needs iota") {
    json bad = codcolax_to_json(comonad_codcolax(const0_comonad()));
    bad.erase("iota");
    CHECK(error_path([&] { codcolax_from_json(bad); }) == "/iota");
  }
}

TEST_CASE("pointer escaping") {
  CHECK(pointer_escape("a/b~c") == "a~1b~0c");
  FinCategory C;
  C.add_object("x/y");
  C.set_identity(0, C.add_morphism("1", 0, 0));
  json j = category_to_json(C);
  j["identities"]["x/y"] = "2";
  CHECK(error_path([&] { category_from_json(j); }) == "/identities/x~1y");
}

TEST_CASE("unit composites may be omitted") {
  auto T = triangle();
  json j = category_to_json(T);
  // only g∘f = h survives serialization
  CHECK(j["composition"] == json::array({json::array({"f", "g", "h"})}));
  CHECK(category_from_json(j) == T);
  // an explicit unit entry is accepted, a wrong one rejected
  j["composition"].push_back({"1_x", "f", "f"});
  CHECK(category_from_json(j) == T);
  j["composition"].push_back({"1_x", "f", "h"});
  CHECK_THROWS_AS(category_from_json(j), InputError);
}

TEST_CASE("explicit multicategory tables") {
  auto M    = terminal_multicategory(3);
  M.fixture = "";
  json j    = multicat_to_json(M);
  REQUIRE(j.contains("composition"));
  auto N = multicat_from_json(j);
  CHECK(multicat_to_json(N) == j);
  REQUIRE(N.morphisms.size() == M.morphisms.size());
  // composition agrees on every instance of total arity <= 3
  int n = static_cast<int>(M.morphisms.size());
  for (int g = 0; g < n; ++g) {
    int k = static_cast<int>(M.morphisms[g].src.size());
    std::vector<int> fs(k, 0);
    while (true) {
      int total = 0;
      for (int f : fs) {
        total += static_cast<int>(M.morphisms[f].src.size());
      }
      if (total <= 3) {
        CHECK(M.compose(g, fs) == N.compose(g, fs));
      }
      int i = k - 1;
      while (i >= 0 && fs[i] == n - 1) {
        fs[i--] = 0;
      }
      if (i < 0) {
        break;
      }
      ++fs[i];
    }
  }
  for (auto const& v : validate_multicategory(N, 3).verdicts) {
    CHECK_MESSAGE(v.holds, v.name);
  }

  json bad = j;
  bad["composition"][0][1].push_back("t1");
  CHECK(error_path([&] { multicat_from_json(bad); }) == "/composition/0/1");
  bad = j;
  bad["morphisms"][0]["src"] = json::array({"*", "*", "*", "*"});
  CHECK(error_path([&] { multicat_from_json(bad); }) == "/morphisms/0/src");
  CHECK(error_path([] { multicat_from_json(json{{"fixture", "klein"}, {"arity_bound", 2}}); })
        == "/fixture");
  CHECK_THROWS_AS(multicat_from_json(json{{"fixture", "endo2"}, {"arity_bound", 4}}),
                  GuardError);
}

TEST_CASE("monoidal files") {
  json j = moncat_to_json(min_poset());
  CHECK(j["tensor"] == "meet-poset");
  auto m = moncat_from_json(j);
  REQUIRE(m.colax);
  CHECK(m.colax->base() == two_chain());

  json bad     = j;
  bad["gamma"] = "identity";
  CHECK(error_path([&] { moncat_from_json(bad); }) == "/gamma");
  bad           = j;
  bad["tensor"] = "table:gamma.csv";
  CHECK(error_path([&] { moncat_from_json(bad); }) == "/tensor");
  bad           = j;
  bad["tensor"] = "cartesian";
  CHECK(error_path([&] { moncat_from_json(bad); }) == "/tensor");
  bad           = j;
  bad["tensor"] = "commutative-monoid";
  bad.erase("gamma");
  bad.erase("iota");
  CHECK(error_path([&] { moncat_from_json(bad); }) == "/base");
  bad         = j;
  bad["unit"] = "1";
  CHECK(error_path([&] { moncat_from_json(bad); }) == "/unit");

  json f = free_moncat_to_json(endo2_multicategory(2));
  auto g = moncat_from_json(f);
  REQUIRE(g.multicategory);
  CHECK(g.multicategory->morphisms.size() == endo2_multicategory(2).morphisms.size());
}

TEST_CASE("classes and presented categories") {
  auto C = finset_leq(2);
  MorphismClassPair P{C, surjections(C), injections(C)};
  json j = classes_to_json(P);
  auto Q = classes_from_json(j);
  CHECK(Q.base == C);
  CHECK(Q.E == P.E);
  CHECK(Q.M == P.M);
  CHECK(class_from_spec(C, "surj") == P.E);
  CHECK(class_from_spec(C, "0->0:,1->1:0,2->2:01") == identities_only(C));
  CHECK_THROWS_AS(class_from_spec(C, "0->0:,bogus"), InputError);
  CHECK_THROWS_AS(class_from_spec(walking_arrow(), "surj"), InputError);

  PresentedCategory R;
  int x = R.add_vertex("x"), y = R.add_vertex("y");
  int f = R.add_edge("f", x, y), g = R.add_edge("g", y, x);
  R.add_relation({x, {f, g}}, {x, {}});
  json p = presented_to_json(R);
  auto S = presented_from_json(p);
  CHECK(presented_to_json(S) == p);
  json bad = p;
  bad["relations"][0][0]["edges"] = {"g"};
  CHECK(error_path([&] { presented_from_json(bad); }) == "/relations/0/0/edges/0");
}

TEST_CASE("document kinds") {
  CHECK(document_kind(category_to_json(walking_arrow())) == "category");
  CHECK(document_kind(double_to_json(perm_ord(1))) == "double");
  CHECK(document_kind(codcolax_to_json(comonad_codcolax(const0_comonad()))) == "codcolax");
  CHECK(document_kind(moncat_to_json(min_poset())) == "moncat");
  CHECK(document_kind(multicat_to_json(terminal_multicategory(2))) == "multicat");
  CHECK(document_kind(json::array()) == "unknown");
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}
