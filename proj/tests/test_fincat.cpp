#include <map>
#include <set>

#include "doctest.h"

#include "cornerkit/fincat.hpp"
#include "cornerkit/fixtures.hpp"
#include "oracles.hpp"

using namespace cornerkit;

TEST_CASE("walking arrow is a category") {
  auto C = walking_arrow();
  CHECK(validate_category(C).ok());
  CHECK(C.morphism_count() == 3);
  CHECK(hom_set(C, "a", "b") == std::vector<int>{C.morphism_index("f")});
  CHECK(hom_set(C, "b", "a").empty());
  CHECK_THROWS_AS(hom_set(C, "a", "z"), InputError);
}

TEST_CASE("composition entry on a non-composable pair is an input error") {
  auto C = walking_arrow();
  int  f = C.morphism_index("f");
  CHECK_THROWS_AS(C.set_composite(f, f, f), InputError);
}

TEST_CASE("validation names the failing axiom") {
  auto C = walking_arrow();
  int  f = C.morphism_index("f");
  C.set_composite(C.identity(0), f, C.identity(0));
  auto r = validate_category(C);
  REQUIRE_FALSE(r.ok());
  CHECK(r.failures[0].find("wrong endpoints") != std::string::npos);
}

TEST_CASE("validation agrees with a brute force axiom check") {
  // every category with at most four morphisms, plus one broken table each
  for (auto const& C : oracle::small_categories(4)) {
    CHECK(validate_category(C).ok());
    CHECK(oracle::is_category(C));
  }
  auto C  = finset_leq(2);
  auto ok = validate_category(C).ok();
  CHECK(ok);
  // redirect one composite within its hom-set
  for (auto const& [f, g, gf] : C.composition_entries()) {
    auto const& h = C.hom(C.src(gf), C.tgt(gf));
    if (h.size() > 1 && !C.is_identity(f) && !C.is_identity(g)) {
      auto D = C;
      D.set_composite(f, g, h[0] == gf ? h[1] : h[0]);
      CHECK_FALSE(validate_category(D).ok());
      CHECK_FALSE(oracle::is_category(D));
      break;
    }
  }
}

TEST_CASE("finite sets of size at most n") {
  auto C1 = finset_leq(1);
  CHECK(validate_category(C1).ok());
  CHECK(C1.morphism_count() == 3);
  auto C2 = finset_leq(2);
  CHECK(C2.morphism_count() == 11);
  CHECK(hom_set(C2, "2", "2").size() == 4);
  CHECK_THROWS_AS(finset_leq(4), InputError);
}

TEST_CASE("isomorphisms") {
  auto C = walking_arrow();
  CHECK(is_isomorphism(C, C.identity(0)) == C.identity(0));
  CHECK_FALSE(is_isomorphism(C, C.morphism_index("f")).has_value());
  auto F  = finset_leq(2);
  int  sw = F.morphism_index("2->2:10");
  CHECK(is_isomorphism(F, sw) == sw);
  CHECK_FALSE(is_isomorphism(F, F.morphism_index("2->2:00")).has_value());
}

TEST_CASE("pullbacks of finite sets") {
  FinFunction f{2, 1, {0, 0}}, g{3, 1, {0, 0, 0}};
  CHECK(pullback_finset(f, g).apex.size() == 6);
  FinFunction id{3, 3, {0, 1, 2}};
  auto        d = pullback_finset(id, id);
  CHECK(d.apex.size() == 3);
  FinFunction sw{2, 2, {1, 0}}, id2{2, 2, {0, 1}};
  auto        p = pullback_finset(sw, id2);
  CHECK(p.apex == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(pullback_finset(f, sw), InputError);
}

TEST_CASE("pullback universal property against all cones of apex <= 4") {
  std::vector<FinFunction> cospans_f{{2, 2, {1, 0}}, {2, 1, {0, 0}},
                                     {3, 2, {0, 1, 1}}, {1, 2, {1}}};
  std::vector<FinFunction> cospans_g{{2, 2, {0, 1}}, {3, 1, {0, 0, 0}},
                                     {2, 2, {1, 1}}, {2, 2, {0, 0}}};
  for (std::size_t i = 0; i < cospans_f.size(); ++i) {
    auto const& f  = cospans_f[i];
    auto const& g  = cospans_g[i];
    auto        pb = pullback_finset(f, g);
    int         n  = static_cast<int>(pb.apex.size());
    for (int c = 0; c <= 4; ++c) {
      for (auto const& x : oracle::all_functions(c, f.dom)) {
        for (auto const& y : oracle::all_functions(c, g.dom)) {
          bool cone = true;
          for (int t = 0; t < c; ++t) {
            cone = cone && f(x[t]) == g(y[t]);
          }
          if (!cone) {
            continue;
          }
          int mediators = 0;
          for (auto const& m : oracle::all_functions(c, n)) {
            bool ok = true;
            for (int t = 0; t < c; ++t) {
              ok = ok && pb.p1(m[t]) == x[t] && pb.p2(m[t]) == y[t];
            }
            mediators += ok;
          }
          CHECK(mediators == 1);
        }
      }
    }
  }
}

namespace {
  PresentedCategory arrow_graph(int edges_ab, bool loop) {
    PresentedCategory P;
    int a = P.add_vertex("a");
    int b = P.add_vertex("b");
    for (int i = 0; i < edges_ab; ++i) {
      P.add_edge(i == 0 ? "g" : "h", a, b);
    }
    if (loop) {
      P.add_edge("l", a, a);
    }
    return P;
  }
}  // namespace

TEST_CASE("quotients of presented categories") {
  auto P = arrow_graph(1, false);
  P.cap  = 3;
  auto q = quotient_presented(P);
  REQUIRE_FALSE(exceeded(q));
  CHECK(find_isomorphism(std::get<Quotient>(q).category, walking_arrow()));

  auto L = arrow_graph(0, true);
  L.cap  = 5;
  CHECK(exceeded(quotient_presented(L)));

  auto R = arrow_graph(2, false);
  R.cap  = 3;
  R.add_relation({0, {0}}, {0, {1}});
  auto r = quotient_presented(R);
  REQUIRE_FALSE(exceeded(r));
  CHECK(find_isomorphism(std::get<Quotient>(r).category, walking_arrow()));

  auto bad = arrow_graph(1, false);
  CHECK_THROWS_AS(bad.add_relation({0, {0}}, {0, {}}), InputError);
}

TEST_CASE("cyclic monoid presentations") {
  // l^k = l^j gives a monoid with k elements at a, plus the identity at b
  for (int k = 1; k <= 5; ++k) {
    for (int j = 0; j < k; ++j) {
      auto P = arrow_graph(0, true);
      P.cap  = 6;
      P.add_relation({0, std::vector<int>(k, 0)}, {0, std::vector<int>(j, 0)});
      auto q = quotient_presented(P);
      REQUIRE_FALSE(exceeded(q));
      auto const& Q = std::get<Quotient>(q);
      CHECK(Q.category.hom(0, 0).size() == static_cast<std::size_t>(k));
      CHECK(Q.category.morphism_count() == static_cast<std::size_t>(k + 1));
      CHECK(validate_category(Q.category).ok());
    }
  }
}

TEST_CASE("quotient identifies exactly the congruence closure") {
  std::vector<PresentedCategory> cases;
  {
    // commuting square a -> b -> d, a -> c -> d
    PresentedCategory P;
    for (auto v : {"a", "b", "c", "d"}) {
      P.add_vertex(v);
    }
    P.add_edge("x", 0, 1);
    P.add_edge("y", 1, 3);
    P.add_edge("z", 0, 2);
    P.add_edge("w", 2, 3);
    P.add_relation({0, {0, 1}}, {0, {2, 3}});
    cases.push_back(P);
  }
  {
    // idempotent e and a map out of it
    PresentedCategory P;
    P.add_vertex("a");
    P.add_vertex("b");
    P.add_edge("e", 0, 0);
    P.add_edge("k", 0, 1);
    P.add_relation({0, {0, 0}}, {0, {0}});
    P.add_relation({0, {0, 1}}, {0, {1}});
    cases.push_back(P);
  }
  {
    // involution with a retraction
    PresentedCategory P;
    P.add_vertex("a");
    P.add_vertex("b");
    P.add_edge("s", 0, 0);
    P.add_edge("i", 0, 1);
    P.add_edge("r", 1, 0);
    P.add_relation({0, {0, 0}}, {0, {}});
    P.add_relation({1, {2, 1}}, {1, {}});
    P.add_relation({0, {1, 2}}, {0, {0}});
    cases.push_back(P);
  }
  for (auto& P : cases) {
    P.cap  = 6;
    auto q = quotient_presented(P);
    REQUIRE_FALSE(exceeded(q));
    auto const& Q = std::get<Quotient>(q);
    CHECK(validate_category(Q.category).ok());
    // independent fixed-point closure over paths of length <= 6
    auto closure = oracle::path_congruence(P, 6);
    std::set<int> hit;
    for (auto const& [pa, pb] : closure.pairs_checked) {
      bool same_closure = closure.same(pa, pb);
      bool same_tc      = Q.class_of(closure.paths[pa])
                     == Q.class_of(closure.paths[pb]);
      CHECK(same_closure == same_tc);
    }
    for (auto const& p : closure.paths) {
      hit.insert(Q.class_of(p));
    }
    CHECK(hit.size() == Q.category.morphism_count());
  }
}

TEST_CASE("coinserter") {
  // X0 discrete on {a,b}, X1 one object g: a -> b
  auto X0 = discrete_category({"a", "b"});
  auto X1 = discrete_category({"g"});
  FinFunctor d1{{0}, {0}}, d0{{1}, {1}};
  auto r = coinserter(X0, X1, d1, d0);
  REQUIRE_FALSE(exceeded(r));
  auto const& c = std::get<CoinserterResult>(r);
  CHECK(find_isomorphism(c.category, walking_arrow()));
  CHECK(c.category.morphism(c.xi.components[0]).id == "g");

  // empty X1
  FinCategory empty;
  FinFunctor  e1, e0;
  auto        s = coinserter(X0, empty, e1, e0);
  REQUIRE_FALSE(exceeded(s));
  CHECK(is_iso_functor(X0, std::get<CoinserterResult>(s).category,
                       std::get<CoinserterResult>(s).F));

  // a free endomorphism
  FinFunctor l1{{0}, {0}}, l0{{0}, {0}};
  CHECK(exceeded(coinserter(X0, X1, l1, l0)));
}

TEST_CASE("coinserter universal property against small cocones") {
  auto X1 = discrete_category({"g"});
  auto D  = discrete_category({"a", "b"});
  FinFunctor d1{{0}, {0}}, d0{{1}, {1}};
  auto r = std::get<CoinserterResult>(coinserter(D, X1, d1, d0));
  for (auto const& Y : oracle::small_categories(4)) {
    // cocones: functor D -> Y and a morphism xi: F a -> F b
    for (int ya = 0; ya < static_cast<int>(Y.object_count()); ++ya) {
      for (int yb = 0; yb < static_cast<int>(Y.object_count()); ++yb) {
        for (int x : Y.hom(ya, yb)) {
          int count = 0;
          for (auto const& th : oracle::all_functors(r.category, Y)) {
            count += th.obj_map[0] == ya && th.obj_map[1] == yb
                     && th.mor_map[r.xi.components[0]] == x;
          }
          CHECK(count == 1);
        }
      }
    }
  }
}

TEST_CASE("coequifier") {
  // two parallel arrows p, q : a -> b
  FinCategory D;
  D.add_object("a");
  D.add_object("b");
  D.add_morphism("1_a", 0, 0);
  D.add_morphism("1_b", 1, 1);
  D.add_morphism("p", 0, 1);
  D.add_morphism("q", 0, 1);
  D.set_identity(0, 0);
  D.set_identity(1, 1);
  D.fill_unit_composites();
  REQUIRE(validate_category(D).ok());
  FinNatTrans alpha{{2}}, beta{{3}};
  auto r = coequifier(D, alpha, beta);
  REQUIRE_FALSE(exceeded(r));
  CHECK(find_isomorphism(std::get<CoequifierResult>(r).category,
                         walking_arrow()));
  auto same = coequifier(D, alpha, alpha);
  REQUIRE_FALSE(exceeded(same));
  CHECK(std::get<CoequifierResult>(same).category.morphism_count() == 4);
  CHECK(is_iso_functor(D, std::get<CoequifierResult>(same).category,
                       std::get<CoequifierResult>(same).Q));

  // the bound is honoured even when the quotient is finite
  auto tight = coequifier(D, alpha, beta, 1);
  CHECK(exceeded(tight));
}
