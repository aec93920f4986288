#include "doctest.h"

#include "cornerkit/codescent.hpp"
#include "cornerkit/corners.hpp"
#include "cornerkit/fixtures.hpp"
#include "oracles.hpp"

using namespace cornerkit;

namespace {
  CodescentResult get(Bounded<CodescentResult> b) {
    REQUIRE_FALSE(exceeded(b));
    return std::get<CodescentResult>(std::move(b));
  }

  // Both results are colimits of the same data: the mediator between them
  // exists, is unique and is an isomorphism.
  void check_same_colimit(CodescentResult const& a, CodescentResult const& b) {
    auto m = mediators(a.category, a.cocone, b.category, b.cocone, 2);
    REQUIRE(m.size() == 1);
    CHECK(is_iso_functor(a.category, b.category, m.front()));
  }

  // Cocones into Z straight from the definition, for a double category.
  long brute_cocones(DoubleCategory const& X, FinCategory const& Z) {
    auto H = horizontal_category(X);
    auto Fs = oracle::all_functors(X.vertical, Z);
    auto Hs = oracle::all_functors(H, Z);
    long n  = 0;
    for (auto const& F : Fs) {
      for (auto const& xi : Hs) {
        if (F.obj_map != xi.obj_map) {
          continue;
        }
        bool ok = true;
        for (int a = 0; a < static_cast<int>(X.square_count()) && ok; ++a) {
          ok = Z.compose(xi.mor_map[X.top(a)], F.mor_map[X.right(a)])
               == Z.compose(F.mor_map[X.left(a)], xi.mor_map[X.bottom(a)]);
        }
        n += ok;
      }
    }
    return n;
  }

  // |A(qx, y)|
  std::size_t cokleisli_hom(Comonad const& K, int x, int y) {
    return K.A.hom(K.q.obj_map[x], y).size();
  }
}  // namespace

TEST_CASE("small categories") {
  std::vector<std::size_t> exactly{0, 0, 0, 0, 0};
  std::vector<std::size_t> monoids{0, 0, 0, 0, 0};
  auto all = small_categories(4);
  for (auto const& C : all) {
    CHECK(oracle::is_category(C));
    exactly[C.morphism_count()]++;
    if (C.object_count() == 1) {
      monoids[C.morphism_count()]++;
    }
  }
  CHECK(exactly[1] == 1);
  CHECK(exactly[2] == 3);
  CHECK(exactly[3] == 11);
  CHECK(monoids[1] == 1);
  CHECK(monoids[2] == 2);
  CHECK(monoids[3] == 7);
  CHECK(monoids[4] == 35);
  // no two are isomorphic
  auto three = small_categories(3);
  for (std::size_t i = 0; i < three.size(); ++i) {
    for (std::size_t j = i + 1; j < three.size(); ++j) {
      CHECK_FALSE(find_isomorphism(three[i], three[j]).has_value());
    }
  }
  // every oracle category is isomorphic to one of them
  for (auto const& C : oracle::small_categories(3)) {
    if (C.morphism_count() == 0) {
      continue;
    }
    bool found = false;
    for (auto const& D : three) {
      if (find_isomorphism(C, D)) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
  CHECK_THROWS_AS(small_categories(5), GuardError);
}

TEST_CASE("codomain-colax validation") {
  auto X = comonad_codcolax(const0_comonad());
  auto r = validate_codomain_colax(X);
  for (auto const& v : r.verdicts) {
    CAPTURE(v.name);
    CHECK(v.holds);
  }
  CHECK(r.verdicts.size() == 7);
  CHECK(validate_coherence_data(coherence_data(X)).ok());
  CHECK(is_domain_codiscrete(X).holds);

  // recomputing the lifts reproduces the supplied squares
  auto Y = X;
  complete_lifts(Y);
  CHECK(Y.iota_hat == X.iota_hat);
  CHECK(Y.gamma_hat == X.gamma_hat);

  for (auto const& D : {sq_of(walking_arrow()), perm_ord(2),
                        x_prod(cyclic_group(2), walking_arrow())}) {
    auto C = from_double(D);
    for (auto const& v : validate_codomain_colax(C).verdicts) {
      CHECK(v.holds);
    }
    CHECK(validate_coherence_data(coherence_data(D)).ok());
  }

  // a broken comonad is refused
  auto K = const0_comonad();
  K.epsilon.components[1] = K.A.identity(0);
  CHECK_FALSE(validate_comonad(K).ok());
  CHECK_THROWS_AS(comonad_codcolax(K), InputError);
}

TEST_CASE("cocycle mutation") {
  // domain-codiscrete, so the derived squares can be recomputed
  auto D = dualize(x_prod(cyclic_group(2), cyclic_group(2)),
                   DualKind::transpose);
  auto X = from_double(D);
  // gamma at (s, s) on the first object becomes the non-identity vertical
  int a  = 0;
  int s  = X.s_obj[a];
  int t  = -1;
  for (int u : X.vertical.hom(a, a)) {
    if (!X.vertical.is_identity(u)) {
      t = u;
    }
  }
  REQUIRE(t >= 0);
  X.gamma[pair_key(s, s)] = t;
  complete_lifts(X);
  auto r = validate_codomain_colax(X);
  CHECK_FALSE(r["cocycle"]);
  CHECK(r.at("cocycle").witness.contains("triple"));
  CHECK(r.at("cocycle").witness["triple"].size() == 3);

  // mistyped data is an input error, not a failed axiom
  auto Y = from_double(D);
  Y.iota[0] = Y.vertical.identity(1);
  CHECK_THROWS_AS(validate_codomain_colax(Y), InputError);
}

TEST_CASE("catead route") {
  auto W = walking_arrow();
  auto A = codescent_catead(sq_of(W));
  CHECK(find_isomorphism(A.category, W).has_value());
  CHECK(validate_cocone(coherence_data(sq_of(W)), A.category, A.cocone).ok());
  check_same_colimit(A, get(codescent_generators(sq_of(W), 6)));

  auto T = triangle();
  auto B = codescent_catead(sq_of(T));
  CHECK(find_isomorphism(B.category, T).has_value());
  check_same_colimit(B, get(codescent_generators(sq_of(T), 6)));

  auto D = codescent_catead(discrete_double({"p", "q"}));
  CHECK(D.category == discrete_category({"p", "q"}));

  CHECK_THROWS_AS(codescent_catead(perm_ord(2)), PreconditionError);
}

TEST_CASE("corners route") {
  auto C = finset_leq(2);
  std::vector<DoubleCategory> crossed{
      x_prod(cyclic_group(2), walking_arrow()), perm_ord(2),
      commutative_squares(C, surjections(C), injections(C))};
  for (auto const& X : crossed) {
    auto r = codescent_corners(X);
    CHECK(r.route == "corners");
    CHECK(r.category == cnr(X).base);
    auto P = cocone_to_pair(X, r.cocone);
    CHECK(validate_cocone_pair(X, r.category, P).ok());
    check_same_colimit(r, get(codescent_generators(X, 6)));
  }

  // transpose of a codomain-discrete double category: corners, no quotient
  auto A = cyclic_group(2), B = walking_arrow();
  auto T = dualize(x_prod(A, B), DualKind::transpose);
  auto Y = from_double(T);
  REQUIRE(is_domain_codiscrete(Y).holds);
  auto r = cnr_codcolax(Y);
  std::size_t corners = 0;
  for (int g = 0; g < static_cast<int>(T.horizontal_count()); ++g) {
    corners += T.vertical.out(T.hcod(g)).size();
  }
  CHECK(r.category.morphism_count() == corners);
  CHECK(validate_category(r.category).ok());
  CHECK(find_isomorphism(r.category, product(A, B)).has_value());
  check_same_colimit(r, get(codescent_generators(T, 6)));

  CHECK_THROWS_AS(codescent_corners(sq_of(walking_arrow())), PreconditionError);
}

TEST_CASE("comonad codescent is the coKleisli category") {
  auto K = const0_comonad();
  auto X = comonad_codcolax(K);
  auto r = cnr_codcolax(X);
  CHECK(validate_category(r.category).ok());
  CHECK(oracle::is_category(r.category));
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      CHECK(r.category.hom(x, y).size() == cokleisli_hom(K, x, y));
    }
  }
  CHECK(r.category.morphism_count() == 4);
  CHECK(find_isomorphism(r.category, cokleisli(K)).has_value());
  auto D = coherence_data(X);
  CHECK(validate_cocone(D, r.category, r.cocone).ok());
  auto g = get(codescent_generators(X, 6));
  check_same_colimit(r, g);

  // unit laws corner by corner
  for (int f = 0; f < static_cast<int>(r.category.morphism_count()); ++f) {
    auto const& C = r.category;
    CHECK(C.compose(C.identity(C.src(f)), f) == f);
    CHECK(C.compose(f, C.identity(C.tgt(f))) == f);
  }

  auto I = identity_comonad(triangle());
  auto e = cnr_codcolax(comonad_codcolax(I));
  CHECK(find_isomorphism(e.category, triangle()).has_value());

  // no horizontals: X0 itself
  auto E = from_double(discrete_double({"p"}));
  auto V = get(codescent_generators(E, 6));
  CHECK(V.category.morphism_count() == 1);
}

TEST_CASE("cocone pairs") {
  auto X = perm_ord(2);
  auto r = codescent_corners(X);
  auto P = cocone_to_pair(X, r.cocone);
  CHECK(validate_cocone_pair(X, r.category, P).ok());
  auto back = pair_to_cocone(P);
  CHECK(back.F.mor_map == r.cocone.F.mor_map);
  CHECK(back.xi == r.cocone.xi);
  auto again = cocone_to_pair(X, back);
  CHECK(again.xi.mor_map == P.xi.mor_map);

  // the pair view and the cocone view agree on every enumerated cocone
  auto S = sq_of(walking_arrow());
  auto D = coherence_data(S);
  for (auto const& Z : small_categories(3)) {
    for (auto const& c : enumerate_cocones(D, Z)) {
      CHECK(validate_cocone(D, Z, c).ok());
      CHECK(validate_cocone_pair(S, Z, cocone_to_pair(S, c)).ok());
    }
  }

  // disagreeing object maps
  auto bad = P;
  bad.xi.obj_map[0] = bad.xi.obj_map[1];
  CHECK_THROWS_AS(validate_cocone_pair(X, r.category, bad), InputError);

  // a pair sending everything into the terminal category
  auto Tm = terminal_candidate(coherence_data(X));
  CHECK(validate_cocone_pair(X, Tm.category, cocone_to_pair(X, Tm.cocone)).ok());
  // swapping two components breaks naturality
  auto Q = P;
  int  u = X.vertical.morphism_index(X.vname(0));
  (void)u;
  std::swap(Q.F.mor_map[X.vertical.hom(2, 2)[0]],
            Q.F.mor_map[X.vertical.hom(2, 2)[1]]);
  CHECK_FALSE(validate_cocone_pair(X, r.category, Q).ok());
}

TEST_CASE("cocone enumeration against brute force") {
  for (auto const& X : {sq_of(walking_arrow()), discrete_double({"p", "q"}),
                        x_prod(cyclic_group(2), terminal_category())}) {
    auto D = coherence_data(X);
    for (auto const& Z : small_categories(3)) {
      CHECK(static_cast<long>(enumerate_cocones(D, Z).size())
            == brute_cocones(X, Z));
    }
  }
}

TEST_CASE("universal property probes") {
  auto S = sq_of(walking_arrow());
  auto D = coherence_data(S);
  auto A = codescent_catead(S);
  auto r = verify_universal_property(D, A, 4);
  CHECK(r.holds);
  CHECK(r.cocones > 0);
  auto G = get(codescent_generators(S, 6));
  CHECK(verify_universal_property(D, G, 4).holds);
  auto bad = verify_universal_property(D, terminal_candidate(D), 4);
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness["mediators"] == 0);

  // mediator counts agree with functor enumeration
  for (auto const& Z : small_categories(3)) {
    for (auto const& c : enumerate_cocones(D, Z)) {
      long n = 0;
      for (auto const& th : oracle::all_functors(A.category, Z)) {
        bool ok = true;
        for (std::size_t f = 0; f < c.F.mor_map.size(); ++f) {
          ok = ok && th.mor_map[A.cocone.F.mor_map[f]] == c.F.mor_map[f];
        }
        for (std::size_t g = 0; g < c.xi.size(); ++g) {
          ok = ok && th.mor_map[A.cocone.xi[g]] == c.xi[g];
        }
        n += ok;
      }
      CHECK(n == static_cast<long>(mediators(A.category, A.cocone, Z, c, 10).size()));
    }
  }

  auto K = comonad_codcolax(const0_comonad());
  auto KD = coherence_data(K);
  CHECK(verify_universal_property(KD, cnr_codcolax(K), 4).holds);
  CHECK_FALSE(verify_universal_property(KD, terminal_candidate(KD), 4).holds);

  // a non-cocone candidate is refused
  auto broken = A;
  std::swap(broken.cocone.xi[0], broken.cocone.xi[2]);
  CHECK_THROWS_AS(verify_universal_property(D, broken, 4), PreconditionError);
  CHECK_THROWS_AS(verify_universal_property(D, A, 5), GuardError);
}

TEST_CASE("transpose invariance") {
  auto C = finset_leq(2);
  std::vector<DoubleCategory> fixtures{
      sq_of(walking_arrow()), sq_of(triangle()),
      x_prod(cyclic_group(2), walking_arrow()), perm_ord(2),
      commutative_squares(C, surjections(C), injections(C)),
      discrete_double({"p", "q"})};
  for (auto const& X : fixtures) {
    auto b = transpose_invariance(X, 6);
    REQUIRE_FALSE(exceeded(b));
    auto const& r = std::get<TransposeReport>(b);
    CHECK(r.holds);
    if (!r.holds) {
      MESSAGE(r.to_json().dump());
    }
  }
  // Sq is its own transpose: theta is the identity
  auto S = sq_of(walking_arrow());
  auto r = std::get<TransposeReport>(transpose_invariance(S, 6));
  auto A = std::get<CodescentResult>(codescent(S));
  CHECK(r.theta.mor_map == identity_functor(A.category).mor_map);

  // X_{A,B} against its transpose: the swap A x B -> B x A
  auto X  = x_prod(cyclic_group(2), walking_arrow());
  auto t  = std::get<TransposeReport>(transpose_invariance(X, 6));
  CHECK((t.route == "catead" || t.route == "corners"));
}

TEST_CASE("routes") {
  CHECK(parse_route("auto") == Route::automatic);
  CHECK(route_name(parse_route("genrel")) == "genrel");
  CHECK_THROWS_AS(parse_route("fastest"), InputError);
  auto r = codescent(sq_of(walking_arrow()));
  CHECK(std::get<CodescentResult>(r).route == "catead");
  CHECK(std::get<CodescentResult>(codescent(perm_ord(2))).route == "corners");
  auto K = comonad_codcolax(const0_comonad());
  CHECK(std::get<CodescentResult>(codescent(K)).route == "corners");
  CHECK_THROWS_AS(codescent(K, Route::catead), PreconditionError);
  auto tight = codescent_generators(perm_ord(2), 1);
  CHECK(exceeded(tight));
}
