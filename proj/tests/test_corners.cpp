#include "doctest.h"

#include <cmath>

#include "cornerkit/corners.hpp"
#include "cornerkit/fixtures.hpp"
#include "oracles.hpp"

using namespace cornerkit;

namespace {
  std::vector<std::pair<std::string, DoubleCategory>> crossed_fixtures() {
    auto C = finset_leq(2);
    return {{"x_prod", x_prod(cyclic_group(2), walking_arrow())},
            {"perm_ord_2", perm_ord(2)},
            {"surj_inj", commutative_squares(C, surjections(C), injections(C))},
            {"discrete", discrete_double({"p", "q"})}};
  }

  // stars and bars: matrices of naturals with r*c entries summing to <= n
  long matrices(int r, int c, int n) {
    int  k   = r * c;
    long out = 1;
    for (int i = 1; i <= k; ++i) {
      out = out * (n + i) / i;
    }
    return out;
  }

  std::vector<int> compose_functions(std::vector<int> const& f,
                                     std::vector<int> const& g) {
    std::vector<int> out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      out[x] = g[f[x]];
    }
    return out;
  }
}  // namespace

TEST_CASE("corner equivalence") {
  SUBCASE("codomain-discrete gives singletons") {
    auto X = x_prod(cyclic_group(2), walking_arrow());
    auto P = corner_equivalence(X);
    for (auto const& k : P.classes) {
      CHECK(k.representatives.size() == 1);
    }
    CHECK(cnr(X).base.morphism_count() == bottom_left_corners(X).size());
  }
  SUBCASE("perm_ord(2) classes are functions") {
    auto X = perm_ord(2);
    auto P = corner_equivalence(X);
    auto const& V = X.vertical;
    auto H = horizontal_category(X);
    for (std::size_t i = 0; i < P.corners.size(); ++i) {
      for (std::size_t j = 0; j < P.corners.size(); ++j) {
        auto ci = P.corners[i], cj = P.corners[j];
        auto fi = compose_functions(finset_function(V, ci.u).map,
                                    finset_function(H, ci.g).map);
        auto fj = compose_functions(finset_function(V, cj.u).map,
                                    finset_function(H, cj.g).map);
        bool same_ends = X.vdom(ci.u) == X.vdom(cj.u)
                         && X.hcod(ci.g) == X.hcod(cj.g);
        CHECK((P.class_of[i] == P.class_of[j]) == (same_ends && fi == fj));
      }
    }
    long functions = 0;
    for (int m = 0; m <= 2; ++m) {
      for (int k = 0; k <= 2; ++k) {
        functions += static_cast<long>(std::pow(k, m));
      }
    }
    CHECK(static_cast<long>(P.classes.size()) == functions);
  }
  SUBCASE("one step suffices when every square is opcartesian") {
    for (auto const& [name, X] : crossed_fixtures()) {
      CAPTURE(name);
      auto op = opcartesian_squares(X);
      if (std::all_of(op.begin(), op.end(), [](char c) { return c; })) {
        CHECK(corner_equivalence(X).single_step);
      }
    }
    CHECK(corner_equivalence(span_bounded(2, 2).X).single_step);
  }
  SUBCASE("identity corners") {
    auto X = sq_of(walking_arrow());
    auto P = corner_equivalence(X);
    for (int x = 0; x < static_cast<int>(X.object_count()); ++x) {
      auto id = BottomLeftCorner{X.vunit(x), X.hunit(x)};
      CHECK(P.classes[P.class_index(id)].canonical() == id);
    }
  }
}

TEST_CASE("corners categories of the fixtures are categories") {
  for (auto const& [name, X] : crossed_fixtures()) {
    CAPTURE(name);
    auto C = cnr(X);
    CHECK(validate_category(C.base).ok());
    CHECK(oracle::is_category(C.base));
    for (int f = 0; f < static_cast<int>(C.base.morphism_count()); ++f) {
      if (C.base.is_identity(f)) {
        CHECK(C.E[f]);
        CHECK(C.M[f]);
      }
    }
    // every morphism is [1,g]∘[u,1]
    for (auto const& k : C.classes) {
      auto c = k.canonical();
      int  e = C.find({c.u, X.hunit(X.vcod(c.u))});
      int  m = C.find({X.vunit(X.hdom(c.g)), c.g});
      CHECK(C.base.compose(e, m) == C.find(c));
    }
  }
}

TEST_CASE("not crossed is rejected") {
  // horizontal identity squares of Sq(C) need not be opcartesian
  CHECK_FALSE(is_crossed(sq_of(walking_arrow())).holds);
  auto S = dualize(sq_of(finset_leq(2)), DualKind::vertical);
  REQUIRE_FALSE(is_crossed(S).holds);
  CHECK_THROWS_AS(cnr(S), PreconditionError);
}

TEST_CASE("cnr examples") {
  auto A = cyclic_group(2), B = walking_arrow();
  auto C = cnr(x_prod(A, B));
  CHECK(find_isomorphism(C.base, product(A, B)).has_value());

  auto T  = triangle();
  auto Id = commutative_squares(T, identities_only(T), all_morphisms(T));
  CHECK(find_isomorphism(cnr(Id).base, T).has_value());

  auto P2 = cnr(perm_ord(2));
  for (int m = 0; m <= 2; ++m) {
    for (int k = 0; k <= 2; ++k) {
      CHECK(P2.base.hom(m, k).size() == static_cast<std::size_t>(std::pow(k, m)));
    }
  }
}

TEST_CASE("cnr(perm_ord(3)) is finite sets and functions") {
  auto X = perm_ord(3);
  auto C = cnr(X);
  for (int m = 0; m <= 3; ++m) {
    for (int k = 0; k <= 3; ++k) {
      CHECK(C.base.hom(m, k).size() == oracle::all_functions(m, k).size());
    }
  }
  CHECK(validate_category(C.base).ok());
  CHECK(find_isomorphism(C.base, finset_upto(3)).has_value());
}

TEST_CASE("filler independence") {
  auto X     = perm_ord(2);
  auto least = cnr(X, FillerChoice::least);
  auto great = cnr(X, FillerChoice::greatest);
  CHECK(least.base == great.base);
  auto rep = check_filler_independence(X, least);
  CHECK(rep.ok);
  CHECK(rep.multi_filler_corners > 0);
  for (auto const& [name, Y] : crossed_fixtures()) {
    CAPTURE(name);
    auto C = cnr(Y);
    CHECK(check_filler_independence(Y, C).ok);
    CHECK(cnr(Y, FillerChoice::greatest).base == C.base);
  }
}

TEST_CASE("induced functors") {
  auto X = perm_ord(2);
  auto C = cnr(X);
  auto F = identity_double_functor(X);
  auto G = cnr_functor(X, X, F, C, C);
  CHECK(G.mor_map == identity_functor(C.base).mor_map);

  // perm_ord(2) inside perm_ord(3), matched by names
  auto          Y  = perm_ord(3);
  auto          CY = cnr(Y);
  DoubleFunctor I;
  for (int x = 0; x < static_cast<int>(X.object_count()); ++x) {
    I.obj.push_back(Y.vertical.object_index(X.oname(x)));
  }
  for (int u = 0; u < static_cast<int>(X.vertical_count()); ++u) {
    I.vert.push_back(Y.vertical.morphism_index(X.vname(u)));
  }
  for (int g = 0; g < static_cast<int>(X.horizontal_count()); ++g) {
    I.hor.push_back(Y.squares.object_index(X.hname(g)));
  }
  for (int a = 0; a < static_cast<int>(X.square_count()); ++a) {
    I.sq.push_back(Y.squares.morphism_index(X.sqname(a)));
  }
  auto J = cnr_functor(X, Y, I, C, CY);
  auto images = J.mor_map;
  std::sort(images.begin(), images.end());
  CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());

  // collapsing two objects
  auto D = discrete_double({"p", "q"}), E = discrete_double({"r"});
  auto K = cnr_functor(D, E, DoubleFunctor{{0, 0}, {0, 0}, {0, 0}, {0, 0}},
                       cnr(D), cnr(E));
  CHECK(K.mor_map == std::vector<int>{0, 0});

  DoubleFunctor bad = F;
  std::swap(bad.vert[0], bad.vert[1]);
  CHECK_THROWS_AS(cnr_functor(X, X, bad, C, C), InputError);
}

TEST_CASE("naturality of squares") {
  for (auto const& [name, X] : crossed_fixtures()) {
    CAPTURE(name);
    auto C   = cnr(X);
    auto rep = check_naturality(X, C);
    CHECK(rep.ok());
    CHECK(rep.instances == X.square_count());

    // corrupt one composite used by some square
    bool mutated = false;
    for (int a = 0; a < static_cast<int>(X.square_count()) && !mutated; ++a) {
      int m = X.top(a), e = X.right(a), e2 = X.left(a), m2 = X.bottom(a);
      int M1 = C.find({X.vunit(X.hdom(m)), m});
      int E1 = C.find({e, X.hunit(X.vcod(e))});
      int E2 = C.find({e2, X.hunit(X.vcod(e2))});
      int M2 = C.find({X.vunit(X.hdom(m2)), m2});
      if (M1 == E2 && E1 == M2) {
        continue;
      }
      int r  = C.base.compose(M1, E1);
      auto const& hom = C.base.hom(C.base.src(r), C.base.tgt(r));
      if (hom.size() < 2) {
        continue;
      }
      auto D = C;
      D.base.set_composite(M1, E1, hom[0] == r ? hom[1] : hom[0]);
      auto bad = check_naturality(X, D);
      CHECK_FALSE(bad.ok());
      CHECK(bad.witness.contains("square"));
      mutated = true;
    }
    // in the discrete fixture every instance is an identity square
    CHECK((mutated || name == "discrete"));
  }
}

TEST_CASE("weak orthogonality") {
  auto P = perm_ord(2);
  CHECK(check_weak_orthogonality(cnr(P)).ok());

  auto F = span_bounded(2, 2);
  auto S = cnr_partial(F.X, [&F](BottomLeftCorner c) { return F.admits(c); });
  auto rep = check_weak_orthogonality(S);
  CHECK(rep.ok());
  CHECK(rep.instances > 0);
  CHECK(check_naturality(F.X, S).ok());

  // [sw,1] is not the identity, and since [sw,1] = [1,sw] as spans it lies
  // in both classes
  int two = S.base.object_index("2");
  int sw  = S.find({F.X.vertical.morphism_index("2->2:10"), F.X.hunit(two)});
  REQUIRE(sw >= 0);
  CHECK_FALSE(S.base.is_identity(sw));
  CHECK(S.E[sw]);
  CHECK(S.M[sw]);
  CHECK(S.find({F.X.vunit(two), F.X.squares.object_index("2->2:10")}) == sw);

  CHECK_THROWS_AS(check_weak_orthogonality(sq_of(walking_arrow())),
                  PreconditionError);
}

TEST_CASE("bounded span homs") {
  CHECK(bounded_span_hom(1, 1, 2).size() == 3);
  CHECK(bounded_span_hom(1, 0, 2).size() == 1);
  CHECK(bounded_span_hom(2, 2, 1).size() == 5);
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int n = 0; n <= 2; ++n) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(n);
        CHECK(static_cast<long>(bounded_span_hom(a, b, n).size())
              == matrices(a, b, n));
      }
    }
  }
  CHECK(static_cast<long>(bounded_span_hom(2, 1, 3).size()) == matrices(2, 1, 3));
  CHECK_THROWS_AS(bounded_span_hom(1, 1, 4), GuardError);
  CHECK(bounded_span_hom(1, 1, 0).size() == 1);
}
