#include "cornerkit/codescent.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "cornerkit/corners.hpp"

namespace cornerkit {

namespace {
  int count(std::size_t n) { return static_cast<int>(n); }

  std::uint64_t lift_key(int u, int h) { return pair_key(u, h); }

  // Squares by (left, bottom).
  std::unordered_map<std::uint64_t, std::vector<int>> lift_index(
      CodomainColaxCategory const& X) {
    std::unordered_map<std::uint64_t, std::vector<int>> idx;
    for (int a = 0; a < count(X.square_count()); ++a) {
      idx[lift_key(X.left(a), X.bottom(a))].push_back(a);
    }
    return idx;
  }

  std::vector<int> const& lookup(
      std::unordered_map<std::uint64_t, std::vector<int>> const& idx, int u,
      int h) {
    static std::vector<int> const none;
    auto it = idx.find(lift_key(u, h));
    return it == idx.end() ? none : it->second;
  }

  json category_json(FinCategory const& C) {
    json objects = json::array(), morphisms = json::array();
    for (int a = 0; a < count(C.object_count()); ++a) {
      objects.push_back(C.object_name(a));
    }
    for (int f = 0; f < count(C.morphism_count()); ++f) {
      morphisms.push_back({C.morphism(f).id, C.object_name(C.src(f)),
                           C.object_name(C.tgt(f))});
    }
    json comp = json::array();
    for (auto const& [f, g, gf] : C.composition_entries()) {
      if (C.is_identity(f) || C.is_identity(g)) {
        continue;
      }
      comp.push_back({C.morphism(f).id, C.morphism(g).id, C.morphism(gf).id});
    }
    return {{"objects", objects}, {"morphisms", morphisms},
            {"composition", comp}};
  }

  json cocone_json(FinCategory const& Y, Cocone const& c) {
    json F = json::array(), xi = json::array();
    for (int f : c.F.mor_map) {
      F.push_back(Y.morphism(f).id);
    }
    for (int x : c.xi) {
      xi.push_back(Y.morphism(x).id);
    }
    return {{"F", F}, {"xi", xi}};
  }

  void check_index(int i, std::size_t n, std::string const& what) {
    if (i < 0 || i >= count(n)) {
      throw InputError(what + " refers to an unknown id");
    }
  }
}  // namespace

CodomainColaxCategory from_double(DoubleCategory const& X) {
  CodomainColaxCategory C;
  C.vertical  = X.vertical;
  C.squares   = X.squares;
  C.d1_obj    = X.d1_obj;
  C.d0_obj    = X.d0_obj;
  C.d1_mor    = X.d1_mor;
  C.d0_mor    = X.d0_mor;
  C.s_obj     = X.s_obj;
  C.s_mor     = X.s_mor;
  C.hcomp_obj = X.hcomp_obj;
  C.hcomp_sq  = X.hcomp_sq;
  for (auto const& [k, gf] : X.hcomp_obj) {
    int g2 = static_cast<int>(k & 0xffffffffu);
    C.gamma[k] = X.vunit(X.hcod(g2));
  }
  for (int a = 0; a < count(X.object_count()); ++a) {
    C.iota.push_back(X.vunit(a));
  }
  for (int g = 0; g < count(X.horizontal_count()); ++g) {
    C.iota_hat.push_back(X.vid(g));
  }
  std::vector<std::vector<int>> from(X.object_count());
  for (int g = 0; g < count(X.horizontal_count()); ++g) {
    from[X.hdom(g)].push_back(g);
  }
  for (int g1 = 0; g1 < count(X.horizontal_count()); ++g1) {
    for (int g2 : from[X.hcod(g1)]) {
      for (int g3 : from[X.hcod(g2)]) {
        C.gamma_hat[{g1, g2, g3}] = X.vid(g3);
      }
    }
  }
  return C;
}

LiftResult lift(CodomainColaxCategory const& X, int u, int h) {
  LiftResult r;
  for (int a = 0; a < count(X.square_count()); ++a) {
    if (X.left(a) == u && X.bottom(a) == h) {
      if (!r.square) {
        r.square = a;
      }
      ++r.count;
    }
  }
  if (r.count != 1) {
    r.square.reset();
  }
  return r;
}

Decision is_domain_codiscrete(CodomainColaxCategory const& X) {
  auto idx = lift_index(X);
  for (int u = 0; u < count(X.vertical_count()); ++u) {
    int b = X.vertical.tgt(u);
    for (int h = 0; h < count(X.horizontal_count()); ++h) {
      if (X.hdom(h) != b) {
        continue;
      }
      auto const& sq = lookup(idx, u, h);
      if (sq.size() != 1) {
        return {false,
                {{"u", X.vname(u)}, {"h", X.hname(h)}, {"squares", sq.size()}}};
      }
    }
  }
  return {true, nullptr};
}

void complete_lifts(CodomainColaxCategory& X) {
  auto d = is_domain_codiscrete(X);
  if (!d.holds) {
    throw PreconditionError("d1 is not a discrete fibration: "
                            + d.witness.dump());
  }
  auto idx = lift_index(X);
  X.iota_hat.assign(X.horizontal_count(), -1);
  for (int g = 0; g < count(X.horizontal_count()); ++g) {
    X.iota_hat[g] = lookup(idx, X.iota[X.hdom(g)], g).front();
  }
  X.gamma_hat.clear();
  std::vector<std::vector<int>> from(X.object_count());
  for (int g = 0; g < count(X.horizontal_count()); ++g) {
    from[X.hdom(g)].push_back(g);
  }
  for (int g1 = 0; g1 < count(X.horizontal_count()); ++g1) {
    for (int g2 : from[X.hcod(g1)]) {
      int c = X.gamma_at(g1, g2);
      if (c < 0) {
        throw InputError("missing gamma component");
      }
      for (int g3 : from[X.hcod(g2)]) {
        X.gamma_hat[{g1, g2, g3}] = lookup(idx, c, g3).front();
      }
    }
  }
}

namespace {
  // InputError unless the tables describe well-typed data with total
  // horizontal composition on composable pairs.
  void check_structure(CodomainColaxCategory const& X) {
    auto const& V = X.vertical;
    auto const& S = X.squares;
    if (!validate_category(V).ok() || !validate_category(S).ok()) {
      throw InputError("vertical or square category is not a category");
    }
    std::size_t const nh = X.horizontal_count(), ns = X.square_count(),
                      no = X.object_count(), nv = X.vertical_count();
    if (X.d1_obj.size() != nh || X.d0_obj.size() != nh || X.d1_mor.size() != ns
        || X.d0_mor.size() != ns || X.s_obj.size() != no
        || X.s_mor.size() != nv || X.iota.size() != no
        || X.iota_hat.size() != nh) {
      throw InputError("table sizes do not match the categories");
    }
    for (std::size_t i = 0; i < nh; ++i) {
      check_index(X.d1_obj[i], no, "horizontal domain");
      check_index(X.d0_obj[i], no, "horizontal codomain");
      check_index(X.iota_hat[i], ns, "iota_hat");
    }
    for (std::size_t i = 0; i < ns; ++i) {
      check_index(X.d1_mor[i], nv, "square left edge");
      check_index(X.d0_mor[i], nv, "square right edge");
    }
    for (std::size_t i = 0; i < no; ++i) {
      check_index(X.s_obj[i], nh, "horizontal identity");
      check_index(X.iota[i], nv, "iota");
    }
    for (std::size_t i = 0; i < nv; ++i) {
      check_index(X.s_mor[i], ns, "identity square");
    }
    FinFunctor d1{X.d1_obj, X.d1_mor}, d0{X.d0_obj, X.d0_mor},
        s{X.s_obj, X.s_mor};
    if (!validate_functor(S, V, d1).ok() || !validate_functor(S, V, d0).ok()) {
      throw InputError("d0 or d1 is not a functor");
    }
    if (!validate_functor(V, S, s).ok()) {
      throw InputError("s is not a functor");
    }
    for (int a = 0; a < count(no); ++a) {
      if (X.hdom(X.s_obj[a]) != a) {
        throw InputError("d1 s is not the identity at " + X.oname(a));
      }
    }
    for (int f = 0; f < count(nv); ++f) {
      if (X.left(X.s_mor[f]) != f) {
        throw InputError("d1 s is not the identity at " + X.vname(f));
      }
    }
    for (int a = 0; a < count(no); ++a) {
      int i = X.iota[a];
      if (V.src(i) != X.hcod(X.s_obj[a]) || V.tgt(i) != a) {
        throw InputError("iota at " + X.oname(a) + " has wrong endpoints");
      }
    }
    for (int g1 = 0; g1 < count(nh); ++g1) {
      for (int g2 = 0; g2 < count(nh); ++g2) {
        if (X.hcod(g1) != X.hdom(g2)) {
          continue;
        }
        int gg = X.hcomp_h(g1, g2), c = X.gamma_at(g1, g2);
        std::string at = "(" + X.hname(g1) + "," + X.hname(g2) + ")";
        if (gg < 0 || c < 0) {
          throw InputError("composite or gamma missing at " + at);
        }
        check_index(gg, nh, "horizontal composite");
        check_index(c, nv, "gamma");
        if (X.hdom(gg) != X.hdom(g1)) {
          throw InputError("composite at " + at + " changes the domain");
        }
        if (V.src(c) != X.hcod(gg) || V.tgt(c) != X.hcod(g2)) {
          throw InputError("gamma at " + at + " has wrong endpoints");
        }
      }
    }
    std::unordered_map<int, std::vector<int>> by_left;
    for (int a = 0; a < count(ns); ++a) {
      by_left[X.left(a)].push_back(a);
    }
    for (int a1 = 0; a1 < count(ns); ++a1) {
      for (int a2 : by_left[X.right(a1)]) {
        int a = X.hcomp(a1, a2);
        std::string at = "(" + S.morphism(a1).id + "," + S.morphism(a2).id + ")";
        if (a < 0) {
          throw InputError("square composite missing at " + at);
        }
        check_index(a, ns, "square composite");
        if (X.top(a) != X.hcomp_h(X.top(a1), X.top(a2))
            || X.bottom(a) != X.hcomp_h(X.bottom(a1), X.bottom(a2))
            || X.left(a) != X.left(a1)) {
          throw InputError("square composite at " + at + " has wrong edges");
        }
      }
    }
    // horizontal composition of squares is a functor on composable pairs
    for (auto const& [a1, b1, c1] : S.composition_entries()) {
      for (int a2 : by_left[X.right(a1)]) {
        for (int b2 : by_left[X.right(b1)]) {
          if (S.src(b2) != S.tgt(a2)) {
            continue;
          }
          int c2 = S.compose(a2, b2);
          if (S.compose(X.hcomp(a1, a2), X.hcomp(b1, b2))
              != X.hcomp(c1, c2)) {
            throw InputError("horizontal composition of squares is not "
                             "functorial at " + S.morphism(c1).id);
          }
        }
      }
    }
    for (int g = 0; g < count(nh); ++g) {
      int a = X.iota_hat[g];
      if (X.bottom(a) != g || X.left(a) != X.iota[X.hdom(g)]) {
        throw InputError("iota_hat at " + X.hname(g) + " has wrong edges");
      }
      if (X.hcomp_h(X.s_obj[X.hdom(g)], X.top(a)) < 0) {
        throw InputError("iota_hat at " + X.hname(g) + " is not composable");
      }
    }
    for (int g1 = 0; g1 < count(nh); ++g1) {
      for (int g2 = 0; g2 < count(nh); ++g2) {
        if (X.hcod(g1) != X.hdom(g2)) {
          continue;
        }
        for (int g3 = 0; g3 < count(nh); ++g3) {
          if (X.hcod(g2) != X.hdom(g3)) {
            continue;
          }
          auto it = X.gamma_hat.find({g1, g2, g3});
          std::string at = "(" + X.hname(g1) + "," + X.hname(g2) + ","
                           + X.hname(g3) + ")";
          if (it == X.gamma_hat.end()) {
            throw InputError("gamma_hat missing at " + at);
          }
          check_index(it->second, ns, "gamma_hat");
          if (X.bottom(it->second) != g3
              || X.left(it->second) != X.gamma_at(g1, g2)) {
            throw InputError("gamma_hat at " + at + " has wrong edges");
          }
        }
      }
    }
  }
}  // namespace

PredicateReport validate_codomain_colax(CodomainColaxCategory const& X) {
  check_structure(X);
  auto const& V  = X.vertical;
  int const   nh = count(X.horizontal_count());
  auto vc = [&](int f, int g) { return V.compose(f, g); };  // g∘f

  Verdict assoc{"associativity", true, nullptr},
      unital{"unitality", true, nullptr}, cocycle{"cocycle", true, nullptr},
      unit_l{"unit_left", true, nullptr}, unit_r{"unit_right", true, nullptr},
      gnat{"gamma_naturality", true, nullptr},
      inat{"iota_naturality", true, nullptr};
  auto fail = [](Verdict& v, json w) {
    if (v.holds) {
      v.holds   = false;
      v.witness = std::move(w);
    }
  };

  for (auto const& [t, gh] : X.gamma_hat) {
    auto [g1, g2, g3] = t;
    int  hat3  = X.top(gh);
    int  g21   = X.hcomp_h(g1, g2);
    int  lhs_h = X.hcomp_h(g21, hat3);
    int  rhs_h = X.hcomp_h(g1, X.hcomp_h(g2, g3));
    json w = {{"triple", {X.hname(g1), X.hname(g2), X.hname(g3)}}};
    if (lhs_h < 0 || lhs_h != rhs_h) {
      fail(assoc, w);
      continue;
    }
    int lhs = vc(X.gamma_at(g21, hat3), X.right(gh));
    int rhs = vc(X.gamma_at(g1, X.hcomp_h(g2, g3)), X.gamma_at(g2, g3));
    if (lhs < 0 || lhs != rhs) {
      fail(cocycle, w);
    }
  }
  for (int g = 0; g < nh; ++g) {
    int a = X.hdom(g), b = X.hcod(g);
    int sa = X.s_obj[a], sb = X.s_obj[b];
    int hat = X.hat(g);
    json w  = {{"horizontal", X.hname(g)}};
    if (X.hcomp_h(g, sb) != g || X.hcomp_h(sa, hat) != g) {
      fail(unital, w);
      continue;
    }
    if (vc(X.gamma_at(sa, hat), X.right(X.iota_hat[g])) != V.identity(b)) {
      fail(unit_l, w);
    }
    if (vc(X.gamma_at(g, sb), X.iota[b]) != V.identity(b)) {
      fail(unit_r, w);
    }
  }
  std::unordered_map<int, std::vector<int>> by_left;
  for (int k = 0; k < count(X.square_count()); ++k) {
    by_left[X.left(k)].push_back(k);
  }
  for (int k1 = 0; k1 < count(X.square_count()) && gnat.holds; ++k1) {
    for (int k2 : by_left[X.right(k1)]) {
      int k  = X.hcomp(k1, k2);
      int g1 = X.top(k1), g2 = X.top(k2), h1 = X.bottom(k1),
          h2 = X.bottom(k2);
      int lhs = vc(X.gamma_at(g1, g2), X.right(k2));
      int rhs = vc(X.right(k), X.gamma_at(h1, h2));
      if (lhs < 0 || lhs != rhs) {
        fail(gnat, {{"squares", {X.squares.morphism(k1).id,
                                 X.squares.morphism(k2).id}}});
        break;
      }
    }
  }
  for (int f = 0; f < count(X.vertical_count()); ++f) {
    int lhs = vc(X.iota[V.src(f)], f);
    int rhs = vc(X.right(X.s_mor[f]), X.iota[V.tgt(f)]);
    if (lhs < 0 || lhs != rhs) {
      fail(inat, {{"vertical", X.vname(f)}});
      break;
    }
  }
  return {{assoc, unital, cocycle, unit_l, unit_r, gnat, inat}};
}

namespace {
  ColaxCoherenceData coherence_from(CodomainColaxCategory const& X) {
    ColaxCoherenceData D;
    D.X0 = X.vertical;
    D.X1 = X.squares;
    D.d0 = {X.d0_obj, X.d0_mor};
    D.d1 = {X.d1_obj, X.d1_mor};
    D.s  = {X.s_obj, X.s_mor};
    D.iota.components = X.iota;
    auto const& S = X.squares;
    std::map<std::pair<int, int>, int> pair_obj;
    for (int g1 = 0; g1 < count(X.horizontal_count()); ++g1) {
      for (int g2 = 0; g2 < count(X.horizontal_count()); ++g2) {
        if (X.hcod(g1) != X.hdom(g2)) {
          continue;
        }
        int p = D.X2.add_object("(" + X.hname(g1) + "," + X.hname(g2) + ")");
        pair_obj[{g1, g2}] = p;
        D.e2.obj_map.push_back(g1);
        D.e0.obj_map.push_back(g2);
        int gg = X.hcomp_h(g1, g2);
        if (gg < 0) {
          throw InputError("horizontal composite missing at "
                           + D.X2.object_name(p));
        }
        D.e1.obj_map.push_back(gg);
        int c = X.gamma_at(g1, g2);
        if (c < 0) {
          throw InputError("gamma missing at " + D.X2.object_name(p));
        }
        D.gamma.components.push_back(c);
      }
    }
    std::unordered_map<int, std::vector<int>> by_left;
    for (int a = 0; a < count(X.square_count()); ++a) {
      by_left[X.left(a)].push_back(a);
    }
    std::map<std::pair<int, int>, int> pair_mor;
    for (int a1 = 0; a1 < count(X.square_count()); ++a1) {
      for (int a2 : by_left[X.right(a1)]) {
        int src = pair_obj.at({S.src(a1), S.src(a2)});
        int tgt = pair_obj.at({S.tgt(a1), S.tgt(a2)});
        int m   = D.X2.add_morphism(
            "(" + S.morphism(a1).id + "," + S.morphism(a2).id + ")", src, tgt);
        pair_mor[{a1, a2}] = m;
        D.e2.mor_map.push_back(a1);
        D.e0.mor_map.push_back(a2);
        int a = X.hcomp(a1, a2);
        if (a < 0) {
          throw InputError("square composite missing at "
                           + D.X2.morphism(m).id);
        }
        D.e1.mor_map.push_back(a);
      }
    }
    for (auto const& [k, p] : pair_obj) {
      D.X2.set_identity(p, pair_mor.at({S.identity(k.first),
                                        S.identity(k.second)}));
    }
    for (auto const& [k, m] : pair_mor) {
      auto [a1, a2] = k;
      for (auto const& [l, n] : pair_mor) {
        auto [b1, b2] = l;
        if (S.src(b1) != S.tgt(a1) || S.src(b2) != S.tgt(a2)) {
          continue;
        }
        D.X2.set_composite(m, n,
                           pair_mor.at({S.compose(a1, b1), S.compose(a2, b2)}));
      }
    }
    return D;
  }
}  // namespace

ColaxCoherenceData coherence_data(CodomainColaxCategory const& X) {
  return coherence_from(X);
}

ColaxCoherenceData coherence_data(DoubleCategory const& X) {
  return coherence_from(from_double(X));
}

ValidationReport validate_coherence_data(ColaxCoherenceData const& D) {
  ValidationReport r;
  auto add = [&r](std::string const& prefix, ValidationReport const& v) {
    for (auto const& f : v.failures) {
      r.failures.push_back(prefix + ": " + f);
    }
  };
  add("X0", validate_category(D.X0));
  add("X1", validate_category(D.X1));
  add("X2", validate_category(D.X2));
  if (!r.ok()) {
    return r;
  }
  add("d0", validate_functor(D.X1, D.X0, D.d0));
  add("d1", validate_functor(D.X1, D.X0, D.d1));
  add("s", validate_functor(D.X0, D.X1, D.s));
  add("e0", validate_functor(D.X2, D.X1, D.e0));
  add("e1", validate_functor(D.X2, D.X1, D.e1));
  add("e2", validate_functor(D.X2, D.X1, D.e2));
  if (!r.ok()) {
    return r;
  }
  auto same = [](FinFunctor const& F, FinFunctor const& G) {
    return F.obj_map == G.obj_map && F.mor_map == G.mor_map;
  };
  if (!same(compose_functors(D.e0, D.d1), compose_functors(D.e2, D.d0))) {
    r.failures.push_back("d1 e0 != d0 e2");
  }
  if (!same(compose_functors(D.e2, D.d1), compose_functors(D.e1, D.d1))) {
    r.failures.push_back("d1 e2 != d1 e1");
  }
  if (!same(compose_functors(D.s, D.d1), identity_functor(D.X0))) {
    r.failures.push_back("d1 s != 1");
  }
  add("iota", validate_nat_trans(D.X0, D.X0, compose_functors(D.s, D.d0),
                                 identity_functor(D.X0), D.iota));
  add("gamma", validate_nat_trans(D.X2, D.X0, compose_functors(D.e1, D.d0),
                                  compose_functors(D.e0, D.d0), D.gamma));
  return r;
}

ValidationReport validate_cocone(ColaxCoherenceData const& D,
                                 FinCategory const& Y, Cocone const& c) {
  ValidationReport r = validate_functor(D.X0, Y, c.F);
  if (!r.ok()) {
    return r;
  }
  if (c.xi.size() != D.X1.object_count()) {
    throw InputError("cocone needs one component per X1 object");
  }
  auto const& F = c.F;
  for (int g = 0; g < count(D.X1.object_count()); ++g) {
    check_index(c.xi[g], Y.morphism_count(), "cocone component");
    if (Y.src(c.xi[g]) != F.obj_map[D.d1.obj_map[g]]
        || Y.tgt(c.xi[g]) != F.obj_map[D.d0.obj_map[g]]) {
      r.failures.push_back("component at " + D.X1.object_name(g)
                           + " has wrong endpoints");
    }
  }
  if (!r.ok()) {
    return r;
  }
  for (int a = 0; a < count(D.X1.morphism_count()); ++a) {
    int g = D.X1.src(a), h = D.X1.tgt(a);
    int lhs = Y.compose(c.xi[g], F.mor_map[D.d0.mor_map[a]]);
    int rhs = Y.compose(F.mor_map[D.d1.mor_map[a]], c.xi[h]);
    if (lhs != rhs) {
      r.failures.push_back("naturality fails at " + D.X1.morphism(a).id);
    }
  }
  for (int p = 0; p < count(D.X2.object_count()); ++p) {
    int lhs = Y.compose(c.xi[D.e1.obj_map[p]],
                        F.mor_map[D.gamma.components[p]]);
    int rhs = Y.compose(c.xi[D.e2.obj_map[p]], c.xi[D.e0.obj_map[p]]);
    if (lhs != rhs) {
      r.failures.push_back("composition axiom fails at "
                           + D.X2.object_name(p));
    }
  }
  for (int a = 0; a < count(D.X0.object_count()); ++a) {
    int lhs = Y.compose(c.xi[D.s.obj_map[a]], F.mor_map[D.iota.components[a]]);
    if (lhs != Y.identity(F.obj_map[a])) {
      r.failures.push_back("unit axiom fails at " + D.X0.object_name(a));
    }
  }
  return r;
}

ValidationReport validate_cocone_pair(DoubleCategory const& X,
                                      FinCategory const& C,
                                      CoconePair const& P) {
  if (P.F.obj_map != P.xi.obj_map) {
    throw InputError("the two functors disagree on objects");
  }
  ValidationReport r;
  for (auto const& f : validate_functor(X.vertical, C, P.F).failures) {
    r.failures.push_back("F: " + f);
  }
  for (auto const& f :
       validate_functor(horizontal_category(X), C, P.xi).failures) {
    r.failures.push_back("xi: " + f);
  }
  if (!r.ok()) {
    return r;
  }
  for (int a = 0; a < count(X.square_count()); ++a) {
    int lhs = C.compose(P.xi.mor_map[X.top(a)], P.F.mor_map[X.right(a)]);
    int rhs = C.compose(P.F.mor_map[X.left(a)], P.xi.mor_map[X.bottom(a)]);
    if (lhs != rhs) {
      r.failures.push_back("naturality fails at " + X.sqname(a));
    }
  }
  return r;
}

Cocone pair_to_cocone(CoconePair const& P) { return {P.F, P.xi.mor_map}; }

CoconePair cocone_to_pair(DoubleCategory const& X, Cocone const& c) {
  if (c.xi.size() != X.horizontal_count()) {
    throw InputError("cocone needs one component per horizontal");
  }
  return {c.F, {c.F.obj_map, c.xi}};
}

CodescentResult codescent_catead(DoubleCategory const& X) {
  auto            rho = catead_rho(X);
  CodescentResult r;
  r.route       = "catead";
  r.category    = horizontal_category(X);
  r.cocone.F    = identity_functor(X.vertical);
  for (int u = 0; u < count(X.vertical_count()); ++u) {
    r.cocone.F.mor_map[u] = X.top(rho[u]);
  }
  r.cocone.xi = identity_functor(r.category).mor_map;
  return r;
}

CodescentResult codescent_corners(DoubleCategory const& X) {
  if (is_crossed(X).holds) {
    auto            C = cnr(X);
    CodescentResult r;
    r.route = "corners";
    r.cocone.F.obj_map.assign(X.object_count(), -1);
    for (int b = 0; b < count(C.base.object_count()); ++b) {
      r.cocone.F.obj_map[C.object_of[b]] = b;
    }
    for (int u = 0; u < count(X.vertical_count()); ++u) {
      r.cocone.F.mor_map.push_back(C.find({u, X.hunit(X.vcod(u))}));
    }
    for (int g = 0; g < count(X.horizontal_count()); ++g) {
      r.cocone.xi.push_back(C.find({X.vunit(X.hdom(g)), g}));
    }
    r.category = std::move(C.base);
    return r;
  }
  auto Y = from_double(X);
  auto d = is_domain_codiscrete(Y);
  if (!d.holds) {
    throw PreconditionError(
        "corners route needs a crossed or domain-codiscrete double category: "
        + d.witness.dump());
  }
  return cnr_codcolax(Y);
}

CodescentResult cnr_codcolax(CodomainColaxCategory const& X) {
  auto d = is_domain_codiscrete(X);
  if (!d.holds) {
    throw PreconditionError("d1 is not a discrete fibration: "
                            + d.witness.dump());
  }
  auto const&     V   = X.vertical;
  auto            idx = lift_index(X);
  CodescentResult r;
  r.route = "corners";
  auto& C = r.category;
  for (int a = 0; a < count(X.object_count()); ++a) {
    C.add_object(X.oname(a));
  }
  std::map<TopRightCorner, int> index;
  std::vector<TopRightCorner>   corners;
  for (int g = 0; g < count(X.horizontal_count()); ++g) {
    for (int u : V.out(X.hcod(g))) {
      TopRightCorner c{g, u};
      index[c] = C.add_morphism("(" + X.hname(g) + "," + X.vname(u) + ")",
                                X.hdom(g), V.tgt(u));
      corners.push_back(c);
    }
  }
  auto at = [&](int g, int u) {
    auto it = index.find({g, u});
    if (it == index.end()) {
      throw InputError("corner composite leaves the corner set");
    }
    return it->second;
  };
  for (int a = 0; a < count(X.object_count()); ++a) {
    C.set_identity(a, at(X.s_obj[a], X.iota[a]));
  }
  std::vector<std::vector<TopRightCorner>> from(X.object_count());
  for (auto const& c : corners) {
    from[X.hdom(c.g)].push_back(c);
  }
  for (auto const& c1 : corners) {
    for (auto const& c2 : from[V.tgt(c1.u)]) {
      int alpha = lookup(idx, c1.u, c2.g).front();
      int hhat  = X.top(alpha);
      int gh    = X.hcomp_h(c1.g, hhat);
      int w     = V.comp(V.comp(X.gamma_at(c1.g, hhat), X.right(alpha)), c2.u);
      C.set_composite(index.at(c1), index.at(c2), at(gh, w));
    }
  }
  r.cocone.F.obj_map = identity_functor(V).obj_map;
  for (int f = 0; f < count(X.vertical_count()); ++f) {
    int a = V.src(f);
    r.cocone.F.mor_map.push_back(at(X.s_obj[a], V.comp(X.iota[a], f)));
  }
  for (int g = 0; g < count(X.horizontal_count()); ++g) {
    r.cocone.xi.push_back(at(g, V.identity(X.hcod(g))));
  }
  return r;
}

PresentedCategory cocone_presentation(ColaxCoherenceData const& D) {
  PresentedCategory P;
  auto const&       X0 = D.X0;
  int const         nv = count(X0.morphism_count());
  for (int a = 0; a < count(X0.object_count()); ++a) {
    P.add_vertex(X0.object_name(a));
  }
  for (int f = 0; f < nv; ++f) {
    P.add_edge("v:" + X0.morphism(f).id, X0.src(f), X0.tgt(f));
  }
  for (int g = 0; g < count(D.X1.object_count()); ++g) {
    P.add_edge("h:" + D.X1.object_name(g), D.d1.obj_map[g], D.d0.obj_map[g]);
  }
  auto xi = [nv](int g) { return nv + g; };
  // (g1, g2) ~ (g2∘g1, gamma)
  for (int p = 0; p < count(D.X2.object_count()); ++p) {
    int g1 = D.e2.obj_map[p], g2 = D.e0.obj_map[p], g = D.e1.obj_map[p];
    P.add_relation({D.d1.obj_map[g1], {xi(g1), xi(g2)}},
                   {D.d1.obj_map[g1], {xi(g), D.gamma.components[p]}});
  }
  // (s(a), iota_a) ~ ()
  for (int a = 0; a < count(X0.object_count()); ++a) {
    P.add_relation({a, {xi(D.s.obj_map[a]), D.iota.components[a]}}, {a, {}});
  }
  // (g, v) ~ (u, h) per square
  for (int k = 0; k < count(D.X1.morphism_count()); ++k) {
    int g = D.X1.src(k), h = D.X1.tgt(k);
    P.add_relation({D.d1.obj_map[g], {xi(g), D.d0.mor_map[k]}},
                   {D.d1.obj_map[g], {D.d1.mor_map[k], xi(h)}});
  }
  // vertical composites and identities
  for (auto const& [f, g, gf] : X0.composition_entries()) {
    P.add_relation({X0.src(f), {f, g}}, {X0.src(f), {gf}});
  }
  for (int a = 0; a < count(X0.object_count()); ++a) {
    P.add_relation({a, {X0.identity(a)}}, {a, {}});
  }
  return P;
}

Bounded<CodescentResult> codescent_generators(ColaxCoherenceData const& D,
                                              int cap) {
  auto P = cocone_presentation(D);
  P.cap  = cap;
  auto q = quotient_presented(P);
  if (auto* b = std::get_if<BoundExceeded>(&q)) {
    return *b;
  }
  auto&           Q  = std::get<Quotient>(q);
  int const       nv = count(D.X0.morphism_count());
  CodescentResult r;
  r.route            = "genrel";
  r.cocone.F.obj_map = identity_functor(D.X0).obj_map;
  for (int f = 0; f < nv; ++f) {
    r.cocone.F.mor_map.push_back(Q.edge_class[f]);
  }
  for (int g = 0; g < count(D.X1.object_count()); ++g) {
    r.cocone.xi.push_back(Q.edge_class[nv + g]);
  }
  r.category = std::move(Q.category);
  return r;
}

Bounded<CodescentResult> codescent_generators(CodomainColaxCategory const& X,
                                              int cap) {
  return codescent_generators(coherence_data(X), cap);
}

Bounded<CodescentResult> codescent_generators(DoubleCategory const& X,
                                              int cap) {
  return codescent_generators(coherence_data(X), cap);
}

Route parse_route(std::string const& name) {
  if (name == "auto") {
    return Route::automatic;
  }
  if (name == "catead") {
    return Route::catead;
  }
  if (name == "corners") {
    return Route::corners;
  }
  if (name == "genrel") {
    return Route::genrel;
  }
  throw InputError("unknown route '" + name + "'", "/route");
}

std::string route_name(Route r) {
  switch (r) {
    case Route::automatic: return "auto";
    case Route::catead: return "catead";
    case Route::corners: return "corners";
    case Route::genrel: return "genrel";
  }
  return "auto";
}

Bounded<CodescentResult> codescent(DoubleCategory const& X, Route route,
                                   int cap) {
  switch (route) {
    case Route::catead: return codescent_catead(X);
    case Route::corners: return codescent_corners(X);
    case Route::genrel: return codescent_generators(X, cap);
    case Route::automatic: break;
  }
  if (analyze(X)["catead"]) {
    return codescent_catead(X);
  }
  if (is_crossed(X).holds || is_domain_codiscrete(from_double(X)).holds) {
    return codescent_corners(X);
  }
  return codescent_generators(X, cap);
}

Bounded<CodescentResult> codescent(CodomainColaxCategory const& X, Route route,
                                   int cap) {
  switch (route) {
    case Route::catead:
      throw PreconditionError("the catead route needs a double category");
    case Route::corners: return cnr_codcolax(X);
    case Route::genrel: return codescent_generators(X, cap);
    case Route::automatic: break;
  }
  if (is_domain_codiscrete(X).holds) {
    return cnr_codcolax(X);
  }
  return codescent_generators(X, cap);
}

namespace {
  // Graph morphisms from a presentation into Z that satisfy every relation,
  // found by backtracking with single-unknown propagation.
  class ModelSearch {
   public:
    ModelSearch(PresentedCategory const& P, FinCategory const& Z)
        : P_(P), Z_(Z) {
      std::size_t ne = P.edges.size(), nv = P.vertices.size();
      by_edge_.resize(ne);
      by_vertex_.resize(nv);
      for (int r = 0; r < count(P.relations.size()); ++r) {
        auto const& [p, q] = P.relations[r];
        by_vertex_[p.src].push_back(r);
        for (int e : p.edges) {
          by_edge_[e].push_back(r);
        }
        for (int e : q.edges) {
          by_edge_[e].push_back(r);
        }
      }
      // edges in breadth-first order from each vertex
      std::vector<char> seen(ne, 0), vseen(nv, 0);
      std::vector<std::vector<int>> out(nv);
      for (int e = 0; e < count(ne); ++e) {
        out[P.edges[e].src].push_back(e);
      }
      for (int v0 = 0; v0 < count(nv); ++v0) {
        if (vseen[v0]) {
          continue;
        }
        std::deque<int> queue{v0};
        vseen[v0] = 1;
        while (!queue.empty()) {
          int v = queue.front();
          queue.pop_front();
          for (int e : out[v]) {
            if (!seen[e]) {
              seen[e] = 1;
              order_.push_back(e);
            }
            int t = P.edges[e].tgt;
            if (!vseen[t]) {
              vseen[t] = 1;
              queue.push_back(t);
            }
          }
        }
      }
    }

    struct State {
      std::vector<int> obj, edge;
    };

    State initial() const {
      return {std::vector<int>(P_.vertices.size(), -1),
              std::vector<int>(P_.edges.size(), -1)};
    }

    // Assigns and propagates; false on contradiction.
    bool assign_edge(State& s, int e, int z) {
      std::deque<int> work;
      if (!set_edge(s, e, z, work)) {
        return false;
      }
      return propagate(s, work);
    }
    bool assign_object(State& s, int v, int z) {
      std::deque<int> work;
      if (!set_object(s, v, z, work)) {
        return false;
      }
      return propagate(s, work);
    }
    bool propagate_all(State& s) {
      std::deque<int> work;
      for (int r = 0; r < count(P_.relations.size()); ++r) {
        work.push_back(r);
      }
      return propagate(s, work);
    }

    // Calls visit on every complete model extending s until it returns false.
    bool search(State const& s, std::function<bool(State const&)> const& visit) {
      int next = -1;
      for (int e : order_) {
        if (s.edge[e] < 0) {
          next = e;
          break;
        }
      }
      if (next < 0) {
        for (int v = 0; v < count(s.obj.size()); ++v) {
          if (s.obj[v] < 0) {
            for (int z = 0; z < count(Z_.object_count()); ++z) {
              State t = s;
              if (assign_object(t, v, z) && !search(t, visit)) {
                return false;
              }
            }
            return true;
          }
        }
        return visit(s);
      }
      for (int z : candidates(s, next)) {
        State t = s;
        if (assign_edge(t, next, z) && !search(t, visit)) {
          return false;
        }
      }
      return true;
    }

   private:
    std::vector<int> candidates(State const& s, int e) const {
      int              a = s.obj[P_.edges[e].src], b = s.obj[P_.edges[e].tgt];
      std::vector<int> out;
      for (int z = 0; z < count(Z_.morphism_count()); ++z) {
        if ((a < 0 || Z_.src(z) == a) && (b < 0 || Z_.tgt(z) == b)) {
          out.push_back(z);
        }
      }
      return out;
    }

    bool set_object(State& s, int v, int z, std::deque<int>& work) {
      if (s.obj[v] >= 0) {
        return s.obj[v] == z;
      }
      s.obj[v] = z;
      work.insert(work.end(), by_vertex_[v].begin(), by_vertex_[v].end());
      return true;
    }

    bool set_edge(State& s, int e, int z, std::deque<int>& work) {
      if (s.edge[e] >= 0) {
        return s.edge[e] == z;
      }
      if (!set_object(s, P_.edges[e].src, Z_.src(z), work)
          || !set_object(s, P_.edges[e].tgt, Z_.tgt(z), work)) {
        return false;
      }
      s.edge[e] = z;
      work.insert(work.end(), by_edge_[e].begin(), by_edge_[e].end());
      return true;
    }

    // Composite along a path, -1 if something is unassigned; the single
    // unassigned edge position is reported through hole.
    int evaluate(State const& s, Path const& p, int skip, int value) const {
      if (s.obj[p.src] < 0) {
        return -1;
      }
      int m = Z_.identity(s.obj[p.src]);
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        int z = static_cast<int>(i) == skip ? value : s.edge[p.edges[i]];
        if (z < 0 || Z_.tgt(m) != Z_.src(z)) {
          return -1;
        }
        m = Z_.compose(m, z);
      }
      return m;
    }

    bool propagate(State& s, std::deque<int>& work) {
      while (!work.empty()) {
        int r = work.front();
        work.pop_front();
        auto const& [p, q] = P_.relations[r];
        if (s.obj[p.src] < 0) {
          continue;
        }
        int holes = 0, hole_side = 0, hole_pos = -1;
        for (int side = 0; side < 2; ++side) {
          auto const& w = side ? q.edges : p.edges;
          for (std::size_t i = 0; i < w.size(); ++i) {
            if (s.edge[w[i]] < 0) {
              ++holes;
              hole_side = side;
              hole_pos  = static_cast<int>(i);
            }
          }
        }
        if (holes == 0) {
          int x = evaluate(s, p, -1, -1), y = evaluate(s, q, -1, -1);
          if (x < 0 || x != y) {
            return false;
          }
          continue;
        }
        if (holes > 1) {
          continue;
        }
        Path const& open   = hole_side ? q : p;
        Path const& closed = hole_side ? p : q;
        int         e      = open.edges[hole_pos];
        if (std::count(open.edges.begin(), open.edges.end(), e) > 1) {
          continue;
        }
        int target = evaluate(s, closed, -1, -1);
        if (target < 0) {
          return false;
        }
        int found = -1, n = 0;
        for (int z : candidates(s, e)) {
          if (evaluate(s, open, hole_pos, z) == target) {
            found = z;
            ++n;
          }
        }
        if (n == 0) {
          return false;
        }
        if (n == 1 && !set_edge(s, e, found, work)) {
          return false;
        }
      }
      return true;
    }

    PresentedCategory const&      P_;
    FinCategory const&            Z_;
    std::vector<std::vector<int>> by_edge_, by_vertex_;
    std::vector<int>              order_;
  };

  PresentedCategory category_presentation(FinCategory const& Y) {
    PresentedCategory P;
    for (int a = 0; a < count(Y.object_count()); ++a) {
      P.add_vertex(Y.object_name(a));
    }
    for (int f = 0; f < count(Y.morphism_count()); ++f) {
      P.add_edge(Y.morphism(f).id, Y.src(f), Y.tgt(f));
    }
    for (auto const& [f, g, gf] : Y.composition_entries()) {
      P.relations.push_back({{Y.src(f), {f, g}}, {Y.src(f), {gf}}});
    }
    for (int a = 0; a < count(Y.object_count()); ++a) {
      P.relations.push_back({{a, {Y.identity(a)}}, {a, {}}});
    }
    return P;
  }
}  // namespace

std::vector<Cocone> enumerate_cocones(ColaxCoherenceData const& D,
                                      FinCategory const& Z) {
  auto                P  = cocone_presentation(D);
  int const           nv = count(D.X0.morphism_count());
  ModelSearch         S(P, Z);
  std::vector<Cocone> out;
  auto                s = S.initial();
  if (!S.propagate_all(s)) {
    return out;
  }
  S.search(s, [&](ModelSearch::State const& m) {
    Cocone c;
    c.F.obj_map = m.obj;
    c.F.mor_map.assign(m.edge.begin(), m.edge.begin() + nv);
    c.xi.assign(m.edge.begin() + nv, m.edge.end());
    out.push_back(std::move(c));
    return true;
  });
  return out;
}

std::vector<FinFunctor> mediators(FinCategory const& Y, Cocone const& c,
                                  FinCategory const& Z, Cocone const& d,
                                  std::size_t limit) {
  std::vector<FinFunctor> out;
  if (c.F.obj_map.size() != d.F.obj_map.size()
      || c.F.mor_map.size() != d.F.mor_map.size() || c.xi.size() != d.xi.size()) {
    throw InputError("cocones for different coherence data");
  }
  auto        P = category_presentation(Y);
  ModelSearch S(P, Z);
  auto        s  = S.initial();
  bool        ok = true;
  for (std::size_t x = 0; x < c.F.obj_map.size() && ok; ++x) {
    ok = S.assign_object(s, c.F.obj_map[x], d.F.obj_map[x]);
  }
  for (std::size_t f = 0; f < c.F.mor_map.size() && ok; ++f) {
    ok = S.assign_edge(s, c.F.mor_map[f], d.F.mor_map[f]);
  }
  for (std::size_t g = 0; g < c.xi.size() && ok; ++g) {
    ok = S.assign_edge(s, c.xi[g], d.xi[g]);
  }
  if (!ok || !S.propagate_all(s)) {
    return out;
  }
  S.search(s, [&](ModelSearch::State const& m) {
    out.push_back({m.obj, m.edge});
    return out.size() < limit;
  });
  return out;
}

json UniversalReport::to_json() const {
  return {{"holds", holds}, {"categories", categories}, {"cocones", cocones},
          {"witness", witness}};
}

UniversalReport verify_universal_property(ColaxCoherenceData const& D,
                                          CodescentResult const& candidate,
                                          int probe_bound) {
  auto v = validate_cocone(D, candidate.category, candidate.cocone);
  if (!v.ok()) {
    throw PreconditionError("candidate is not a cocone: " + v.failures.front());
  }
  UniversalReport r;
  for (auto const& Z : small_categories(probe_bound)) {
    ++r.categories;
    for (auto const& d : enumerate_cocones(D, Z)) {
      ++r.cocones;
      auto m = mediators(candidate.category, candidate.cocone, Z, d, 2);
      if (m.size() != 1) {
        r.holds   = false;
        r.witness = {{"apex", category_json(Z)},
                     {"cocone", cocone_json(Z, d)},
                     {"mediators", m.size()}};
        return r;
      }
    }
  }
  return r;
}

CodescentResult terminal_candidate(ColaxCoherenceData const& D) {
  CodescentResult r;
  r.route    = "terminal";
  r.category = terminal_category();
  int id     = r.category.identity(0);
  r.cocone.F.obj_map.assign(D.X0.object_count(), 0);
  r.cocone.F.mor_map.assign(D.X0.morphism_count(), id);
  r.cocone.xi.assign(D.X1.object_count(), id);
  return r;
}

json TransposeReport::to_json() const {
  return {{"holds", holds}, {"route", route},
          {"transpose_route", transpose_route}, {"witness", witness}};
}

Bounded<TransposeReport> transpose_invariance(DoubleCategory const& X,
                                              int cap) {
  auto a = codescent(X, Route::automatic, cap);
  if (auto* b = std::get_if<BoundExceeded>(&a)) {
    return *b;
  }
  auto T = dualize(X, DualKind::transpose);
  auto t = codescent(T, Route::automatic, cap);
  if (auto* b = std::get_if<BoundExceeded>(&t)) {
    return *b;
  }
  auto const& A = std::get<CodescentResult>(a);
  auto const& B = std::get<CodescentResult>(t);
  TransposeReport r;
  r.route           = A.route;
  r.transpose_route = B.route;
  Cocone swapped;
  swapped.F.obj_map = B.cocone.F.obj_map;
  swapped.F.mor_map = B.cocone.xi;
  swapped.xi        = B.cocone.F.mor_map;
  auto v = validate_cocone_pair(X, B.category, cocone_to_pair(X, swapped));
  if (!v.ok()) {
    r.holds   = false;
    r.witness = {{"stage", "swapped_cocone"}, {"detail", v.failures.front()}};
    return r;
  }
  auto m = mediators(A.category, A.cocone, B.category, swapped, 2);
  if (m.size() != 1) {
    r.holds   = false;
    r.witness = {{"stage", "mediator"}, {"detail", m.size()}};
    return r;
  }
  r.theta = m.front();
  if (!is_iso_functor(A.category, B.category, r.theta)) {
    r.holds   = false;
    r.witness = {{"stage", "isomorphism"}, {"detail", "mediator is not invertible"}};
  }
  return r;
}

}  // namespace cornerkit
