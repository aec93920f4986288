#include "cornerkit/factsys.hpp"

namespace cornerkit {

namespace {
  struct Factorization {
    int e = -1, m = -1;
  };

  std::vector<Factorization> factorizations(MorphismClassPair const& P,
                                            int f) {
    FinCategory const&         B = P.base;
    std::vector<Factorization> out;
    for (int x = 0; x < static_cast<int>(B.object_count()); ++x) {
      for (int e : B.hom(B.src(f), x)) {
        if (!P.E[e]) {
          continue;
        }
        for (int m : B.hom(x, B.tgt(f))) {
          if (P.M[m] && B.compose(e, m) == f) {
            out.push_back({e, m});
          }
        }
      }
    }
    return out;
  }

  std::string name(MorphismClassPair const& P, int f) {
    return P.base.morphism(f).id;
  }

  json fact_json(MorphismClassPair const& P, Factorization const& p) {
    return json{{"e", name(P, p.e)}, {"m", name(P, p.m)}};
  }

  void add(FactReport& r, std::string verdict, std::optional<json> w) {
    if (w && r.holds) {
      r.holds   = false;
      r.witness = json{{"axiom", verdict}, {"detail", *w}};
    }
    r.verdicts.push_back({std::move(verdict), !w.has_value(),
                          w.value_or(json(nullptr))});
  }

  std::optional<json> missing_factorization(MorphismClassPair const& P) {
    for (int f = 0; f < static_cast<int>(P.base.morphism_count()); ++f) {
      if (factorizations(P, f).empty()) {
        return json{{"morphism", name(P, f)}, {"factorizations", 0}};
      }
    }
    return std::nullopt;
  }

  std::optional<json> unsolvable_lift(MorphismClassPair const& P) {
    FinCategory const& B = P.base;
    int const          n = static_cast<int>(B.morphism_count());
    for (int e = 0; e < n; ++e) {
      if (!P.E[e]) {
        continue;
      }
      for (int m = 0; m < n; ++m) {
        if (!P.M[m]) {
          continue;
        }
        for (int t : B.hom(B.src(e), B.src(m))) {
          int mt = B.compose(t, m);
          if (mt < 0) {
            continue;
          }
          for (int b : B.hom(B.tgt(e), B.tgt(m))) {
            if (B.compose(e, b) != mt) {
              continue;
            }
            if (!solve_lift(P, {t, b, e, m})) {
              return json{{"top", name(P, t)}, {"bottom", name(P, b)},
                          {"left", name(P, e)}, {"right", name(P, m)}};
            }
          }
        }
      }
    }
    return std::nullopt;
  }
}  // namespace

MorphismClassPair corner_classes(CornersCategory const& C) {
  return {C.base, C.E, C.M};
}

Verdict const& FactReport::at(std::string const& name) const {
  for (auto const& v : verdicts) {
    if (v.name == name) {
      return v;
    }
  }
  throw std::out_of_range("no verdict named " + name);
}

json FactReport::to_json() const {
  json v = json::array();
  for (auto const& x : verdicts) {
    json e{{"name", x.name}, {"holds", x.holds}};
    if (!x.holds) {
      e["witness"] = x.witness;
    }
    v.push_back(e);
  }
  return json{{"holds", holds}, {"verdicts", v}};
}

void validate_classes(MorphismClassPair const& P) {
  FinCategory const& B = P.base;
  if (P.E.size() != B.morphism_count() || P.M.size() != B.morphism_count()) {
    throw InputError("class masks do not match the morphism count");
  }
  for (int x = 0; x < static_cast<int>(B.object_count()); ++x) {
    int i = B.identity(x);
    if (!P.E[i] || !P.M[i]) {
      throw InputError("identity " + name(P, i) + " is missing from a class");
    }
  }
  for (auto const& [f, g, gf] : B.composition_entries()) {
    if (P.E[f] && P.E[g] && !P.E[gf]) {
      throw InputError("E is not closed under composition at (" + name(P, f)
                       + ", " + name(P, g) + ")");
    }
    if (P.M[f] && P.M[g] && !P.M[gf]) {
      throw InputError("M is not closed under composition at (" + name(P, f)
                       + ", " + name(P, g) + ")");
    }
  }
}

FactReport is_sfs(MorphismClassPair const& P) {
  validate_classes(P);
  FactReport          r;
  std::optional<json> w;
  for (int f = 0; f < static_cast<int>(P.base.morphism_count()) && !w; ++f) {
    auto fs = factorizations(P, f);
    if (fs.size() != 1) {
      json pairs = json::array();
      for (auto const& p : fs) {
        pairs.push_back(fact_json(P, p));
      }
      w = json{{"morphism", name(P, f)}, {"factorizations", fs.size()},
               {"pairs", pairs}};
    }
  }
  add(r, "unique_factorization", w);
  return r;
}

FactReport is_ofs(MorphismClassPair const& P) {
  validate_classes(P);
  FinCategory const& B = P.base;
  FactReport         r;
  add(r, "factorization_exists", missing_factorization(P));

  std::optional<json> comparison;
  for (int f = 0; f < static_cast<int>(B.morphism_count()) && !comparison;
       ++f) {
    auto fs = factorizations(P, f);
    for (auto const& p : fs) {
      for (auto const& q : fs) {
        std::vector<int> thetas;
        for (int th : B.hom(B.tgt(p.e), B.tgt(q.e))) {
          if (B.compose(p.e, th) == q.e && B.compose(th, q.m) == p.m) {
            thetas.push_back(th);
          }
        }
        if (thetas.size() != 1) {
          json names = json::array();
          for (int th : thetas) {
            names.push_back(name(P, th));
          }
          comparison = json{{"morphism", name(P, f)},
                            {"first", fact_json(P, p)},
                            {"second", fact_json(P, q)},
                            {"comparisons", names}};
          break;
        }
      }
      if (comparison) {
        break;
      }
    }
  }
  add(r, "unique_comparison", comparison);

  std::optional<json> isos;
  for (int f = 0; f < static_cast<int>(B.morphism_count()) && !isos; ++f) {
    bool iso = is_isomorphism(B, f).has_value();
    bool em  = P.E[f] && P.M[f];
    if (iso != em) {
      isos = json{{"morphism", name(P, f)}, {"isomorphism", iso},
                  {"in_E_and_M", em}};
    }
  }
  add(r, "E_and_M_are_isomorphisms", isos);
  return r;
}

FactReport is_wfs(MorphismClassPair const& P) {
  validate_classes(P);
  FinCategory const& B = P.base;
  int const          n = static_cast<int>(B.morphism_count());
  FactReport         r;
  add(r, "factorization_exists", missing_factorization(P));
  add(r, "weak_lifting", unsolvable_lift(P));

  // f is a codomain-retract of e when s∘f = e, r∘e = f and r∘s = 1
  std::optional<json> eret;
  for (int e = 0; e < n && !eret; ++e) {
    if (!P.E[e]) {
      continue;
    }
    for (int rr : B.out(B.tgt(e))) {
      int f = B.compose(e, rr);
      if (f < 0 || P.E[f]) {
        continue;
      }
      for (int s : B.hom(B.tgt(rr), B.tgt(e))) {
        int rs = B.compose(s, rr);
        if (rs >= 0 && B.is_identity(rs) && B.compose(f, s) == e) {
          eret = json{{"morphism", name(P, f)}, {"retract_of", name(P, e)},
                      {"s", name(P, s)}, {"r", name(P, rr)}};
          break;
        }
      }
    }
  }
  add(r, "E_codomain_retracts", eret);

  // f is a domain-retract of m when m∘s = f, f∘r = m and r∘s = 1
  std::optional<json> mret;
  for (int m = 0; m < n && !mret; ++m) {
    if (!P.M[m]) {
      continue;
    }
    for (int s : B.in(B.src(m))) {
      int f = B.compose(s, m);
      if (f < 0 || P.M[f]) {
        continue;
      }
      for (int rr : B.hom(B.src(m), B.src(s))) {
        int rs = B.compose(s, rr);
        if (rs >= 0 && B.is_identity(rs) && B.compose(rr, f) == m) {
          mret = json{{"morphism", name(P, f)}, {"retract_of", name(P, m)},
                      {"s", name(P, s)}, {"r", name(P, rr)}};
          break;
        }
      }
    }
  }
  add(r, "M_domain_retracts", mret);
  return r;
}

std::optional<int> solve_lift(MorphismClassPair const& P,
                              LiftProblem const& p) {
  FinCategory const& B = P.base;
  int const          n = static_cast<int>(B.morphism_count());
  for (int f : {p.top, p.bottom, p.left, p.right}) {
    if (f < 0 || f >= n) {
      throw InputError("lifting problem refers to an unknown morphism");
    }
  }
  if (B.src(p.left) != B.src(p.top) || B.tgt(p.top) != B.src(p.right)
      || B.tgt(p.left) != B.src(p.bottom) || B.tgt(p.bottom) != B.tgt(p.right)) {
    throw InputError("lifting problem edges do not form a square");
  }
  int a = B.compose(p.top, p.right), b = B.compose(p.left, p.bottom);
  if (a < 0 || a != b) {
    throw InputError("lifting problem square does not commute");
  }
  for (int d : B.hom(B.tgt(p.left), B.src(p.right))) {
    if (B.compose(p.left, d) == p.top && B.compose(d, p.right) == p.bottom) {
      return d;
    }
  }
  return std::nullopt;
}

DoubleCategory build_double(MorphismClassPair const& P) {
  validate_classes(P);
  return commutative_squares(P.base, P.E, P.M);
}

json RoundtripReport::to_json() const {
  return json{{"holds", holds}, {"witness", witness}};
}

namespace {
  RoundtripReport fail(std::string stage, json detail) {
    RoundtripReport r;
    r.holds   = false;
    r.witness = json{{"stage", std::move(stage)}, {"detail", std::move(detail)}};
    return r;
  }

  // C -> Cnr(D_{E,M}) sending f to the class of its least factorization.
  std::optional<FinFunctor> counit_functor(MorphismClassPair const& P,
                                           DoubleCategory const& D,
                                           CornersCategory const& CD,
                                           json& why) {
    FinFunctor F;
    for (int x = 0; x < static_cast<int>(P.base.object_count()); ++x) {
      F.obj_map.push_back(CD.base.object_index(P.base.object_name(x)));
    }
    for (int f = 0; f < static_cast<int>(P.base.morphism_count()); ++f) {
      auto fs = factorizations(P, f);
      if (fs.empty()) {
        why = json{{"morphism", name(P, f)}, {"reason", "no factorization"}};
        return std::nullopt;
      }
      int u = D.vertical.morphism_index(name(P, fs[0].e));
      int g = D.squares.object_index(name(P, fs[0].m));
      F.mor_map.push_back(CD.find({u, g}));
    }
    return F;
  }

  std::optional<json> check_counit(MorphismClassPair const& P,
                                   CornersCategory const& CD,
                                   FinFunctor const& F) {
    if (!is_iso_functor(P.base, CD.base, F)) {
      auto v = validate_functor(P.base, CD.base, F);
      return json{{"reason", "not an isomorphism of categories"},
                  {"failures", v.failures}};
    }
    for (int f = 0; f < static_cast<int>(P.base.morphism_count()); ++f) {
      int g = F.mor_map[f];
      if (P.E[f] != CD.E[g] || P.M[f] != CD.M[g]) {
        return json{{"reason", "classes not preserved"},
                    {"morphism", name(P, f)}};
      }
    }
    return std::nullopt;
  }
}  // namespace

RoundtripReport roundtrip(FactKind kind, DoubleCategory const& X) {
  auto        an   = analyze(X);
  std::string pred = kind == FactKind::sfs ? "codomain_discrete"
                                           : "factorization_double_category";
  if (!an[pred]) {
    return fail(pred, an.at(pred).witness);
  }
  auto C  = cnr(X);
  auto P  = corner_classes(C);
  auto fr = kind == FactKind::sfs ? is_sfs(P) : is_ofs(P);
  if (!fr.holds) {
    return fail(kind == FactKind::sfs ? "is_sfs" : "is_ofs", fr.witness);
  }
  auto D = build_double(P);

  RoundtripReport r;
  auto&           U = r.unit;
  for (int x = 0; x < static_cast<int>(X.object_count()); ++x) {
    U.obj.push_back(D.vertical.object_index(X.oname(x)));
  }
  for (int u = 0; u < static_cast<int>(X.vertical_count()); ++u) {
    U.vert.push_back(D.vertical.morphism_index(
        C.name(C.find({u, X.hunit(X.vcod(u))}))));
  }
  for (int g = 0; g < static_cast<int>(X.horizontal_count()); ++g) {
    U.hor.push_back(
        D.squares.object_index(C.name(C.find({X.vunit(X.hdom(g)), g}))));
  }
  SquareIndex idx(D);
  for (int a = 0; a < static_cast<int>(X.square_count()); ++a) {
    auto const& s = idx.by_boundary(U.hor[X.top(a)], U.vert[X.left(a)],
                                    U.vert[X.right(a)], U.hor[X.bottom(a)]);
    if (s.size() != 1) {
      return fail("unit", json{{"square", X.sqname(a)}, {"images", s.size()}});
    }
    U.sq.push_back(s[0]);
  }
  if (!is_double_isomorphism(X, D, U)) {
    auto v = validate_double_functor(X, D, U);
    return fail("unit", json{{"reason", "not a double isomorphism"},
                             {"failures", v.failures}});
  }

  auto CD = cnr(D);
  json why;
  auto F = counit_functor(P, D, CD, why);
  if (!F) {
    return fail("counit", why);
  }
  if (auto w = check_counit(P, CD, *F)) {
    return fail("counit", *w);
  }
  r.counit = *F;
  if (cnr_functor(X, D, U, C, CD).mor_map != F->mor_map) {
    return fail("coherence",
                json{{"reason", "Cnr of the unit differs from the counit"}});
  }
  return r;
}

RoundtripReport roundtrip(FactKind kind, MorphismClassPair const& P) {
  auto fr = kind == FactKind::sfs ? is_sfs(P) : is_ofs(P);
  if (!fr.holds) {
    return fail(kind == FactKind::sfs ? "is_sfs" : "is_ofs", fr.witness);
  }
  auto D = build_double(P);
  auto r = roundtrip(kind, D);
  if (!r.holds) {
    return r;
  }
  auto CD = cnr(D);
  json why;
  auto F = counit_functor(P, D, CD, why);
  if (!F) {
    return fail("counit", why);
  }
  if (auto w = check_counit(P, CD, *F)) {
    return fail("counit", *w);
  }
  r.counit = *F;
  return r;
}

}  // namespace cornerkit

namespace cornerkit {

json UnitReport::to_json() const {
  return {{"holds", holds}, {"route", route}, {"candidates", candidates},
          {"theta", {{"objects", theta.obj_map}, {"morphisms", theta.mor_map}}},
          {"witness", witness}};
}

Bounded<UnitReport> cocone_unit_check(DoubleCategory const& X,
                                      FinCategory const& C,
                                      CoconePair const& target, int cap) {
  auto v = validate_cocone_pair(X, C, target);
  if (!v.ok()) {
    throw InputError("target is not a cocone: " + v.failures.front());
  }
  auto b = codescent(X, Route::automatic, cap);
  if (auto* e = std::get_if<BoundExceeded>(&b)) {
    return *e;
  }
  auto const& cod = std::get<CodescentResult>(b);
  UnitReport  r;
  r.route = cod.route;

  auto m       = mediators(cod.category, cod.cocone, C, pair_to_cocone(target), 2);
  r.candidates = static_cast<int>(m.size());
  if (m.size() != 1) {
    r.holds   = false;
    r.witness = {{"stage", "mediator"}, {"candidates", m.size()}};
    return r;
  }
  r.theta = m.front();

  // D(1, theta, 1) must carry every square of D_{cod X} into D_{G,psi}.
  auto const& Y  = cod.category;
  auto const& F  = cod.cocone.F;
  auto const& xi = cod.cocone.xi;
  auto const& T  = r.theta.mor_map;
  int const   nh = static_cast<int>(X.horizontal_count());
  int const   nv = static_cast<int>(X.vertical_count());
  for (int g = 0; g < nh; ++g) {
    for (int u = 0; u < nv; ++u) {
      if (X.vdom(u) != X.hdom(g)) {
        continue;
      }
      for (int w = 0; w < nv; ++w) {
        if (X.vdom(w) != X.hcod(g)) {
          continue;
        }
        for (int h = 0; h < nh; ++h) {
          if (X.hdom(h) != X.vcod(u) || X.hcod(h) != X.vcod(w)) {
            continue;
          }
          int top = Y.compose(xi[g], F.mor_map[w]);
          if (top != Y.compose(F.mor_map[u], xi[h])) {
            continue;
          }
          if (C.compose(T[xi[g]], T[F.mor_map[w]])
              != C.compose(T[F.mor_map[u]], T[xi[h]])) {
            r.holds   = false;
            r.witness = {{"stage", "square"},
                         {"top", X.hname(g)},
                         {"left", X.vname(u)},
                         {"right", X.vname(w)},
                         {"bottom", X.hname(h)}};
            return r;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace cornerkit
