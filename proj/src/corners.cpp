#include "cornerkit/corners.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "cornerkit/fixtures.hpp"

namespace cornerkit {

namespace {
  struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
      std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    }
    void join(int a, int b) {
      a = find(a), b = find(b);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  };

  json corner_json(DoubleCategory const& X, BottomLeftCorner c) {
    return json{{"u", X.vname(c.u)}, {"g", X.hname(c.g)}};
  }

  std::string corner_name(DoubleCategory const& X, BottomLeftCorner c) {
    return "[" + X.vname(c.u) + "," + X.hname(c.g) + "]";
  }

  // Opcartesian fillers of each top-right corner, in square order.
  struct FillerTable {
    SquareIndex       idx;
    std::vector<char> opcart;
    explicit FillerTable(DoubleCategory const& X)
        : idx(X), opcart(opcartesian_squares(X)) {}
    std::vector<int> fillers(int g, int v) const {
      std::vector<int> out;
      for (int a : idx.by_top_right(g, v)) {
        if (opcart[a]) {
          out.push_back(a);
        }
      }
      return out;
    }
  };

  BottomLeftCorner through(DoubleCategory const& X, BottomLeftCorner c1,
                           BottomLeftCorner c2, int beta) {
    return {X.vcomp_v(c1.u, X.left(beta)), X.hcomp_h(X.bottom(beta), c2.g)};
  }

  CornersCategory build(DoubleCategory const& X, CornerAdmit const& admit,
                        FillerChoice choice) {
    auto            P = corner_equivalence(X);
    FillerTable     T(X);
    CornersCategory C;
    std::vector<int> obj(X.object_count(), -1);
    for (int x = 0; x < static_cast<int>(X.object_count()); ++x) {
      if (admit({X.vunit(x), X.hunit(x)})) {
        obj[x] = C.base.add_object(X.oname(x));
        C.object_of.push_back(x);
      }
    }
    for (auto const& k : P.classes) {
      if (obj[k.src] < 0 || obj[k.tgt] < 0 || !admit(k.canonical())) {
        continue;
      }
      int f = C.base.add_morphism(corner_name(X, k.canonical()), obj[k.src],
                                  obj[k.tgt]);
      bool e = false, m = false;
      for (auto c : k.representatives) {
        C.index[c] = f;
        e = e || c.g == X.hunit(X.hdom(c.g));
        m = m || c.u == X.vunit(X.vdom(c.u));
      }
      C.classes.push_back(k);
      C.E.push_back(e);
      C.M.push_back(m);
    }
    for (int x = 0; x < static_cast<int>(X.object_count()); ++x) {
      if (obj[x] >= 0) {
        C.base.set_identity(obj[x], C.find({X.vunit(x), X.hunit(x)}));
      }
    }
    int const n = static_cast<int>(C.base.morphism_count());
    for (int f = 0; f < n; ++f) {
      auto c1 = C.classes[f].canonical();
      for (int g : C.base.out(C.base.tgt(f))) {
        auto c2 = C.classes[g].canonical();
        auto fs = T.fillers(c1.g, c2.u);
        if (fs.empty()) {
          continue;
        }
        int  beta = choice == FillerChoice::least ? fs.front() : fs.back();
        auto c    = through(X, c1, c2, beta);
        int  gf   = C.find(c);
        if (gf >= 0) {
          C.base.set_composite(f, g, gf);
        }
      }
    }
    return C;
  }
}  // namespace

int CornerPartition::class_index(BottomLeftCorner c) const {
  auto it = std::lower_bound(corners.begin(), corners.end(), c);
  if (it == corners.end() || *it != c) {
    return -1;
  }
  return class_of[it - corners.begin()];
}

CornerPartition corner_equivalence(DoubleCategory const& X) {
  CornerPartition P;
  P.corners = bottom_left_corners(X);
  std::sort(P.corners.begin(), P.corners.end());
  std::unordered_map<std::uint64_t, int> at;
  for (int i = 0; i < static_cast<int>(P.corners.size()); ++i) {
    at[pair_key(P.corners[i].u, P.corners[i].g)] = i;
  }
  UnionFind                        uf(P.corners.size());
  std::unordered_set<std::uint64_t> cells;
  for (int b = 0; b < static_cast<int>(X.square_count()); ++b) {
    int g = X.top(b);
    if (X.right(b) != X.vunit(X.hcod(g))) {
      continue;
    }
    int theta = X.left(b), g2 = X.bottom(b);
    for (int u : X.vertical.in(X.hdom(g))) {
      int i = at.at(pair_key(u, g));
      int j = at.at(pair_key(X.vcomp_v(u, theta), g2));
      uf.join(i, j);
      cells.insert(pair_key(i, j));
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(P.corners.size()); ++i) {
    groups[uf.find(i)].push_back(i);
  }
  // roots are the least member, so map order is canonical order
  P.class_of.assign(P.corners.size(), -1);
  for (auto const& [root, members] : groups) {
    CornerClass k;
    auto        c0 = P.corners[members.front()];
    k.src          = X.vdom(c0.u);
    k.tgt          = X.hcod(c0.g);
    for (int i : members) {
      k.representatives.push_back(P.corners[i]);
      P.class_of[i] = static_cast<int>(P.classes.size());
    }
    for (std::size_t s = 0; s < members.size() && P.single_step; ++s) {
      for (std::size_t t = s + 1; t < members.size(); ++t) {
        int i = members[s], j = members[t];
        if (!cells.count(pair_key(i, j)) && !cells.count(pair_key(j, i))) {
          P.single_step = false;
          break;
        }
      }
    }
    P.classes.push_back(std::move(k));
  }
  return P;
}

CornersCategory cnr(DoubleCategory const& X, FillerChoice choice) {
  auto crossed = is_crossed(X);
  if (!crossed.holds) {
    throw PreconditionError("corners need a crossed double category: "
                            + crossed.witness.dump());
  }
  auto C = build(X, [](BottomLeftCorner) { return true; }, choice);
  for (int f = 0; f < static_cast<int>(C.base.morphism_count()); ++f) {
    for (int g : C.base.out(C.base.tgt(f))) {
      if (!C.base.has_composite(f, g)) {
        throw PreconditionError("composite of " + C.name(f) + " and "
                                + C.name(g) + " is not a corner class");
      }
    }
  }
  return C;
}

CornersCategory cnr_partial(DoubleCategory const& X, CornerAdmit const& admit,
                            FillerChoice choice) {
  return build(X, admit, choice);
}

FillerReport check_filler_independence(DoubleCategory const& X,
                                       CornersCategory const& C) {
  FillerReport                  rep;
  FillerTable                   T(X);
  std::set<std::pair<int, int>> multi;
  int const n = static_cast<int>(C.base.morphism_count());
  for (int f = 0; f < n; ++f) {
    for (int g : C.base.out(C.base.tgt(f))) {
      int want = C.base.compose(f, g);
      if (want < 0) {
        continue;
      }
      for (auto c1 : C.classes[f].representatives) {
        for (auto c2 : C.classes[g].representatives) {
          auto fs = T.fillers(c1.g, c2.u);
          if (fs.size() > 1) {
            multi.insert({c1.g, c2.u});
          }
          for (int beta : fs) {
            ++rep.instances;
            int got = C.find(through(X, c1, c2, beta));
            if (got != want && rep.failures.size() < 16) {
              rep.failures.push_back(
                  corner_name(X, c1) + " then " + corner_name(X, c2)
                  + " through " + X.sqname(beta) + " gives "
                  + (got < 0 ? std::string("no class") : C.name(got))
                  + " instead of " + C.name(want));
            }
          }
        }
      }
    }
  }
  rep.multi_filler_corners = multi.size();
  rep.ok                   = rep.failures.empty();
  return rep;
}

FinFunctor cnr_functor(DoubleCategory const& X, DoubleCategory const& Y,
                       DoubleFunctor const& F, CornersCategory const& CX,
                       CornersCategory const& CY) {
  auto v = validate_double_functor(X, Y, F);
  if (!v.ok()) {
    throw InputError("not a double functor: " + v.failures.front());
  }
  FinFunctor G;
  for (int x : CX.object_of) {
    int y  = F.obj[x];
    auto it = std::find(CY.object_of.begin(), CY.object_of.end(), y);
    if (it == CY.object_of.end()) {
      throw InputError("object " + Y.oname(y) + " missing from the target");
    }
    G.obj_map.push_back(static_cast<int>(it - CY.object_of.begin()));
  }
  for (auto const& k : CX.classes) {
    auto c = k.canonical();
    int  f = CY.find({F.vert[c.u], F.hor[c.g]});
    if (f < 0) {
      throw InputError("image of " + corner_name(X, c) + " is not a corner");
    }
    G.mor_map.push_back(f);
  }
  auto r = validate_functor(CX.base, CY.base, G);
  if (!r.ok()) {
    throw PreconditionError("induced map is not a functor: " + r.failures.front());
  }
  return G;
}

PropertyReport check_naturality(DoubleCategory const& X,
                                CornersCategory const& C) {
  PropertyReport rep;
  for (int a = 0; a < static_cast<int>(X.square_count()); ++a) {
    int m = X.top(a), e2 = X.left(a), e = X.right(a), m2 = X.bottom(a);
    int E2 = C.find({e2, X.hunit(X.vcod(e2))});
    int M2 = C.find({X.vunit(X.hdom(m2)), m2});
    int M1 = C.find({X.vunit(X.hdom(m)), m});
    int E1 = C.find({e, X.hunit(X.vcod(e))});
    if (E2 < 0 || M2 < 0 || M1 < 0 || E1 < 0) {
      continue;  // outside a truncation
    }
    ++rep.instances;
    int lhs = C.base.compose(E2, M2), rhs = C.base.compose(M1, E1);
    if (lhs < 0 || lhs != rhs) {
      if (rep.witness.is_null()) {
        rep.witness = json{{"square", X.sqname(a)},
                           {"lhs", lhs < 0 ? json(nullptr) : json(C.name(lhs))},
                           {"rhs", rhs < 0 ? json(nullptr) : json(C.name(rhs))}};
      }
      rep.failures.push_back("naturality fails at square " + X.sqname(a));
    }
  }
  return rep;
}

PropertyReport check_weak_orthogonality(CornersCategory const& C) {
  PropertyReport     rep;
  FinCategory const& B = C.base;
  int const          n = static_cast<int>(B.morphism_count());
  for (int e = 0; e < n; ++e) {
    if (!C.E[e]) {
      continue;
    }
    for (int m = 0; m < n; ++m) {
      if (!C.M[m]) {
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
          ++rep.instances;
          bool found = false;
          for (int d : B.hom(B.tgt(e), B.src(m))) {
            if (B.compose(e, d) == t && B.compose(d, m) == b) {
              found = true;
              break;
            }
          }
          if (!found) {
            if (rep.witness.is_null()) {
              rep.witness = json{{"left", C.name(e)}, {"right", C.name(m)},
                                 {"top", C.name(t)}, {"bottom", C.name(b)}};
            }
            rep.failures.push_back("no diagonal for " + C.name(e) + " against "
                                   + C.name(m));
          }
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (!C.E[x]) {
      continue;
    }
    for (int y : B.out(B.tgt(x))) {
      int yx = B.compose(x, y);
      if (yx >= 0 && C.E[yx] && !C.E[y]) {
        if (rep.witness.is_null()) {
          rep.witness = json{{"right_cancellation", C.name(y)},
                             {"after", C.name(x)}};
        }
        rep.failures.push_back("E is not right cancellative at " + C.name(y));
      }
    }
  }
  return rep;
}

PropertyReport check_weak_orthogonality(DoubleCategory const& X) {
  auto opcart = opcartesian_squares(X);
  for (int a = 0; a < static_cast<int>(X.square_count()); ++a) {
    if (!opcart[a]) {
      throw PreconditionError("square " + X.sqname(a) + " is not opcartesian");
    }
  }
  return check_weak_orthogonality(cnr(X));
}

std::vector<CornerClass> bounded_span_hom(int a, int b, int apex_bound) {
  auto F = span_bounded(std::max(a, b), apex_bound);
  auto P = corner_equivalence(F.X);
  std::vector<CornerClass> out;
  for (auto const& k : P.classes) {
    if (F.size(k.src) == a && F.size(k.tgt) == b && F.admits(k.canonical())) {
      out.push_back(k);
    }
  }
  return out;
}

}  // namespace cornerkit
