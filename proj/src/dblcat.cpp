#include "cornerkit/dblcat.hpp"

#include <algorithm>
#include <numeric>

namespace cornerkit {

namespace {
  std::vector<int> const nothing;

  template <typename Map>
  std::vector<int> const& lookup(Map const& m, std::uint64_t k) {
    auto it = m.find(k);
    return it == m.end() ? nothing : it->second;
  }

  json square_json(DoubleCategory const& X, int a) {
    return json{{"square", X.sqname(a)},
                {"top", X.hname(X.top(a))},
                {"left", X.vname(X.left(a))},
                {"right", X.vname(X.right(a))},
                {"bottom", X.hname(X.bottom(a))}};
  }

  void cap_push(ValidationReport& r, std::string s) {
    if (r.failures.size() < 64) {
      r.failures.push_back(std::move(s));
    }
  }
}  // namespace

void DoubleCategory::fill_unit_hcomps() {
  for (int g = 0; g < static_cast<int>(horizontal_count()); ++g) {
    int l = hunit(hdom(g)), r = hunit(hcod(g));
    hcomp_obj.try_emplace(pair_key(l, g), g);
    hcomp_obj.try_emplace(pair_key(g, r), g);
  }
  for (int a = 0; a < static_cast<int>(square_count()); ++a) {
    hcomp_sq.try_emplace(pair_key(hid(left(a)), a), a);
    hcomp_sq.try_emplace(pair_key(a, hid(right(a))), a);
  }
}

bool DoubleCategory::operator==(DoubleCategory const& o) const {
  return vertical == o.vertical && squares == o.squares && d1_obj == o.d1_obj
         && d0_obj == o.d0_obj && d1_mor == o.d1_mor && d0_mor == o.d0_mor
         && s_obj == o.s_obj && s_mor == o.s_mor && hcomp_obj == o.hcomp_obj
         && hcomp_sq == o.hcomp_sq;
}

SquareIndex::SquareIndex(DoubleCategory const& X) {
  top_.resize(X.horizontal_count());
  bottom_.resize(X.horizontal_count());
  left_.resize(X.vertical_count());
  for (int a = 0; a < static_cast<int>(X.square_count()); ++a) {
    top_right_[pair_key(X.top(a), X.right(a))].push_back(a);
    left_bottom_[pair_key(X.left(a), X.bottom(a))].push_back(a);
    bottom_right_[pair_key(X.bottom(a), X.right(a))].push_back(a);
    top_[X.top(a)].push_back(a);
    bottom_[X.bottom(a)].push_back(a);
    left_[X.left(a)].push_back(a);
    boundary_[{X.top(a), X.left(a), X.right(a), X.bottom(a)}].push_back(a);
  }
}

std::vector<int> const& SquareIndex::by_top_right(int g, int v) const {
  return lookup(top_right_, pair_key(g, v));
}
std::vector<int> const& SquareIndex::by_left_bottom(int u, int h) const {
  return lookup(left_bottom_, pair_key(u, h));
}
std::vector<int> const& SquareIndex::by_bottom_right(int h, int v) const {
  return lookup(bottom_right_, pair_key(h, v));
}
std::vector<int> const& SquareIndex::by_top(int g) const { return top_[g]; }
std::vector<int> const& SquareIndex::by_bottom(int h) const {
  return bottom_[h];
}
std::vector<int> const& SquareIndex::by_left(int u) const { return left_[u]; }
std::vector<int> const& SquareIndex::by_boundary(int g, int u, int v,
                                                 int h) const {
  auto it = boundary_.find({g, u, v, h});
  return it == boundary_.end() ? nothing : it->second;
}

ValidationReport validate_double(DoubleCategory const& X) {
  ValidationReport r;
  int const no = static_cast<int>(X.object_count());
  int const nh = static_cast<int>(X.horizontal_count());
  int const nv = static_cast<int>(X.vertical_count());
  int const ns = static_cast<int>(X.square_count());
  if (static_cast<int>(X.d1_obj.size()) != nh
      || static_cast<int>(X.d0_obj.size()) != nh
      || static_cast<int>(X.d1_mor.size()) != ns
      || static_cast<int>(X.d0_mor.size()) != ns
      || static_cast<int>(X.s_obj.size()) != no
      || static_cast<int>(X.s_mor.size()) != nv) {
    throw InputError("double category tables have the wrong size");
  }
  auto in_range = [](std::vector<int> const& v, int n) {
    return std::all_of(v.begin(), v.end(),
                       [n](int x) { return x >= 0 && x < n; });
  };
  if (!in_range(X.d1_obj, no) || !in_range(X.d0_obj, no)
      || !in_range(X.d1_mor, nv) || !in_range(X.d0_mor, nv)
      || !in_range(X.s_obj, nh) || !in_range(X.s_mor, ns)) {
    throw InputError("double category tables refer to unknown ids");
  }
  for (auto const& [k, v] : X.hcomp_obj) {
    int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
    if (a >= nh || b >= nh || v < 0 || v >= nh) {
      throw InputError("hcomp_obj refers to unknown horizontals");
    }
  }
  for (auto const& [k, v] : X.hcomp_sq) {
    int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
    if (a >= ns || b >= ns || v < 0 || v >= ns) {
      throw InputError("hcomp_sq refers to unknown squares");
    }
  }
  for (auto const& f : validate_category(X.vertical).failures) {
    cap_push(r, "vertical: " + f);
  }
  for (auto const& f : validate_category(X.squares).failures) {
    cap_push(r, "squares: " + f);
  }
  if (!r.ok()) {
    return r;
  }
  // d1, d0 are functors X1 -> X0
  for (int a = 0; a < ns; ++a) {
    int g = X.top(a), h = X.bottom(a);
    if (X.vdom(X.left(a)) != X.hdom(g) || X.vcod(X.left(a)) != X.hdom(h)
        || X.vdom(X.right(a)) != X.hcod(g) || X.vcod(X.right(a)) != X.hcod(h)) {
      cap_push(r, "boundary mismatch at square " + X.sqname(a));
    }
  }
  for (int g = 0; g < nh; ++g) {
    if (X.left(X.vid(g)) != X.vunit(X.hdom(g))
        || X.right(X.vid(g)) != X.vunit(X.hcod(g))) {
      cap_push(r, "vertical identity square of " + X.hname(g)
                      + " has non-identity sides");
    }
  }
  for (auto const& [a, b, ab] : X.squares.composition_entries()) {
    if (X.left(ab) != X.vcomp_v(X.left(a), X.left(b))
        || X.right(ab) != X.vcomp_v(X.right(a), X.right(b))) {
      cap_push(r, "vertical composite of (" + X.sqname(a) + ", " + X.sqname(b)
                      + ") has wrong sides");
    }
  }
  // s is a functor X0 -> X1 splitting d1 and d0
  for (int x = 0; x < no; ++x) {
    int i = X.hunit(x);
    if (X.hdom(i) != x || X.hcod(i) != x) {
      cap_push(r, "horizontal identity of " + X.oname(x)
                      + " has wrong endpoints");
    }
    if (X.hid(X.vunit(x)) != X.vid(i)) {
      cap_push(r, "s does not preserve the identity at " + X.oname(x));
    }
  }
  for (int u = 0; u < nv; ++u) {
    int a = X.hid(u);
    if (X.left(a) != u || X.right(a) != u || X.top(a) != X.hunit(X.vdom(u))
        || X.bottom(a) != X.hunit(X.vcod(u))) {
      cap_push(r, "horizontal identity square of " + X.vname(u)
                      + " has the wrong boundary");
    }
  }
  for (auto const& [u, v, vu] : X.vertical.composition_entries()) {
    if (X.vcomp(X.hid(u), X.hid(v)) != X.hid(vu)) {
      cap_push(r, "s does not preserve the composite (" + X.vname(u) + ", "
                      + X.vname(v) + ")");
    }
  }
  if (!r.ok()) {
    return r;
  }
  // horizontal composition of horizontals
  for (int g1 = 0; g1 < nh; ++g1) {
    for (int g2 = 0; g2 < nh; ++g2) {
      bool composable = X.hcod(g1) == X.hdom(g2);
      int  g21        = X.hcomp_h(g1, g2);
      if (composable != (g21 >= 0)) {
        cap_push(r, "hcomp_obj " + std::string(composable ? "misses" : "has")
                        + " the pair (" + X.hname(g1) + ", " + X.hname(g2)
                        + ")");
      } else if (composable
                 && (X.hdom(g21) != X.hdom(g1) || X.hcod(g21) != X.hcod(g2))) {
        cap_push(r, "hcomp_obj (" + X.hname(g1) + ", " + X.hname(g2)
                        + ") has wrong endpoints");
      }
    }
    if (X.hcomp_h(X.hunit(X.hdom(g1)), g1) != g1
        || X.hcomp_h(g1, X.hunit(X.hcod(g1))) != g1) {
      cap_push(r, "horizontal unit law fails at " + X.hname(g1));
    }
  }
  if (!r.ok()) {
    return r;
  }
  SquareIndex idx(X);
  for (int g1 = 0; g1 < nh; ++g1) {
    for (int g2 = 0; g2 < nh; ++g2) {
      int g21 = X.hcomp_h(g1, g2);
      if (g21 < 0) {
        continue;
      }
      for (int g3 = 0; g3 < nh; ++g3) {
        int g32 = X.hcomp_h(g2, g3);
        if (g32 >= 0 && X.hcomp_h(g21, g3) != X.hcomp_h(g1, g32)) {
          cap_push(r, "horizontal associativity fails at (" + X.hname(g1)
                          + ", " + X.hname(g2) + ", " + X.hname(g3) + ")");
        }
      }
    }
  }
  // horizontal composition of squares
  for (int a = 0; a < ns; ++a) {
    for (int b = 0; b < ns; ++b) {
      bool composable = X.right(a) == X.left(b);
      int  ab         = X.hcomp(a, b);
      if (composable != (ab >= 0)) {
        cap_push(r, "hcomp_sq " + std::string(composable ? "misses" : "has")
                        + " the pair (" + X.sqname(a) + ", " + X.sqname(b)
                        + ")");
      } else if (composable
                 && (X.top(ab) != X.hcomp_h(X.top(a), X.top(b))
                     || X.bottom(ab) != X.hcomp_h(X.bottom(a), X.bottom(b))
                     || X.left(ab) != X.left(a) || X.right(ab) != X.right(b))) {
        cap_push(r, "hcomp_sq (" + X.sqname(a) + ", " + X.sqname(b)
                        + ") has the wrong boundary");
      }
    }
    if (X.hcomp(X.hid(X.left(a)), a) != a || X.hcomp(a, X.hid(X.right(a))) != a) {
      cap_push(r, "horizontal unit law fails at square " + X.sqname(a));
    }
  }
  if (!r.ok()) {
    return r;
  }
  for (int a = 0; a < ns; ++a) {
    for (int b : idx.by_left(X.right(a))) {
      int ab = X.hcomp(a, b);
      for (int c : idx.by_left(X.right(b))) {
        if (X.hcomp(ab, c) != X.hcomp(a, X.hcomp(b, c))) {
          cap_push(r, "horizontal associativity fails at squares ("
                          + X.sqname(a) + ", " + X.sqname(b) + ", "
                          + X.sqname(c) + ")");
        }
      }
    }
  }
  // vertical identities compose horizontally to vertical identities
  for (auto const& [k, g21] : X.hcomp_obj) {
    int g1 = static_cast<int>(k >> 32), g2 = static_cast<int>(k & 0xffffffffu);
    if (X.hcomp(X.vid(g1), X.vid(g2)) != X.vid(g21)) {
      cap_push(r, "vertical identity squares of (" + X.hname(g1) + ", "
                      + X.hname(g2) + ") do not compose to an identity");
    }
  }
  // interchange
  for (int a1 = 0; a1 < ns; ++a1) {
    for (int a2 : idx.by_left(X.right(a1))) {
      int a12 = X.hcomp(a1, a2);
      for (int b1 : X.squares.out(X.bottom(a1))) {
        for (int b2 : X.squares.out(X.bottom(a2))) {
          if (X.left(b2) != X.right(b1)) {
            continue;
          }
          int lhs = X.hcomp(X.vcomp(a1, b1), X.vcomp(a2, b2));
          int rhs = X.vcomp(a12, X.hcomp(b1, b2));
          if (lhs != rhs) {
            cap_push(r, "interchange fails at (" + X.sqname(a1) + ", "
                            + X.sqname(a2) + ", " + X.sqname(b1) + ", "
                            + X.sqname(b2) + ")");
          }
        }
      }
    }
  }
  return r;
}

ValidationReport validate_double_functor(DoubleCategory const& X,
                                         DoubleCategory const& Y,
                                         DoubleFunctor const& F) {
  ValidationReport r;
  if (F.obj.size() != X.object_count() || F.vert.size() != X.vertical_count()
      || F.hor.size() != X.horizontal_count()
      || F.sq.size() != X.square_count()) {
    throw InputError("double functor tables do not cover the source");
  }
  FinFunctor F0{F.obj, F.vert};
  for (auto const& f : validate_functor(X.vertical, Y.vertical, F0).failures) {
    cap_push(r, "vertical: " + f);
  }
  FinFunctor F1{F.hor, F.sq};
  for (auto const& f : validate_functor(X.squares, Y.squares, F1).failures) {
    cap_push(r, "squares: " + f);
  }
  if (!r.ok()) {
    return r;
  }
  for (int g = 0; g < static_cast<int>(X.horizontal_count()); ++g) {
    if (Y.hdom(F.hor[g]) != F.obj[X.hdom(g)]
        || Y.hcod(F.hor[g]) != F.obj[X.hcod(g)]) {
      cap_push(r, "horizontal endpoints not preserved at " + X.hname(g));
    }
  }
  for (int a = 0; a < static_cast<int>(X.square_count()); ++a) {
    if (Y.left(F.sq[a]) != F.vert[X.left(a)]
        || Y.right(F.sq[a]) != F.vert[X.right(a)]) {
      cap_push(r, "square sides not preserved at " + X.sqname(a));
    }
  }
  for (int x = 0; x < static_cast<int>(X.object_count()); ++x) {
    if (F.hor[X.hunit(x)] != Y.hunit(F.obj[x])) {
      cap_push(r, "horizontal identity not preserved at " + X.oname(x));
    }
  }
  for (int u = 0; u < static_cast<int>(X.vertical_count()); ++u) {
    if (F.sq[X.hid(u)] != Y.hid(F.vert[u])) {
      cap_push(r, "horizontal identity square not preserved at " + X.vname(u));
    }
  }
  for (auto const& [k, v] : X.hcomp_obj) {
    int g1 = static_cast<int>(k >> 32), g2 = static_cast<int>(k & 0xffffffffu);
    if (Y.hcomp_h(F.hor[g1], F.hor[g2]) != F.hor[v]) {
      cap_push(r, "horizontal composite not preserved at (" + X.hname(g1) + ", "
                      + X.hname(g2) + ")");
    }
  }
  for (auto const& [k, v] : X.hcomp_sq) {
    int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
    if (Y.hcomp(F.sq[a], F.sq[b]) != F.sq[v]) {
      cap_push(r, "horizontal square composite not preserved at ("
                      + X.sqname(a) + ", " + X.sqname(b) + ")");
    }
  }
  return r;
}

DoubleFunctor identity_double_functor(DoubleCategory const& X) {
  DoubleFunctor F;
  auto iota = [](std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
  };
  F.obj  = iota(X.object_count());
  F.vert = iota(X.vertical_count());
  F.hor  = iota(X.horizontal_count());
  F.sq   = iota(X.square_count());
  return F;
}

bool is_double_isomorphism(DoubleCategory const& X, DoubleCategory const& Y,
                           DoubleFunctor const& F) {
  if (!validate_double_functor(X, Y, F).ok()) {
    return false;
  }
  auto bijective = [](std::vector<int> const& m, std::size_t n) {
    if (m.size() != n) {
      return false;
    }
    std::vector<char> hit(n, 0);
    for (int x : m) {
      if (hit[x]++) {
        return false;
      }
    }
    return true;
  };
  return bijective(F.obj, Y.object_count())
         && bijective(F.vert, Y.vertical_count())
         && bijective(F.hor, Y.horizontal_count())
         && bijective(F.sq, Y.square_count());
}

FinCategory horizontal_category(DoubleCategory const& X) {
  FinCategory H;
  for (int x = 0; x < static_cast<int>(X.object_count()); ++x) {
    H.add_object(X.oname(x));
  }
  for (int g = 0; g < static_cast<int>(X.horizontal_count()); ++g) {
    H.add_morphism(X.hname(g), X.hdom(g), X.hcod(g));
  }
  for (int x = 0; x < static_cast<int>(X.object_count()); ++x) {
    H.set_identity(x, X.hunit(x));
  }
  for (auto const& [k, v] : X.hcomp_obj) {
    H.set_composite(static_cast<int>(k >> 32),
                    static_cast<int>(k & 0xffffffffu), v);
  }
  return H;
}

FinCategory horizontal_square_category(DoubleCategory const& X) {
  FinCategory S;
  for (int u = 0; u < static_cast<int>(X.vertical_count()); ++u) {
    S.add_object(X.vname(u));
  }
  for (int a = 0; a < static_cast<int>(X.square_count()); ++a) {
    S.add_morphism(X.sqname(a), X.left(a), X.right(a));
  }
  for (int u = 0; u < static_cast<int>(X.vertical_count()); ++u) {
    S.set_identity(u, X.hid(u));
  }
  for (auto const& [k, v] : X.hcomp_sq) {
    S.set_composite(static_cast<int>(k >> 32),
                    static_cast<int>(k & 0xffffffffu), v);
  }
  return S;
}

namespace {
  DoubleCategory transpose(DoubleCategory const& X) {
    DoubleCategory T;
    T.vertical = horizontal_category(X);
    T.squares  = horizontal_square_category(X);
    for (int u = 0; u < static_cast<int>(X.vertical_count()); ++u) {
      T.d1_obj.push_back(X.vdom(u));
      T.d0_obj.push_back(X.vcod(u));
    }
    for (int a = 0; a < static_cast<int>(X.square_count()); ++a) {
      T.d1_mor.push_back(X.top(a));
      T.d0_mor.push_back(X.bottom(a));
    }
    for (int x = 0; x < static_cast<int>(X.object_count()); ++x) {
      T.s_obj.push_back(X.vunit(x));
    }
    for (int g = 0; g < static_cast<int>(X.horizontal_count()); ++g) {
      T.s_mor.push_back(X.vid(g));
    }
    T.hcomp_obj = X.vertical.composition_table();
    T.hcomp_sq  = X.squares.composition_table();
    return T;
  }

  DoubleCategory vertical_dual(DoubleCategory const& X) {
    DoubleCategory V = X;
    V.vertical       = opposite(X.vertical);
    V.squares        = opposite(X.squares);
    return V;
  }

  std::unordered_map<std::uint64_t, int> flip(
      std::unordered_map<std::uint64_t, int> const& m) {
    std::unordered_map<std::uint64_t, int> out;
    for (auto const& [k, v] : m) {
      out.emplace(pair_key(static_cast<int>(k & 0xffffffffu),
                           static_cast<int>(k >> 32)),
                  v);
    }
    return out;
  }

  DoubleCategory horizontal_dual(DoubleCategory const& X) {
    DoubleCategory H = X;
    std::swap(H.d1_obj, H.d0_obj);
    std::swap(H.d1_mor, H.d0_mor);
    H.hcomp_obj = flip(X.hcomp_obj);
    H.hcomp_sq  = flip(X.hcomp_sq);
    return H;
  }
}  // namespace

DoubleCategory dualize(DoubleCategory const& X, DualKind kind) {
  switch (kind) {
    case DualKind::transpose:
      return transpose(X);
    case DualKind::vertical:
      return vertical_dual(X);
    case DualKind::horizontal:
      return horizontal_dual(X);
    case DualKind::star:
      return transpose(horizontal_dual(vertical_dual(X)));
  }
  return X;
}

DoubleCategory commutative_squares(
    FinCategory const& C, std::vector<char> const& V,
    std::vector<char> const& H,
    std::function<bool(int, int, int, int)> const& keep) {
  int const nm = static_cast<int>(C.morphism_count());
  int const no = static_cast<int>(C.object_count());
  DoubleCategory X;
  std::vector<int> vmap(nm, -1), hmap(nm, -1), vback, hback;
  for (int x = 0; x < no; ++x) {
    X.vertical.add_object(C.object_name(x));
  }
  for (int f = 0; f < nm; ++f) {
    if (V[f]) {
      vmap[f] = X.vertical.add_morphism(C.morphism(f).id, C.src(f), C.tgt(f));
      vback.push_back(f);
    }
  }
  for (int x = 0; x < no; ++x) {
    if (!V[C.identity(x)] || !H[C.identity(x)]) {
      throw InputError("vertical and horizontal classes must contain identities");
    }
    X.vertical.set_identity(x, vmap[C.identity(x)]);
  }
  for (auto const& [f, g, gf] : C.composition_entries()) {
    if (V[f] && V[g]) {
      if (!V[gf]) {
        throw InputError("vertical class is not closed under composition");
      }
      X.vertical.set_composite(vmap[f], vmap[g], vmap[gf]);
    }
  }
  for (int f = 0; f < nm; ++f) {
    if (H[f]) {
      hmap[f] = X.squares.add_object(C.morphism(f).id);
      hback.push_back(f);
      X.d1_obj.push_back(C.src(f));
      X.d0_obj.push_back(C.tgt(f));
    }
  }
  for (int x = 0; x < no; ++x) {
    X.s_obj.push_back(hmap[C.identity(x)]);
  }
  for (auto const& [f, g, gf] : C.composition_entries()) {
    if (H[f] && H[g]) {
      if (!H[gf]) {
        throw InputError("horizontal class is not closed under composition");
      }
      X.hcomp_obj[pair_key(hmap[f], hmap[g])] = hmap[gf];
    }
  }
  std::map<std::tuple<int, int, int, int>, int> by_boundary;
  for (int g : hback) {
    for (int u : C.out(C.src(g))) {
      if (!V[u]) {
        continue;
      }
      for (int v : C.out(C.tgt(g))) {
        if (!V[v]) {
          continue;
        }
        int vg = C.comp(g, v);
        for (int h : C.hom(C.tgt(u), C.tgt(v))) {
          if (!H[h] || C.comp(u, h) != vg || (keep && !keep(g, u, v, h))) {
            continue;
          }
          std::string name = "[" + C.morphism(g).id + "|" + C.morphism(u).id
                             + "|" + C.morphism(v).id + "|" + C.morphism(h).id
                             + "]";
          int a = X.squares.add_morphism(name, hmap[g], hmap[h]);
          X.d1_mor.push_back(vmap[u]);
          X.d0_mor.push_back(vmap[v]);
          by_boundary[{g, u, v, h}] = a;
        }
      }
    }
  }
  auto find_sq = [&](int g, int u, int v, int h) {
    auto it = by_boundary.find({g, u, v, h});
    if (it == by_boundary.end()) {
      throw InputError("square class is not closed under composition");
    }
    return it->second;
  };
  for (int g : hback) {
    int x = C.src(g), y = C.tgt(g);
    X.squares.set_identity(hmap[g],
                           find_sq(g, C.identity(x), C.identity(y), g));
  }
  for (int u : vback) {
    int x = C.src(u), y = C.tgt(u);
    X.s_mor.push_back(find_sq(C.identity(x), u, u, C.identity(y)));
  }
  for (auto const& [ka, a] : by_boundary) {
    auto [g, u, v, h] = ka;
    for (int b : X.squares.out(hmap[h])) {
      int u2 = vback[X.d1_mor[b]], v2 = vback[X.d0_mor[b]];
      int k  = hback[X.squares.tgt(b)];
      X.squares.set_composite(a, b, find_sq(g, C.comp(u, u2), C.comp(v, v2), k));
    }
  }
  std::vector<std::vector<int>> by_left(X.vertical.morphism_count());
  for (int b = 0; b < static_cast<int>(X.d1_mor.size()); ++b) {
    by_left[X.d1_mor[b]].push_back(b);
  }
  for (auto const& [ka, a] : by_boundary) {
    auto [g, u, v, h] = ka;
    for (int b : by_left[vmap[v]]) {
      int g2 = hback[X.squares.src(b)], h2 = hback[X.squares.tgt(b)];
      int w  = vback[X.d0_mor[b]];
      X.hcomp_sq[pair_key(a, b)]
          = find_sq(C.comp(g, g2), u, w, C.comp(h, h2));
    }
  }
  return X;
}

Verdict const& PredicateReport::at(std::string const& name) const {
  for (auto const& v : verdicts) {
    if (v.name == name) {
      return v;
    }
  }
  throw std::out_of_range("no verdict named " + name);
}

json PredicateReport::to_json() const {
  json out = json::array();
  for (auto const& v : verdicts) {
    json e{{"name", v.name}, {"holds", v.holds}};
    if (!v.holds) {
      e["witness"] = v.witness;
    }
    out.push_back(e);
  }
  return out;
}

namespace {
  Decision opcartesian_with(DoubleCategory const& X, SquareIndex const& idx,
                            int k) {
    int const g = X.top(k), u = X.right(k), gh = X.bottom(k);
    for (int alpha : idx.by_top(g)) {
      int x = X.right(alpha);
      for (int v : X.vertical.out(X.vcod(u))) {
        if (X.vcomp_v(u, v) != x) {
          continue;
        }
        int count = 0;
        for (int beta : idx.by_top_right(gh, v)) {
          count += X.vcomp(k, beta) == alpha;
        }
        if (count != 1) {
          return {false,
                  json{{"square", square_json(X, k)},
                       {"alpha", square_json(X, alpha)},
                       {"factor", X.vname(v)},
                       {"factorizing_squares", count}}};
        }
      }
    }
    return {true, nullptr};
  }

  Decision cartesian_with(DoubleCategory const& X, SquareIndex const& idx,
                          int k) {
    int const h = X.bottom(k), u = X.right(k), gh = X.top(k);
    for (int alpha : idx.by_bottom(h)) {
      int x = X.right(alpha);
      for (int v : X.vertical.in(X.vdom(u))) {
        if (X.vcomp_v(v, u) != x) {
          continue;
        }
        int count = 0;
        for (int beta : idx.by_bottom_right(gh, v)) {
          count += X.top(beta) == X.top(alpha) && X.vcomp(beta, k) == alpha;
        }
        if (count != 1) {
          return {false,
                  json{{"square", square_json(X, k)},
                       {"alpha", square_json(X, alpha)},
                       {"factor", X.vname(v)},
                       {"factorizing_squares", count}}};
        }
      }
    }
    return {true, nullptr};
  }

  std::optional<json> unfillable_corner(DoubleCategory const& X,
                                        SquareIndex const& idx) {
    for (int g = 0; g < static_cast<int>(X.horizontal_count()); ++g) {
      for (int u : X.vertical.out(X.hcod(g))) {
        if (idx.by_top_right(g, u).empty()) {
          return json{{"corner", {{"g", X.hname(g)}, {"u", X.vname(u)}}}};
        }
      }
    }
    return std::nullopt;
  }

  Decision bicartesian_with(DoubleCategory const& X, SquareIndex const& idx,
                            int lam) {
    int const g = X.top(lam), u = X.left(lam), v = X.right(lam),
              h = X.bottom(lam);
    int const c = X.vcod(u);
    auto const& shapes = idx.by_top_right(X.hunit(c), X.vunit(c));
    for (int alpha : idx.by_top_right(g, v)) {
      int count = 0;
      for (int beta : shapes) {
        int side = X.hcomp(beta, X.vid(h));
        count += side >= 0 && X.vcomp(lam, side) == alpha;
      }
      if (count != 1) {
        return {false, json{{"square", square_json(X, lam)},
                            {"alpha", square_json(X, alpha)},
                            {"factorizing_squares", count}}};
      }
    }
    return {true, nullptr};
  }

  Decision jointly_monic_with(DoubleCategory const& X, SquareIndex const& idx,
                              BottomLeftCorner c) {
    int const p1 = c.u, p2 = c.g;
    int const a1 = X.vcod(p1);
    auto const& shapes = idx.by_top_right(X.hunit(a1), X.vunit(a1));
    for (int k1 : shapes) {
      for (int k2 : shapes) {
        int th = X.left(k1), ps = X.bottom(k1);
        int th2 = X.left(k2), ps2 = X.bottom(k2);
        if (th == th2 && ps == ps2) {
          continue;
        }
        int l1 = X.vcomp_v(p1, th), l2 = X.vcomp_v(p1, th2);
        int r1 = X.hcomp_h(ps, p2), r2 = X.hcomp_h(ps2, p2);
        if (l1 >= 0 && l1 == l2 && r1 >= 0 && r1 == r2) {
          return {false, json{{"corner", {{"u", X.vname(p1)}, {"g", X.hname(p2)}}},
                              {"kappa1", square_json(X, k1)},
                              {"kappa2", square_json(X, k2)}}};
        }
      }
    }
    return {true, nullptr};
  }

  std::optional<json> crossed_with(DoubleCategory const& X,
                                   SquareIndex const& idx,
                                   std::vector<char> const& opcart,
                                   std::vector<json> const& opcart_w) {
    int const ns = static_cast<int>(X.square_count());
    std::optional<json> crossed;
    for (auto c : top_right_corners(X)) {
      auto const& f = idx.by_top_right(c.g, c.u);
      if (std::none_of(f.begin(), f.end(), [&](int a) { return opcart[a]; })) {
        crossed = json{{"clause", "corner without an opcartesian filler"},
                       {"corner", {{"g", X.hname(c.g)}, {"u", X.vname(c.u)}}}};
        break;
      }
    }
    for (int a = 0; a < ns && !crossed; ++a) {
      if (!opcart[a]) {
        continue;
      }
      for (int b : idx.by_left(X.right(a))) {
        int ab = X.hcomp(a, b);
        if (opcart[b] && !opcart[ab]) {
          crossed = json{{"clause", "opcartesian squares not closed under hcomp"},
                         {"first", square_json(X, a)},
                         {"second", square_json(X, b)}};
          break;
        }
      }
    }
    for (int u = 0; u < static_cast<int>(X.vertical_count()) && !crossed; ++u) {
      if (!opcart[X.hid(u)]) {
        crossed = json{{"clause", "horizontal identity square not opcartesian"},
                       {"detail", opcart_w[X.hid(u)]}};
      }
    }
    return crossed;
  }

  void guard(DoubleCategory const& X, std::size_t limit) {
    if (X.square_count() > limit) {
      throw GuardError("double category has " + std::to_string(X.square_count())
                       + " squares, above the enumeration limit "
                       + std::to_string(limit));
    }
  }

  std::vector<char> invertible_horizontals(DoubleCategory const& X) {
    auto             H = horizontal_category(X);
    std::vector<char> out(X.horizontal_count(), 0);
    for (int g = 0; g < static_cast<int>(X.horizontal_count()); ++g) {
      out[g] = is_isomorphism(H, g).has_value();
    }
    return out;
  }

  std::vector<char> invertible_verticals(DoubleCategory const& X) {
    std::vector<char> out(X.vertical_count(), 0);
    for (int u = 0; u < static_cast<int>(X.vertical_count()); ++u) {
      out[u] = is_isomorphism(X.vertical, u).has_value();
    }
    return out;
  }
}  // namespace

Decision is_opcartesian(DoubleCategory const& X, int square) {
  guard(X, default_square_limit);
  return opcartesian_with(X, SquareIndex(X), square);
}

Decision is_cartesian(DoubleCategory const& X, int square) {
  guard(X, default_square_limit);
  return cartesian_with(X, SquareIndex(X), square);
}

Decision is_bicartesian(DoubleCategory const& X, int square) {
  guard(X, default_square_limit);
  SquareIndex idx(X);
  if (auto w = unfillable_corner(X, idx)) {
    throw PreconditionError("bicartesian test needs every top-right corner "
                            "fillable; " + w->dump());
  }
  return bicartesian_with(X, idx, square);
}

Decision is_jointly_monic(DoubleCategory const& X, BottomLeftCorner c) {
  if (X.vcod(c.u) != X.hdom(c.g)) {
    throw InputError("not a bottom-left corner");
  }
  return jointly_monic_with(X, SquareIndex(X), c);
}

std::vector<char> opcartesian_squares(DoubleCategory const& X) {
  guard(X, default_square_limit);
  SquareIndex       idx(X);
  std::vector<char> out(X.square_count(), 0);
  for (int a = 0; a < static_cast<int>(X.square_count()); ++a) {
    out[a] = opcartesian_with(X, idx, a).holds;
  }
  return out;
}

Decision is_crossed(DoubleCategory const& X) {
  guard(X, default_square_limit);
  SquareIndex       idx(X);
  int const         ns = static_cast<int>(X.square_count());
  std::vector<char> opcart(ns, 0);
  std::vector<json> opcart_w(ns);
  for (int a = 0; a < ns; ++a) {
    auto d      = opcartesian_with(X, idx, a);
    opcart[a]   = d.holds;
    opcart_w[a] = d.witness;
  }
  auto w = crossed_with(X, idx, opcart, opcart_w);
  return {!w.has_value(), w.value_or(json(nullptr))};
}

std::vector<int> fillers(DoubleCategory const& X, TopRightCorner c) {
  return SquareIndex(X).by_top_right(c.g, c.u);
}

std::vector<TopRightCorner> top_right_corners(DoubleCategory const& X) {
  std::vector<TopRightCorner> out;
  for (int g = 0; g < static_cast<int>(X.horizontal_count()); ++g) {
    for (int u : X.vertical.out(X.hcod(g))) {
      out.push_back({g, u});
    }
  }
  return out;
}

std::vector<BottomLeftCorner> bottom_left_corners(DoubleCategory const& X) {
  std::vector<BottomLeftCorner> out;
  for (int u = 0; u < static_cast<int>(X.vertical_count()); ++u) {
    for (int g = 0; g < static_cast<int>(X.horizontal_count()); ++g) {
      if (X.hdom(g) == X.vcod(u)) {
        out.push_back({u, g});
      }
    }
  }
  return out;
}

PredicateReport analyze(DoubleCategory const& X, std::size_t square_limit) {
  guard(X, square_limit);
  SquareIndex     idx(X);
  PredicateReport rep;
  int const       ns = static_cast<int>(X.square_count());
  auto add = [&rep](std::string name, std::optional<json> w) {
    rep.verdicts.push_back({std::move(name), !w.has_value(),
                            w.value_or(json(nullptr))});
  };

  std::optional<json> flat;
  for (int a = 0; a < ns && !flat; ++a) {
    auto const& same
        = idx.by_boundary(X.top(a), X.left(a), X.right(a), X.bottom(a));
    if (same.size() > 1) {
      flat = json{{"squares", {X.sqname(same[0]), X.sqname(same[1])}}};
    }
  }

  std::optional<json> fillable, discrete;
  for (auto c : top_right_corners(X)) {
    auto const& f = idx.by_top_right(c.g, c.u);
    if (f.size() != 1 && !discrete) {
      discrete = json{{"corner", {{"g", X.hname(c.g)}, {"u", X.vname(c.u)}}},
                      {"fillers", f.size()}};
    }
    if (f.empty() && !fillable) {
      fillable = json{{"corner", {{"g", X.hname(c.g)}, {"u", X.vname(c.u)}}}};
    }
  }

  std::vector<char> opcart(ns, 0), cart(ns, 0);
  std::vector<json> opcart_w(ns), cart_w(ns);
  for (int a = 0; a < ns; ++a) {
    auto d      = opcartesian_with(X, idx, a);
    opcart[a]   = d.holds;
    opcart_w[a] = d.witness;
    auto e      = cartesian_with(X, idx, a);
    cart[a]     = e.holds;
    cart_w[a]   = e.witness;
  }

  auto crossed = crossed_with(X, idx, opcart, opcart_w);

  // the vertical dual of the crossed condition, read directly in X
  std::optional<json> cocrossed;
  for (int h = 0; h < static_cast<int>(X.horizontal_count()) && !cocrossed;
       ++h) {
    for (int u : X.vertical.in(X.hcod(h))) {
      auto const& f = idx.by_bottom_right(h, u);
      if (std::none_of(f.begin(), f.end(), [&](int a) { return cart[a]; })) {
        cocrossed = json{{"clause", "corner without a cartesian filler"},
                         {"corner", {{"h", X.hname(h)}, {"u", X.vname(u)}}}};
        break;
      }
    }
  }
  for (int a = 0; a < ns && !cocrossed; ++a) {
    if (!cart[a]) {
      continue;
    }
    for (int b : idx.by_left(X.right(a))) {
      if (cart[b] && !cart[X.hcomp(a, b)]) {
        cocrossed = json{{"clause", "cartesian squares not closed under hcomp"},
                         {"first", square_json(X, a)},
                         {"second", square_json(X, b)}};
        break;
      }
    }
  }
  for (int u = 0; u < static_cast<int>(X.vertical_count()) && !cocrossed;
       ++u) {
    if (!cart[X.hid(u)]) {
      cocrossed = json{{"clause", "horizontal identity square not cartesian"},
                       {"detail", cart_w[X.hid(u)]}};
    }
  }

  auto inv_h = invertible_horizontals(X);
  auto inv_v = invertible_verticals(X);
  std::optional<json> h_inv, v_inv;
  for (int g = 0; g < static_cast<int>(X.horizontal_count()) && !h_inv; ++g) {
    if (!inv_h[g]) {
      continue;
    }
    for (int u : X.vertical.out(X.hcod(g))) {
      for (int h = 0; h < static_cast<int>(X.horizontal_count()); ++h) {
        if (!inv_h[h] || X.hcod(h) != X.vcod(u)) {
          continue;
        }
        int count = 0;
        for (int a : idx.by_top_right(g, u)) {
          count += X.bottom(a) == h;
        }
        if (count != 1 && !h_inv) {
          h_inv = json{{"top", X.hname(g)}, {"right", X.vname(u)},
                       {"bottom", X.hname(h)}, {"squares", count}};
        }
      }
    }
  }
  for (int u = 0; u < static_cast<int>(X.vertical_count()) && !v_inv; ++u) {
    if (!inv_v[u]) {
      continue;
    }
    for (int k = 0; k < static_cast<int>(X.horizontal_count()); ++k) {
      if (X.hdom(k) != X.vcod(u)) {
        continue;
      }
      for (int v : X.vertical.in(X.hcod(k))) {
        if (!inv_v[v]) {
          continue;
        }
        int count = 0;
        for (int a : idx.by_left_bottom(u, k)) {
          count += X.right(a) == v;
        }
        if (count != 1 && !v_inv) {
          v_inv = json{{"left", X.vname(u)}, {"bottom", X.hname(k)},
                       {"right", X.vname(v)}, {"squares", count}};
        }
      }
    }
  }
  std::optional<json> inv = h_inv ? h_inv : v_inv;

  std::optional<json> bicart;
  if (fillable) {
    bicart = json{{"reason", "not top-right fillable"}};
  } else {
    for (int a = 0; a < ns && !bicart; ++a) {
      auto d = bicartesian_with(X, idx, a);
      if (!d.holds) {
        bicart = d.witness;
      }
    }
  }

  std::optional<json> monic;
  for (auto c : bottom_left_corners(X)) {
    auto d = jointly_monic_with(X, idx, c);
    if (!d.holds) {
      monic = d.witness;
      break;
    }
  }

  std::optional<json> fact;
  if (inv) {
    fact = json{{"failed", "invariant"}, {"detail", *inv}};
  } else if (fillable) {
    fact = json{{"failed", "top_right_fillable"}, {"detail", *fillable}};
  } else if (bicart) {
    fact = json{{"failed", "all_bicartesian"}, {"detail", *bicart}};
  } else if (monic) {
    fact = json{{"failed", "all_jointly_monic"}, {"detail", *monic}};
  }

  std::optional<json> catead;
  for (int u = 0; u < static_cast<int>(X.vertical_count()) && !catead; ++u) {
    for (int h = 0; h < static_cast<int>(X.horizontal_count()); ++h) {
      if (X.hdom(h) != X.vcod(u)) {
        continue;
      }
      int count = 0;
      for (int a : idx.by_left_bottom(u, h)) {
        count += X.right(a) == X.vunit(X.hcod(h));
      }
      if (count != 1) {
        catead = json{{"clause", "left-bottom corner with identity right"},
                      {"left", X.vname(u)}, {"bottom", X.hname(h)},
                      {"squares", count}};
        break;
      }
    }
  }
  for (int g = 0; g < static_cast<int>(X.horizontal_count()) && !catead; ++g) {
    for (int v : X.vertical.out(X.hcod(g))) {
      int count = 0;
      for (int a : idx.by_top_right(g, v)) {
        count += X.left(a) == X.vunit(X.hdom(g));
      }
      if (count != 1) {
        catead = json{{"clause", "top-right corner with identity left"},
                      {"top", X.hname(g)}, {"right", X.vname(v)},
                      {"squares", count}};
        break;
      }
    }
  }
  for (int a = 0; a < ns && !catead; ++a) {
    int count = 0;
    for (int k1 : idx.by_top_right(X.top(a), X.right(a))) {
      if (X.left(k1) != X.vunit(X.hdom(X.top(a)))) {
        continue;
      }
      for (int k2 : X.squares.out(X.bottom(k1))) {
        count += X.left(k2) == X.left(a)
                 && X.right(k2) == X.vunit(X.hcod(X.bottom(a)))
                 && X.vcomp(k1, k2) == a;
      }
    }
    if (count != 1) {
      catead = json{{"clause", "square factorization"},
                    {"square", square_json(X, a)}, {"factorizations", count}};
    }
  }

  add("flat", flat);
  add("codomain_discrete", discrete);
  add("top_right_fillable", fillable);
  add("crossed", crossed);
  add("co_crossed", cocrossed);
  add("horizontally_invariant", h_inv);
  add("vertically_invariant", v_inv);
  add("invariant", inv);
  add("all_bicartesian", bicart);
  add("all_jointly_monic", monic);
  add("factorization_double_category", fact);
  add("catead", catead);
  return rep;
}

std::vector<int> catead_rho(DoubleCategory const& X) {
  auto rep = analyze(X);
  if (!rep["catead"]) {
    throw PreconditionError("not a catead: " + rep.at("catead").witness.dump());
  }
  SquareIndex      idx(X);
  std::vector<int> rho;
  for (int u = 0; u < static_cast<int>(X.vertical_count()); ++u) {
    int z = X.vcod(u);
    for (int a : idx.by_left_bottom(u, X.hunit(z))) {
      if (X.right(a) == X.vunit(z)) {
        rho.push_back(a);
        break;
      }
    }
  }
  return rho;
}

}  // namespace cornerkit
