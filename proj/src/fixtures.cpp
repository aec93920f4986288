#include "cornerkit/fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cornerkit {

FinCategory walking_arrow() {
  FinCategory C;
  int a = C.add_object("a"), b = C.add_object("b");
  C.set_identity(a, C.add_morphism("1_a", a, a));
  C.set_identity(b, C.add_morphism("1_b", b, b));
  C.add_morphism("f", a, b);
  C.fill_unit_composites();
  return C;
}

FinCategory triangle() {
  FinCategory C;
  int x = C.add_object("x"), y = C.add_object("y"), z = C.add_object("z");
  for (int o : {x, y, z}) {
    C.set_identity(o, C.add_morphism("1_" + C.object_name(o), o, o));
  }
  int f = C.add_morphism("f", x, y);
  int g = C.add_morphism("g", y, z);
  int h = C.add_morphism("h", x, z);
  C.fill_unit_composites();
  C.set_composite(f, g, h);
  return C;
}

namespace {
  std::string function_name(int m, int k, std::vector<int> const& img) {
    std::string s = std::to_string(m) + "->" + std::to_string(k) + ":";
    for (int x : img) {
      s += static_cast<char>('0' + x);
    }
    return s;
  }
}  // namespace

FinCategory finset_upto(int n) {
  FinCategory C;
  for (int m = 0; m <= n; ++m) {
    C.add_object(std::to_string(m));
  }
  std::vector<std::vector<int>> images;
  std::map<std::pair<int, std::vector<int>>, int> index;  // (cod, images)
  for (int m = 0; m <= n; ++m) {
    for (int k = 0; k <= n; ++k) {
      std::vector<int> f(m, 0);
      if (m > 0 && k == 0) {
        continue;
      }
      while (true) {
        int id = C.add_morphism(function_name(m, k, f), m, k);
        images.push_back(f);
        index[{k, f}] = id;
        int i = m - 1;
        while (i >= 0 && f[i] == k - 1) {
          f[i--] = 0;
        }
        if (i < 0) {
          break;
        }
        ++f[i];
      }
    }
  }
  for (int m = 0; m <= n; ++m) {
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), 0);
    C.set_identity(m, index.at({m, id}));
  }
  int const nm = static_cast<int>(C.morphism_count());
  for (int f = 0; f < nm; ++f) {
    for (int g : C.out(C.tgt(f))) {
      std::vector<int> gf(images[f].size());
      for (std::size_t x = 0; x < gf.size(); ++x) {
        gf[x] = images[g][images[f][x]];
      }
      C.set_composite(f, g, index.at({C.tgt(g), gf}));
    }
  }
  return C;
}

FinCategory finset_leq(int n) {
  if (n < 0 || n > 3) {
    throw InputError("finset_leq is limited to sets of size at most 3");
  }
  return finset_upto(n);
}

FinFunction finset_function(FinCategory const& C, int f) {
  auto const& name = C.morphism(f).id;
  auto        pos  = name.find(':');
  if (pos == std::string::npos) {
    throw InputError("not a finite-set function: " + name);
  }
  FinFunction out;
  out.dom = std::stoi(C.object_name(C.src(f)));
  out.cod = std::stoi(C.object_name(C.tgt(f)));
  for (auto c : name.substr(pos + 1)) {
    out.map.push_back(c - '0');
  }
  return out;
}

namespace {
  template <typename Pred>
  std::vector<char> select(FinCategory const& C, Pred pred) {
    std::vector<char> out(C.morphism_count(), 0);
    for (int f = 0; f < static_cast<int>(C.morphism_count()); ++f) {
      out[f] = pred(f);
    }
    return out;
  }
}  // namespace

std::vector<char> surjections(FinCategory const& C) {
  return select(C, [&](int f) {
    auto             F = finset_function(C, f);
    std::vector<int> hit(F.cod, 0);
    for (int y : F.map) {
      hit[y] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](int h) { return h; });
  });
}

std::vector<char> injections(FinCategory const& C) {
  return select(C, [&](int f) {
    auto F = finset_function(C, f);
    auto s = F.map;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  });
}

std::vector<char> bijections(FinCategory const& C) {
  auto s = surjections(C), i = injections(C);
  for (std::size_t f = 0; f < s.size(); ++f) {
    s[f] = s[f] && i[f];
  }
  return s;
}

std::vector<char> monotone_maps(FinCategory const& C) {
  return select(C, [&](int f) {
    auto F = finset_function(C, f);
    return std::is_sorted(F.map.begin(), F.map.end());
  });
}

std::vector<char> all_morphisms(FinCategory const& C) {
  return std::vector<char>(C.morphism_count(), 1);
}

std::vector<char> identities_only(FinCategory const& C) {
  return select(C, [&](int f) { return C.is_identity(f); });
}

std::vector<char> isomorphisms(FinCategory const& C) {
  return select(C, [&](int f) { return is_isomorphism(C, f).has_value(); });
}

DoubleCategory sq_of(FinCategory const& C) {
  return commutative_squares(C, all_morphisms(C), all_morphisms(C));
}

DoubleCategory x_prod(FinCategory const& A, FinCategory const& B) {
  auto P  = product(A, B);
  int  mb = static_cast<int>(B.morphism_count());
  std::vector<char> V(P.morphism_count(), 0), H(P.morphism_count(), 0);
  for (int f = 0; f < static_cast<int>(P.morphism_count()); ++f) {
    V[f] = B.is_identity(f % mb);
    H[f] = A.is_identity(f / mb);
  }
  return commutative_squares(P, V, H);
}

DoubleCategory perm_ord(int n) {
  if (n < 0 || n > 4) {
    throw GuardError("perm_ord is limited to ordinals of size at most 4");
  }
  auto C = finset_upto(n);
  return commutative_squares(C, bijections(C), monotone_maps(C));
}

namespace {
  bool is_pullback(std::vector<FinFunction> const& F, int g, int u, int v,
                   int h) {
    auto const& G = F[g];
    auto const& U = F[u];
    // the pullback of h and v has |{(x, y) : h(x) = v(y)}| elements
    std::size_t apex = 0;
    for (int x : F[h].map) {
      apex += std::count(F[v].map.begin(), F[v].map.end(), x);
    }
    if (apex != static_cast<std::size_t>(G.dom)) {
      return false;
    }
    std::set<std::pair<int, int>> seen;
    for (int x = 0; x < G.dom; ++x) {
      seen.insert({U(x), G(x)});
    }
    return static_cast<int>(seen.size()) == G.dom;
  }

  DoubleCategory pullback_dual(int n, bool mono) {
    auto C = finset_upto(n);
    auto V = mono ? injections(C) : all_morphisms(C);
    std::vector<FinFunction> F;
    for (int f = 0; f < static_cast<int>(C.morphism_count()); ++f) {
      F.push_back(finset_function(C, f));
    }
    auto X = commutative_squares(C, V, all_morphisms(C),
                                 [&F](int g, int u, int v, int h) {
                                   return is_pullback(F, g, u, v, h);
                                 });
    return dualize(X, DualKind::vertical);
  }
}  // namespace

DoubleCategory pullback_squares_dual(int n) { return pullback_dual(n, false); }

DoubleCategory mono_pullback_squares_dual(int n) {
  return pullback_dual(n, true);
}

bool SpanFragment::admits(BottomLeftCorner c) const {
  return size(X.vdom(c.u)) <= size_bound && size(X.hcod(c.g)) <= size_bound
         && size(X.vcod(c.u)) <= apex_bound;
}

SpanFragment span_bounded(int size_bound, int apex_bound) {
  if (size_bound < 0 || apex_bound < 0) {
    throw InputError("span bounds must be non-negative");
  }
  int n = std::max(size_bound, apex_bound);
  if (n > 3) {
    throw GuardError("span fragment is limited to sets of size at most 3");
  }
  return {pullback_squares_dual(n), size_bound, apex_bound};
}

DoubleCategory discrete_double(std::vector<std::string> const& objects) {
  return sq_of(discrete_category(objects));
}

FinCategory cyclic_group(int n) {
  FinCategory C;
  C.add_object("*");
  for (int i = 0; i < n; ++i) {
    C.add_morphism(i == 0 ? "1_*" : "t" + std::to_string(i), 0, 0);
  }
  C.set_identity(0, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      C.set_composite(i, j, (i + j) % n);
    }
  }
  return C;
}

}  // namespace cornerkit

namespace cornerkit {

ValidationReport validate_comonad(Comonad const& K) {
  auto const& A = K.A;
  auto        r = validate_functor(A, A, K.q);
  if (!r.ok()) {
    return r;
  }
  auto id = identity_functor(A);
  auto qq = compose_functors(K.q, K.q);
  for (auto const& f : validate_nat_trans(A, A, K.q, id, K.epsilon).failures) {
    r.failures.push_back("epsilon: " + f);
  }
  for (auto const& f : validate_nat_trans(A, A, K.q, qq, K.delta).failures) {
    r.failures.push_back("delta: " + f);
  }
  if (!r.ok()) {
    return r;
  }
  for (int a = 0; a < static_cast<int>(A.object_count()); ++a) {
    int d  = K.delta.components[a];
    int qa = K.q.obj_map[a];
    if (A.compose(d, K.epsilon.components[qa]) != A.identity(qa)) {
      r.failures.push_back("epsilon q . delta != 1 at " + A.object_name(a));
    }
    if (A.compose(d, K.q.mor_map[K.epsilon.components[a]]) != A.identity(qa)) {
      r.failures.push_back("q epsilon . delta != 1 at " + A.object_name(a));
    }
    if (A.compose(d, K.delta.components[qa])
        != A.compose(d, K.q.mor_map[d])) {
      r.failures.push_back("coassociativity fails at " + A.object_name(a));
    }
  }
  return r;
}

CodomainColaxCategory comonad_codcolax(Comonad const& K) {
  auto v = validate_comonad(K);
  if (!v.ok()) {
    throw InputError("not a comonad: " + v.failures.front());
  }
  auto const&           A = K.A;
  int const             n = static_cast<int>(A.object_count());
  int const             m = static_cast<int>(A.morphism_count());
  CodomainColaxCategory X;
  X.vertical = A;
  for (int a = 0; a < n; ++a) {
    X.squares.add_object("~" + A.object_name(a));
    X.d1_obj.push_back(a);
    X.d0_obj.push_back(K.q.obj_map[a]);
  }
  for (int u = 0; u < m; ++u) {
    X.squares.add_morphism("~" + A.morphism(u).id, A.src(u), A.tgt(u));
    X.d1_mor.push_back(u);
    X.d0_mor.push_back(K.q.mor_map[u]);
  }
  for (int a = 0; a < n; ++a) {
    X.squares.set_identity(a, A.identity(a));
  }
  for (auto const& [f, g, gf] : A.composition_entries()) {
    X.squares.set_composite(f, g, gf);
  }
  for (int a = 0; a < n; ++a) {
    X.s_obj.push_back(a);
    X.iota.push_back(K.epsilon.components[a]);
  }
  for (int u = 0; u < m; ++u) {
    X.s_mor.push_back(u);
  }
  for (int a = 0; a < n; ++a) {
    int qa = K.q.obj_map[a];
    X.hcomp_obj[pair_key(a, qa)] = a;
    X.gamma[pair_key(a, qa)]     = K.delta.components[a];
    X.iota_hat.push_back(K.epsilon.components[a]);
    X.gamma_hat[{a, qa, K.q.obj_map[qa]}] = K.delta.components[a];
  }
  for (int u = 0; u < m; ++u) {
    X.hcomp_sq[pair_key(u, K.q.mor_map[u])] = u;
  }
  return X;
}

Comonad const0_comonad() {
  Comonad K;
  K.A     = walking_arrow();
  int a   = K.A.object_index("a");
  int ia  = K.A.identity(a);
  K.q     = {{a, a}, {ia, ia, ia}};
  K.epsilon.components = {ia, K.A.morphism_index("f")};
  K.delta.components   = {ia, ia};
  return K;
}

Comonad identity_comonad(FinCategory const& A) {
  Comonad K;
  K.A = A;
  K.q = identity_functor(A);
  for (int a = 0; a < static_cast<int>(A.object_count()); ++a) {
    K.epsilon.components.push_back(A.identity(a));
    K.delta.components.push_back(A.identity(a));
  }
  return K;
}

FinCategory cokleisli(Comonad const& K) {
  auto const& A = K.A;
  int const   n = static_cast<int>(A.object_count());
  FinCategory C;
  for (int x = 0; x < n; ++x) {
    C.add_object(A.object_name(x));
  }
  // (x, k) with k : qx -> y
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>>   mors;
  for (int x = 0; x < n; ++x) {
    for (int k : A.out(K.q.obj_map[x])) {
      index[{x, k}] = C.add_morphism(A.morphism(k).id + "@" + A.object_name(x),
                                     x, A.tgt(k));
      mors.emplace_back(x, k);
    }
  }
  for (int x = 0; x < n; ++x) {
    C.set_identity(x, index.at({x, K.epsilon.components[x]}));
  }
  for (auto const& [x, k1] : mors) {
    int y = A.tgt(k1);
    for (int k2 : A.out(K.q.obj_map[y])) {
      int k = A.comp(A.comp(K.delta.components[x], K.q.mor_map[k1]), k2);
      C.set_composite(index.at({x, k1}), index.at({y, k2}), index.at({x, k}));
    }
  }
  return C;
}

}  // namespace cornerkit
