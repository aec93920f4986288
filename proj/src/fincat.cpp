#include "cornerkit/fincat.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace cornerkit {

namespace {
  std::vector<int> const empty_list;

  std::string mor_name(FinCategory const& C, int f) {
    return C.morphism(f).id;
  }
}  // namespace

int FinCategory::add_object(std::string name) {
  if (object_ids_.count(name)) {
    throw InputError("duplicate object id '" + name + "'");
  }
  int a = static_cast<int>(objects_.size());
  object_ids_.emplace(name, a);
  objects_.push_back(std::move(name));
  identity_.push_back(-1);
  out_.emplace_back();
  in_.emplace_back();
  return a;
}

int FinCategory::add_morphism(std::string name, int src, int tgt) {
  if (morphism_ids_.count(name)) {
    throw InputError("duplicate morphism id '" + name + "'");
  }
  int const n = static_cast<int>(objects_.size());
  if (src < 0 || src >= n || tgt < 0 || tgt >= n) {
    throw InputError("morphism '" + name + "' has a dangling endpoint");
  }
  int f = static_cast<int>(morphisms_.size());
  morphism_ids_.emplace(name, f);
  morphisms_.push_back({std::move(name), src, tgt});
  homs_[pair_key(src, tgt)].push_back(f);
  out_[src].push_back(f);
  in_[tgt].push_back(f);
  return f;
}

void FinCategory::set_identity(int object, int morphism) {
  if (object < 0 || object >= static_cast<int>(objects_.size())
      || morphism < 0 || morphism >= static_cast<int>(morphisms_.size())) {
    throw InputError("identity entry refers to an unknown id");
  }
  identity_[object] = morphism;
}

void FinCategory::set_composite(int f, int g, int gf) {
  int const m = static_cast<int>(morphisms_.size());
  if (f < 0 || f >= m || g < 0 || g >= m || gf < 0 || gf >= m) {
    throw InputError("composition entry refers to an unknown morphism");
  }
  if (morphisms_[f].tgt != morphisms_[g].src) {
    throw InputError("composition entry (" + morphisms_[f].id + ", "
                     + morphisms_[g].id + ") is not a composable pair");
  }
  composition_[pair_key(f, g)] = gf;
}

void FinCategory::fill_unit_composites() {
  for (int f = 0; f < static_cast<int>(morphisms_.size()); ++f) {
    int ia = identity_[morphisms_[f].src];
    int ib = identity_[morphisms_[f].tgt];
    if (ia >= 0 && !has_composite(ia, f)) {
      composition_[pair_key(ia, f)] = f;
    }
    if (ib >= 0 && !has_composite(f, ib)) {
      composition_[pair_key(f, ib)] = f;
    }
  }
}

int FinCategory::comp(int f, int g) const {
  int gf = compose(f, g);
  if (gf < 0) {
    throw InputError("composite of (" + morphisms_.at(f).id + ", "
                     + morphisms_.at(g).id + ") is undefined");
  }
  return gf;
}

std::vector<int> const& FinCategory::hom(int a, int b) const {
  auto it = homs_.find(pair_key(a, b));
  return it == homs_.end() ? empty_list : it->second;
}

std::optional<int> FinCategory::find_object(std::string const& name) const {
  auto it = object_ids_.find(name);
  if (it == object_ids_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<int> FinCategory::find_morphism(std::string const& name) const {
  auto it = morphism_ids_.find(name);
  if (it == morphism_ids_.end()) {
    return std::nullopt;
  }
  return it->second;
}

int FinCategory::object_index(std::string const& name) const {
  auto a = find_object(name);
  if (!a) {
    throw InputError("unknown object id '" + name + "'");
  }
  return *a;
}

int FinCategory::morphism_index(std::string const& name) const {
  auto f = find_morphism(name);
  if (!f) {
    throw InputError("unknown morphism id '" + name + "'");
  }
  return *f;
}

std::vector<std::tuple<int, int, int>> FinCategory::composition_entries()
    const {
  std::vector<std::tuple<int, int, int>> out;
  out.reserve(composition_.size());
  for (auto const& [k, gf] : composition_) {
    out.emplace_back(static_cast<int>(k >> 32),
                     static_cast<int>(k & 0xffffffffu), gf);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FinCategory::operator==(FinCategory const& other) const {
  if (objects_ != other.objects_ || identity_ != other.identity_
      || morphisms_.size() != other.morphisms_.size()) {
    return false;
  }
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    auto const& a = morphisms_[f];
    auto const& b = other.morphisms_[f];
    if (a.id != b.id || a.src != b.src || a.tgt != b.tgt) {
      return false;
    }
  }
  return composition_ == other.composition_;
}

ValidationReport validate_category(FinCategory const& C) {
  ValidationReport r;
  auto fail = [&r](std::string s) { r.failures.push_back(std::move(s)); };
  int const nobj = static_cast<int>(C.object_count());
  int const nmor = static_cast<int>(C.morphism_count());
  for (int a = 0; a < nobj; ++a) {
    int i = C.identity(a);
    if (i < 0) {
      fail("object " + C.object_name(a) + " has no identity");
    } else if (C.src(i) != a || C.tgt(i) != a) {
      fail("identity " + mor_name(C, i) + " is not an endomorphism of "
           + C.object_name(a));
    }
  }
  if (!r.ok()) {
    return r;
  }
  for (int f = 0; f < nmor; ++f) {
    for (int g : C.out(C.tgt(f))) {
      int gf = C.compose(f, g);
      if (gf < 0) {
        fail("composite of (" + mor_name(C, f) + ", " + mor_name(C, g)
             + ") is missing");
      } else if (C.src(gf) != C.src(f) || C.tgt(gf) != C.tgt(g)) {
        fail("composite of (" + mor_name(C, f) + ", " + mor_name(C, g)
             + ") has wrong endpoints");
      }
    }
  }
  if (!r.ok()) {
    return r;
  }
  for (int f = 0; f < nmor; ++f) {
    if (C.comp(C.identity(C.src(f)), f) != f) {
      fail("left unit law fails at " + mor_name(C, f));
    }
    if (C.comp(f, C.identity(C.tgt(f))) != f) {
      fail("right unit law fails at " + mor_name(C, f));
    }
  }
  for (int f = 0; f < nmor; ++f) {
    for (int g : C.out(C.tgt(f))) {
      int gf = C.comp(f, g);
      for (int h : C.out(C.tgt(g))) {
        if (C.comp(gf, h) != C.comp(f, C.comp(g, h))) {
          fail("associativity fails at (" + mor_name(C, f) + ", "
               + mor_name(C, g) + ", " + mor_name(C, h) + ")");
        }
      }
    }
  }
  return r;
}

std::vector<int> hom_set(FinCategory const& C, std::string const& a,
                         std::string const& b) {
  return C.hom(C.object_index(a), C.object_index(b));
}

std::optional<int> is_isomorphism(FinCategory const& C, int f) {
  if (f < 0 || f >= static_cast<int>(C.morphism_count())) {
    throw InputError("unknown morphism index");
  }
  int const a = C.src(f), b = C.tgt(f);
  for (int g : C.hom(b, a)) {
    if (C.compose(f, g) == C.identity(a) && C.compose(g, f) == C.identity(b)) {
      return g;
    }
  }
  return std::nullopt;
}

FinCategory opposite(FinCategory const& C) {
  FinCategory D;
  for (int a = 0; a < static_cast<int>(C.object_count()); ++a) {
    D.add_object(C.object_name(a));
  }
  for (int f = 0; f < static_cast<int>(C.morphism_count()); ++f) {
    D.add_morphism(C.morphism(f).id, C.tgt(f), C.src(f));
  }
  for (int a = 0; a < static_cast<int>(C.object_count()); ++a) {
    D.set_identity(a, C.identity(a));
  }
  for (auto const& [k, gf] : C.composition_table()) {
    int f = static_cast<int>(k >> 32), g = static_cast<int>(k & 0xffffffffu);
    D.set_composite(g, f, gf);
  }
  return D;
}

FinCategory product(FinCategory const& A, FinCategory const& B) {
  FinCategory P;
  int const na = static_cast<int>(A.object_count());
  int const nb = static_cast<int>(B.object_count());
  int const ma = static_cast<int>(A.morphism_count());
  int const mb = static_cast<int>(B.morphism_count());
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < nb; ++b) {
      P.add_object("(" + A.object_name(a) + "," + B.object_name(b) + ")");
    }
  }
  for (int f = 0; f < ma; ++f) {
    for (int g = 0; g < mb; ++g) {
      P.add_morphism("(" + A.morphism(f).id + "," + B.morphism(g).id + ")",
                     A.src(f) * nb + B.src(g), A.tgt(f) * nb + B.tgt(g));
    }
  }
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < nb; ++b) {
      P.set_identity(a * nb + b, A.identity(a) * mb + B.identity(b));
    }
  }
  for (auto const& [ka, fa] : A.composition_table()) {
    int f1 = static_cast<int>(ka >> 32), f2 = static_cast<int>(ka & 0xffffffffu);
    for (auto const& [kb, gb] : B.composition_table()) {
      int g1 = static_cast<int>(kb >> 32),
          g2 = static_cast<int>(kb & 0xffffffffu);
      P.set_composite(f1 * mb + g1, f2 * mb + g2, fa * mb + gb);
    }
  }
  return P;
}

FinCategory terminal_category() {
  FinCategory T;
  T.add_object("*");
  T.add_morphism("1_*", 0, 0);
  T.set_identity(0, 0);
  T.set_composite(0, 0, 0);
  return T;
}

FinCategory discrete_category(std::vector<std::string> const& names) {
  FinCategory D;
  for (auto const& n : names) {
    int a = D.add_object(n);
    int i = D.add_morphism("1_" + n, a, a);
    D.set_identity(a, i);
    D.set_composite(i, i, i);
  }
  return D;
}

ValidationReport validate_functor(FinCategory const& C, FinCategory const& D,
                                  FinFunctor const& F) {
  ValidationReport r;
  if (F.obj_map.size() != C.object_count()
      || F.mor_map.size() != C.morphism_count()) {
    throw InputError("functor maps do not cover the source category");
  }
  for (int x : F.obj_map) {
    if (x < 0 || x >= static_cast<int>(D.object_count())) {
      throw InputError("functor object map leaves the target category");
    }
  }
  for (int x : F.mor_map) {
    if (x < 0 || x >= static_cast<int>(D.morphism_count())) {
      throw InputError("functor morphism map leaves the target category");
    }
  }
  for (int f = 0; f < static_cast<int>(C.morphism_count()); ++f) {
    int Ff = F.mor_map[f];
    if (D.src(Ff) != F.obj_map[C.src(f)] || D.tgt(Ff) != F.obj_map[C.tgt(f)]) {
      r.failures.push_back("endpoints not preserved at " + C.morphism(f).id);
    }
  }
  for (int a = 0; a < static_cast<int>(C.object_count()); ++a) {
    if (F.mor_map[C.identity(a)] != D.identity(F.obj_map[a])) {
      r.failures.push_back("identity not preserved at " + C.object_name(a));
    }
  }
  if (!r.ok()) {
    return r;
  }
  for (auto const& [k, gf] : C.composition_table()) {
    int f = static_cast<int>(k >> 32), g = static_cast<int>(k & 0xffffffffu);
    if (D.compose(F.mor_map[f], F.mor_map[g]) != F.mor_map[gf]) {
      r.failures.push_back("composition not preserved at (" + C.morphism(f).id
                           + ", " + C.morphism(g).id + ")");
    }
  }
  std::sort(r.failures.begin(), r.failures.end());
  return r;
}

FinFunctor identity_functor(FinCategory const& C) {
  FinFunctor F;
  F.obj_map.resize(C.object_count());
  F.mor_map.resize(C.morphism_count());
  std::iota(F.obj_map.begin(), F.obj_map.end(), 0);
  std::iota(F.mor_map.begin(), F.mor_map.end(), 0);
  return F;
}

FinFunctor compose_functors(FinFunctor const& F, FinFunctor const& G) {
  FinFunctor H;
  for (int x : F.obj_map) {
    H.obj_map.push_back(G.obj_map[x]);
  }
  for (int x : F.mor_map) {
    H.mor_map.push_back(G.mor_map[x]);
  }
  return H;
}

bool is_iso_functor(FinCategory const& C, FinCategory const& D,
                    FinFunctor const& F) {
  if (!validate_functor(C, D, F).ok() || C.object_count() != D.object_count()
      || C.morphism_count() != D.morphism_count()) {
    return false;
  }
  std::vector<char> hit_o(D.object_count(), 0), hit_m(D.morphism_count(), 0);
  for (int x : F.obj_map) {
    if (hit_o[x]++) {
      return false;
    }
  }
  for (int x : F.mor_map) {
    if (hit_m[x]++) {
      return false;
    }
  }
  return true;
}

namespace {
  struct IsoSearch {
    FinCategory const& C;
    FinCategory const& D;
    FinFunctor         F;
    std::vector<char>  used_m;
    std::vector<int>   order;

    bool consistent(int f) const {
      int Ff = F.mor_map[f];
      for (int g : C.out(C.tgt(f))) {
        if (F.mor_map[g] < 0) {
          continue;
        }
        int gf = C.comp(f, g);
        if (F.mor_map[gf] >= 0
            && D.compose(Ff, F.mor_map[g]) != F.mor_map[gf]) {
          return false;
        }
      }
      for (int e : C.in(C.src(f))) {
        if (F.mor_map[e] < 0) {
          continue;
        }
        int fe = C.comp(e, f);
        if (F.mor_map[fe] >= 0
            && D.compose(F.mor_map[e], Ff) != F.mor_map[fe]) {
          return false;
        }
      }
      // f as a composite of assigned morphisms
      for (auto const& [k, v] : C.composition_table()) {
        if (v != f) {
          continue;
        }
        int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
        if (F.mor_map[a] >= 0 && F.mor_map[b] >= 0
            && D.compose(F.mor_map[a], F.mor_map[b]) != Ff) {
          return false;
        }
      }
      return true;
    }

    bool assign(std::size_t i) {
      if (i == order.size()) {
        return true;
      }
      int f = order[i];
      if (F.mor_map[f] >= 0) {
        return assign(i + 1);
      }
      for (int x : D.hom(F.obj_map[C.src(f)], F.obj_map[C.tgt(f)])) {
        if (used_m[x]) {
          continue;
        }
        F.mor_map[f] = x;
        used_m[x]    = 1;
        if (consistent(f) && assign(i + 1)) {
          return true;
        }
        F.mor_map[f] = -1;
        used_m[x]    = 0;
      }
      return false;
    }
  };
}  // namespace

std::optional<FinFunctor> find_isomorphism(FinCategory const& C,
                                           FinCategory const& D) {
  int const n = static_cast<int>(C.object_count());
  if (C.object_count() != D.object_count()
      || C.morphism_count() != D.morphism_count()) {
    return std::nullopt;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        ok = C.hom(a, b).size() == D.hom(perm[a], perm[b]).size();
      }
    }
    if (!ok) {
      continue;
    }
    IsoSearch s{C, D, {}, {}, {}};
    s.F.obj_map = perm;
    s.F.mor_map.assign(C.morphism_count(), -1);
    s.used_m.assign(D.morphism_count(), 0);
    for (int a = 0; a < n; ++a) {
      s.F.mor_map[C.identity(a)] = D.identity(perm[a]);
      s.used_m[D.identity(perm[a])] = 1;
    }
    for (int f = 0; f < static_cast<int>(C.morphism_count()); ++f) {
      s.order.push_back(f);
    }
    if (s.assign(0)) {
      return s.F;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

ValidationReport validate_nat_trans(FinCategory const& C, FinCategory const& D,
                                    FinFunctor const& F, FinFunctor const& G,
                                    FinNatTrans const& alpha) {
  ValidationReport r;
  if (alpha.components.size() != C.object_count()) {
    throw InputError("transformation does not have one component per object");
  }
  for (int a = 0; a < static_cast<int>(C.object_count()); ++a) {
    int c = alpha.components[a];
    if (c < 0 || c >= static_cast<int>(D.morphism_count())) {
      throw InputError("component at " + C.object_name(a) + " is unknown");
    }
    if (D.src(c) != F.obj_map[a] || D.tgt(c) != G.obj_map[a]) {
      r.failures.push_back("component at " + C.object_name(a)
                           + " has wrong endpoints");
    }
  }
  if (!r.ok()) {
    return r;
  }
  for (int f = 0; f < static_cast<int>(C.morphism_count()); ++f) {
    int lhs = D.compose(alpha.components[C.src(f)], G.mor_map[f]);
    int rhs = D.compose(F.mor_map[f], alpha.components[C.tgt(f)]);
    if (lhs < 0 || lhs != rhs) {
      r.failures.push_back("naturality fails at " + C.morphism(f).id);
    }
  }
  return r;
}

FinSpan pullback_finset(FinFunction const& f, FinFunction const& g) {
  if (f.cod != g.cod) {
    throw InputError("pullback of functions with different codomains");
  }
  FinSpan s;
  for (int x = 0; x < f.dom; ++x) {
    for (int y = 0; y < g.dom; ++y) {
      if (f(x) == g(y)) {
        s.apex.emplace_back(x, y);
      }
    }
  }
  int const n = static_cast<int>(s.apex.size());
  s.p1 = {n, f.dom, {}};
  s.p2 = {n, g.dom, {}};
  for (auto const& [x, y] : s.apex) {
    s.p1.map.push_back(x);
    s.p2.map.push_back(y);
  }
  return s;
}

int PresentedCategory::add_vertex(std::string name) {
  vertices.push_back(std::move(name));
  return static_cast<int>(vertices.size()) - 1;
}

int PresentedCategory::add_edge(std::string name, int src, int tgt) {
  edges.push_back({std::move(name), src, tgt});
  return static_cast<int>(edges.size()) - 1;
}

int PresentedCategory::path_target(Path const& p) const {
  int v = p.src;
  for (int e : p.edges) {
    if (e < 0 || e >= static_cast<int>(edges.size()) || edges[e].src != v) {
      throw InputError("path is not a composable sequence of edges");
    }
    v = edges[e].tgt;
  }
  return v;
}

void PresentedCategory::add_relation(Path p, Path q) {
  if (p.src != q.src || path_target(p) != path_target(q)) {
    throw InputError("relation between non-parallel paths");
  }
  relations.emplace_back(std::move(p), std::move(q));
}

int Quotient::class_of(Path const& p) const {
  int s = category.identity(p.src);
  for (int e : p.edges) {
    auto it = next[s].find(e);
    if (it == next[s].end()) {
      throw InputError("path leaves the presented graph");
    }
    s = it->second;
  }
  return s;
}

namespace {
  // Coset enumeration for the right action of paths on path classes, with
  // relations imposed at every state. Definitions follow the BFS order of
  // states, and every definition is followed by a full deduction pass.
  class Enumerator {
   public:
    explicit Enumerator(PresentedCategory const& P) : P_(P) {
      out_.resize(P.vertices.size());
      for (int e = 0; e < static_cast<int>(P.edges.size()); ++e) {
        out_[P.edges[e].src].push_back(e);
      }
      for (int v = 0; v < static_cast<int>(P.vertices.size()); ++v) {
        new_state(v, v, 0, {});
      }
    }

    Bounded<Quotient> run() {
      if (!close()) {
        return overflow();
      }
      for (int s = 0; s < static_cast<int>(states_.size()); ++s) {
        if (find(s) != s) {
          continue;
        }
        for (int e : out_[states_[s].vertex]) {
          if (find(s) != s) {
            break;
          }
          if (next(s, e) >= 0) {
            continue;
          }
          if (states_[s].depth + 1 > P_.cap) {
            return overflow();
          }
          auto word = states_[s].word;
          word.push_back(e);
          int t = new_state(states_[s].source, P_.edges[e].tgt,
                            states_[s].depth + 1, std::move(word));
          states_[s].next[e] = t;
          if (!close()) {
            return overflow();
          }
        }
      }
      for (int s = 0; s < static_cast<int>(states_.size()); ++s) {
        if (find(s) == s && states_[s].depth >= P_.cap) {
          return overflow();
        }
      }
      return build();
    }

   private:
    struct State {
      int                           source, vertex, depth;
      std::vector<int>              word;
      std::unordered_map<int, int>  next;
    };

    int new_state(int source, int vertex, int depth, std::vector<int> word) {
      states_.push_back({source, vertex, depth, std::move(word), {}});
      parent_.push_back(static_cast<int>(parent_.size()));
      return static_cast<int>(states_.size()) - 1;
    }

    int find(int s) {
      while (parent_[s] != s) {
        parent_[s] = parent_[parent_[s]];
        s          = parent_[s];
      }
      return s;
    }

    int next(int s, int e) {
      auto it = states_[s].next.find(e);
      return it == states_[s].next.end() ? -1 : find(it->second);
    }

    // Follows the edges of w from s; returns (state reached, edges consumed).
    std::pair<int, std::size_t> trace(int s, std::vector<int> const& w) {
      std::size_t i = 0;
      for (; i < w.size(); ++i) {
        int t = next(s, w[i]);
        if (t < 0) {
          break;
        }
        s = t;
      }
      return {s, i};
    }

    void coincidence(int a, int b) {
      std::deque<std::pair<int, int>> queue{{a, b}};
      while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        x = find(x);
        y = find(y);
        if (x == y) {
          continue;
        }
        if (y < x) {
          std::swap(x, y);
        }
        parent_[y] = x;
        changed_   = true;
        for (auto const& [e, t] : states_[y].next) {
          int tt = find(t);
          int xt = next(x, e);
          if (xt < 0) {
            states_[x].next[e] = tt;
          } else if (xt != tt) {
            queue.emplace_back(xt, tt);
          }
        }
      }
    }

    // Applies deductions and coincidences until every relation is either
    // satisfied or not yet traceable from every live state.
    bool close() {
      do {
        changed_ = false;
        for (int s = 0; s < static_cast<int>(states_.size()); ++s) {
          if (find(s) != s) {
            continue;
          }
          for (auto const& [p, q] : P_.relations) {
            if (find(s) != s) {
              break;
            }
            if (p.src != states_[s].vertex) {
              continue;
            }
            scan(s, p.edges, q.edges);
          }
        }
      } while (changed_);
      return true;
    }

    void scan(int s, std::vector<int> const& p, std::vector<int> const& q) {
      auto [x, i] = trace(s, p);
      auto [y, j] = trace(s, q);
      if (i == p.size() && j == q.size()) {
        if (x != y) {
          coincidence(x, y);
        }
      } else if (i == p.size() && j + 1 == q.size()) {
        states_[y].next[q.back()] = x;
        changed_                  = true;
      } else if (j == q.size() && i + 1 == p.size()) {
        states_[x].next[p.back()] = y;
        changed_                  = true;
      }
    }

    BoundExceeded overflow() const {
      return {P_.cap, "a path class has no representative shorter than the cap"};
    }

    std::string word_name(int source, std::vector<int> const& w) const {
      if (w.empty()) {
        return "1_" + P_.vertices[source];
      }
      if (w.size() == 1) {
        return P_.edges[w[0]].id;
      }
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i ? ";" : "") + P_.edges[w[i]].id;
      }
      return s;
    }

    Quotient build() {
      Quotient           Q;
      std::vector<int>   live, index(states_.size(), -1);
      for (int s = 0; s < static_cast<int>(states_.size()); ++s) {
        if (find(s) == s) {
          index[s] = static_cast<int>(live.size());
          live.push_back(s);
        }
      }
      for (auto const& v : P_.vertices) {
        Q.category.add_object(v);
      }
      for (int s : live) {
        Q.category.add_morphism(word_name(states_[s].source, states_[s].word),
                                states_[s].source, states_[s].vertex);
        Q.words.push_back(states_[s].word);
      }
      for (int v = 0; v < static_cast<int>(P_.vertices.size()); ++v) {
        Q.category.set_identity(v, index[find(v)]);
      }
      Q.next.resize(live.size());
      for (std::size_t m = 0; m < live.size(); ++m) {
        for (int e : out_[states_[live[m]].vertex]) {
          Q.next[m][e] = index[next(live[m], e)];
        }
      }
      for (std::size_t m = 0; m < live.size(); ++m) {
        for (std::size_t n = 0; n < live.size(); ++n) {
          if (states_[live[m]].vertex != states_[live[n]].source) {
            continue;
          }
          int s = live[m];
          for (int e : states_[live[n]].word) {
            s = next(s, e);
          }
          Q.category.set_composite(static_cast<int>(m), static_cast<int>(n),
                                   index[s]);
        }
      }
      for (int e = 0; e < static_cast<int>(P_.edges.size()); ++e) {
        Q.edge_class.push_back(index[next(find(P_.edges[e].src), e)]);
      }
      return Q;
    }

    PresentedCategory const&      P_;
    std::vector<std::vector<int>> out_;
    std::vector<State>            states_;
    std::vector<int>              parent_;
    bool                          changed_ = false;
  };
}  // namespace

Bounded<Quotient> quotient_presented(PresentedCategory const& P) {
  for (auto const& [p, q] : P.relations) {
    if (p.src != q.src || P.path_target(p) != P.path_target(q)) {
      throw InputError("relation between non-parallel paths");
    }
  }
  return Enumerator(P).run();
}

Bounded<CoinserterResult> coinserter(FinCategory const& X0,
                                     FinCategory const& X1,
                                     FinFunctor const& d1,
                                     FinFunctor const& d0, int cap) {
  if (!validate_functor(X1, X0, d1).ok() || !validate_functor(X1, X0, d0).ok()) {
    throw InputError("coinserter legs are not functors X1 -> X0");
  }
  PresentedCategory P;
  P.cap = cap;
  for (int a = 0; a < static_cast<int>(X0.object_count()); ++a) {
    P.add_vertex(X0.object_name(a));
  }
  int const nv = static_cast<int>(X0.morphism_count());
  for (int f = 0; f < nv; ++f) {
    P.add_edge(X0.morphism(f).id, X0.src(f), X0.tgt(f));
  }
  for (int g = 0; g < static_cast<int>(X1.object_count()); ++g) {
    P.add_edge(X1.object_name(g), d1.obj_map[g], d0.obj_map[g]);
  }
  for (auto const& [f, g, gf] : X0.composition_entries()) {
    P.add_relation({X0.src(f), {f, g}}, {X0.src(f), {gf}});
  }
  for (int a = 0; a < static_cast<int>(X0.object_count()); ++a) {
    P.add_relation({a, {X0.identity(a)}}, {a, {}});
  }
  for (int alpha = 0; alpha < static_cast<int>(X1.morphism_count()); ++alpha) {
    int g = X1.src(alpha), h = X1.tgt(alpha);
    P.add_relation({d1.obj_map[g], {nv + g, d0.mor_map[alpha]}},
                   {d1.obj_map[g], {d1.mor_map[alpha], nv + h}});
  }
  auto q = quotient_presented(P);
  if (auto* b = std::get_if<BoundExceeded>(&q)) {
    return *b;
  }
  auto& Q = std::get<Quotient>(q);
  CoinserterResult r;
  r.F.obj_map = identity_functor(X0).obj_map;
  for (int f = 0; f < nv; ++f) {
    r.F.mor_map.push_back(Q.edge_class[f]);
  }
  for (int g = 0; g < static_cast<int>(X1.object_count()); ++g) {
    r.xi.components.push_back(Q.edge_class[nv + g]);
  }
  r.category = std::move(Q.category);
  return r;
}

Bounded<CoequifierResult> coequifier(FinCategory const& D,
                                     FinNatTrans const& alpha,
                                     FinNatTrans const& beta, int cap) {
  if (alpha.components.size() != beta.components.size()) {
    throw InputError("coequifier needs parallel transformations");
  }
  PresentedCategory P;
  P.cap = cap;
  for (int a = 0; a < static_cast<int>(D.object_count()); ++a) {
    P.add_vertex(D.object_name(a));
  }
  for (int f = 0; f < static_cast<int>(D.morphism_count()); ++f) {
    P.add_edge(D.morphism(f).id, D.src(f), D.tgt(f));
  }
  for (auto const& [f, g, gf] : D.composition_entries()) {
    P.add_relation({D.src(f), {f, g}}, {D.src(f), {gf}});
  }
  for (int a = 0; a < static_cast<int>(D.object_count()); ++a) {
    P.add_relation({a, {D.identity(a)}}, {a, {}});
  }
  for (std::size_t i = 0; i < alpha.components.size(); ++i) {
    int p = alpha.components[i], q = beta.components[i];
    if (D.src(p) != D.src(q) || D.tgt(p) != D.tgt(q)) {
      throw InputError("coequifier components are not parallel");
    }
    P.add_relation({D.src(p), {p}}, {D.src(q), {q}});
  }
  auto q = quotient_presented(P);
  if (auto* b = std::get_if<BoundExceeded>(&q)) {
    return *b;
  }
  auto& Q = std::get<Quotient>(q);
  CoequifierResult r;
  r.Q.obj_map = identity_functor(D).obj_map;
  r.Q.mor_map = Q.edge_class;
  r.category  = std::move(Q.category);
  return r;
}

}  // namespace cornerkit
