#include "cornerkit/multicat.hpp"

#include <numeric>

namespace cornerkit {

namespace {
  void fail(Verdict& v, json w) {
    if (v.holds) {
      v.holds   = false;
      v.witness = std::move(w);
    }
  }

  int arity(Multicategory const& M, int f) {
    return static_cast<int>(M.morphisms[f].src.size());
  }

  json ids_json(Multicategory const& M, std::vector<int> const& fs) {
    json j = json::array();
    for (int f : fs) {
      j.push_back(M.morphisms[f].id);
    }
    return j;
  }

  // Every tuple (f1..fk) with tgt fi = src[i] and total arity <= budget.
  void plugs(Multicategory const& M, Tuple const& src, int budget,
             std::vector<int>& cur,
             std::function<void(std::vector<int> const&)> const& visit) {
    std::size_t i = cur.size();
    if (i == src.size()) {
      visit(cur);
      return;
    }
    for (int f = 0; f < static_cast<int>(M.morphisms.size()); ++f) {
      if (M.morphisms[f].tgt != src[i] || arity(M, f) > budget) {
        continue;
      }
      cur.push_back(f);
      plugs(M, src, budget - arity(M, f), cur, visit);
      cur.pop_back();
    }
  }

  void for_each_plug(Multicategory const& M, Tuple const& src, int budget,
                     std::function<void(std::vector<int> const&)> const& visit) {
    std::vector<int> cur;
    plugs(M, src, budget, cur, visit);
  }

  Tuple source_of(Multicategory const& M, std::vector<int> const& fs) {
    Tuple s;
    for (int f : fs) {
      auto const& x = M.morphisms[f].src;
      s.insert(s.end(), x.begin(), x.end());
    }
    return s;
  }
}  // namespace

void Multicategory::index() {
  homs_.clear();
  ids_.clear();
  for (int f = 0; f < static_cast<int>(morphisms.size()); ++f) {
    homs_[{morphisms[f].src, morphisms[f].tgt}].push_back(f);
    if (!ids_.emplace(morphisms[f].id, f).second) {
      throw InputError("duplicate multimorphism id '" + morphisms[f].id + "'");
    }
  }
}

std::vector<int> const& Multicategory::hom(Tuple const& src, int tgt) const {
  static std::vector<int> const none;
  auto it = homs_.find({src, tgt});
  return it == homs_.end() ? none : it->second;
}

int Multicategory::find(std::string const& id) const {
  auto it = ids_.find(id);
  return it == ids_.end() ? -1 : it->second;
}

PredicateReport validate_multicategory(Multicategory const& M, int arity_bound) {
  if (arity_bound < 1) {
    throw InputError("arity bound must be at least 1", "/arity_bound");
  }
  int const n_obj = static_cast<int>(M.objects.size());
  int const n_mor = static_cast<int>(M.morphisms.size());
  Verdict typing{"typing", true, nullptr}, ident{"identities", true, nullptr},
      closure{"closure", true, nullptr}, unit{"unit_laws", true, nullptr},
      assoc{"associativity", true, nullptr};

  for (int f = 0; f < n_mor; ++f) {
    auto const& m = M.morphisms[f];
    bool ok = m.tgt >= 0 && m.tgt < n_obj && arity(M, f) <= M.arity_bound;
    for (int x : m.src) {
      ok = ok && x >= 0 && x < n_obj;
    }
    if (!ok) {
      throw InputError("multimorphism '" + m.id + "' is mistyped",
                       "/morphisms/" + std::to_string(f));
    }
  }
  if (static_cast<int>(M.identity.size()) != n_obj) {
    throw InputError("one identity per object is required", "/identities");
  }
  for (int a = 0; a < n_obj; ++a) {
    int i = M.identity[a];
    if (i < 0 || i >= n_mor || M.morphisms[i].src != Tuple{a} || M.morphisms[i].tgt != a) {
      fail(ident, {{"object", M.objects[a]}});
    }
  }
  if (!ident.holds) {
    return {{typing, ident, closure, unit, assoc}};
  }

  for (int f = 0; f < n_mor; ++f) {
    if (arity(M, f) > arity_bound) {
      continue;
    }
    auto const& m = M.morphisms[f];
    if (M.compose(M.identity[m.tgt], {f}) != f) {
      fail(unit, {{"left", m.id}});
    }
    std::vector<int> ids;
    for (int x : m.src) {
      ids.push_back(M.identity[x]);
    }
    if (M.compose(f, ids) != f) {
      fail(unit, {{"right", m.id}});
    }
  }

  for (int g = 0; g < n_mor; ++g) {
    if (arity(M, g) > arity_bound) {
      continue;
    }
    for_each_plug(M, M.morphisms[g].src, arity_bound, [&](std::vector<int> const& fs) {
      int c = M.compose(g, fs);
      if (c < 0) {
        fail(closure, {{"g", M.morphisms[g].id}, {"f", ids_json(M, fs)}});
        return;
      }
      if (M.morphisms[c].src != source_of(M, fs) || M.morphisms[c].tgt != M.morphisms[g].tgt) {
        fail(typing, {{"g", M.morphisms[g].id}, {"f", ids_json(M, fs)}});
        return;
      }
      for_each_plug(M, M.morphisms[c].src, arity_bound, [&](std::vector<int> const& hs) {
        int lhs = M.compose(c, hs);
        std::vector<int> inner;
        std::size_t      at = 0;
        for (int f : fs) {
          std::vector<int> chunk(hs.begin() + at, hs.begin() + at + arity(M, f));
          at += arity(M, f);
          inner.push_back(M.compose(f, chunk));
        }
        bool defined = lhs >= 0;
        for (int x : inner) {
          defined = defined && x >= 0;
        }
        if (!defined) {
          fail(closure, {{"g", M.morphisms[g].id}, {"f", ids_json(M, fs)},
                         {"h", ids_json(M, hs)}});
          return;
        }
        if (lhs != M.compose(g, inner)) {
          fail(assoc, {{"g", M.morphisms[g].id}, {"f", ids_json(M, fs)},
                       {"h", ids_json(M, hs)}});
        }
      });
    });
  }
  return {{typing, ident, closure, unit, assoc}};
}

Multicategory terminal_multicategory(int n) {
  if (n < 0) {
    throw InputError("arity bound must be non-negative", "/arity_bound");
  }
  Multicategory M;
  M.fixture = "terminal";
  M.objects     = {"*"};
  M.arity_bound = n;
  for (int k = 0; k <= n; ++k) {
    M.morphisms.push_back({"t" + std::to_string(k), Tuple(k, 0), 0});
  }
  M.identity = {n >= 1 ? 1 : -1};
  M.compose  = [n](int g, std::vector<int> const& fs) {
    if (g < 0 || g > n || static_cast<int>(fs.size()) != g) {
      return -1;
    }
    int total = 0;
    for (int f : fs) {
      if (f < 0 || f > n) {
        return -1;
      }
      total += f;
    }
    return total <= n ? total : -1;
  };
  M.index();
  return M;
}

Multicategory endo2_multicategory(int n) {
  if (n < 0) {
    throw InputError("arity bound must be non-negative", "/arity_bound");
  }
  if (n > 3) {
    throw GuardError("endo2 arity bound " + std::to_string(n)
                     + " exceeds the supported maximum of 3");
  }
  Multicategory M;
  M.fixture = "endo2";
  M.objects     = {"2"};
  M.arity_bound = n;
  std::vector<int> offset;
  for (int k = 0; k <= n; ++k) {
    offset.push_back(static_cast<int>(M.morphisms.size()));
    int inputs = 1 << k;
    for (int t = 0; t < (1 << inputs); ++t) {
      std::string id = std::to_string(k) + ":";
      for (int x = 0; x < inputs; ++x) {
        id += ((t >> x) & 1) ? '1' : '0';
      }
      M.morphisms.push_back({id, Tuple(k, 0), 0});
    }
  }
  // morphism -> (arity, truth table)
  std::vector<std::pair<int, int>> table;
  for (int k = 0; k <= n; ++k) {
    for (int t = 0; t < (1 << (1 << k)); ++t) {
      table.emplace_back(k, t);
    }
  }
  M.identity = {n >= 1 ? offset[1] + 2 : -1};
  M.compose  = [n, offset, table](int g, std::vector<int> const& fs) {
    int const count = static_cast<int>(table.size());
    if (g < 0 || g >= count || table[g].first != static_cast<int>(fs.size())) {
      return -1;
    }
    int total = 0;
    for (int f : fs) {
      if (f < 0 || f >= count) {
        return -1;
      }
      total += table[f].first;
    }
    if (total > n) {
      return -1;
    }
    int t = 0;
    for (int x = 0; x < (1 << total); ++x) {
      int y = 0, shift = 0;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        auto [k, ft] = table[fs[i]];
        int arg      = (x >> shift) & ((1 << k) - 1);
        y |= ((ft >> arg) & 1) << i;
        shift += k;
      }
      t |= ((table[g].second >> y) & 1) << x;
    }
    return offset[total] + t;
  };
  M.index();
  return M;
}

Multicategory ternary_multicategory(int n) {
  Multicategory M;
  M.fixture = "ternary";
  M.objects     = {"*"};
  M.arity_bound = n;
  M.morphisms   = {{"id", {0}, 0}, {"t", {0, 0, 0}, 0}};
  M.identity    = {0};
  M.compose     = [](int g, std::vector<int> const& fs) {
    if (g == 0 && fs.size() == 1) {
      return fs[0];
    }
    if (g == 1 && fs == std::vector<int>{0, 0, 0}) {
      return 1;
    }
    return -1;
  };
  M.index();
  return M;
}

FreeStrictMonoidal::FreeStrictMonoidal(Multicategory M, int length_bound)
    : M_(std::move(M)), bound_(length_bound) {
  if (length_bound < 0) {
    throw InputError("length bound must be non-negative", "/bound");
  }
  if (length_bound > M_.arity_bound) {
    throw GuardError("length bound " + std::to_string(length_bound)
                     + " exceeds the arity bound " + std::to_string(M_.arity_bound)
                     + " of the multicategory");
  }
}

int FreeStrictMonoidal::generator_count() const {
  return static_cast<int>(M_.objects.size());
}
std::string FreeStrictMonoidal::generator_name(int x) const {
  return M_.objects[x];
}
std::string FreeStrictMonoidal::arrow_name(int f) const {
  return M_.morphisms[f].id;
}

void FreeStrictMonoidal::check(Tuple const& w) const {
  if (static_cast<int>(w.size()) > bound_) {
    throw BoundError("word of length " + std::to_string(w.size())
                     + " exceeds the length bound " + std::to_string(bound_));
  }
}

std::vector<Corner> FreeStrictMonoidal::hom(Tuple const& w, Tuple const& v) const {
  check(w);
  check(v);
  std::vector<Corner> out;
  for (auto const& blocks : chunkings(static_cast<int>(w.size()),
                                      static_cast<int>(v.size()))) {
    auto               parts = cut(w, blocks);
    std::vector<Tuple> arrows{{}};
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<Tuple> next;
      for (auto const& t : arrows) {
        for (int f : M_.hom(parts[i], v[i])) {
          auto t2 = t;
          t2.push_back(f);
          next.push_back(std::move(t2));
        }
      }
      arrows = std::move(next);
    }
    for (auto& a : arrows) {
      out.push_back({w, v, blocks, std::move(a)});
    }
  }
  return out;
}

Corner FreeStrictMonoidal::identity(Tuple const& w) const {
  check(w);
  Corner c{w, w, std::vector<int>(w.size(), 1), {}};
  for (int x : w) {
    c.arrows.push_back(M_.identity[x]);
  }
  return c;
}

Corner FreeStrictMonoidal::compose(Corner const& f, Corner const& g) const {
  if (f.cod != g.dom) {
    throw InputError("corners are not composable");
  }
  check(f.dom);
  check(g.cod);
  Corner      r{f.dom, g.cod, {}, {}};
  std::size_t at = 0;
  for (std::size_t j = 0; j < g.blocks.size(); ++j) {
    std::vector<int> fs;
    int              size = 0;
    for (int k = 0; k < g.blocks[j]; ++k, ++at) {
      fs.push_back(f.arrows[at]);
      size += f.blocks[at];
    }
    int c = M_.compose(g.arrows[j], fs);
    if (c < 0) {
      throw InputError("multicategory composite undefined for '"
                       + M_.morphisms[g.arrows[j]].id + "'");
    }
    r.blocks.push_back(size);
    r.arrows.push_back(c);
  }
  return r;
}

FreeStrictMonoidal free_strict_monoidal(Multicategory const& M, int length_bound) {
  return FreeStrictMonoidal(M, length_bound);
}

Coalgebra canonical_coalgebra(LazyStrictMonoidal const&) {
  Coalgebra G;
  G.on_objects = [](Tuple const& w) {
    std::vector<Tuple> out;
    for (int x : w) {
      out.push_back({x});
    }
    return out;
  };
  G.on_morphisms = [](Corner const& c) {
    Coalgebra::Image im{c.blocks, {}};
    auto             parts = cut(c.dom, c.blocks);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      im.arrows.push_back({parts[j], {c.cod[j]},
                           {static_cast<int>(parts[j].size())}, {c.arrows[j]}});
    }
    return im;
  };
  return G;
}

namespace {
  std::vector<Tuple> words_upto(int generators, int bound) {
    std::vector<Tuple> out;
    for (int n = 0; n <= bound; ++n) {
      for (auto& w : words(generators, n)) {
        out.push_back(std::move(w));
      }
    }
    return out;
  }

  Tuple flatten(std::vector<Tuple> const& ws) {
    Tuple out;
    for (auto const& w : ws) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  // Tuples of indices into primes whose concatenation has length <= bound.
  void prime_words(std::vector<Tuple> const& primes, int budget, Tuple& cur,
                   std::vector<Tuple>& out) {
    out.push_back(cur);
    for (int p = 0; p < static_cast<int>(primes.size()); ++p) {
      int len = static_cast<int>(primes[p].size());
      if (len == 0 || len > budget) {
        continue;
      }
      cur.push_back(p);
      prime_words(primes, budget - len, cur, out);
      cur.pop_back();
    }
  }
}  // namespace

PrimeResult prime_multicategory(LazyStrictMonoidal const& S, Coalgebra const& G,
                                int bound) {
  PrimeResult r;
  auto        stop = [&r](char const* axiom, json detail) {
    r.holds   = false;
    r.witness = {{"axiom", axiom}, {"detail", std::move(detail)}};
    return r;
  };
  auto W = words_upto(S.generator_count(), bound);
  for (auto const& w : W) {
    auto g = G.on_objects(w);
    if (flatten(g) != w) {
      return stop("counit", {{"object", S.word_name(w)}});
    }
    for (auto const& p : g) {
      if (G.on_objects(p) != std::vector<Tuple>{p}) {
        return stop("coassociativity", {{"object", S.word_name(w)},
                                        {"factor", S.word_name(p)}});
      }
    }
  }
  for (auto const& w : W) {
    for (auto const& v : W) {
      for (auto const& f : S.hom(w, v)) {
        auto im = G.on_morphisms(f);
        auto gw = G.on_objects(w), gv = G.on_objects(v);
        if (im.arrows.size() != gv.size() || im.blocks.size() != gv.size()) {
          return stop("counit", {{"morphism", S.corner_json(f)}});
        }
        Corner sum = S.identity({});
        try {
          auto parts = cut(Tuple(gw.size(), 0), im.blocks);
          std::size_t at = 0;
          for (std::size_t j = 0; j < parts.size(); ++j) {
            Tuple dom;
            for (std::size_t k = 0; k < parts[j].size(); ++k, ++at) {
              dom.insert(dom.end(), gw[at].begin(), gw[at].end());
            }
            if (im.arrows[j].dom != dom || im.arrows[j].cod != gv[j]) {
              return stop("counit", {{"morphism", S.corner_json(f)}});
            }
            sum = S.tensor(sum, im.arrows[j]);
          }
        } catch (InputError const&) {
          return stop("counit", {{"morphism", S.corner_json(f)}});
        }
        if (sum != f) {
          return stop("counit", {{"morphism", S.corner_json(f)}});
        }
      }
    }
  }

  for (auto const& w : W) {
    if (!w.empty() && G.on_objects(w) == std::vector<Tuple>{w}) {
      r.primes.push_back(w);
    }
  }
  std::vector<Tuple> sources;
  Tuple              cur;
  prime_words(r.primes, bound, cur, sources);
  std::sort(sources.begin(), sources.end(), [](Tuple const& a, Tuple const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (auto const& s : sources) {
    std::vector<Tuple> ps;
    for (int p : s) {
      ps.push_back(r.primes[p]);
    }
    auto w = flatten(ps);
    if (G.on_objects(w) != ps) {
      return stop("factorization", {{"object", S.word_name(w)}});
    }
  }

  Multicategory& M = r.multicategory;
  M.arity_bound    = bound;
  for (auto const& p : r.primes) {
    M.objects.push_back(S.word_name(p));
  }
  auto index = std::make_shared<std::map<Corner, int>>();
  for (auto const& s : sources) {
    std::vector<Tuple> ps;
    for (int p : s) {
      ps.push_back(r.primes[p]);
    }
    auto w = flatten(ps);
    for (int q = 0; q < static_cast<int>(r.primes.size()); ++q) {
      for (auto const& f : S.hom(w, r.primes[q])) {
        std::string id = S.word_name(w) + "->" + S.word_name(r.primes[q]) + ":";
        for (std::size_t i = 0; i < f.arrows.size(); ++i) {
          id += (i ? "," : "") + S.arrow_name(f.arrows[i]);
        }
        if (f.cod.size() != 1) {
          id += "@" + json(f.blocks).dump();
        }
        (*index)[f] = static_cast<int>(M.morphisms.size());
        M.morphisms.push_back({id, s, q});
        r.arrows.push_back(f);
      }
    }
  }
  for (auto const& p : r.primes) {
    auto it = index->find(S.identity(p));
    M.identity.push_back(it == index->end() ? -1 : it->second);
  }
  auto arrows = std::make_shared<std::vector<Corner>>(r.arrows);
  M.compose   = [&S, index, arrows](int g, std::vector<int> const& fs) {
    int const n = static_cast<int>(arrows->size());
    if (g < 0 || g >= n) {
      return -1;
    }
    Corner t = S.identity({});
    for (int f : fs) {
      if (f < 0 || f >= n) {
        return -1;
      }
      t = S.tensor(t, (*arrows)[f]);
    }
    if (t.cod != (*arrows)[g].dom) {
      return -1;
    }
    try {
      auto it = index->find(S.compose(t, (*arrows)[g]));
      return it == index->end() ? -1 : it->second;
    } catch (BoundError const&) {
      return -1;
    }
  };
  M.index();
  return r;
}

Decision multicategory_roundtrip(Multicategory const& M, int bound) {
  auto S = free_strict_monoidal(M, bound);
  auto R = prime_multicategory(S, canonical_coalgebra(S), bound);
  auto no = [](json w) { return Decision{false, std::move(w)}; };
  if (!R.holds) {
    return no({{"stage", "primes"}, {"detail", R.witness}});
  }
  int const n_obj = static_cast<int>(M.objects.size());
  if (static_cast<int>(R.primes.size()) != n_obj) {
    return no({{"stage", "objects"}, {"primes", R.primes.size()},
               {"objects", n_obj}});
  }
  for (int a = 0; a < n_obj; ++a) {
    if (R.primes[a] != Tuple{a}) {
      return no({{"stage", "objects"}, {"object", M.objects[a]}});
    }
  }
  auto const&      P = R.multicategory;
  std::vector<int> phi(M.morphisms.size(), -1);
  for (int b = 0; b < n_obj; ++b) {
    for (auto const& src : words_upto(n_obj, bound)) {
      auto const& mh = M.hom(src, b);
      auto const& ph = P.hom(src, b);
      if (mh.size() != ph.size()) {
        return no({{"stage", "hom"}, {"source", S.word_name(src)},
                   {"target", M.objects[b]}, {"multicategory", mh.size()},
                   {"primes", ph.size()}});
      }
      for (int f : mh) {
        Corner c{src, {b}, {static_cast<int>(src.size())}, {f}};
        for (int p : ph) {
          if (R.arrows[p] == c) {
            phi[f] = p;
          }
        }
        if (phi[f] < 0) {
          return no({{"stage", "hom"}, {"morphism", M.morphisms[f].id}});
        }
      }
    }
  }
  for (int a = 0; a < n_obj; ++a) {
    if (phi[M.identity[a]] != P.identity[a]) {
      return no({{"stage", "identity"}, {"object", M.objects[a]}});
    }
  }
  for (int g = 0; g < static_cast<int>(M.morphisms.size()); ++g) {
    if (arity(M, g) > bound) {
      continue;
    }
    Decision d;
    for_each_plug(M, M.morphisms[g].src, bound, [&](std::vector<int> const& fs) {
      if (!d.holds) {
        return;
      }
      std::vector<int> pfs;
      for (int f : fs) {
        pfs.push_back(phi[f]);
      }
      int c = M.compose(g, fs);
      if (c < 0 || phi[c] != P.compose(phi[g], pfs)) {
        d = no({{"stage", "composition"}, {"g", M.morphisms[g].id},
                {"f", ids_json(M, fs)}});
      }
    });
    if (!d.holds) {
      return d;
    }
  }
  return {};
}

}  // namespace cornerkit
