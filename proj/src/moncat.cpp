#include "cornerkit/moncat.hpp"

#include <mutex>
#include <unordered_map>
#include <numeric>

namespace cornerkit {

Bracketing cut(Tuple const& w, std::vector<int> const& blocks) {
  Bracketing  out;
  std::size_t at = 0;
  for (int b : blocks) {
    if (b < 0 || at + b > w.size()) {
      throw InputError("blocks do not cut the word");
    }
    out.emplace_back(w.begin() + at, w.begin() + at + b);
    at += b;
  }
  if (at != w.size()) {
    throw InputError("blocks do not cover the word");
  }
  return out;
}

namespace {
  void chunk_rec(int left, int k, int max_part, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
      if (left == 0) {
        out.push_back(cur);
      }
      return;
    }
    int top = max_part < 0 ? left : std::min(left, max_part);
    for (int p = 0; p <= top; ++p) {
      cur.push_back(p);
      chunk_rec(left - p, k, max_part, cur, out);
      cur.pop_back();
    }
  }

  Tuple concat(Bracketing const& a) {
    Tuple w;
    for (auto const& b : a) {
      w.insert(w.end(), b.begin(), b.end());
    }
    return w;
  }

  std::vector<int> lengths(Bracketing const& a) {
    std::vector<int> out;
    for (auto const& b : a) {
      out.push_back(static_cast<int>(b.size()));
    }
    return out;
  }

  template <typename T>
  T joined(T a, T const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  void fail(Verdict& v, json w) {
    if (v.holds) {
      v.holds   = false;
      v.witness = std::move(w);
    }
  }
}  // namespace

std::vector<std::vector<int>> chunkings(int n, int k, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int>              cur;
  chunk_rec(n, k, max_part, cur, out);
  return out;
}

std::vector<Tuple> words(int generators, int length) {
  std::vector<Tuple> out;
  Tuple              w(length, 0);
  if (length > 0 && generators == 0) {
    return out;
  }
  while (true) {
    out.push_back(w);
    int i = length - 1;
    while (i >= 0 && w[i] == generators - 1) {
      w[i--] = 0;
    }
    if (i < 0) {
      return out;
    }
    ++w[i];
  }
}

Corner LazyStrictMonoidal::tensor(Corner const& f, Corner const& g) const {
  return {joined(f.dom, g.dom), joined(f.cod, g.cod), joined(f.blocks, g.blocks),
          joined(f.arrows, g.arrows)};
}

std::string LazyStrictMonoidal::word_name(Tuple const& w) const {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    s += (i ? "," : "") + generator_name(w[i]);
  }
  return s + ")";
}

json LazyStrictMonoidal::corner_json(Corner const& c) const {
  json arrows = json::array();
  for (int f : c.arrows) {
    arrows.push_back(arrow_name(f));
  }
  return {{"dom", word_name(c.dom)}, {"cod", word_name(c.cod)},
          {"blocks", c.blocks}, {"arrows", arrows}};
}

PredicateReport validate_strict_monoidal(LazyStrictMonoidal const& S,
                                         int depth) {
  if (depth < 1) {
    throw InputError("depth must be at least 1", "/depth");
  }
  std::vector<Tuple> W;
  for (int n = 0; n <= depth; ++n) {
    for (auto& w : words(S.generator_count(), n)) {
      W.push_back(std::move(w));
    }
  }
  int const nw = static_cast<int>(W.size());
  std::map<Tuple, int> where;
  for (int i = 0; i < nw; ++i) {
    where[W[i]] = i;
  }
  // every corner between words of length <= depth gets an id
  std::vector<Corner>                        all;
  std::vector<std::vector<std::vector<int>>> H(nw, std::vector<std::vector<int>>(nw));
  std::map<Corner, int>                      id_of;
  for (int i = 0; i < nw; ++i) {
    for (int j = 0; j < nw; ++j) {
      for (auto& c : S.hom(W[i], W[j])) {
        id_of.emplace(c, static_cast<int>(all.size()));
        H[i][j].push_back(static_cast<int>(all.size()));
        all.push_back(std::move(c));
      }
    }
  }
  auto lookup = [&](Corner const& c) {
    auto it = id_of.find(c);
    return it == id_of.end() ? -1 : it->second;
  };
  auto cj = [&](int f) { return S.corner_json(all[f]); };

  Verdict ident{"identity", true, nullptr}, typing{"composition_typing", true, nullptr},
      unit{"unit_laws", true, nullptr}, assoc{"associativity", true, nullptr},
      functorial{"tensor_functorial", true, nullptr}, strict{"tensor_strict", true, nullptr};

  std::vector<int> ids(nw);
  for (int i = 0; i < nw; ++i) {
    ids[i] = lookup(S.identity(W[i]));
    if (ids[i] < 0 || all[ids[i]].dom != W[i] || all[ids[i]].cod != W[i]) {
      fail(ident, {{"word", S.word_name(W[i])}});
    }
  }
  if (!ident.holds) {
    return {{ident, typing, unit, assoc, functorial, strict}};
  }

  std::unordered_map<std::uint64_t, int> comp;
  for (int i = 0; i < nw; ++i) {
    for (int j = 0; j < nw; ++j) {
      for (int k = 0; k < nw; ++k) {
        for (int f : H[i][j]) {
          for (int g : H[j][k]) {
            int c = lookup(S.compose(all[f], all[g]));
            if (c < 0 || all[c].dom != W[i] || all[c].cod != W[k]) {
              fail(typing, {{"f", cj(f)}, {"g", cj(g)}});
            }
            comp[pair_key(f, g)] = c;
          }
        }
      }
    }
  }
  if (!typing.holds) {
    return {{ident, typing, unit, assoc, functorial, strict}};
  }
  auto cp = [&](int f, int g) { return comp.at(pair_key(f, g)); };

  for (int i = 0; i < nw; ++i) {
    for (int j = 0; j < nw; ++j) {
      for (int f : H[i][j]) {
        if (cp(ids[i], f) != f || cp(f, ids[j]) != f) {
          fail(unit, {{"corner", cj(f)}});
        }
        for (int k = 0; k < nw; ++k) {
          for (int g : H[j][k]) {
            int gf = cp(f, g);
            for (int l = 0; l < nw; ++l) {
              for (int h : H[k][l]) {
                if (cp(gf, h) != cp(f, cp(g, h))) {
                  fail(assoc, {{"f", cj(f)}, {"g", cj(g)}, {"h", cj(h)}});
                }
              }
            }
          }
        }
      }
    }
  }

  // Concatenation: a functor on pairs whose lengths add up to at most
  // depth, strictly associative and unital.
  int const none = ids[where.at({})];
  auto      tens = [&](int f, int g) { return lookup(S.tensor(all[f], all[g])); };
  for (int f = 0; f < static_cast<int>(all.size()); ++f) {
    if (tens(f, none) != f || tens(none, f) != f) {
      fail(strict, {{"unit", cj(f)}});
    }
  }
  auto fits = [depth](Tuple const& a, Tuple const& b) {
    return static_cast<int>(a.size() + b.size()) <= depth;
  };
  for (int i = 0; i < nw; ++i) {
    for (int i2 = 0; i2 < nw; ++i2) {
      if (!fits(W[i], W[i2])) {
        continue;
      }
      int ij = where.at(joined(W[i], W[i2]));
      if (tens(ids[i], ids[i2]) != ids[ij]) {
        fail(functorial, {{"identities", {S.word_name(W[i]), S.word_name(W[i2])}}});
      }
      for (int j = 0; j < nw; ++j) {
        for (int j2 = 0; j2 < nw; ++j2) {
          if (!fits(W[j], W[j2])) {
            continue;
          }
          for (int f : H[i][j]) {
            for (int f2 : H[i2][j2]) {
              int ff = tens(f, f2);
              if (ff < 0) {
                fail(strict, {{"f", cj(f)}, {"g", cj(f2)}});
                continue;
              }
              for (int k = 0; k < nw; ++k) {
                for (int k2 = 0; k2 < nw; ++k2) {
                  if (!fits(W[k], W[k2])) {
                    continue;
                  }
                  for (int g : H[j][k]) {
                    for (int g2 : H[j2][k2]) {
                      if (cp(ff, tens(g, g2)) != tens(cp(f, g), cp(f2, g2))) {
                        fail(functorial, {{"f", cj(f)}, {"g", cj(g)},
                                          {"f2", cj(f2)}, {"g2", cj(g2)}});
                      }
                    }
                  }
                }
              }
              for (int i3 = 0; i3 < nw; ++i3) {
                if (W[i].size() + W[i2].size() + W[i3].size() > static_cast<std::size_t>(depth)) {
                  continue;
                }
                for (int j3 = 0; j3 < nw; ++j3) {
                  if (W[j].size() + W[j2].size() + W[j3].size() > static_cast<std::size_t>(depth)) {
                    continue;
                  }
                  for (int f3 : H[i3][j3]) {
                    int a = tens(ff, f3), b = tens(f, tens(f2, f3));
                    if (a < 0 || a != b) {
                      fail(strict, {{"associativity", {cj(f), cj(f2), cj(f3)}}});
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return {{ident, typing, unit, assoc, functorial, strict}};
}

ColaxMonoidalCategory::ColaxMonoidalCategory(FinCategory base, std::string rule,
                                             TensorObj t0, TensorMor t1,
                                             Gamma gamma, Iota iota)
    : base_(std::move(base)),
      rule_(std::move(rule)),
      t0_(std::move(t0)),
      t1_(std::move(t1)),
      gamma_(std::move(gamma)),
      iota_(std::move(iota)),
      memo_(std::make_shared<Memo>()) {}

int ColaxMonoidalCategory::cached(std::map<Tuple, int>& m, Tuple const& key,
                                  std::function<int(Tuple const&)> const& f) const {
  {
    std::shared_lock lk(memo_->lock);
    auto             it = m.find(key);
    if (it != m.end()) {
      return it->second;
    }
  }
  int v = f(key);
  std::unique_lock lk(memo_->lock);
  return m.emplace(key, v).first->second;
}

int ColaxMonoidalCategory::tensor(Tuple const& w) const {
  for (int x : w) {
    if (x < 0 || x >= static_cast<int>(base_.object_count())) {
      throw InputError("word names an unknown object");
    }
  }
  int v = cached(memo_->t0, w, t0_);
  if (v < 0 || v >= static_cast<int>(base_.object_count())) {
    throw InputError("tensor oracle is undefined on a word of length "
                     + std::to_string(w.size()));
  }
  return v;
}

int ColaxMonoidalCategory::tensor_mor(Tuple const& fs) const {
  for (int f : fs) {
    if (f < 0 || f >= static_cast<int>(base_.morphism_count())) {
      throw InputError("tuple names an unknown morphism");
    }
  }
  int v = cached(memo_->t1, fs, t1_);
  if (v < 0 || v >= static_cast<int>(base_.morphism_count())) {
    throw InputError("tensor oracle is undefined on a tuple of morphisms");
  }
  return v;
}

int ColaxMonoidalCategory::gamma(Bracketing const& alpha) const {
  int v = -1;
  {
    std::shared_lock lk(memo_->lock);
    auto             it = memo_->gamma.find(alpha);
    if (it != memo_->gamma.end()) {
      v = it->second;
    }
  }
  if (v < 0) {
    v = gamma_(alpha);
    std::unique_lock lk(memo_->lock);
    memo_->gamma.emplace(alpha, v);
  }
  if (v < 0 || v >= static_cast<int>(base_.morphism_count())) {
    throw InputError("coassociator oracle is undefined");
  }
  return v;
}

int ColaxMonoidalCategory::iota(int a) const {
  int v = -1;
  {
    std::shared_lock lk(memo_->lock);
    auto             it = memo_->iota.find(a);
    if (it != memo_->iota.end()) {
      v = it->second;
    }
  }
  if (v < 0) {
    v = iota_(a);
    std::unique_lock lk(memo_->lock);
    memo_->iota.emplace(a, v);
  }
  if (v < 0 || v >= static_cast<int>(base_.morphism_count())) {
    throw InputError("counitor oracle is undefined at " + base_.object_name(a));
  }
  return v;
}

ColaxMonoidalCategory ColaxMonoidalCategory::with_gamma(Bracketing const& alpha,
                                                        int f) const {
  auto old = gamma_;
  return {base_, rule_ + "+mutated", t0_, t1_,
          [old, alpha, f](Bracketing const& b) { return b == alpha ? f : old(b); },
          iota_};
}

namespace {
  // Nested words for the colax validator.
  struct Nested {
    std::vector<Tuple>      W1;
    std::vector<Bracketing> W2;
    std::vector<std::vector<Bracketing>> W3;
  };

  // Block-length vectors with at most depth entries, each at most depth,
  // summing to at most depth.
  std::vector<std::vector<int>> shapes(int depth) {
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= depth; ++k) {
      for (int n = 0; n <= depth; ++n) {
        for (auto& c : chunkings(n, k, depth)) {
          out.push_back(std::move(c));
        }
      }
    }
    return out;
  }

  Nested nested(int generators, int depth) {
    Nested N;
    for (int n = 0; n <= depth; ++n) {
      for (auto& w : words(generators, n)) {
        N.W1.push_back(std::move(w));
      }
    }
    auto S = shapes(depth);
    for (auto const& s : S) {
      int n = std::accumulate(s.begin(), s.end(), 0);
      for (auto const& w : words(generators, n)) {
        N.W2.push_back(cut(w, s));
      }
    }
    // outer lists of shapes, total leaves <= depth
    std::vector<std::vector<int>> outer{{}};
    std::vector<std::vector<int>> frontier{{}};
    for (int k = 1; k <= depth; ++k) {
      std::vector<std::vector<int>> next;
      for (auto const& o : frontier) {
        for (int s = 0; s < static_cast<int>(S.size()); ++s) {
          auto o2 = o;
          o2.push_back(s);
          int leaves = 0;
          for (int t : o2) {
            leaves += std::accumulate(S[t].begin(), S[t].end(), 0);
          }
          if (leaves <= depth) {
            next.push_back(o2);
          }
        }
      }
      outer.insert(outer.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    for (auto const& o : outer) {
      std::vector<int> flat, mids;
      for (int t : o) {
        flat.insert(flat.end(), S[t].begin(), S[t].end());
        mids.push_back(static_cast<int>(S[t].size()));
      }
      int n = std::accumulate(flat.begin(), flat.end(), 0);
      for (auto const& w : words(generators, n)) {
        auto                    inner = cut(w, flat);
        std::vector<Bracketing> sigma;
        std::size_t             at = 0;
        for (int m : mids) {
          sigma.emplace_back(inner.begin() + at, inner.begin() + at + m);
          at += m;
        }
        N.W3.push_back(std::move(sigma));
      }
    }
    return N;
  }

  // Every tuple of morphisms whose i-th source is w[i].
  std::vector<Tuple> tuples_from(FinCategory const& C, Tuple const& w) {
    std::vector<Tuple> out{{}};
    for (int x : w) {
      std::vector<Tuple> next;
      for (auto const& t : out) {
        for (int f : C.out(x)) {
          auto t2 = t;
          t2.push_back(f);
          next.push_back(std::move(t2));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  json word_json(FinCategory const& C, Tuple const& w) {
    json j = json::array();
    for (int x : w) {
      j.push_back(C.object_name(x));
    }
    return j;
  }

  json bracketing_json(FinCategory const& C, Bracketing const& a) {
    json j = json::array();
    for (auto const& b : a) {
      j.push_back(word_json(C, b));
    }
    return j;
  }

  json mors_json(FinCategory const& C, Tuple const& fs) {
    json j = json::array();
    for (int f : fs) {
      j.push_back(C.morphism(f).id);
    }
    return j;
  }
}  // namespace

PredicateReport validate_colax_monoidal(ColaxMonoidalCategory const& A,
                                        int depth) {
  if (depth < 1) {
    throw InputError("depth must be at least 1", "/depth");
  }
  FinCategory const& C = A.base();
  auto               N = nested(static_cast<int>(C.object_count()), depth);

  Verdict functorial{"tensor_functorial", true, nullptr}, typing{"typing", true, nullptr},
      gnat{"gamma_naturality", true, nullptr}, inat{"iota_naturality", true, nullptr},
      coassoc{"coassociativity", true, nullptr}, cl{"counit_left", true, nullptr},
      cr{"counit_right", true, nullptr};

  auto tensor_all = [&](Bracketing const& a) {
    Tuple t;
    for (auto const& b : a) {
      t.push_back(A.tensor(b));
    }
    return t;
  };

  for (auto const& w : N.W1) {
    Tuple ids;
    for (int x : w) {
      ids.push_back(C.identity(x));
    }
    if (A.tensor_mor(ids) != C.identity(A.tensor(w))) {
      fail(functorial, {{"identities", word_json(C, w)}});
    }
    for (auto const& fs : tuples_from(C, w)) {
      Tuple cod;
      for (int f : fs) {
        cod.push_back(C.tgt(f));
      }
      int tf = A.tensor_mor(fs);
      if (C.src(tf) != A.tensor(w) || C.tgt(tf) != A.tensor(cod)) {
        fail(functorial, {{"typing", mors_json(C, fs)}});
        continue;
      }
      for (auto const& gs : tuples_from(C, cod)) {
        Tuple gf;
        for (std::size_t i = 0; i < fs.size(); ++i) {
          gf.push_back(C.compose(fs[i], gs[i]));
        }
        if (A.tensor_mor(gf) != C.compose(tf, A.tensor_mor(gs))) {
          fail(functorial, {{"f", mors_json(C, fs)}, {"g", mors_json(C, gs)}});
        }
      }
    }
  }
  for (auto const& a : N.W2) {
    int g = A.gamma(a);
    if (C.src(g) != A.tensor(concat(a)) || C.tgt(g) != A.tensor(tensor_all(a))) {
      fail(typing, {{"gamma", bracketing_json(C, a)}});
    }
  }
  for (int x = 0; x < static_cast<int>(C.object_count()); ++x) {
    int i = A.iota(x);
    if (C.src(i) != A.tensor({x}) || C.tgt(i) != x) {
      fail(typing, {{"iota", C.object_name(x)}});
    }
  }
  if (!typing.holds || !functorial.holds) {
    json skipped = {{"skipped", typing.holds ? "tensor_functorial" : "typing"}};
    for (auto* v : {&gnat, &inat, &coassoc, &cl, &cr}) {
      fail(*v, skipped);
    }
    return {{functorial, typing, gnat, inat, coassoc, cl, cr}};
  }

  for (int f = 0; f < static_cast<int>(C.morphism_count()); ++f) {
    int a = C.src(f), b = C.tgt(f);
    if (C.compose(A.iota(a), f) != C.compose(A.tensor_mor({f}), A.iota(b))) {
      fail(inat, {{"morphism", C.morphism(f).id}});
    }
  }
  for (auto const& a : N.W2) {
    auto blocks = lengths(a);
    for (auto const& fs : tuples_from(C, concat(a))) {
      Tuple cod;
      for (int f : fs) {
        cod.push_back(C.tgt(f));
      }
      auto  fa = cut(fs, blocks);
      Tuple inner;
      for (auto const& b : fa) {
        inner.push_back(A.tensor_mor(b));
      }
      int lhs = C.compose(A.gamma(a), A.tensor_mor(inner));
      int rhs = C.compose(A.tensor_mor(fs), A.gamma(cut(cod, blocks)));
      if (lhs != rhs) {
        fail(gnat, {{"bracketing", bracketing_json(C, a)},
                    {"morphisms", mors_json(C, fs)}});
      }
    }
  }
  for (auto const& sigma : N.W3) {
    Bracketing msig, tmsig, primed;
    for (auto const& mid : sigma) {
      msig.insert(msig.end(), mid.begin(), mid.end());
      tmsig.push_back(concat(mid));
      primed.push_back(tensor_all(mid));
    }
    int   route_a = C.compose(A.gamma(msig), A.gamma(primed));
    Tuple inner;
    for (auto const& mid : sigma) {
      inner.push_back(A.gamma(mid));
    }
    int route_b = C.compose(A.gamma(tmsig), A.tensor_mor(inner));
    if (route_a != route_b) {
      json s = json::array();
      for (auto const& mid : sigma) {
        s.push_back(bracketing_json(C, mid));
      }
      fail(coassoc, {{"triple", s}});
    }
  }
  for (auto const& w : N.W1) {
    int id = C.identity(A.tensor(w));
    if (C.compose(A.gamma({w}), A.iota(A.tensor(w))) != id) {
      fail(cl, {{"word", word_json(C, w)}});
    }
    Bracketing singles;
    Tuple      iotas;
    for (int x : w) {
      singles.push_back({x});
      iotas.push_back(A.iota(x));
    }
    if (C.compose(A.gamma(singles), A.tensor_mor(iotas)) != id) {
      fail(cr, {{"word", word_json(C, w)}});
    }
  }
  return {{functorial, typing, gnat, inat, coassoc, cl, cr}};
}

int         Strictification::generator_count() const {
  return static_cast<int>(A_.base().object_count());
}
std::string Strictification::generator_name(int x) const {
  return A_.base().object_name(x);
}
std::string Strictification::arrow_name(int f) const {
  return A_.base().morphism(f).id;
}

std::vector<Corner> Strictification::hom(Tuple const& w, Tuple const& v) const {
  FinCategory const&  C = A_.base();
  std::vector<Corner> out;
  for (auto const& blocks : chunkings(static_cast<int>(w.size()),
                                      static_cast<int>(v.size()))) {
    auto                          parts = cut(w, blocks);
    std::vector<std::vector<int>> choices;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      choices.push_back(C.hom(A_.tensor(parts[i]), v[i]));
    }
    std::vector<Tuple> arrows{{}};
    for (auto const& ch : choices) {
      std::vector<Tuple> next;
      for (auto const& t : arrows) {
        for (int f : ch) {
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

Corner Strictification::identity(Tuple const& w) const {
  Corner c{w, w, std::vector<int>(w.size(), 1), {}};
  for (int x : w) {
    c.arrows.push_back(A_.iota(x));
  }
  return c;
}

Corner Strictification::compose(Corner const& f, Corner const& g) const {
  if (f.cod != g.dom) {
    throw InputError("corners are not composable");
  }
  FinCategory const& C = A_.base();
  auto               dom_blocks = cut(f.dom, f.blocks);
  Corner             r{f.dom, g.cod, {}, {}};
  std::size_t        at = 0;
  for (std::size_t j = 0; j < g.blocks.size(); ++j) {
    Bracketing rho;
    Tuple      fs;
    int        size = 0;
    for (int k = 0; k < g.blocks[j]; ++k, ++at) {
      rho.push_back(dom_blocks[at]);
      fs.push_back(f.arrows[at]);
      size += f.blocks[at];
    }
    r.blocks.push_back(size);
    r.arrows.push_back(
        C.compose(C.compose(A_.gamma(rho), A_.tensor_mor(fs)), g.arrows[j]));
  }
  return r;
}

Strictification strictify(ColaxMonoidalCategory const& A) {
  return Strictification(A);
}

Corner unit_P(Strictification const& S, int f) {
  auto const& A = S.colax();
  int         a = A.base().src(f), b = A.base().tgt(f);
  return {{a}, {b}, {1}, {A.base().compose(A.iota(a), f)}};
}

Corner unit_Pbar(Strictification const& S, Tuple const& w) {
  auto const& A = S.colax();
  int         t = A.tensor(w);
  return {w, {t}, {static_cast<int>(w.size())}, {A.base().identity(t)}};
}

int Q_object(Strictification const& S, Tuple const& w) {
  return S.colax().tensor(w);
}

int Q_morphism(Strictification const& S, Corner const& c) {
  auto const& A = S.colax();
  return A.base().compose(A.gamma(cut(c.dom, c.blocks)), A.tensor_mor(c.arrows));
}

Corner unit_eta(Strictification const& S, Tuple const& w) {
  return unit_Pbar(S, w);
}

namespace {
  std::vector<Tuple> words_upto(int generators, int depth) {
    std::vector<Tuple> out;
    for (int n = 0; n <= depth; ++n) {
      for (auto& w : words(generators, n)) {
        out.push_back(std::move(w));
      }
    }
    return out;
  }

  Corner tensor_all(LazyStrictMonoidal const& S, std::vector<Corner> const& cs) {
    Corner r = S.identity({});
    for (auto const& c : cs) {
      r = S.tensor(r, c);
    }
    return r;
  }
}  // namespace

PredicateReport validate_unit_P(Strictification const& S, int depth) {
  if (depth < 1) {
    throw InputError("depth must be at least 1", "/depth");
  }
  auto const&        A = S.colax();
  FinCategory const& C = A.base();
  Verdict functorial{"P_functorial", true, nullptr}, nat{"Pbar_naturality", true, nullptr},
      assoc{"lax_associativity", true, nullptr}, unit{"lax_unit", true, nullptr};

  for (int x = 0; x < static_cast<int>(C.object_count()); ++x) {
    if (unit_P(S, C.identity(x)) != S.identity({x})) {
      fail(functorial, {{"identity", C.object_name(x)}});
    }
    if (S.compose(unit_Pbar(S, {x}), unit_P(S, A.iota(x))) != S.identity({x})) {
      fail(unit, {{"object", C.object_name(x)}});
    }
  }
  for (int f = 0; f < static_cast<int>(C.morphism_count()); ++f) {
    for (int g : C.out(C.tgt(f))) {
      if (S.compose(unit_P(S, f), unit_P(S, g)) != unit_P(S, C.compose(f, g))) {
        fail(functorial, {{"f", C.morphism(f).id}, {"g", C.morphism(g).id}});
      }
    }
  }
  for (auto const& w : words_upto(S.generator_count(), depth)) {
    for (auto const& fs : tuples_from(C, w)) {
      Tuple               cod;
      std::vector<Corner> ps;
      for (int f : fs) {
        cod.push_back(C.tgt(f));
        ps.push_back(unit_P(S, f));
      }
      auto lhs = S.compose(unit_Pbar(S, w), unit_P(S, A.tensor_mor(fs)));
      auto rhs = S.compose(tensor_all(S, ps), unit_Pbar(S, cod));
      if (lhs != rhs) {
        fail(nat, {{"morphisms", mors_json(C, fs)}});
      }
    }
  }
  for (auto const& a : nested(S.generator_count(), depth).W2) {
    auto                lhs = S.compose(unit_Pbar(S, concat(a)), unit_P(S, A.gamma(a)));
    std::vector<Corner> bars;
    Tuple               tensors;
    for (auto const& b : a) {
      bars.push_back(unit_Pbar(S, b));
      tensors.push_back(A.tensor(b));
    }
    auto rhs = S.compose(tensor_all(S, bars), unit_Pbar(S, tensors));
    if (lhs != rhs) {
      fail(assoc, {{"bracketing", bracketing_json(C, a)}});
    }
  }
  return {{functorial, nat, assoc, unit}};
}

PredicateReport validate_adjunction(Strictification const& S, int depth) {
  if (depth < 1) {
    throw InputError("depth must be at least 1", "/depth");
  }
  auto const&        A = S.colax();
  FinCategory const& C = A.base();
  Verdict functorial{"Q_functorial", true, nullptr},
      counit{"counit_naturality", true, nullptr}, eta{"unit_naturality", true, nullptr},
      triP{"triangle_P", true, nullptr}, triQ{"triangle_Q", true, nullptr},
      faithful{"P_injective_when_normal", true, nullptr};

  auto W = words_upto(S.generator_count(), depth);
  std::map<std::pair<Tuple, Tuple>, std::vector<Corner>> H;
  for (auto const& w : W) {
    for (auto const& v : W) {
      H[{w, v}] = S.hom(w, v);
    }
  }
  for (auto const& w : W) {
    if (Q_morphism(S, S.identity(w)) != C.identity(A.tensor(w))) {
      fail(functorial, {{"identity", S.word_name(w)}});
    }
    int t = A.tensor(w);
    if (C.compose(Q_morphism(S, unit_eta(S, w)), A.iota(t)) != C.identity(t)) {
      fail(triQ, {{"word", S.word_name(w)}});
    }
    for (auto const& v : W) {
      for (auto const& f : H[{w, v}]) {
        auto lhs = S.compose(unit_eta(S, w),
                             unit_P(S, Q_morphism(S, f)));
        auto rhs = S.compose(f, unit_eta(S, v));
        if (lhs != rhs) {
          fail(eta, {{"corner", S.corner_json(f)}});
        }
        for (auto const& u : W) {
          for (auto const& g : H[{v, u}]) {
            if (Q_morphism(S, S.compose(f, g))
                != C.compose(Q_morphism(S, f), Q_morphism(S, g))) {
              fail(functorial, {{"f", S.corner_json(f)}, {"g", S.corner_json(g)}});
            }
          }
        }
      }
    }
  }
  bool normal = true;
  for (int x = 0; x < static_cast<int>(C.object_count()); ++x) {
    if (S.compose(unit_eta(S, {x}), unit_P(S, A.iota(x))) != S.identity({x})) {
      fail(triP, {{"object", C.object_name(x)}});
    }
    normal = normal && is_isomorphism(C, A.iota(x)).has_value();
  }
  for (int f = 0; f < static_cast<int>(C.morphism_count()); ++f) {
    int lhs = C.compose(A.iota(C.src(f)), f);
    int rhs = C.compose(Q_morphism(S, unit_P(S, f)), A.iota(C.tgt(f)));
    if (lhs != rhs) {
      fail(counit, {{"morphism", C.morphism(f).id}});
    }
    if (!normal) {
      continue;
    }
    for (int g : C.hom(C.src(f), C.tgt(f))) {
      if (g != f && unit_P(S, g) == unit_P(S, f)) {
        fail(faithful, {{"f", C.morphism(f).id}, {"g", C.morphism(g).id}});
      }
    }
  }
  return {{functorial, counit, eta, triP, triQ, faithful}};
}

FinCategory two_chain() {
  FinCategory P;
  P.add_object("0");
  P.add_object("1");
  P.add_morphism("1_0", 0, 0);
  P.add_morphism("1_1", 1, 1);
  P.add_morphism("0<1", 0, 1);
  P.set_identity(0, 0);
  P.set_identity(1, 1);
  P.fill_unit_composites();
  return P;
}

namespace {
  ColaxMonoidalCategory lattice(FinCategory const& P, bool meet) {
    int const n = static_cast<int>(P.object_count());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (P.hom(a, b).size() > 1 || (a != b && !P.hom(a, b).empty()
                                       && !P.hom(b, a).empty())) {
          throw InputError("base is not a poset", "/base");
        }
      }
    }
    auto below = [P, meet](int a, int b) {
      return meet ? !P.hom(a, b).empty() : !P.hom(b, a).empty();
    };
    // greatest lower bound (or least upper bound) of w, -1 if none
    auto bound = [n, below](Tuple const& w) {
      std::vector<int> lower;
      for (int z = 0; z < n; ++z) {
        bool ok = true;
        for (int x : w) {
          ok = ok && below(z, x);
        }
        if (ok) {
          lower.push_back(z);
        }
      }
      for (int z : lower) {
        bool top = true;
        for (int y : lower) {
          top = top && below(y, z);
        }
        if (top) {
          return z;
        }
      }
      return -1;
    };
    auto arrow = [P](int a, int b) {
      if (a < 0 || b < 0) {
        return -1;
      }
      auto const& h = P.hom(a, b);
      return h.empty() ? -1 : h.front();
    };
    auto t1 = [P, bound, arrow](Tuple const& fs) {
      Tuple s, t;
      for (int f : fs) {
        s.push_back(P.src(f));
        t.push_back(P.tgt(f));
      }
      return arrow(bound(s), bound(t));
    };
    auto gamma = [bound, arrow](Bracketing const& a) {
      Tuple all, parts;
      for (auto const& b : a) {
        all.insert(all.end(), b.begin(), b.end());
        parts.push_back(bound(b));
      }
      for (int p : parts) {
        if (p < 0) {
          return -1;
        }
      }
      return arrow(bound(all), bound(parts));
    };
    auto iota = [P](int a) { return P.identity(a); };
    return {P, meet ? "meet-poset" : "join-poset", bound, t1, gamma, iota};
  }
}  // namespace

ColaxMonoidalCategory meet_poset(FinCategory const& P) { return lattice(P, true); }
ColaxMonoidalCategory join_poset(FinCategory const& P) { return lattice(P, false); }
ColaxMonoidalCategory min_poset() { return meet_poset(two_chain()); }

ColaxMonoidalCategory commutative_monoid(FinCategory const& M) {
  if (M.object_count() != 1) {
    throw InputError("a monoid has exactly one object", "/base");
  }
  int const n = static_cast<int>(M.morphism_count());
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      if (M.compose(f, g) != M.compose(g, f)) {
        throw InputError("composition is not commutative", "/base");
      }
    }
  }
  int id = M.identity(0);
  return {M,
          "commutative-monoid",
          [](Tuple const&) { return 0; },
          [M, id](Tuple const& fs) {
            int r = id;
            for (int f : fs) {
              r = M.compose(r, f);
            }
            return r;
          },
          [id](Bracketing const&) { return id; },
          [id](int) { return id; }};
}

ColaxMonoidalCategory colax_from_rule(FinCategory const& base,
                                      std::string const& rule) {
  if (rule == "meet-poset") {
    return meet_poset(base);
  }
  if (rule == "join-poset") {
    return join_poset(base);
  }
  if (rule == "commutative-monoid") {
    return commutative_monoid(base);
  }
  throw InputError("unsupported tensor rule '" + rule + "'", "/tensor");
}

}  // namespace cornerkit
