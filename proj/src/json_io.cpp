#include "cornerkit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "cornerkit/fixtures.hpp"

namespace cornerkit {

std::string pointer_escape(std::string const& token) {
  std::string out;
  for (char c : token) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

namespace {

  std::string at_key(std::string const& at, std::string const& key) {
    return at + "/" + pointer_escape(key);
  }
  std::string at_index(std::string const& at, std::size_t i) {
    return at + "/" + std::to_string(i);
  }

  json const& expect_array(json const& j, std::string const& at) {
    if (!j.is_array()) {
      throw InputError("expected an array", at);
    }
    return j;
  }

  json const& expect_object(json const& j, std::string const& at) {
    if (!j.is_object()) {
      throw InputError("expected an object", at);
    }
    return j;
  }

  std::string const& expect_string(json const& j, std::string const& at) {
    if (!j.is_string()) {
      throw InputError("expected a string", at);
    }
    return j.get_ref<std::string const&>();
  }

  int expect_int(json const& j, std::string const& at) {
    if (!j.is_number_integer()) {
      throw InputError("expected an integer", at);
    }
    return j.get<int>();
  }

  void check_fields(json const& j, std::string const& at,
                    std::vector<std::string> const& required,
                    std::vector<std::string> const& optional = {}) {
    expect_object(j, at);
    for (auto const& [key, value] : j.items()) {
      bool known = std::find(required.begin(), required.end(), key) != required.end()
                   || std::find(optional.begin(), optional.end(), key) != optional.end();
      if (!known) {
        throw InputError("unknown field '" + key + "'", at_key(at, key));
      }
    }
    for (auto const& key : required) {
      if (!j.contains(key)) {
        throw InputError("missing field '" + key + "'", at_key(at, key));
      }
    }
  }

  int object_ref(FinCategory const& C, json const& j, std::string const& at) {
    auto const& name = expect_string(j, at);
    auto        a    = C.find_object(name);
    if (!a) {
      throw InputError("unknown object '" + name + "'", at);
    }
    return *a;
  }

  int morphism_ref(FinCategory const& C, json const& j, std::string const& at) {
    auto const& name = expect_string(j, at);
    auto        f    = C.find_morphism(name);
    if (!f) {
      throw InputError("unknown morphism '" + name + "'", at);
    }
    return *f;
  }

  json const& triple(json const& j, std::string const& at, std::size_t n) {
    expect_array(j, at);
    if (j.size() != n) {
      throw InputError("expected " + std::to_string(n) + " entries", at);
    }
    return j;
  }

  // Shared by the double and the codomain-colax schema.
  template <typename X>
  void parse_cells(X& out, json const& j, std::string const& at) {
    out.vertical = category_from_json(j.at("vertical"), at_key(at, "vertical"));
    out.squares  = category_from_json(j.at("squares"), at_key(at, "squares"));
    auto d1 = functor_from_json(j.at("d1"), out.squares, out.vertical, at_key(at, "d1"));
    auto d0 = functor_from_json(j.at("d0"), out.squares, out.vertical, at_key(at, "d0"));
    auto s  = functor_from_json(j.at("s"), out.vertical, out.squares, at_key(at, "s"));
    out.d1_obj = d1.obj_map;
    out.d1_mor = d1.mor_map;
    out.d0_obj = d0.obj_map;
    out.d0_mor = d0.mor_map;
    out.s_obj  = s.obj_map;
    out.s_mor  = s.mor_map;
  }

  template <typename X>
  void parse_hcomp(X& out, json const& j, std::string const& at, bool strict) {
    if (j.contains("hcomp_obj")) {
      std::string p = at_key(at, "hcomp_obj");
      auto const& list = expect_array(j.at("hcomp_obj"), p);
      for (std::size_t i = 0; i < list.size(); ++i) {
        std::string q = at_index(p, i);
        auto const& e = triple(list[i], q, 3);
        int g1  = object_ref(out.squares, e[0], at_index(q, 0));
        int g2  = object_ref(out.squares, e[1], at_index(q, 1));
        int g21 = object_ref(out.squares, e[2], at_index(q, 2));
        if (out.hcod(g1) != out.hdom(g2)) {
          throw InputError("horizontals are not composable", q);
        }
        if (out.hdom(g21) != out.hdom(g1) || (strict && out.hcod(g21) != out.hcod(g2))) {
          throw InputError("composite has the wrong boundary", q);
        }
        auto [it, fresh] = out.hcomp_obj.emplace(pair_key(g1, g2), g21);
        if (!fresh && it->second != g21) {
          throw InputError("conflicting composite", q);
        }
      }
    }
    if (j.contains("hcomp_sq")) {
      std::string p = at_key(at, "hcomp_sq");
      auto const& list = expect_array(j.at("hcomp_sq"), p);
      for (std::size_t i = 0; i < list.size(); ++i) {
        std::string q = at_index(p, i);
        auto const& e = triple(list[i], q, 3);
        int a1  = morphism_ref(out.squares, e[0], at_index(q, 0));
        int a2  = morphism_ref(out.squares, e[1], at_index(q, 1));
        int a21 = morphism_ref(out.squares, e[2], at_index(q, 2));
        if (out.right(a1) != out.left(a2)) {
          throw InputError("squares are not composable", q);
        }
        if (out.left(a21) != out.left(a1) || (strict && out.right(a21) != out.right(a2))) {
          throw InputError("composite has the wrong boundary", q);
        }
        auto [it, fresh] = out.hcomp_sq.emplace(pair_key(a1, a2), a21);
        if (!fresh && it->second != a21) {
          throw InputError("conflicting composite", q);
        }
      }
    }
  }

  std::vector<std::pair<int, int>> sorted_keys(
      std::unordered_map<std::uint64_t, int> const& m) {
    std::vector<std::pair<int, int>> keys;
    for (auto const& [k, v] : m) {
      keys.emplace_back(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  }

  // unit_forced(a, b, c): the entry (a, b) -> c is implied by the unit laws.
  template <typename X, typename Forced, typename Forced2>
  json cells_to_json(X const& x, Forced obj_forced, Forced2 sq_forced) {
    json out;
    out["vertical"] = category_to_json(x.vertical);
    out["squares"]  = category_to_json(x.squares);
    out["d1"] = functor_to_json(x.squares, x.vertical, {x.d1_obj, x.d1_mor});
    out["d0"] = functor_to_json(x.squares, x.vertical, {x.d0_obj, x.d0_mor});
    out["s"]  = functor_to_json(x.vertical, x.squares, {x.s_obj, x.s_mor});
    json ho = json::array();
    for (auto [g1, g2] : sorted_keys(x.hcomp_obj)) {
      int g = x.hcomp_obj.at(pair_key(g1, g2));
      if (!obj_forced(g1, g2, g)) {
        ho.push_back({x.hname(g1), x.hname(g2), x.hname(g)});
      }
    }
    json hs = json::array();
    for (auto [a1, a2] : sorted_keys(x.hcomp_sq)) {
      int a = x.hcomp_sq.at(pair_key(a1, a2));
      if (!sq_forced(a1, a2, a)) {
        auto const& S = x.squares;
        hs.push_back({S.morphism(a1).id, S.morphism(a2).id, S.morphism(a).id});
      }
    }
    out["hcomp_obj"] = std::move(ho);
    out["hcomp_sq"]  = std::move(hs);
    return out;
  }

  int arity(Multicategory const& M, int f) {
    return static_cast<int>(M.morphisms[f].src.size());
  }

  // Every argument list for g whose total arity stays within the bound.
  void plug_lists(Multicategory const& M, int g, std::vector<int>& fs, int used,
                  std::vector<std::vector<int>>& out) {
    auto const& src = M.morphisms[g].src;
    if (fs.size() == src.size()) {
      out.push_back(fs);
      return;
    }
    int slot = src[fs.size()];
    for (int f = 0; f < static_cast<int>(M.morphisms.size()); ++f) {
      if (M.morphisms[f].tgt != slot || used + arity(M, f) > M.arity_bound) {
        continue;
      }
      fs.push_back(f);
      plug_lists(M, g, fs, used + arity(M, f), out);
      fs.pop_back();
    }
  }

  struct RuleNames {
    char const* gamma;
    char const* iota;
  };
  RuleNames rule_names(std::string const& tensor) {
    if (tensor == "commutative-monoid" || tensor == "free-on-multicat") {
      return {"identity", "identity"};
    }
    return {"unique", "unique"};
  }

  void check_rule_names(json const& j, std::string const& tensor) {
    auto names = rule_names(tensor);
    for (auto const& [key, want] :
         {std::pair{"gamma", names.gamma}, std::pair{"iota", names.iota}}) {
      if (j.contains(key)) {
        auto const& v = expect_string(j.at(key), at_key("", key));
        if (v != want) {
          throw InputError("rule '" + tensor + "' has " + key + " '" + want
                               + "', not '" + v + "'",
                           at_key("", key));
        }
      }
    }
  }

}  // namespace

json category_to_json(FinCategory const& C) {
  json objects = json::array();
  for (std::size_t a = 0; a < C.object_count(); ++a) {
    objects.push_back(C.object_name(static_cast<int>(a)));
  }
  json morphisms = json::array();
  for (std::size_t f = 0; f < C.morphism_count(); ++f) {
    auto const& m = C.morphism(static_cast<int>(f));
    json e;
    e["id"]  = m.id;
    e["src"] = C.object_name(m.src);
    e["tgt"] = C.object_name(m.tgt);
    morphisms.push_back(std::move(e));
  }
  json ids = json::object();
  for (std::size_t a = 0; a < C.object_count(); ++a) {
    int i = C.identity(static_cast<int>(a));
    if (i >= 0) {
      ids[C.object_name(static_cast<int>(a))] = C.morphism(i).id;
    }
  }
  json comp = json::array();
  for (auto [f, g, gf] : C.composition_entries()) {
    if ((C.is_identity(f) && gf == g) || (C.is_identity(g) && gf == f)) {
      continue;
    }
    comp.push_back({C.morphism(f).id, C.morphism(g).id, C.morphism(gf).id});
  }
  json out;
  out["objects"]     = std::move(objects);
  out["morphisms"]   = std::move(morphisms);
  out["identities"]  = std::move(ids);
  out["composition"] = std::move(comp);
  return out;
}

FinCategory category_from_json(json const& j, std::string const& at) {
  check_fields(j, at, {"objects", "morphisms", "identities"}, {"composition"});
  FinCategory C;
  std::string p = at_key(at, "objects");
  auto const& objects = expect_array(j.at("objects"), p);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    auto const& name = expect_string(objects[i], at_index(p, i));
    if (C.find_object(name)) {
      throw InputError("duplicate object '" + name + "'", at_index(p, i));
    }
    C.add_object(name);
  }
  p = at_key(at, "morphisms");
  auto const& morphisms = expect_array(j.at("morphisms"), p);
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    std::string q = at_index(p, i);
    check_fields(morphisms[i], q, {"id", "src", "tgt"});
    auto const& id = expect_string(morphisms[i].at("id"), at_key(q, "id"));
    if (C.find_morphism(id)) {
      throw InputError("duplicate morphism '" + id + "'", at_key(q, "id"));
    }
    int s = object_ref(C, morphisms[i].at("src"), at_key(q, "src"));
    int t = object_ref(C, morphisms[i].at("tgt"), at_key(q, "tgt"));
    C.add_morphism(id, s, t);
  }
  p = at_key(at, "identities");
  auto const& ids = expect_object(j.at("identities"), p);
  for (auto const& [key, value] : ids.items()) {
    std::string q = at_key(p, key);
    int a = object_ref(C, json(key), q);
    int i = morphism_ref(C, value, q);
    if (C.src(i) != a || C.tgt(i) != a) {
      throw InputError("identity of '" + key + "' is not an endomorphism of it", q);
    }
    C.set_identity(a, i);
  }
  for (std::size_t a = 0; a < C.object_count(); ++a) {
    if (C.identity(static_cast<int>(a)) < 0) {
      throw InputError("object '" + C.object_name(static_cast<int>(a)) + "' has no identity", p);
    }
  }
  if (j.contains("composition")) {
    p = at_key(at, "composition");
    auto const& comp = expect_array(j.at("composition"), p);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      std::string q = at_index(p, i);
      auto const& e = triple(comp[i], q, 3);
      int f  = morphism_ref(C, e[0], at_index(q, 0));
      int g  = morphism_ref(C, e[1], at_index(q, 1));
      int gf = morphism_ref(C, e[2], at_index(q, 2));
      if (C.tgt(f) != C.src(g)) {
        throw InputError("not a composable pair", q);
      }
      if (C.src(gf) != C.src(f) || C.tgt(gf) != C.tgt(g)) {
        throw InputError("composite has the wrong source or target", at_index(q, 2));
      }
      if (C.has_composite(f, g) && C.compose(f, g) != gf) {
        throw InputError("conflicting composite", q);
      }
      C.set_composite(f, g, gf);
    }
  }
  C.fill_unit_composites();
  return C;
}

json functor_to_json(FinCategory const& C, FinCategory const& D,
                     FinFunctor const& F) {
  json objects = json::object(), morphisms = json::object();
  for (std::size_t a = 0; a < C.object_count(); ++a) {
    objects[C.object_name(static_cast<int>(a))] = D.object_name(F.obj_map[a]);
  }
  for (std::size_t f = 0; f < C.morphism_count(); ++f) {
    morphisms[C.morphism(static_cast<int>(f)).id] = D.morphism(F.mor_map[f]).id;
  }
  json out;
  out["objects"]   = std::move(objects);
  out["morphisms"] = std::move(morphisms);
  return out;
}

FinFunctor functor_from_json(json const& j, FinCategory const& C,
                             FinCategory const& D, std::string const& at) {
  check_fields(j, at, {"objects", "morphisms"});
  FinFunctor F;
  F.obj_map.assign(C.object_count(), -1);
  F.mor_map.assign(C.morphism_count(), -1);
  std::string p = at_key(at, "objects");
  for (auto const& [key, value] : expect_object(j.at("objects"), p).items()) {
    std::string q = at_key(p, key);
    F.obj_map[object_ref(C, json(key), q)] = object_ref(D, value, q);
  }
  for (std::size_t a = 0; a < C.object_count(); ++a) {
    if (F.obj_map[a] < 0) {
      throw InputError("no image for object '" + C.object_name(static_cast<int>(a)) + "'", p);
    }
  }
  p = at_key(at, "morphisms");
  for (auto const& [key, value] : expect_object(j.at("morphisms"), p).items()) {
    std::string q = at_key(p, key);
    F.mor_map[morphism_ref(C, json(key), q)] = morphism_ref(D, value, q);
  }
  for (std::size_t f = 0; f < C.morphism_count(); ++f) {
    if (F.mor_map[f] < 0) {
      throw InputError("no image for morphism '" + C.morphism(static_cast<int>(f)).id + "'", p);
    }
  }
  return F;
}

json nat_trans_to_json(FinCategory const& C, FinCategory const& D,
                       FinNatTrans const& alpha) {
  json out = json::object();
  for (std::size_t a = 0; a < C.object_count(); ++a) {
    out[C.object_name(static_cast<int>(a))] = D.morphism(alpha.components[a]).id;
  }
  return out;
}

FinNatTrans nat_trans_from_json(json const& j, FinCategory const& C,
                                FinCategory const& D, std::string const& at) {
  FinNatTrans alpha;
  alpha.components.assign(C.object_count(), -1);
  for (auto const& [key, value] : expect_object(j, at).items()) {
    std::string q = at_key(at, key);
    alpha.components[object_ref(C, json(key), q)] = morphism_ref(D, value, q);
  }
  for (std::size_t a = 0; a < C.object_count(); ++a) {
    if (alpha.components[a] < 0) {
      throw InputError("no component at '" + C.object_name(static_cast<int>(a)) + "'", at);
    }
  }
  return alpha;
}

json presented_to_json(PresentedCategory const& P) {
  json out;
  out["vertices"] = P.vertices;
  json edges = json::array();
  for (auto const& e : P.edges) {
    json x;
    x["id"]  = e.id;
    x["src"] = P.vertices[e.src];
    x["tgt"] = P.vertices[e.tgt];
    edges.push_back(std::move(x));
  }
  out["edges"] = std::move(edges);
  auto path = [&P](Path const& p) {
    json x;
    x["src"]   = P.vertices[p.src];
    x["edges"] = json::array();
    for (int e : p.edges) {
      x["edges"].push_back(P.edges[e].id);
    }
    return x;
  };
  json rel = json::array();
  for (auto const& [p, q] : P.relations) {
    rel.push_back({path(p), path(q)});
  }
  out["relations"] = std::move(rel);
  out["cap"]       = P.cap;
  return out;
}

PresentedCategory presented_from_json(json const& j, std::string const& at) {
  check_fields(j, at, {"vertices", "edges"}, {"relations", "cap"});
  PresentedCategory P;
  std::map<std::string, int> vid, eid;
  std::string p = at_key(at, "vertices");
  auto const& vs = expect_array(j.at("vertices"), p);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto const& name = expect_string(vs[i], at_index(p, i));
    if (vid.count(name)) {
      throw InputError("duplicate vertex '" + name + "'", at_index(p, i));
    }
    vid[name] = P.add_vertex(name);
  }
  auto vertex = [&vid](json const& v, std::string const& q) {
    auto const& name = expect_string(v, q);
    auto it = vid.find(name);
    if (it == vid.end()) {
      throw InputError("unknown vertex '" + name + "'", q);
    }
    return it->second;
  };
  p = at_key(at, "edges");
  auto const& es = expect_array(j.at("edges"), p);
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string q = at_index(p, i);
    check_fields(es[i], q, {"id", "src", "tgt"});
    auto const& id = expect_string(es[i].at("id"), at_key(q, "id"));
    if (eid.count(id)) {
      throw InputError("duplicate edge '" + id + "'", at_key(q, "id"));
    }
    eid[id] = P.add_edge(id, vertex(es[i].at("src"), at_key(q, "src")),
                         vertex(es[i].at("tgt"), at_key(q, "tgt")));
  }
  auto path = [&](json const& x, std::string const& q) {
    check_fields(x, q, {"src", "edges"});
    Path out;
    out.src  = vertex(x.at("src"), at_key(q, "src"));
    int here = out.src;
    std::string r = at_key(q, "edges");
    auto const& list = expect_array(x.at("edges"), r);
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto const& name = expect_string(list[i], at_index(r, i));
      auto it = eid.find(name);
      if (it == eid.end()) {
        throw InputError("unknown edge '" + name + "'", at_index(r, i));
      }
      if (P.edges[it->second].src != here) {
        throw InputError("edge does not continue the path", at_index(r, i));
      }
      here = P.edges[it->second].tgt;
      out.edges.push_back(it->second);
    }
    return out;
  };
  if (j.contains("relations")) {
    p = at_key(at, "relations");
    auto const& rs = expect_array(j.at("relations"), p);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      std::string q = at_index(p, i);
      auto const& e = triple(rs[i], q, 2);
      Path a = path(e[0], at_index(q, 0));
      Path b = path(e[1], at_index(q, 1));
      if (a.src != b.src || P.path_target(a) != P.path_target(b)) {
        throw InputError("related paths must share endpoints", q);
      }
      P.add_relation(a, b);
    }
  }
  if (j.contains("cap")) {
    P.cap = expect_int(j.at("cap"), at_key(at, "cap"));
  }
  return P;
}

json double_to_json(DoubleCategory const& X) {
  return cells_to_json(
      X,
      [&X](int g1, int g2, int g) {
        return (g1 == X.hunit(X.hdom(g2)) && g == g2)
               || (g2 == X.hunit(X.hcod(g1)) && g == g1);
      },
      [&X](int a1, int a2, int a) {
        return (a1 == X.hid(X.left(a2)) && a == a2)
               || (a2 == X.hid(X.right(a1)) && a == a1);
      });
}

DoubleCategory double_from_json(json const& j, std::string const& at) {
  check_fields(j, at, {"vertical", "squares", "d1", "d0", "s"},
               {"hcomp_obj", "hcomp_sq"});
  DoubleCategory X;
  parse_cells(X, j, at);
  parse_hcomp(X, j, at, true);
  X.fill_unit_hcomps();
  return X;
}

json codcolax_to_json(CodomainColaxCategory const& X) {
  auto never = [](int, int, int) { return false; };
  json out   = cells_to_json(X, never, never);
  json gamma = json::array();
  for (auto [g1, g2] : sorted_keys(X.gamma)) {
    gamma.push_back({X.hname(g1), X.hname(g2), X.vname(X.gamma.at(pair_key(g1, g2)))});
  }
  out["gamma"] = std::move(gamma);
  json iota    = json::object();
  for (std::size_t a = 0; a < X.object_count(); ++a) {
    iota[X.oname(static_cast<int>(a))] = X.vname(X.iota[a]);
  }
  out["iota"] = std::move(iota);
  if (!X.iota_hat.empty()) {
    json ih = json::object();
    for (std::size_t g = 0; g < X.horizontal_count(); ++g) {
      ih[X.hname(static_cast<int>(g))] = X.squares.morphism(X.iota_hat[g]).id;
    }
    json gh = json::array();
    for (auto const& [key, a] : X.gamma_hat) {
      auto [g1, g2, g3] = key;
      gh.push_back({X.hname(g1), X.hname(g2), X.hname(g3), X.squares.morphism(a).id});
    }
    out["iota_hat"]  = std::move(ih);
    out["gamma_hat"] = std::move(gh);
  }
  return out;
}

CodomainColaxCategory codcolax_from_json(json const& j, std::string const& at) {
  check_fields(j, at, {"vertical", "squares", "d1", "d0", "s", "gamma", "iota"},
               {"hcomp_obj", "hcomp_sq", "iota_hat", "gamma_hat"});
  CodomainColaxCategory X;
  parse_cells(X, j, at);
  parse_hcomp(X, j, at, false);
  std::string p = at_key(at, "gamma");
  auto const& gamma = expect_array(j.at("gamma"), p);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    std::string q = at_index(p, i);
    auto const& e = triple(gamma[i], q, 3);
    int g1 = object_ref(X.squares, e[0], at_index(q, 0));
    int g2 = object_ref(X.squares, e[1], at_index(q, 1));
    int u  = morphism_ref(X.vertical, e[2], at_index(q, 2));
    int g  = X.hcomp_h(g1, g2);
    if (g < 0) {
      throw InputError("no composite for this pair", q);
    }
    if (X.vertical.src(u) != X.hcod(g) || X.vertical.tgt(u) != X.hcod(g2)) {
      throw InputError("component has the wrong source or target", at_index(q, 2));
    }
    X.gamma[pair_key(g1, g2)] = u;
  }
  FinNatTrans iota = nat_trans_from_json(j.at("iota"), X.vertical, X.vertical,
                                         at_key(at, "iota"));
  X.iota = iota.components;
  for (std::size_t a = 0; a < X.object_count(); ++a) {
    int u = X.iota[a];
    if (X.vertical.src(u) != X.hcod(X.s_obj[a]) || X.vertical.tgt(u) != static_cast<int>(a)) {
      throw InputError("component has the wrong source or target",
                       at_key(at_key(at, "iota"), X.oname(static_cast<int>(a))));
    }
  }
  bool ih = j.contains("iota_hat"), gh = j.contains("gamma_hat");
  if (ih != gh) {
    throw InputError("iota_hat and gamma_hat go together",
                     at_key(at, ih ? "gamma_hat" : "iota_hat"));
  }
  if (ih) {
    p = at_key(at, "iota_hat");
    X.iota_hat.assign(X.horizontal_count(), -1);
    for (auto const& [key, value] : expect_object(j.at("iota_hat"), p).items()) {
      std::string q = at_key(p, key);
      X.iota_hat[object_ref(X.squares, json(key), q)] = morphism_ref(X.squares, value, q);
    }
    for (std::size_t g = 0; g < X.horizontal_count(); ++g) {
      if (X.iota_hat[g] < 0) {
        throw InputError("no square for '" + X.hname(static_cast<int>(g)) + "'", p);
      }
    }
    p = at_key(at, "gamma_hat");
    auto const& list = expect_array(j.at("gamma_hat"), p);
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::string q = at_index(p, i);
      auto const& e = triple(list[i], q, 4);
      int g1 = object_ref(X.squares, e[0], at_index(q, 0));
      int g2 = object_ref(X.squares, e[1], at_index(q, 1));
      int g3 = object_ref(X.squares, e[2], at_index(q, 2));
      X.gamma_hat[{g1, g2, g3}] = morphism_ref(X.squares, e[3], at_index(q, 3));
    }
  } else {
    try {
      complete_lifts(X);
    } catch (PreconditionError const& e) {
      throw InputError(std::string("derived squares are missing and cannot be lifted: ")
                           + e.what(),
                       at);
    }
  }
  return X;
}

json classes_to_json(MorphismClassPair const& P) {
  json out;
  out["base"] = category_to_json(P.base);
  for (auto const& [key, cls] : {std::pair{"E", &P.E}, std::pair{"M", &P.M}}) {
    json ids = json::array();
    for (std::size_t f = 0; f < cls->size(); ++f) {
      if ((*cls)[f]) {
        ids.push_back(P.base.morphism(static_cast<int>(f)).id);
      }
    }
    out[key] = std::move(ids);
  }
  return out;
}

MorphismClassPair classes_from_json(json const& j, std::string const& at) {
  check_fields(j, at, {"base", "E", "M"});
  MorphismClassPair P;
  P.base = category_from_json(j.at("base"), at_key(at, "base"));
  for (auto const& [key, cls] : {std::pair{"E", &P.E}, std::pair{"M", &P.M}}) {
    std::string p = at_key(at, key);
    cls->assign(P.base.morphism_count(), 0);
    auto const& list = expect_array(j.at(key), p);
    for (std::size_t i = 0; i < list.size(); ++i) {
      (*cls)[morphism_ref(P.base, list[i], at_index(p, i))] = 1;
    }
  }
  return P;
}

std::vector<char> class_from_spec(FinCategory const& C, std::string const& spec) {
  if (spec == "all") {
    return all_morphisms(C);
  }
  if (spec == "identities" || spec == "id") {
    return identities_only(C);
  }
  if (spec == "isos" || spec == "iso") {
    return isomorphisms(C);
  }
  if (spec == "surj" || spec == "inj" || spec == "bij" || spec == "monotone") {
    try {
      if (spec == "surj") {
        return surjections(C);
      }
      if (spec == "inj") {
        return injections(C);
      }
      return spec == "bij" ? bijections(C) : monotone_maps(C);
    } catch (std::exception const& e) {
      throw InputError("class '" + spec + "' needs finite-set morphisms: " + e.what());
    }
  }
  std::vector<char> out(C.morphism_count(), 0);
  std::stringstream ss(spec);
  std::string       id;
  while (std::getline(ss, id, ',')) {
    auto f = C.find_morphism(id);
    if (!f) {
      throw InputError("unknown morphism '" + id + "' in class list");
    }
    out[*f] = 1;
  }
  return out;
}

json multicat_to_json(Multicategory const& M) {
  json out;
  if (!M.fixture.empty()) {
    out["fixture"]     = M.fixture;
    out["arity_bound"] = M.arity_bound;
    return out;
  }
  out["objects"]     = M.objects;
  out["arity_bound"] = M.arity_bound;
  json ms = json::array();
  for (auto const& m : M.morphisms) {
    json x;
    x["id"]  = m.id;
    x["src"] = json::array();
    for (int a : m.src) {
      x["src"].push_back(M.objects[a]);
    }
    x["tgt"] = M.objects[m.tgt];
    ms.push_back(std::move(x));
  }
  out["morphisms"] = std::move(ms);
  json ids = json::object();
  for (std::size_t a = 0; a < M.objects.size(); ++a) {
    ids[M.objects[a]] = M.morphisms[M.identity[a]].id;
  }
  out["identities"] = std::move(ids);
  auto is_id = [&M](int f) {
    return arity(M, f) == 1 && M.identity[M.morphisms[f].tgt] == f;
  };
  json comp = json::array();
  for (int g = 0; g < static_cast<int>(M.morphisms.size()); ++g) {
    std::vector<std::vector<int>> lists;
    std::vector<int>              fs;
    plug_lists(M, g, fs, 0, lists);
    for (auto const& l : lists) {
      int c = M.compose(g, l);
      if (c < 0) {
        continue;
      }
      bool units = std::all_of(l.begin(), l.end(), is_id);
      if ((units && c == g) || (is_id(g) && c == l[0])) {
        continue;
      }
      json args = json::array();
      for (int f : l) {
        args.push_back(M.morphisms[f].id);
      }
      comp.push_back({M.morphisms[g].id, std::move(args), M.morphisms[c].id});
    }
  }
  out["composition"] = std::move(comp);
  return out;
}

Multicategory multicat_from_json(json const& j, std::string const& at) {
  expect_object(j, at);
  if (j.contains("fixture")) {
    check_fields(j, at, {"fixture", "arity_bound"});
    auto const& name = expect_string(j.at("fixture"), at_key(at, "fixture"));
    int n = expect_int(j.at("arity_bound"), at_key(at, "arity_bound"));
    try {
      if (name == "terminal") {
        return terminal_multicategory(n);
      }
      if (name == "endo2") {
        return endo2_multicategory(n);
      }
      if (name == "ternary") {
        return ternary_multicategory(n);
      }
    } catch (InputError const& e) {
      throw InputError(e.what(), at_key(at, "arity_bound"));
    }
    throw InputError("unknown multicategory fixture '" + name + "'", at_key(at, "fixture"));
  }
  check_fields(j, at, {"objects", "arity_bound", "morphisms", "identities"},
               {"composition"});
  Multicategory M;
  M.arity_bound = expect_int(j.at("arity_bound"), at_key(at, "arity_bound"));
  if (M.arity_bound < 1) {
    throw InputError("arity bound must be at least 1", at_key(at, "arity_bound"));
  }
  std::map<std::string, int> oid, mid;
  std::string p = at_key(at, "objects");
  auto const& objs = expect_array(j.at("objects"), p);
  for (std::size_t i = 0; i < objs.size(); ++i) {
    auto const& name = expect_string(objs[i], at_index(p, i));
    if (oid.count(name)) {
      throw InputError("duplicate object '" + name + "'", at_index(p, i));
    }
    oid[name] = static_cast<int>(M.objects.size());
    M.objects.push_back(name);
  }
  auto object = [&oid](json const& v, std::string const& q) {
    auto const& name = expect_string(v, q);
    auto it = oid.find(name);
    if (it == oid.end()) {
      throw InputError("unknown object '" + name + "'", q);
    }
    return it->second;
  };
  auto morphism = [&mid](json const& v, std::string const& q) {
    auto const& name = expect_string(v, q);
    auto it = mid.find(name);
    if (it == mid.end()) {
      throw InputError("unknown morphism '" + name + "'", q);
    }
    return it->second;
  };
  p = at_key(at, "morphisms");
  auto const& ms = expect_array(j.at("morphisms"), p);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::string q = at_index(p, i);
    check_fields(ms[i], q, {"id", "src", "tgt"});
    MultiMorphism m;
    m.id = expect_string(ms[i].at("id"), at_key(q, "id"));
    if (mid.count(m.id)) {
      throw InputError("duplicate morphism '" + m.id + "'", at_key(q, "id"));
    }
    std::string r = at_key(q, "src");
    auto const& src = expect_array(ms[i].at("src"), r);
    for (std::size_t k = 0; k < src.size(); ++k) {
      m.src.push_back(object(src[k], at_index(r, k)));
    }
    if (static_cast<int>(m.src.size()) > M.arity_bound) {
      throw InputError("arity exceeds the arity bound", r);
    }
    m.tgt = object(ms[i].at("tgt"), at_key(q, "tgt"));
    mid[m.id] = static_cast<int>(M.morphisms.size());
    M.morphisms.push_back(std::move(m));
  }
  p = at_key(at, "identities");
  M.identity.assign(M.objects.size(), -1);
  for (auto const& [key, value] : expect_object(j.at("identities"), p).items()) {
    std::string q = at_key(p, key);
    int a = object(json(key), q);
    int i = morphism(value, q);
    if (M.morphisms[i].src != Tuple{a} || M.morphisms[i].tgt != a) {
      throw InputError("identity of '" + key + "' must be unary on it", q);
    }
    M.identity[a] = i;
  }
  for (std::size_t a = 0; a < M.objects.size(); ++a) {
    if (M.identity[a] < 0) {
      throw InputError("object '" + M.objects[a] + "' has no identity", p);
    }
  }
  auto table = std::make_shared<std::map<std::pair<int, std::vector<int>>, int>>();
  if (j.contains("composition")) {
    p = at_key(at, "composition");
    auto const& comp = expect_array(j.at("composition"), p);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      std::string q = at_index(p, i);
      auto const& e = triple(comp[i], q, 3);
      int g = morphism(e[0], at_index(q, 0));
      std::string r = at_index(q, 1);
      auto const& args = expect_array(e[1], r);
      if (args.size() != M.morphisms[g].src.size()) {
        throw InputError("wrong number of arguments", r);
      }
      std::vector<int> fs;
      Tuple            src;
      for (std::size_t k = 0; k < args.size(); ++k) {
        int f = morphism(args[k], at_index(r, k));
        if (M.morphisms[f].tgt != M.morphisms[g].src[k]) {
          throw InputError("argument does not match the source", at_index(r, k));
        }
        fs.push_back(f);
        src.insert(src.end(), M.morphisms[f].src.begin(), M.morphisms[f].src.end());
      }
      int c = morphism(e[2], at_index(q, 2));
      if (M.morphisms[c].src != src || M.morphisms[c].tgt != M.morphisms[g].tgt) {
        throw InputError("composite has the wrong source or target", at_index(q, 2));
      }
      auto [it, fresh] = table->emplace(std::pair{g, fs}, c);
      if (!fresh && it->second != c) {
        throw InputError("conflicting composite", q);
      }
    }
  }
  // unit laws
  for (int f = 0; f < static_cast<int>(M.morphisms.size()); ++f) {
    std::vector<int> units;
    for (int a : M.morphisms[f].src) {
      units.push_back(M.identity[a]);
    }
    table->emplace(std::pair{f, units}, f);
    table->emplace(std::pair{M.identity[M.morphisms[f].tgt], std::vector<int>{f}}, f);
  }
  M.compose = [table](int g, std::vector<int> const& fs) {
    auto it = table->find({g, fs});
    return it == table->end() ? -1 : it->second;
  };
  M.index();
  return M;
}

json moncat_to_json(ColaxMonoidalCategory const& A) {
  auto names = rule_names(A.rule());
  json out;
  out["base"]   = category_to_json(A.base());
  out["tensor"] = A.rule();
  out["gamma"]  = names.gamma;
  out["iota"]   = names.iota;
  return out;
}

json free_moncat_to_json(Multicategory const& M) {
  json out;
  out["tensor"]        = "free-on-multicat";
  out["multicategory"] = multicat_to_json(M);
  out["gamma"]         = "identity";
  out["iota"]          = "identity";
  return out;
}

MoncatFile moncat_from_json(json const& j) {
  expect_object(j, "");
  if (!j.contains("tensor")) {
    throw InputError("missing field 'tensor'", "/tensor");
  }
  MoncatFile out;
  out.tensor = expect_string(j.at("tensor"), "/tensor");
  if (out.tensor == "free-on-multicat") {
    check_fields(j, "", {"tensor", "multicategory"}, {"gamma", "iota"});
    check_rule_names(j, out.tensor);
    out.multicategory = multicat_from_json(j.at("multicategory"), "/multicategory");
    return out;
  }
  if (out.tensor.rfind("table:", 0) == 0) {
    throw InputError("tabulated tensor rules are not supported", "/tensor");
  }
  check_fields(j, "", {"base", "tensor"}, {"gamma", "iota"});
  FinCategory base = category_from_json(j.at("base"), "/base");
  out.colax.emplace(colax_from_rule(base, out.tensor));
  check_rule_names(j, out.tensor);
  return out;
}

std::string document_kind(json const& j) {
  if (!j.is_object()) {
    return "unknown";
  }
  if (j.contains("tensor")) {
    return "moncat";
  }
  if (j.contains("fixture") || j.contains("arity_bound")) {
    return "multicat";
  }
  if (j.contains("vertices")) {
    return "presented";
  }
  if (j.contains("vertical")) {
    return j.contains("gamma") || j.contains("iota") ? "codcolax" : "double";
  }
  if (j.contains("base")) {
    return "classes";
  }
  if (j.contains("objects")) {
    return "category";
  }
  return "unknown";
}

json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open '" + path + "'");
  }
  try {
    return json::parse(in);
  } catch (json::parse_error const& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace {
  bool flat(json const& j) {
    if (j.is_array()) {
      return std::all_of(j.begin(), j.end(), [](json const& x) { return x.is_primitive(); });
    }
    if (j.is_object() && j.size() <= 4) {
      return std::all_of(j.begin(), j.end(), [](json const& x) { return x.is_primitive(); });
    }
    return j.is_primitive() || j.empty();
  }

  void print(std::string& out, json const& j, int indent) {
    if (flat(j)) {
      out += j.dump();
      return;
    }
    std::string pad(indent + 2, ' ');
    bool first = true;
    if (j.is_array()) {
      out += "[\n";
      for (auto const& x : j) {
        out += first ? "" : ",\n";
        out += pad;
        print(out, x, indent + 2);
        first = false;
      }
      out += "\n" + std::string(indent, ' ') + "]";
      return;
    }
    out += "{\n";
    for (auto const& [key, value] : j.items()) {
      out += first ? "" : ",\n";
      out += pad + json(key).dump() + ": ";
      print(out, value, indent + 2);
      first = false;
    }
    out += "\n" + std::string(indent, ' ') + "}";
  }
}  // namespace

std::string dump_json(json const& j) {
  std::string out;
  print(out, j, 0);
  return out + "\n";
}

}  // namespace cornerkit
