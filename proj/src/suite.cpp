#include "cornerkit/suite.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "cornerkit/codescent.hpp"
#include "cornerkit/corners.hpp"
#include "cornerkit/factsys.hpp"
#include "cornerkit/fixtures.hpp"
#include "cornerkit/json_io.hpp"
#include "cornerkit/moncat.hpp"
#include "cornerkit/multicat.hpp"

namespace cornerkit {

namespace {

  struct Fixtures {
    std::map<std::string, FinCategory>    cats;
    std::map<std::string, DoubleCategory> doubles;
    CodomainColaxCategory                 comonad;
    std::optional<ColaxMonoidalCategory>  min_poset;
    std::map<std::string, Multicategory>  multicats;
  };

  std::vector<std::string> const category_files = {"walking_arrow.json", "triangle.json",
                                                   "cyclic2.json", "finset_leq2.json"};
  std::vector<std::string> const double_files = {
      "sq_walking_arrow.json", "sq_triangle.json", "x_prod_z2_walking_arrow.json",
      "perm_ord2.json",        "perm_ord3.json",   "surj_inj2.json",
      "discrete_pq.json",      "span_2_2.json"};
  std::vector<std::string> const multicat_files = {"multicat_terminal3.json",
                                                   "multicat_endo2_3.json"};

  json load(std::string const& dir, std::string const& file) {
    return read_json_file(dir + "/" + file);
  }

  template <typename F>
  auto parse_file(std::string const& file, F parse) {
    try {
      return parse();
    } catch (InputError const& e) {
      throw InputError(file + ": " + e.what(), e.path());
    }
  }

  Fixtures load_all(std::string const& dir) {
    Fixtures fx;
    for (auto const& f : category_files) {
      auto j = load(dir, f);
      fx.cats.emplace(f, parse_file(f, [&] { return category_from_json(j); }));
    }
    for (auto const& f : double_files) {
      auto j = load(dir, f);
      fx.doubles.emplace(f, parse_file(f, [&] { return double_from_json(j); }));
    }
    auto k = load(dir, "comonad_const0.json");
    fx.comonad = parse_file("comonad_const0.json", [&] { return codcolax_from_json(k); });
    auto m = load(dir, "min_poset.json");
    auto mf = parse_file("min_poset.json", [&] { return moncat_from_json(m); });
    if (!mf.colax) {
      throw InputError("min_poset.json: expected a colax tensor rule", "/tensor");
    }
    fx.min_poset = *mf.colax;
    for (auto const& f : multicat_files) {
      auto j = load(dir, f);
      fx.multicats.emplace(f, parse_file(f, [&] { return multicat_from_json(j); }));
    }
    return fx;
  }

  struct Outcome {
    bool holds = true;
    json detail;
  };

  Outcome fail(json witness) { return {false, std::move(witness)}; }

  // A criterion input must first be well formed.
  std::optional<Outcome> invalid(std::string const& name, DoubleCategory const& X) {
    auto r = validate_double(X);
    if (r.ok()) {
      return std::nullopt;
    }
    return fail({{"fixture", name}, {"invalid", r.failures.front()}});
  }
  std::optional<Outcome> invalid(std::string const& name, FinCategory const& C) {
    auto r = validate_category(C);
    if (r.ok()) {
      return std::nullopt;
    }
    return fail({{"fixture", name}, {"invalid", r.failures.front()}});
  }

  // Maps {0..m-1} -> {0..k-1}, counted by enumeration.
  long count_functions(int m, int k) {
    std::vector<int> f(m, 0);
    if (m > 0 && k == 0) {
      return 0;
    }
    long n = 0;
    while (true) {
      ++n;
      int i = m - 1;
      while (i >= 0 && f[i] == k - 1) {
        f[i--] = 0;
      }
      if (i < 0) {
        return n;
      }
      ++f[i];
    }
  }

  Outcome crit_finset(Fixtures const& fx) {
    auto t0 = std::chrono::steady_clock::now();
    auto const& X = fx.doubles.at("perm_ord3.json");
    if (auto bad = invalid("perm_ord3.json", X)) {
      return *bad;
    }
    auto C = cnr(X);
    std::vector<int> size(C.base.object_count());
    for (std::size_t b = 0; b < size.size(); ++b) {
      size[b] = std::stoi(X.oname(C.object_of[b]));
    }
    json table = json::array();
    for (std::size_t a = 0; a < size.size(); ++a) {
      for (std::size_t b = 0; b < size.size(); ++b) {
        long got  = static_cast<long>(C.base.hom(a, b).size());
        long want = count_functions(size[a], size[b]);
        if (got != want) {
          return fail({{"m", size[a]}, {"k", size[b]}, {"hom", got}, {"functions", want}});
        }
        table.push_back({size[a], size[b], got});
      }
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= 5) {
      return fail({{"seconds", s}, {"limit", 5}});
    }
    return {true, {{"homs", table}}};
  }

  Outcome crit_sfs(Fixtures const& fx) {
    std::vector<std::string> names = {"walking_arrow.json", "cyclic2.json", "triangle.json"};
    int pairs = 0;
    for (auto const& a : names) {
      for (auto const& b : names) {
        for (auto const& n : {a, b}) {
          if (auto bad = invalid(n, fx.cats.at(n))) {
            return *bad;
          }
        }
        auto X = x_prod(fx.cats.at(a), fx.cats.at(b));
        auto r = roundtrip(FactKind::sfs, X);
        if (!r.holds) {
          return fail({{"A", a}, {"B", b}, {"direction", "double"}, {"witness", r.witness}});
        }
        auto q = roundtrip(FactKind::sfs, corner_classes(cnr(X)));
        if (!q.holds) {
          return fail({{"A", a}, {"B", b}, {"direction", "classes"}, {"witness", q.witness}});
        }
        ++pairs;
      }
    }
    return {true, {{"pairs", pairs}}};
  }

  Outcome crit_ofs(Fixtures const& fx) {
    auto const& C = fx.cats.at("finset_leq2.json");
    if (auto bad = invalid("finset_leq2.json", C)) {
      return *bad;
    }
    MorphismClassPair P{C, class_from_spec(C, "surj"), class_from_spec(C, "inj")};
    auto o = is_ofs(P);
    if (!o.holds) {
      return fail({{"stage", "is_ofs"}, {"witness", o.witness}});
    }
    auto D = build_double(P);
    auto f = analyze(D).at("factorization_double_category");
    if (!f.holds) {
      return fail({{"stage", "factorization_double_category"}, {"witness", f.witness}});
    }
    auto r = roundtrip(FactKind::ofs, P);
    if (!r.holds) {
      return fail({{"stage", "roundtrip"}, {"witness", r.witness}});
    }
    return {true, {{"morphisms", C.morphism_count()}, {"squares", D.square_count()}}};
  }

  Outcome crit_catead(Fixtures const& fx) {
    json out = json::array();
    for (auto [c, s] : {std::pair{"walking_arrow.json", "sq_walking_arrow.json"},
                        std::pair{"triangle.json", "sq_triangle.json"}}) {
      auto const& C = fx.cats.at(c);
      auto const& X = fx.doubles.at(s);
      if (auto bad = invalid(s, X)) {
        return *bad;
      }
      auto A = codescent_catead(X);
      if (!find_isomorphism(A.category, C)) {
        return fail({{"fixture", s}, {"stage", "catead vs C"}});
      }
      auto G = codescent_generators(X, 6);
      if (exceeded(G)) {
        return fail({{"fixture", s}, {"stage", "generators"},
                     {"reason", std::get<BoundExceeded>(G).reason}});
      }
      if (!find_isomorphism(A.category, std::get<CodescentResult>(G).category)) {
        return fail({{"fixture", s}, {"stage", "catead vs generators"}});
      }
      out.push_back({s, A.category.morphism_count()});
    }
    return {true, {{"morphisms", out}}};
  }

  // The fixtures whose codescent object the suite computes.
  std::vector<std::string> const codescent_files = {
      "sq_walking_arrow.json", "sq_triangle.json", "x_prod_z2_walking_arrow.json",
      "perm_ord2.json",        "perm_ord3.json",   "surj_inj2.json",
      "discrete_pq.json"};

  Outcome crit_transpose(Fixtures const& fx) {
    json routes = json::object();
    for (auto const& f : codescent_files) {
      auto const& X = fx.doubles.at(f);
      if (auto bad = invalid(f, X)) {
        return *bad;
      }
      auto b = transpose_invariance(X, 6);
      if (exceeded(b)) {
        return fail({{"fixture", f}, {"reason", std::get<BoundExceeded>(b).reason}});
      }
      auto const& r = std::get<TransposeReport>(b);
      if (!r.holds) {
        return fail({{"fixture", f}, {"witness", r.witness}});
      }
      routes[f] = {r.route, r.transpose_route};
    }
    return {true, {{"routes", routes}}};
  }

  Outcome crit_fillers(Fixtures const& fx) {
    auto const& X = fx.doubles.at("perm_ord2.json");
    if (auto bad = invalid("perm_ord2.json", X)) {
      return *bad;
    }
    auto least = cnr(X, FillerChoice::least);
    auto great = cnr(X, FillerChoice::greatest);
    if (!(least.base == great.base)) {
      return fail({{"stage", "tables differ"}});
    }
    auto r = check_filler_independence(X, least);
    if (!r.ok) {
      return fail({{"failures", r.failures}});
    }
    if (r.multi_filler_corners == 0) {
      return fail({{"stage", "no corner with two fillers"}});
    }
    return {true, {{"multi_filler_corners", r.multi_filler_corners}, {"instances", r.instances}}};
  }

  Outcome crit_spans(Fixtures const& fx) {
    auto const& X = fx.doubles.at("span_2_2.json");
    if (auto bad = invalid("span_2_2.json", X)) {
      return *bad;
    }
    SpanFragment F{X, 2, 2};
    auto S = cnr_partial(F.X, [&F](BottomLeftCorner c) { return F.admits(c); });
    auto w = check_weak_orthogonality(S);
    if (!w.ok()) {
      return fail({{"stage", "weak_orthogonality"}, {"witness", w.witness}});
    }
    auto r = is_ofs(corner_classes(S));
    if (r.holds) {
      return fail({{"stage", "is_ofs"}, {"unexpected", "holds"}});
    }
    auto id_of = [&X](char const* name) { return X.vertical.find_morphism(name); };
    auto h_of  = [&X](char const* name) { return X.squares.find_object(name); };
    auto bang = id_of("2->1:00");
    auto sw   = id_of("2->2:10");
    auto two  = X.vertical.find_object("2");
    auto hb   = h_of("2->1:00");
    if (!bang || !sw || !two || !hb) {
      return fail({{"stage", "fixture lacks the sets 1 and 2"}});
    }
    int f  = S.find({*bang, *hb});
    int s  = S.find({*sw, X.hunit(*two)});
    int id = S.base.identity(S.base.object_index("2"));
    auto const& d = r.witness["detail"];
    bool shape = r.witness["axiom"] == "unique_comparison" && f >= 0 && s >= 0
                 && d["morphism"] == S.name(f)
                 && d["comparisons"] == json::array({S.name(id), S.name(s)});
    if (!shape) {
      return fail({{"stage", "witness shape"}, {"witness", r.witness}});
    }
    return {true, {{"lifting_problems", w.instances}, {"ofs_witness", r.witness}}};
  }

  Outcome crit_comonad(Fixtures const& fx) {
    auto const& K = fx.comonad;
    auto v = validate_codomain_colax(K);
    for (auto const& x : v.verdicts) {
      if (!x.holds) {
        return fail({{"stage", "codomain-colax"}, {"axiom", x.name}, {"witness", x.witness}});
      }
    }
    auto oracle = cokleisli(const0_comonad());
    auto c      = codescent(K, Route::corners);
    auto g      = codescent_generators(K, 6);
    if (exceeded(c) || exceeded(g)) {
      return fail({{"stage", "bound exceeded"}});
    }
    auto const& C = std::get<CodescentResult>(c).category;
    auto const& G = std::get<CodescentResult>(g).category;
    if (!find_isomorphism(C, oracle)) {
      return fail({{"stage", "corners vs coKleisli"}});
    }
    if (!find_isomorphism(G, oracle)) {
      return fail({{"stage", "generators vs coKleisli"}});
    }
    return {true, {{"morphisms", oracle.morphism_count()}}};
  }

  Outcome crit_coherence(Fixtures const& fx) {
    auto const& A = *fx.min_poset;
    auto first_failure = [](char const* stage, PredicateReport const& r) -> std::optional<Outcome> {
      for (auto const& v : r.verdicts) {
        if (!v.holds) {
          return fail({{"stage", stage}, {"verdict", v.name}, {"witness", v.witness}});
        }
      }
      return std::nullopt;
    };
    if (auto bad = first_failure("colax", validate_colax_monoidal(A, 3))) {
      return *bad;
    }
    auto S = strictify(A);
    if (auto bad = first_failure("strict", validate_strict_monoidal(S, 3))) {
      return *bad;
    }
    auto adj = validate_adjunction(S, 3);
    if (auto bad = first_failure("adjunction", adj)) {
      return *bad;
    }
    return {true, {{"adjunction", adj.to_json()}}};
  }

  // Counts corners w -> v of F(M) from the block decompositions: for each
  // way of cutting w into |v| consecutive blocks, the product of the
  // multimorphism counts M(block_i; v_i).
  long corner_count(Multicategory const& M, Tuple const& w, std::size_t from,
                    Tuple const& v, std::size_t i) {
    if (i == v.size()) {
      return from == w.size() ? 1 : 0;
    }
    long total = 0;
    for (std::size_t end = from; end <= w.size(); ++end) {
      Tuple block(w.begin() + from, w.begin() + end);
      long  n = static_cast<long>(M.hom(block, v[i]).size());
      if (n > 0) {
        total += n * corner_count(M, w, end, v, i + 1);
      }
    }
    return total;
  }

  std::vector<Tuple> all_words(int generators, int max_len) {
    std::vector<Tuple> out{{}};
    std::vector<Tuple> layer{{}};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<Tuple> next;
      for (auto const& w : layer) {
        for (int x = 0; x < generators; ++x) {
          next.push_back(w);
          next.back().push_back(x);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  Outcome crit_multicats(Fixtures const& fx) {
    json out = json::object();
    for (auto const& f : multicat_files) {
      auto const& M = fx.multicats.at(f);
      int bound = 3;
      auto r = multicategory_roundtrip(M, bound);
      if (!r.holds) {
        return fail({{"fixture", f}, {"stage", "roundtrip"}, {"witness", r.witness}});
      }
      auto S = free_strict_monoidal(M, bound);
      long homs = 0;
      for (auto const& w : all_words(static_cast<int>(M.objects.size()), bound)) {
        for (auto const& v : all_words(static_cast<int>(M.objects.size()), bound)) {
          long want = corner_count(M, w, 0, v, 0);
          long got  = static_cast<long>(S.hom(w, v).size());
          if (want != got) {
            return fail({{"fixture", f}, {"stage", "hom count"}, {"dom", S.word_name(w)},
                         {"cod", S.word_name(v)}, {"hom", got}, {"chunkings", want}});
          }
          ++homs;
        }
      }
      out[f] = {{"homs_checked", homs}};
    }
    return {true, out};
  }

  std::vector<std::string> const crossed_files = {
      "x_prod_z2_walking_arrow.json", "perm_ord2.json", "surj_inj2.json", "discrete_pq.json"};

  Outcome crit_naturality(Fixtures const& fx) {
    json out = json::object();
    for (auto const& f : crossed_files) {
      auto const& X = fx.doubles.at(f);
      if (auto bad = invalid(f, X)) {
        return *bad;
      }
      auto C   = cnr(X);
      auto rep = check_naturality(X, C);
      if (!rep.ok()) {
        return fail({{"fixture", f}, {"witness", rep.witness}});
      }
      // Seeded mutation: redirect the first composite [e,1]∘[1,m] that has
      // an alternative value in its hom and is not also the other side.
      json mutation = nullptr;
      for (int a = 0; a < static_cast<int>(X.square_count()) && mutation.is_null(); ++a) {
        int M1 = C.find({X.vunit(X.hdom(X.top(a))), X.top(a)});
        int E1 = C.find({X.right(a), X.hunit(X.vcod(X.right(a)))});
        int E2 = C.find({X.left(a), X.hunit(X.vcod(X.left(a)))});
        int M2 = C.find({X.vunit(X.hdom(X.bottom(a))), X.bottom(a)});
        if (M1 == E2 && E1 == M2) {
          continue;  // both sides are this very composite
        }
        int r  = C.base.compose(M1, E1);
        auto const& hom = C.base.hom(C.base.src(r), C.base.tgt(r));
        if (hom.size() < 2) {
          continue;
        }
        auto D = C;
        D.base.set_composite(M1, E1, hom[0] == r ? hom[1] : hom[0]);
        auto bad = check_naturality(X, D);
        if (bad.ok()) {
          return fail({{"fixture", f}, {"stage", "mutation undetected"}, {"square", X.sqname(a)}});
        }
        mutation = X.sqname(a);
      }
      json entry = {{"squares", rep.instances}, {"mutated_at", mutation}};
      if (mutation.is_null()) {
        entry["note"] = "every composite has a one-element hom; nothing to mutate";
      }
      out[f] = entry;
    }
    return {true, out};
  }

  Outcome crit_universal(Fixtures const& fx) {
    json out = json::array();
    auto probe = [&out](std::string const& name, ColaxCoherenceData const& D,
                        Bounded<CodescentResult> const& b) -> std::optional<Outcome> {
      if (exceeded(b)) {
        return fail({{"fixture", name}, {"reason", std::get<BoundExceeded>(b).reason}});
      }
      auto r = verify_universal_property(D, std::get<CodescentResult>(b), 4);
      if (!r.holds) {
        return fail({{"fixture", name}, {"witness", r.witness}});
      }
      if (verify_universal_property(D, terminal_candidate(D), 4).holds) {
        return fail({{"fixture", name}, {"stage", "terminal candidate accepted"}});
      }
      out.push_back({name, r.categories, r.cocones});
      return std::nullopt;
    };
    for (auto const& f : codescent_files) {
      auto const& X = fx.doubles.at(f);
      if (auto bad = invalid(f, X)) {
        return *bad;
      }
      if (auto bad = probe(f, coherence_data(X), codescent(X))) {
        return *bad;
      }
      auto T = dualize(X, DualKind::transpose);
      if (auto bad = probe(f + "^T", coherence_data(T), codescent(T))) {
        return *bad;
      }
    }
    if (auto bad = probe("comonad_const0.json", coherence_data(fx.comonad),
                         codescent(fx.comonad))) {
      return *bad;
    }
    return {true, {{"probes", out}}};
  }

  struct Criterion {
    int                                   id;
    char const*                           name;
    std::function<Outcome(Fixtures const&)> run;
  };

}  // namespace

std::vector<std::string> suite_fixture_files() {
  std::vector<std::string> out = category_files;
  out.insert(out.end(), double_files.begin(), double_files.end());
  out.push_back("comonad_const0.json");
  out.push_back("min_poset.json");
  out.insert(out.end(), multicat_files.begin(), multicat_files.end());
  return out;
}

std::vector<CriterionResult> run_suite(std::string const& fixture_dir) {
  Fixtures const fx = load_all(fixture_dir);
  std::vector<Criterion> const criteria = {
      {1, "finset_coincidence", crit_finset},     {2, "sfs_round_trip", crit_sfs},
      {3, "ofs_round_trip", crit_ofs},            {4, "catead_codescent", crit_catead},
      {5, "transpose_invariance", crit_transpose}, {6, "filler_independence", crit_fillers},
      {7, "span_facts", crit_spans},              {8, "comonad_cokleisli", crit_comonad},
      {9, "monoidal_coherence", crit_coherence},  {10, "multicategory_round_trip", crit_multicats},
      {11, "naturality", crit_naturality},        {12, "universal_property", crit_universal}};
  std::vector<CriterionResult> out;
  for (auto const& c : criteria) {
    auto    t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(fx);
    } catch (std::exception const& e) {
      o = fail({{"error", e.what()}});
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back({c.id, c.name, o.holds, std::move(o.detail), s});
  }
  return out;
}

}  // namespace cornerkit
