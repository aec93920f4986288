#include "cornerkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>

#include "CLI11.hpp"

#include "cornerkit/codescent.hpp"
#include "cornerkit/factsys.hpp"
#include "cornerkit/goldens.hpp"
#include "cornerkit/json_io.hpp"
#include "cornerkit/moncat.hpp"
#include "cornerkit/multicat.hpp"
#include "cornerkit/suite.hpp"

#ifndef CORNERKIT_FIXTURE_DIR
#define CORNERKIT_FIXTURE_DIR "fixtures"
#endif

namespace cornerkit {

namespace {

  // A Bounded result that exceeded its cap, raised to the top level.
  struct BoundHit {
    int         cap;
    std::string reason;
  };

  template <typename T>
  T const& unwrap(Bounded<T> const& b) {
    if (auto const* e = std::get_if<BoundExceeded>(&b)) {
      throw BoundHit{e->cap, e->reason};
    }
    return std::get<T>(b);
  }

  struct Report {
    std::vector<Verdict> verdicts;
    json                 result = json::object();
    std::optional<json>  document;  // printed instead of the report

    void add(std::string name, bool holds, json witness = nullptr) {
      verdicts.push_back({std::move(name), holds, holds ? json(nullptr) : std::move(witness)});
    }
    void add_all(std::string const& prefix, PredicateReport const& r) {
      for (auto const& v : r.verdicts) {
        add(prefix + v.name, v.holds, v.witness);
      }
    }
    bool holds() const {
      return std::all_of(verdicts.begin(), verdicts.end(),
                         [](Verdict const& v) { return v.holds; });
    }
  };

  json failures_json(ValidationReport const& r) {
    json out = json::array();
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) {
      out.push_back(r.failures[i]);
    }
    return out;
  }

  json load(std::string const& path, std::string const& want) {
    json j    = read_json_file(path);
    auto kind = document_kind(j);
    if (want.find(kind) == std::string::npos || kind == "unknown") {
      throw InputError("'" + path + "' is a " + kind + " document, expected " + want);
    }
    return j;
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InputError("cannot write '" + path + "'");
    }
    out << text;
  }

  // Classes from a category or classes file, overridden by --E / --M.
  MorphismClassPair class_input(json const& j, std::string const& E, std::string const& M) {
    MorphismClassPair P;
    if (document_kind(j) == "classes") {
      P = classes_from_json(j);
    } else {
      P.base = category_from_json(j);
      if (E.empty() || M.empty()) {
        throw InputError("a plain category needs --E and --M");
      }
    }
    try {
      if (!E.empty()) {
        P.E = class_from_spec(P.base, E);
      }
      if (!M.empty()) {
        P.M = class_from_spec(P.base, M);
      }
    } catch (InputError const& e) {
      throw InputError(std::string(e.what()) + " (--E/--M)");
    }
    return P;
  }

  bool check_category(Report& rep, FinCategory const& C) {
    auto v = validate_category(C);
    rep.add("valid_category", v.ok(), failures_json(v));
    return v.ok();
  }

  json counts(DoubleCategory const& X) {
    return {{"objects", X.object_count()},
            {"verticals", X.vertical_count()},
            {"horizontals", X.horizontal_count()},
            {"squares", X.square_count()}};
  }

  void analyze_cmd(Report& rep, std::string const& file, std::string const& expect,
                   std::size_t limit) {
    auto X = double_from_json(load(file, "double"));
    auto v = validate_double(X);
    rep.add("valid_double", v.ok(), failures_json(v));
    rep.result["counts"] = counts(X);
    if (!v.ok()) {
      return;
    }
    auto props       = analyze(X, limit);
    json flags       = json::object();
    json witnesses   = json::object();
    for (auto const& p : props.verdicts) {
      flags[p.name] = p.holds;
      if (!p.holds) {
        witnesses[p.name] = p.witness;
      }
    }
    rep.result["properties"] = flags;
    rep.result["witnesses"]  = witnesses;
    std::stringstream ss(expect);
    std::string       name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) {
        continue;
      }
      auto it = std::find_if(props.verdicts.begin(), props.verdicts.end(),
                             [&name](Verdict const& p) { return p.name == name; });
      if (it == props.verdicts.end()) {
        throw InputError("unknown property '" + name + "' in --expect");
      }
      rep.add("expect:" + name, it->holds, it->witness);
    }
  }

  void factsys_check(Report& rep, std::string const& file, std::string const& kind,
                     std::string const& E, std::string const& M) {
    auto P = class_input(load(file, "category classes"), E, M);
    if (!check_category(rep, P.base)) {
      return;
    }
    FactReport r = kind == "sfs" ? is_sfs(P) : kind == "ofs" ? is_ofs(P) : is_wfs(P);
    for (auto const& v : r.verdicts) {
      rep.add(kind + ":" + v.name, v.holds, v.witness);
    }
    rep.result["kind"]  = kind;
    rep.result["E"]     = std::count(P.E.begin(), P.E.end(), 1);
    rep.result["M"]     = std::count(P.M.begin(), P.M.end(), 1);
    rep.result["holds"] = r.holds;
  }

  void factsys_build(Report& rep, std::string const& file, std::string const& E,
                     std::string const& M, std::string const& out) {
    auto P = class_input(load(file, "category classes"), E, M);
    if (!check_category(rep, P.base)) {
      return;
    }
    auto D = build_double(P);
    auto v = validate_double(D);
    rep.add("valid_double", v.ok(), failures_json(v));
    rep.result["counts"] = counts(D);
    if (!out.empty()) {
      write_file(out, dump_json(double_to_json(D)));
      rep.result["written"] = out;
    } else {
      rep.result["double"] = double_to_json(D);
    }
  }

  void factsys_roundtrip(Report& rep, std::string const& kind, std::string const& file,
                         std::string const& E, std::string const& M) {
    json j = load(file, "double category classes");
    FactKind k = kind == "sfs" ? FactKind::sfs : FactKind::ofs;
    RoundtripReport r;
    if (document_kind(j) == "double") {
      auto X = double_from_json(j);
      auto v = validate_double(X);
      rep.add("valid_double", v.ok(), failures_json(v));
      if (!v.ok()) {
        return;
      }
      r = roundtrip(k, X);
      rep.result["from"] = "double";
    } else {
      auto P = class_input(j, E, M);
      if (!check_category(rep, P.base)) {
        return;
      }
      r = roundtrip(k, P);
      rep.result["from"] = "classes";
    }
    rep.add("roundtrip", r.holds, r.witness);
  }

  void codescent_cmd(Report& rep, std::string const& file, std::string const& route_name_,
                     int cap, int probe) {
    json j     = load(file, "double codcolax");
    Route rt   = parse_route(route_name_);
    bool  dbl  = document_kind(j) == "double";
    std::optional<DoubleCategory>        X;
    std::optional<CodomainColaxCategory> K;
    if (dbl) {
      X = double_from_json(j);
      auto v = validate_double(*X);
      rep.add("valid_double", v.ok(), failures_json(v));
      if (!v.ok()) {
        return;
      }
    } else {
      K = codcolax_from_json(j);
      rep.add_all("codomain_colax:", validate_codomain_colax(*K));
      if (!rep.holds()) {
        return;
      }
    }
    auto run_route = [&](Route r) {
      return dbl ? codescent(*X, r, cap) : codescent(*K, r, cap);
    };
    auto const  computed = run_route(rt);
    auto const& res      = unwrap(computed);
    rep.result["route"]    = res.route;
    rep.result["category"] = category_to_json(res.category);

    // The oracle is an independent route: generators and relations, or the
    // automatic closed form when generators were asked for.
    std::optional<CodescentResult> oracle;
    if (res.route != "genrel") {
      auto g = dbl ? codescent_generators(*X, cap) : codescent_generators(*K, cap);
      oracle = unwrap(g);
    } else {
      try {
        auto b = run_route(Route::automatic);
        if (!exceeded(b) && std::get<CodescentResult>(b).route != "genrel") {
          oracle = std::get<CodescentResult>(b);
        }
      } catch (PreconditionError const&) {
      }
    }
    if (oracle) {
      bool iso = find_isomorphism(res.category, oracle->category).has_value();
      rep.add("iso_to_oracle", iso,
              json{{"route", res.route}, {"oracle_route", oracle->route},
                   {"morphisms", {res.category.morphism_count(), oracle->category.morphism_count()}}});
      rep.result["oracle_route"] = oracle->route;
    } else {
      rep.result["oracle_route"] = nullptr;
    }
    if (probe > 0) {
      auto D = dbl ? coherence_data(*X) : coherence_data(*K);
      auto u = verify_universal_property(D, res, probe);
      rep.add("universal_property", u.holds, u.witness);
      rep.result["probe"] = u.to_json();
    }
  }

  MoncatFile moncat_input(std::string const& file) {
    return moncat_from_json(load(file, "moncat"));
  }

  void moncat_strictify(Report& rep, std::string const& file, int depth) {
    auto m = moncat_input(file);
    rep.result["tensor"] = m.tensor;
    if (m.multicategory) {
      auto S = free_strict_monoidal(*m.multicategory, depth);
      rep.add_all("strict:", validate_strict_monoidal(S, depth));
      return;
    }
    rep.add_all("colax:", validate_colax_monoidal(*m.colax, depth));
    auto S = strictify(*m.colax);
    rep.add_all("strict:", validate_strict_monoidal(S, depth));
    rep.add_all("unit:", validate_unit_P(S, depth));
  }

  void moncat_adjunction(Report& rep, std::string const& file, int depth) {
    auto m = moncat_input(file);
    rep.result["tensor"] = m.tensor;
    if (!m.colax) {
      throw InputError("the adjunction needs a colax tensor rule", "/tensor");
    }
    auto S = strictify(*m.colax);
    rep.add_all("", validate_adjunction(S, depth));
  }

  void prime_report(Report& rep, LazyStrictMonoidal const& S, int bound) {
    auto r = prime_multicategory(S, canonical_coalgebra(S), bound);
    rep.add("prime_multicategory", r.holds, r.witness);
    if (!r.holds) {
      return;
    }
    json primes = json::array();
    for (auto const& p : r.primes) {
      primes.push_back(S.word_name(p));
    }
    rep.result["primes"]    = primes;
    rep.result["morphisms"] = r.multicategory.morphisms.size();
  }

  void moncat_primes(Report& rep, std::string const& file, int bound) {
    auto m = moncat_input(file);
    rep.result["tensor"] = m.tensor;
    if (m.multicategory) {
      auto S = free_strict_monoidal(*m.multicategory, bound);
      prime_report(rep, S, bound);
      auto d = multicategory_roundtrip(*m.multicategory, bound);
      rep.add("roundtrip", d.holds, d.witness);
      return;
    }
    prime_report(rep, strictify(*m.colax), bound);
  }

  void multicat_free(Report& rep, std::string const& file, int bound, bool validate) {
    auto M = multicat_from_json(load(file, "multicat"));
    if (validate) {
      rep.add_all("multicategory:", validate_multicategory(M, bound));
    }
    auto S     = free_strict_monoidal(M, bound);
    json homs  = json::array();
    int  gens  = static_cast<int>(M.objects.size());
    for (int n = 0; n <= bound; ++n) {
      for (auto const& w : words(gens, n)) {
        for (int k = 0; k <= bound; ++k) {
          for (auto const& v : words(gens, k)) {
            homs.push_back({S.word_name(w), S.word_name(v), S.hom(w, v).size()});
          }
        }
      }
    }
    rep.result["hom_counts"] = homs;
    auto d = multicategory_roundtrip(M, bound);
    rep.add("roundtrip", d.holds, d.witness);
  }

  void fixtures_emit(Report& rep, std::string const& name, std::vector<int> const& params,
                     bool all, std::string const& out) {
    if (all) {
      if (out.empty()) {
        throw InputError("--all needs --out <dir>");
      }
      std::filesystem::create_directories(out);
      json files = json::array();
      for (auto const& g : golden_fixtures()) {
        write_file(out + "/" + g.file, dump_json(g.build()));
        files.push_back(g.file);
      }
      rep.result["written"] = files;
      return;
    }
    if (name.empty()) {
      throw InputError("fixtures emit needs a fixture name or --all");
    }
    json doc = emit_fixture(name, params);
    if (out.empty()) {
      rep.document = doc;
      return;
    }
    write_file(out, dump_json(doc));
    rep.result["written"] = out;
  }

  void fixtures_list(Report& rep) {
    json names = json::array();
    for (auto const& [name, n] : fixture_names()) {
      names.push_back({{"name", name}, {"parameters", n}});
    }
    json goldens = json::array();
    for (auto const& g : golden_fixtures()) {
      goldens.push_back({{"file", g.file}, {"name", g.name}, {"parameters", g.params}});
    }
    rep.result["builders"] = names;
    rep.result["goldens"]  = goldens;
  }

  void suite_cmd(Report& rep, std::string const& dir) {
    json criteria = json::array();
    for (auto const& c : run_suite(dir)) {
      std::string name = std::to_string(c.id) + ":" + c.name;
      rep.add(name, c.holds, c.detail);
      criteria.push_back({{"id", c.id}, {"name", c.name}, {"holds", c.holds},
                          {"seconds", c.seconds}, {"detail", c.detail}});
    }
    rep.result["fixtures"] = dir;
    rep.result["criteria"] = criteria;
  }

  json report_json(std::vector<std::string> const& args, Report const& rep, int code,
                   std::optional<json> const& error, bool timing, double seconds) {
    json out;
    out["tool"]    = "cornerkit";
    out["version"] = tool_version;
    out["command"] = args;
    out["status"]  = code == 0 ? "pass" : code == 1 ? "fail" : code == 2 ? "invalid" : "bound";
    out["exit_code"] = code;
    json v = json::array();
    for (auto const& x : rep.verdicts) {
      v.push_back({{"name", x.name}, {"holds", x.holds}, {"witness", x.witness}});
    }
    out["verdicts"] = v;
    out["result"]   = rep.result;
    out["error"]    = error.value_or(json(nullptr));
    out["seedless"] = true;
    if (timing) {
      out["timing"] = {{"seconds", seconds}};
    }
    return out;
  }

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();

  CLI::App app{"Finite double categories, corners, factorization systems, "
               "codescent objects and monoidal strictification",
               "cornerkit"};
  app.set_version_flag("--version", tool_version);
  app.fallthrough();
  app.require_subcommand(1);
  bool seedless = false, no_timing = false;
  app.add_flag("--seedless", seedless,
               "No-op: every computation is exhaustive enumeration, nothing is random");
  app.add_flag("--no-timing", no_timing, "Omit the timing field from the report");

  std::string file, file2, kind = "ofs", E, M, route = "auto", expect, outpath, name;
  std::string fixture_dir = CORNERKIT_FIXTURE_DIR;
  int  cap = 6, probe = 0, depth = 3, bound = 3;
  bool all = false, validate = false;
  std::size_t limit = default_square_limit;
  std::vector<int> params;

  auto* analyze_c = app.add_subcommand("analyze", "Validate a double category and report its properties");
  analyze_c->add_option("file", file, "Double category JSON")->required();
  analyze_c->add_option("--expect", expect, "Comma separated properties that must hold");
  analyze_c->add_option("--square-limit", limit, "Refuse inputs with more squares");

  auto* fact = app.add_subcommand("factsys", "Factorization systems");
  fact->require_subcommand(1);
  auto* check = fact->add_subcommand("check", "Check a factorization system");
  check->add_option("file", file, "Category or classes JSON")->required();
  check->add_option("--kind", kind, "sfs, ofs or wfs")
      ->check(CLI::IsMember({"sfs", "ofs", "wfs"}));
  check->add_option("--E", E, "Left class: a class name or morphism ids");
  check->add_option("--M", M, "Right class: a class name or morphism ids");
  auto* build = fact->add_subcommand("build-double", "Build D_{E,M}");
  build->add_option("file", file, "Category or classes JSON")->required();
  build->add_option("--E", E, "Left class");
  build->add_option("--M", M, "Right class");
  build->add_option("--out", outpath, "Write the double category here");
  auto* round = fact->add_subcommand("roundtrip", "Double category / factorization system round trip");
  round->add_option("kind", file2, "sfs or ofs")->required()->check(CLI::IsMember({"sfs", "ofs"}));
  round->add_option("file", file, "Double category, category or classes JSON")->required();
  round->add_option("--E", E, "Left class");
  round->add_option("--M", M, "Right class");

  auto* cod = app.add_subcommand("codescent", "Compute a codescent object");
  cod->add_option("file", file, "Double category or codomain-colax JSON")->required();
  cod->add_option("--route", route, "auto, catead, corners or genrel");
  cod->add_option("--cap", cap, "Search cap for generators and relations");
  cod->add_option("--probe", probe, "Probe the universal property up to this size");

  auto* mon = app.add_subcommand("moncat", "Colax monoidal categories");
  mon->require_subcommand(1);
  auto* strict = mon->add_subcommand("strictify", "Check Cnr(A) and the laws on words up to --depth");
  strict->add_option("file", file, "Monoidal JSON")->required();
  strict->add_option("--depth", depth, "Word length bound");
  auto* adj = mon->add_subcommand("adjunction", "Check the strictification adjunction");
  adj->add_option("file", file, "Monoidal JSON")->required();
  adj->add_option("--depth", depth, "Word length bound");
  auto* primes = mon->add_subcommand("primes", "Extract the prime multicategory");
  primes->add_option("file", file, "Monoidal JSON")->required();
  primes->add_option("--bound", bound, "Word length bound");

  auto* multi = app.add_subcommand("multicat", "Multicategories");
  multi->require_subcommand(1);
  auto* free = multi->add_subcommand("free", "Hom counts of F(M) and the prime round trip");
  free->add_option("file", file, "Multicategory JSON")->required();
  free->add_option("--bound", bound, "Word length bound");
  free->add_flag("--validate", validate, "Also validate the multicategory axioms");

  auto* fix = app.add_subcommand("fixtures", "Fixture builders");
  fix->require_subcommand(1);
  auto* emit = fix->add_subcommand("emit", "Write the JSON of a fixture");
  emit->add_option("name", name, "Builder name");
  emit->add_option("params", params, "Integer parameters");
  emit->add_flag("--all", all, "Write every golden into --out");
  emit->add_option("--out", outpath, "Output file, or directory with --all");
  auto* list = fix->add_subcommand("list", "List builders and goldens");

  auto* suite = app.add_subcommand("suite", "Run every acceptance criterion on the goldens");
  suite->add_option("--fixtures", fixture_dir, "Directory holding the goldens");

  Report              rep;
  std::optional<json> error;
  int                 code = 0;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    if (analyze_c->parsed()) {
      analyze_cmd(rep, file, expect, limit);
    } else if (check->parsed()) {
      factsys_check(rep, file, kind, E, M);
    } else if (build->parsed()) {
      factsys_build(rep, file, E, M, outpath);
    } else if (round->parsed()) {
      factsys_roundtrip(rep, file2, file, E, M);
    } else if (cod->parsed()) {
      codescent_cmd(rep, file, route, cap, probe);
    } else if (strict->parsed()) {
      moncat_strictify(rep, file, depth);
    } else if (adj->parsed()) {
      moncat_adjunction(rep, file, depth);
    } else if (primes->parsed()) {
      moncat_primes(rep, file, bound);
    } else if (free->parsed()) {
      multicat_free(rep, file, bound, validate);
    } else if (emit->parsed()) {
      fixtures_emit(rep, name, params, all, outpath);
    } else if (list->parsed()) {
      fixtures_list(rep);
    } else if (suite->parsed()) {
      suite_cmd(rep, fixture_dir);
    }
    code = rep.holds() ? 0 : 1;
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    code  = 2;
    error = json{{"type", "usage"}, {"message", e.what()}};
  } catch (InputError const& e) {
    code  = 2;
    error = json{{"type", "input"}, {"message", e.what()}, {"path", e.path()}};
  } catch (GuardError const& e) {
    code  = 2;
    error = json{{"type", "guard"}, {"message", e.what()}};
  } catch (PreconditionError const& e) {
    code  = 2;
    error = json{{"type", "precondition"}, {"message", e.what()}};
  } catch (BoundHit const& e) {
    code  = 3;
    error = json{{"type", "bound"}, {"cap", e.cap}, {"message", e.reason}};
  } catch (BoundError const& e) {
    code  = 3;
    error = json{{"type", "bound"}, {"message", e.what()}};
  } catch (json::exception const& e) {
    code  = 2;
    error = json{{"type", "input"}, {"message", e.what()}};
  } catch (std::exception const& e) {
    code  = 2;
    error = json{{"type", "error"}, {"message", e.what()}};
  }

  if (rep.document && code == 0) {
    out << dump_json(*rep.document);
    return 0;
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out << dump_json(report_json(args, rep, code, error, !no_timing, s));
  if (error) {
    err << "cornerkit: " << (*error)["message"].get<std::string>() << "\n";
  }
  return code;
}

}  // namespace cornerkit
