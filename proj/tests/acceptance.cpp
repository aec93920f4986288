// Acceptance run: one PASS/FAIL line per criterion. Inputs come from the
// builders, not from fixture files, and each check is paired with a brute
// force count from oracles.hpp where one is cheap enough.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "cornerkit/codescent.hpp"
#include "cornerkit/corners.hpp"
#include "cornerkit/factsys.hpp"
#include "cornerkit/fixtures.hpp"
#include "cornerkit/moncat.hpp"
#include "cornerkit/multicat.hpp"
#include "oracles.hpp"

using namespace cornerkit;

namespace {

  // Empty string on success, otherwise the first failure.
  using Check = std::function<std::string()>;

  std::string all_hold(PredicateReport const& r) {
    for (auto const& v : r.verdicts) {
      if (!v.holds) {
        return v.name + " " + v.witness.dump();
      }
    }
    return "";
  }

  std::string finset() {
    auto t0 = std::chrono::steady_clock::now();
    auto X  = perm_ord(3);
    auto C  = cnr(X);
    if (!oracle::is_category(C.base)) {
      return "corners table is not a category";
    }
    for (int a = 0; a < static_cast<int>(C.base.object_count()); ++a) {
      for (int b = 0; b < static_cast<int>(C.base.object_count()); ++b) {
        int  m    = std::stoi(X.oname(C.object_of[a]));
        int  k    = std::stoi(X.oname(C.object_of[b]));
        auto want = oracle::all_functions(m, k).size();
        if (C.base.hom(a, b).size() != want) {
          return "hom(" + std::to_string(m) + "," + std::to_string(k) + ")";
        }
      }
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s < 5 ? "" : "took " + std::to_string(s) + "s";
  }

  // Every morphism is m∘e for exactly one e in E, m in M.
  bool unique_factorizations(MorphismClassPair const& P) {
    auto const& C = P.base;
    int const   n = static_cast<int>(C.morphism_count());
    for (int f = 0; f < n; ++f) {
      int count = 0;
      for (int e = 0; e < n; ++e) {
        for (int m = 0; m < n; ++m) {
          count += P.E[e] && P.M[m] && C.compose(e, m) == f;
        }
      }
      if (count != 1) {
        return false;
      }
    }
    return true;
  }

  std::string sfs() {
    std::vector<std::pair<char const*, FinCategory>> cats = {
        {"walking_arrow", walking_arrow()}, {"cyclic2", cyclic_group(2)}, {"triangle", triangle()}};
    for (auto const& [a, A] : cats) {
      for (auto const& [b, B] : cats) {
        auto X = x_prod(A, B);
        auto P = corner_classes(cnr(X));
        if (!unique_factorizations(P)) {
          return std::string(a) + "x" + b + ": factorizations not unique";
        }
        if (!roundtrip(FactKind::sfs, X).holds) {
          return std::string(a) + "x" + b + ": X vs D(Cnr X)";
        }
        if (!roundtrip(FactKind::sfs, P).holds) {
          return std::string(a) + "x" + b + ": classes vs Cnr(D)";
        }
      }
    }
    return "";
  }

  // e ⊥ m by counting diagonals of every commuting square.
  bool orthogonal(MorphismClassPair const& P) {
    auto const& C = P.base;
    int const   n = static_cast<int>(C.morphism_count());
    for (int e = 0; e < n; ++e) {
      for (int m = 0; m < n; ++m) {
        if (!P.E[e] || !P.M[m]) {
          continue;
        }
        for (int u : C.hom(C.src(e), C.src(m))) {
          for (int v : C.hom(C.tgt(e), C.tgt(m))) {
            if (C.compose(u, m) != C.compose(e, v)) {
              continue;
            }
            int d = 0;
            for (int x : C.hom(C.tgt(e), C.src(m))) {
              d += C.compose(e, x) == u && C.compose(x, m) == v;
            }
            if (d != 1) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool factors(MorphismClassPair const& P) {
    auto const& C = P.base;
    int const   n = static_cast<int>(C.morphism_count());
    for (int f = 0; f < n; ++f) {
      bool found = false;
      for (int e = 0; e < n && !found; ++e) {
        for (int m = 0; m < n && !found; ++m) {
          found = P.E[e] && P.M[m] && C.compose(e, m) == f;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  std::string ofs() {
    auto C = finset_leq(2);
    MorphismClassPair P{C, surjections(C), injections(C)};
    if (!orthogonal(P) || !factors(P)) {
      return "oracle rejects (surj, inj)";
    }
    if (!is_ofs(P).holds) {
      return "is_ofs";
    }
    if (!analyze(build_double(P))["factorization_double_category"]) {
      return "not a factorization double category";
    }
    auto r = roundtrip(FactKind::ofs, P);
    return r.holds ? "" : "roundtrip " + r.witness.dump();
  }

  std::string catead() {
    for (auto const& C : {walking_arrow(), triangle()}) {
      auto X = sq_of(C);
      auto A = codescent_catead(X);
      if (!find_isomorphism(A.category, C)) {
        return "catead vs C";
      }
      auto G = codescent_generators(X, 6);
      if (exceeded(G) || !find_isomorphism(A.category, std::get<CodescentResult>(G).category)) {
        return "catead vs generators";
      }
    }
    return "";
  }

  std::vector<std::pair<std::string, DoubleCategory>> double_fixtures() {
    auto F = finset_leq(2);
    return {{"sq_walking_arrow", sq_of(walking_arrow())},
            {"sq_triangle", sq_of(triangle())},
            {"x_prod_z2_walking_arrow", x_prod(cyclic_group(2), walking_arrow())},
            {"perm_ord2", perm_ord(2)},
            {"perm_ord3", perm_ord(3)},
            {"surj_inj2", commutative_squares(F, surjections(F), injections(F))},
            {"discrete_pq", discrete_double({"p", "q"})}};
  }

  std::string transposes() {
    for (auto const& [name, X] : double_fixtures()) {
      auto a = codescent(X);
      auto b = codescent(dualize(X, DualKind::transpose));
      if (exceeded(a) || exceeded(b)) {
        return name + ": bound exceeded";
      }
      auto const& A = std::get<CodescentResult>(a).category;
      auto const& B = std::get<CodescentResult>(b).category;
      if (A.morphism_count() != B.morphism_count() || !find_isomorphism(A, B)) {
        return name + ": not isomorphic";
      }
      auto t = transpose_invariance(X, 6);
      if (exceeded(t) || !std::get<TransposeReport>(t).holds) {
        return name + ": mediator";
      }
    }
    return "";
  }

  std::string fillers_agree() {
    auto X     = perm_ord(2);
    auto least = cnr(X, FillerChoice::least);
    auto great = cnr(X, FillerChoice::greatest);
    if (!(least.base == great.base)) {
      return "tables differ";
    }
    // corners with two or more opcartesian fillers, found by scanning
    int multi = 0;
    for (auto const& c : top_right_corners(X)) {
      int n = 0;
      for (int a : fillers(X, c)) {
        n += oracle::opcartesian(X, a);
      }
      multi += n >= 2;
    }
    auto r = check_filler_independence(X, least);
    if (!r.ok) {
      return r.failures.front();
    }
    return multi > 0 && r.multi_filler_corners > 0 ? "" : "no corner with two fillers";
  }

  std::string spans() {
    auto F = span_bounded(2, 2);
    auto S = cnr_partial(F.X, [&F](BottomLeftCorner c) { return F.admits(c); });
    if (!check_weak_orthogonality(S).ok()) {
      return "weak orthogonality";
    }
    auto r = is_ofs(corner_classes(S));
    if (r.holds) {
      return "is_ofs holds";
    }
    auto const& X = F.X;
    int bang = *X.vertical.find_morphism("2->1:00");
    int sw   = *X.vertical.find_morphism("2->2:10");
    int two  = *X.vertical.find_object("2");
    int f    = S.find({bang, *X.squares.find_object("2->1:00")});
    int s    = S.find({sw, X.hunit(two)});
    int id   = S.base.identity(S.base.object_index("2"));
    auto const& d = r.witness["detail"];
    bool shape = r.witness["axiom"] == "unique_comparison" && f >= 0 && s >= 0
                 && d["morphism"] == S.name(f)
                 && d["comparisons"] == json::array({S.name(id), S.name(s)});
    return shape ? "" : "witness " + r.witness.dump();
  }

  std::string comonad() {
    auto K = const0_comonad();
    auto X = comonad_codcolax(K);
    if (auto bad = all_hold(validate_codomain_colax(X)); !bad.empty()) {
      return bad;
    }
    auto Y = cokleisli(K);
    // hom(x, y) = A(qx, y)
    for (int x = 0; x < static_cast<int>(Y.object_count()); ++x) {
      for (int y = 0; y < static_cast<int>(Y.object_count()); ++y) {
        if (Y.hom(x, y).size() != K.A.hom(K.q.obj_map[x], y).size()) {
          return "coKleisli hom sizes";
        }
      }
    }
    auto c = codescent(X, Route::corners);
    auto g = codescent_generators(X, 6);
    if (exceeded(c) || exceeded(g)) {
      return "bound exceeded";
    }
    if (!find_isomorphism(std::get<CodescentResult>(c).category, Y)) {
      return "corners route";
    }
    return find_isomorphism(std::get<CodescentResult>(g).category, Y) ? "" : "generators route";
  }

  std::string coherence() {
    auto A = min_poset();
    if (auto bad = all_hold(validate_colax_monoidal(A, 3)); !bad.empty()) {
      return "colax " + bad;
    }
    auto S = strictify(A);
    if (auto bad = all_hold(validate_strict_monoidal(S, 3)); !bad.empty()) {
      return "strict " + bad;
    }
    auto bad = all_hold(validate_adjunction(S, 3));
    return bad.empty() ? "" : "adjunction " + bad;
  }

  // hom(w, v) of the free strict monoidal category when the multimorphism
  // count depends only on arity: cut |w| into |v| blocks, multiply.
  long block_count(int n, int k, std::function<long(int)> const& arity) {
    if (k == 0) {
      return n == 0 ? 1 : 0;
    }
    long total = 0;
    for (int b = 0; b <= n; ++b) {
      total += arity(b) * block_count(n - b, k - 1, arity);
    }
    return total;
  }

  std::string multicats() {
    struct Case {
      char const*              name;
      Multicategory            M;
      std::function<long(int)> arity;
    };
    std::vector<Case> cases = {
        {"terminal", terminal_multicategory(3), [](int) { return 1L; }},
        // functions {0,1}^b -> {0,1}
        {"endo2", endo2_multicategory(3), [](int b) { return 1L << (1 << b); }}};
    for (auto const& c : cases) {
      if (!multicategory_roundtrip(c.M, 3).holds) {
        return std::string(c.name) + ": roundtrip";
      }
      auto S = free_strict_monoidal(c.M, 3);
      for (int n = 0; n <= 3; ++n) {
        for (int k = 0; k <= 3; ++k) {
          Tuple w(n, 0), v(k, 0);
          if (static_cast<long>(S.hom(w, v).size()) != block_count(n, k, c.arity)) {
            return std::string(c.name) + ": hom(" + std::to_string(n) + "," + std::to_string(k)
                   + ")";
          }
        }
      }
    }
    return "";
  }

  std::string naturality() {
    auto F = finset_leq(2);
    std::vector<std::pair<std::string, DoubleCategory>> crossed = {
        {"x_prod_z2_walking_arrow", x_prod(cyclic_group(2), walking_arrow())},
        {"perm_ord2", perm_ord(2)},
        {"surj_inj2", commutative_squares(F, surjections(F), injections(F))},
        {"discrete_pq", discrete_double({"p", "q"})}};
    for (auto const& [name, X] : crossed) {
      if (!is_crossed(X).holds) {
        return name + ": not crossed";
      }
      auto C = cnr(X);
      if (!check_naturality(X, C).ok()) {
        return name + ": naturality";
      }
      // Change one value of [e,1]∘[1,m] and expect the check to notice.
      // Discrete fixtures have one-element homs and nothing to change.
      for (int a = 0; a < static_cast<int>(X.square_count()); ++a) {
        int M1 = C.find({X.vunit(X.hdom(X.top(a))), X.top(a)});
        int E1 = C.find({X.right(a), X.hunit(X.vcod(X.right(a)))});
        int E2 = C.find({X.left(a), X.hunit(X.vcod(X.left(a)))});
        int M2 = C.find({X.vunit(X.hdom(X.bottom(a))), X.bottom(a)});
        int r  = C.base.compose(M1, E1);
        auto const& hom = C.base.hom(C.base.src(r), C.base.tgt(r));
        if ((M1 == E2 && E1 == M2) || hom.size() < 2) {
          continue;
        }
        auto D = C;
        D.base.set_composite(M1, E1, hom[0] == r ? hom[1] : hom[0]);
        if (check_naturality(X, D).ok()) {
          return name + ": mutation at " + X.sqname(a) + " undetected";
        }
        break;
      }
    }
    return "";
  }

  std::string universal() {
    auto probe = [](std::string const& name, ColaxCoherenceData const& D,
                    Bounded<CodescentResult> const& b) -> std::string {
      if (exceeded(b)) {
        return name + ": bound exceeded";
      }
      if (!verify_universal_property(D, std::get<CodescentResult>(b), 4).holds) {
        return name + ": codescent object rejected";
      }
      if (verify_universal_property(D, terminal_candidate(D), 4).holds) {
        return name + ": terminal apex accepted";
      }
      return "";
    };
    for (auto const& [name, X] : double_fixtures()) {
      if (auto bad = probe(name, coherence_data(X), codescent(X)); !bad.empty()) {
        return bad;
      }
      auto T = dualize(X, DualKind::transpose);
      if (auto bad = probe(name + "^T", coherence_data(T), codescent(T)); !bad.empty()) {
        return bad;
      }
    }
    auto K = comonad_codcolax(const0_comonad());
    return probe("comonad_const0", coherence_data(K), codescent(K));
  }

}  // namespace

int main() {
  std::vector<std::pair<char const*, Check>> const criteria = {
      {"finset_coincidence", finset},     {"sfs_round_trip", sfs},
      {"ofs_round_trip", ofs},            {"catead_codescent", catead},
      {"transpose_invariance", transposes}, {"filler_independence", fillers_agree},
      {"span_facts", spans},              {"comonad_cokleisli", comonad},
      {"monoidal_coherence", coherence},  {"multicategory_round_trip", multicats},
      {"naturality", naturality},         {"universal_property", universal}};
  int  failed = 0;
  auto start  = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto        t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = criteria[i].second();
    } catch (std::exception const& e) {
      why = std::string("threw: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !why.empty();
    std::printf("%s %2zu %-26s %6.2fs%s%s\n", why.empty() ? "PASS" : "FAIL", i + 1,
                criteria[i].first, s, why.empty() ? "" : "  ", why.c_str());
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (total >= 60) {
    std::printf("FAIL total %.2fs exceeds 60s\n", total);
    ++failed;
  }
  std::printf("%zu criteria, %d failed, %.2fs\n", criteria.size(), failed, total);
  return failed == 0 ? 0 : 1;
}
