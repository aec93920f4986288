#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "cornerkit/dblcat.hpp"
#include "cornerkit/fincat.hpp"

namespace cornerkit {

// Codomain-colax category over finite sets. Same layout as DoubleCategory,
// except that horizontal composition keeps domains but not codomains:
// gamma_{g1,g2} : cod(g2∘g1) -> cod g2 and iota_a : cod s(a) -> a.
struct CodomainColaxCategory {
  FinCategory vertical;  // X0
  FinCategory squares;   // X1
  std::vector<int> d1_obj, d0_obj;
  std::vector<int> d1_mor, d0_mor;
  std::vector<int> s_obj, s_mor;
  std::unordered_map<std::uint64_t, int> hcomp_obj;  // (g1, g2) -> g2∘g1
  std::unordered_map<std::uint64_t, int> hcomp_sq;   // (a1, a2) -> a2*a1
  std::unordered_map<std::uint64_t, int> gamma;      // (g1, g2) -> vertical
  std::vector<int>                       iota;       // per object
  // Derived squares. iota_hat[g] has bottom g and left iota_{dom g};
  // gamma_hat[(g1,g2,g3)] has bottom g3 and left gamma_{g1,g2}.
  std::vector<int>                        iota_hat;
  std::map<std::tuple<int, int, int>, int> gamma_hat;

  std::size_t object_count() const { return vertical.object_count(); }
  std::size_t horizontal_count() const { return squares.object_count(); }
  std::size_t vertical_count() const { return vertical.morphism_count(); }
  std::size_t square_count() const { return squares.morphism_count(); }

  int top(int a) const { return squares.src(a); }
  int bottom(int a) const { return squares.tgt(a); }
  int left(int a) const { return d1_mor[a]; }
  int right(int a) const { return d0_mor[a]; }
  int hdom(int g) const { return d1_obj[g]; }
  int hcod(int g) const { return d0_obj[g]; }
  int hcomp_h(int g1, int g2) const {
    auto it = hcomp_obj.find(pair_key(g1, g2));
    return it == hcomp_obj.end() ? -1 : it->second;
  }
  int hcomp(int a1, int a2) const {
    auto it = hcomp_sq.find(pair_key(a1, a2));
    return it == hcomp_sq.end() ? -1 : it->second;
  }
  int gamma_at(int g1, int g2) const {
    auto it = gamma.find(pair_key(g1, g2));
    return it == gamma.end() ? -1 : it->second;
  }
  // Horizontal with domain cod s(a) whose composite with s(a) is g.
  int hat(int g) const { return top(iota_hat[g]); }

  std::string const& hname(int g) const { return squares.object_name(g); }
  std::string const& vname(int u) const { return vertical.morphism(u).id; }
  std::string const& oname(int x) const { return vertical.object_name(x); }
};

// gamma and iota identities, derived squares vertical identities.
CodomainColaxCategory from_double(DoubleCategory const& X);

// Unique square with left u and bottom h, or the reason there is none.
struct LiftResult {
  std::optional<int> square;
  int                count = 0;
};
LiftResult lift(CodomainColaxCategory const& X, int u, int h);

// Every pair (u, h) with cod u = dom h has exactly one square. The witness
// names the first corner that does not.
Decision is_domain_codiscrete(CodomainColaxCategory const& X);

// Fills iota_hat and gamma_hat as unique lifts. Throws PreconditionError when
// d1 is not a discrete fibration.
void complete_lifts(CodomainColaxCategory& X);

// Structure problems raise InputError; the axioms are reported as verdicts
// associativity, unitality, cocycle, unit_left, unit_right,
// gamma_naturality and iota_naturality.
PredicateReport validate_codomain_colax(CodomainColaxCategory const& X);

// Colax coherence data X2 => X1 <=> X0. Faces of X2 are e0, e1, e2.
struct ColaxCoherenceData {
  FinCategory X0, X1, X2;
  FinFunctor  d0, d1, s;
  FinFunctor  e0, e1, e2;
  FinNatTrans iota;   // per X0 object: d0 s(a) -> a
  FinNatTrans gamma;  // per X2 object: d0 e1(p) -> d0 e0(p)
};

// X2 is the category of composable pairs; e1 composes, e0 and e2 project.
ColaxCoherenceData coherence_data(CodomainColaxCategory const& X);
ColaxCoherenceData coherence_data(DoubleCategory const& X);
// Functors, the three 1-cell equations and naturality of iota and gamma.
ValidationReport validate_coherence_data(ColaxCoherenceData const& D);

// F : X0 -> Y and one component xi_g : F d1 g -> F d0 g per X1 object.
struct Cocone {
  FinFunctor       F;
  std::vector<int> xi;
};

// F : X0 -> C and xi : h(X) -> C agreeing on objects.
struct CoconePair {
  FinFunctor F;
  FinFunctor xi;
};

// Functoriality, naturality of xi and both cocone axioms.
ValidationReport validate_cocone(ColaxCoherenceData const& D,
                                 FinCategory const& Y, Cocone const& c);
// Throws InputError when the object maps disagree.
ValidationReport validate_cocone_pair(DoubleCategory const& X,
                                      FinCategory const& C,
                                      CoconePair const& P);
Cocone     pair_to_cocone(CoconePair const& P);
CoconePair cocone_to_pair(DoubleCategory const& X, Cocone const& c);

struct CodescentResult {
  std::string route;
  FinCategory category;
  Cocone      cocone;
};

// h(X) with F(u) the top of the unique square rho_u. Throws
// PreconditionError with the catead witness otherwise.
CodescentResult codescent_catead(DoubleCategory const& X);

// Crossed X: cnr(X) with u -> [u,1], g -> [1,g]. Domain-codiscrete X:
// cnr_codcolax(from_double(X)). Throws PreconditionError otherwise.
CodescentResult codescent_corners(DoubleCategory const& X);

// Top-right corners (g, u), no quotient. Throws PreconditionError with the
// offending corner when d1 is not a discrete fibration.
CodescentResult cnr_codcolax(CodomainColaxCategory const& X);

// Paths of X0 morphisms and X1 objects modulo the cocone relations.
PresentedCategory cocone_presentation(ColaxCoherenceData const& D);
Bounded<CodescentResult> codescent_generators(ColaxCoherenceData const& D,
                                              int cap = 6);
Bounded<CodescentResult> codescent_generators(CodomainColaxCategory const& X,
                                              int cap = 6);
Bounded<CodescentResult> codescent_generators(DoubleCategory const& X,
                                              int cap = 6);

enum class Route { automatic, catead, corners, genrel };
Route       parse_route(std::string const& name);  // InputError if unknown
std::string route_name(Route r);

// automatic tries catead, then corners, then generators.
Bounded<CodescentResult> codescent(DoubleCategory const& X,
                                   Route route = Route::automatic, int cap = 6);
Bounded<CodescentResult> codescent(CodomainColaxCategory const& X,
                                   Route route = Route::automatic, int cap = 6);

// Categories with at most n morphisms, one per isomorphism class. Throws
// GuardError for n > 4.
std::vector<FinCategory> small_categories(int n);

// Every cocone for D with apex Z.
std::vector<Cocone> enumerate_cocones(ColaxCoherenceData const& D,
                                      FinCategory const& Z);

// Functors theta : Y -> Z with theta F = G and theta xi = psi, at most limit.
std::vector<FinFunctor> mediators(FinCategory const& Y, Cocone const& c,
                                  FinCategory const& Z, Cocone const& d,
                                  std::size_t limit = 2);

struct UniversalReport {
  bool        holds = true;
  int         categories = 0;  // probe apexes tried
  long        cocones = 0;     // cocones tried over all apexes
  json        witness;
  json        to_json() const;
};

// Throws PreconditionError if the candidate is not a cocone, GuardError
// through small_categories.
UniversalReport verify_universal_property(ColaxCoherenceData const& D,
                                          CodescentResult const& candidate,
                                          int probe_bound = 4);

// The terminal category with everything sent to identities.
CodescentResult terminal_candidate(ColaxCoherenceData const& D);

struct TransposeReport {
  bool        holds = true;
  std::string route, transpose_route;
  FinFunctor  theta;  // cod X -> cod X^T
  json        witness;
  json        to_json() const;
};

// Codescent of X and of its transpose by the automatic route; theta is the
// mediator for the swapped cocone (xi, F) and must be an isomorphism.
Bounded<TransposeReport> transpose_invariance(DoubleCategory const& X,
                                              int cap = 6);

}  // namespace cornerkit
