#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cornerkit/codescent.hpp"
#include "cornerkit/corners.hpp"
#include "cornerkit/dblcat.hpp"
#include "cornerkit/fincat.hpp"

namespace cornerkit {

// Two classes of morphisms of base. The composition table of base may be
// partial (truncated span categories); undefined composites never witness
// an equation.
struct MorphismClassPair {
  FinCategory       base;
  std::vector<char> E, M;
};

// The pair (E_X, M_X) of a corners category.
MorphismClassPair corner_classes(CornersCategory const& C);

struct FactReport {
  bool                 holds = true;
  std::vector<Verdict> verdicts;  // one per axiom
  json                 witness;   // first failing axiom, null on success

  Verdict const& at(std::string const& name) const;
  json           to_json() const;
};

// Throws InputError when E or M misses an identity or is not closed under
// the composites that are defined.
void validate_classes(MorphismClassPair const& P);

FactReport is_sfs(MorphismClassPair const& P);
FactReport is_ofs(MorphismClassPair const& P);
// Factorizations exist, every lifting problem has a diagonal, E is closed
// under codomain-retracts and M under domain-retracts.
FactReport is_wfs(MorphismClassPair const& P);

struct LiftProblem {
  int top = -1, bottom = -1, left = -1, right = -1;
};

// The least diagonal d with d∘left = top and right∘d = bottom. Throws
// InputError if the square does not commute or the edges are misplaced.
std::optional<int> solve_lift(MorphismClassPair const& P, LiftProblem const& p);

// D_{E,M}: verticals in E, horizontals in M, commutative squares.
DoubleCategory build_double(MorphismClassPair const& P);

enum class FactKind { sfs, ofs };

struct RoundtripReport {
  bool          holds = true;
  json          witness;
  DoubleFunctor unit;    // X -> D_{Cnr X}
  FinFunctor    counit;  // C -> Cnr(D_{E,M})
  json to_json() const;
};

// Starting from a double category X: checks the predicate for kind, then
// that X -> D_{Cnr X} is a double isomorphism, that Cnr X -> Cnr(D_{Cnr X})
// is an isomorphism preserving the classes, and that the functor induced by
// the first agrees with the second.
RoundtripReport roundtrip(FactKind kind, DoubleCategory const& X);
// Starting from a factorization system: D = D_{E,M} and the same checks,
// with P.base -> Cnr D in place of Cnr X -> Cnr(D_{Cnr X}).
RoundtripReport roundtrip(FactKind kind, MorphismClassPair const& P);

struct UnitReport {
  bool        holds = true;
  std::string route;       // codescent route used for cod X
  FinFunctor  theta;       // cod X -> apex
  int         candidates = 0;
  json        witness;
  json        to_json() const;
};

// Universal property of the unit X -> D_{cod X} against the double functor
// X -> D_{G,psi} that is the identity on objects, verticals and horizontals.
// target.F is G : X0 -> C, target.xi is psi : h(X) -> C. Throws InputError
// when target is not a cocone pair.
Bounded<UnitReport> cocone_unit_check(DoubleCategory const& X,
                                      FinCategory const& C,
                                      CoconePair const& target, int cap = 6);

}  // namespace cornerkit
