#pragma once

#include <string>
#include <vector>

#include "cornerkit/codescent.hpp"
#include "cornerkit/dblcat.hpp"
#include "cornerkit/fincat.hpp"

namespace cornerkit {

// a --f--> b
FinCategory walking_arrow();
// x --f--> y --g--> z with the composite h = g∘f
FinCategory triangle();

// All functions between {0..m-1}, 0 <= m <= n. Morphisms are named
// "m->k:d0d1..." listing the images. Throws InputError for n > 3.
FinCategory finset_leq(int n);
// Same without the size guard; used by the larger fixtures.
FinCategory finset_upto(int n);

// Reads a function back from a morphism of finset_leq / finset_upto.
FinFunction finset_function(FinCategory const& C, int f);
std::vector<char> surjections(FinCategory const& finset);
std::vector<char> injections(FinCategory const& finset);
std::vector<char> bijections(FinCategory const& finset);
std::vector<char> monotone_maps(FinCategory const& finset);
std::vector<char> all_morphisms(FinCategory const& C);
std::vector<char> identities_only(FinCategory const& C);
std::vector<char> isomorphisms(FinCategory const& C);

DoubleCategory sq_of(FinCategory const& C);
DoubleCategory x_prod(FinCategory const& A, FinCategory const& B);
// Ordinals 0..n, order-preserving horizontals, permutations vertical,
// commuting squares of functions. Throws GuardError for n > 4.
DoubleCategory perm_ord(int n);

// Commutative squares of finite sets whose square is a pullback, with the
// vertical direction reversed. Sets of size <= n.
DoubleCategory pullback_squares_dual(int n);
// As above with monic verticals.
DoubleCategory mono_pullback_squares_dual(int n);

// Spans of finite sets: pullback squares over sets of size at most
// max(size_bound, apex_bound), vertically dual. A bottom-left corner is a
// span; it is admitted when both ends have size <= size_bound and the apex
// has size <= apex_bound. Throws GuardError above size 3.
struct SpanFragment {
  DoubleCategory X;
  int            size_bound = 0;
  int            apex_bound = 0;

  int  size(int object) const { return std::stoi(X.oname(object)); }
  bool admits(BottomLeftCorner c) const;
};
SpanFragment span_bounded(int size_bound, int apex_bound);

// A discrete double category on the given objects.
DoubleCategory discrete_double(std::vector<std::string> const& objects);

// One object, morphisms t^0..t^{n-1} composing cyclically.
FinCategory cyclic_group(int n);

struct Comonad {
  FinCategory A;
  FinFunctor  q;
  FinNatTrans epsilon;  // q => 1
  FinNatTrans delta;    // q => qq
};

// Functor, naturality and the three comonad equations.
ValidationReport validate_comonad(Comonad const& K);

// Horizontals a~ : a -> qa, squares u~ with left u and right qu, every
// horizontal the identity on its domain, iota = epsilon, gamma = delta.
// Throws InputError when K is not a comonad.
CodomainColaxCategory comonad_codcolax(Comonad const& K);

// q constant at a on the walking arrow a -> b.
Comonad const0_comonad();
Comonad identity_comonad(FinCategory const& A);

// hom(x, y) = A(qx, y), composite k2 ∘ q(k1) ∘ delta_x.
FinCategory cokleisli(Comonad const& K);

}  // namespace cornerkit
