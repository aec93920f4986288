#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cornerkit/dblcat.hpp"
#include "cornerkit/fincat.hpp"

namespace cornerkit {

struct CornerClass {
  int src = -1, tgt = -1;
  std::vector<BottomLeftCorner> representatives;  // sorted, nonempty
  BottomLeftCorner canonical() const { return representatives.front(); }
};

struct CornerPartition {
  std::vector<BottomLeftCorner> corners;  // sorted by (u, g)
  std::vector<int>              class_of;  // per corner
  std::vector<CornerClass>      classes;   // sorted by canonical corner
  // True when any two related corners are already joined by a single
  // 2-cell, in one direction or the other.
  bool single_step = true;

  int class_index(BottomLeftCorner c) const;
};

// Zigzag closure of the 2-cells between bottom-left corners. A 2-cell
// (u, g) => (u', g') is a square with top g, bottom g', left θ and right an
// identity, where θ∘u = u'.
CornerPartition corner_equivalence(DoubleCategory const& X);

struct CornersCategory {
  FinCategory              base;
  std::vector<CornerClass> classes;  // per morphism of base
  std::vector<char>        E, M;     // [u, 1] and [1, g] classes
  std::vector<int>         object_of;  // object of X for each object of base

  // Morphism of base holding the corner, or -1.
  int find(BottomLeftCorner c) const {
    auto it = index.find(c);
    return it == index.end() ? -1 : it->second;
  }
  std::string name(int f) const { return base.morphism(f).id; }

  std::map<BottomLeftCorner, int> index;  // every representative
};

enum class FillerChoice { least, greatest };

// Throws PreconditionError carrying the crossed witness if X is not crossed.
CornersCategory cnr(DoubleCategory const& X,
                    FillerChoice choice = FillerChoice::least);

// Corners admitted by a truncation; classes are admitted by their canonical
// corner. Objects are those whose identity corner is admitted. A composite is
// left out of the table when no opcartesian filler exists or the result is
// not admitted.
using CornerAdmit = std::function<bool(BottomLeftCorner)>;
CornersCategory cnr_partial(DoubleCategory const& X, CornerAdmit const& admit,
                            FillerChoice choice = FillerChoice::least);

struct FillerReport {
  bool                     ok = true;
  std::size_t              multi_filler_corners = 0;  // corners with >= 2
  std::size_t              instances = 0;
  std::vector<std::string> failures;
};

// Recomputes every composite over all pairs of representatives and every
// opcartesian filler of the middle corner, and compares with the table.
FillerReport check_filler_independence(DoubleCategory const& X,
                                       CornersCategory const& C);

// [u, g] |-> [Fu, Fg].
FinFunctor cnr_functor(DoubleCategory const& X, DoubleCategory const& Y,
                       DoubleFunctor const& F, CornersCategory const& CX,
                       CornersCategory const& CY);

struct PropertyReport {
  std::vector<std::string> failures;
  json                     witness;  // first failure, null when none
  std::size_t              instances = 0;
  bool ok() const { return failures.empty(); }
};

// For each square with boundary (m, e', e, m'): [1,m']∘[e',1] = [e,1]∘[1,m]
// in the composition table of C.
PropertyReport check_naturality(DoubleCategory const& X,
                                CornersCategory const& C);

// Lifting problems with left edge in E and right edge in M have a diagonal,
// and E has right cancellation. Works on partial tables: a problem counts
// only when both of its composites are defined.
PropertyReport check_weak_orthogonality(CornersCategory const& C);
// Checks that every square of X is opcartesian first.
PropertyReport check_weak_orthogonality(DoubleCategory const& X);

// Corner classes a -> b of spans of finite sets with apex at most apex_bound.
std::vector<CornerClass> bounded_span_hom(int a, int b, int apex_bound);

}  // namespace cornerkit
