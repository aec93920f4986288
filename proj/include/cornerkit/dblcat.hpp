#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "cornerkit/fincat.hpp"

namespace cornerkit {

using json = nlohmann::ordered_json;

// Internal-category presentation: X0 = vertical, X1 = squares (objects are
// horizontal morphisms, morphisms are squares, composition is vertical).
struct DoubleCategory {
  FinCategory vertical;
  FinCategory squares;
  std::vector<int> d1_obj, d0_obj;  // per horizontal: domain, codomain object
  std::vector<int> d1_mor, d0_mor;  // per square: left, right vertical
  std::vector<int> s_obj;           // per object: identity horizontal
  std::vector<int> s_mor;           // per vertical: horizontal identity square
  std::unordered_map<std::uint64_t, int> hcomp_obj;  // (g1, g2) -> g2∘g1
  std::unordered_map<std::uint64_t, int> hcomp_sq;   // (a1, a2) -> a2*a1

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
  int vdom(int u) const { return vertical.src(u); }
  int vcod(int u) const { return vertical.tgt(u); }

  int vid(int g) const { return squares.identity(g); }  // vertical identity
  int hid(int u) const { return s_mor[u]; }             // horizontal identity
  int hunit(int a) const { return s_obj[a]; }
  int vunit(int a) const { return vertical.identity(a); }

  int vcomp(int a, int b) const { return squares.compose(a, b); }
  int hcomp(int a, int b) const {
    auto it = hcomp_sq.find(pair_key(a, b));
    return it == hcomp_sq.end() ? -1 : it->second;
  }
  int hcomp_h(int g1, int g2) const {
    auto it = hcomp_obj.find(pair_key(g1, g2));
    return it == hcomp_obj.end() ? -1 : it->second;
  }
  int vcomp_v(int u1, int u2) const { return vertical.compose(u1, u2); }

  std::string const& hname(int g) const { return squares.object_name(g); }
  std::string const& vname(int u) const { return vertical.morphism(u).id; }
  std::string const& sqname(int a) const { return squares.morphism(a).id; }
  std::string const& oname(int x) const { return vertical.object_name(x); }

  // Fills hcomp entries that are forced by the unit laws.
  void fill_unit_hcomps();
  bool operator==(DoubleCategory const& other) const;
};

// Lookup tables over the squares of a double category.
class SquareIndex {
 public:
  explicit SquareIndex(DoubleCategory const& X);
  std::vector<int> const& by_top_right(int g, int v) const;
  std::vector<int> const& by_left_bottom(int u, int h) const;
  std::vector<int> const& by_bottom_right(int h, int v) const;
  std::vector<int> const& by_top(int g) const;
  std::vector<int> const& by_bottom(int h) const;
  std::vector<int> const& by_left(int u) const;
  std::vector<int> const& by_boundary(int g, int u, int v, int h) const;

 private:
  std::unordered_map<std::uint64_t, std::vector<int>> top_right_, left_bottom_,
      bottom_right_;
  std::vector<std::vector<int>> top_, bottom_, left_;
  std::map<std::tuple<int, int, int, int>, std::vector<int>> boundary_;
};

struct BottomLeftCorner {
  int u = -1;  // vertical a -> a'
  int g = -1;  // horizontal a' -> b
  auto operator<=>(BottomLeftCorner const&) const = default;
};

struct TopRightCorner {
  int g = -1;  // horizontal a -> b
  int u = -1;  // vertical b -> c
  auto operator<=>(TopRightCorner const&) const = default;
};

struct DoubleFunctor {
  std::vector<int> obj, vert, hor, sq;
};

ValidationReport validate_double(DoubleCategory const& X);
ValidationReport validate_double_functor(DoubleCategory const& X,
                                         DoubleCategory const& Y,
                                         DoubleFunctor const& F);
DoubleFunctor identity_double_functor(DoubleCategory const& X);
bool is_double_isomorphism(DoubleCategory const& X, DoubleCategory const& Y,
                           DoubleFunctor const& F);

enum class DualKind { transpose, vertical, horizontal, star };
DoubleCategory dualize(DoubleCategory const& X, DualKind kind);

FinCategory horizontal_category(DoubleCategory const& X);
// Objects are verticals, morphisms squares, composition horizontal.
FinCategory horizontal_square_category(DoubleCategory const& X);

// Commutative squares of C with vertical edges in V, horizontal edges in H,
// and squares admitted by keep. V and H must be wide subcategories.
DoubleCategory commutative_squares(
    FinCategory const& C, std::vector<char> const& V,
    std::vector<char> const& H,
    std::function<bool(int g, int u, int v, int h)> const& keep = {});

struct Verdict {
  std::string name;
  bool        holds = true;
  json        witness;
};

struct PredicateReport {
  std::vector<Verdict> verdicts;
  Verdict const& at(std::string const& name) const;
  bool operator[](std::string const& name) const { return at(name).holds; }
  json to_json() const;
};

struct Decision {
  bool holds = true;
  json witness;
};

// Input refused by a feasibility guard.
class GuardError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Size guard for the enumeration based predicates.
inline constexpr std::size_t default_square_limit = 10000;

Decision is_opcartesian(DoubleCategory const& X, int square);
Decision is_bicartesian(DoubleCategory const& X, int square);
Decision is_jointly_monic(DoubleCategory const& X, BottomLeftCorner c);

// Direct cartesian test: universal among squares with the same bottom edge.
// Used for co_crossed and to cross-check the vertical dual.
Decision is_cartesian(DoubleCategory const& X, int square);

// Opcartesian flag per square, and the crossed verdict on its own.
std::vector<char> opcartesian_squares(DoubleCategory const& X);
Decision          is_crossed(DoubleCategory const& X);

std::vector<int> fillers(DoubleCategory const& X, TopRightCorner c);
std::vector<TopRightCorner> top_right_corners(DoubleCategory const& X);
std::vector<BottomLeftCorner> bottom_left_corners(DoubleCategory const& X);

PredicateReport analyze(DoubleCategory const& X,
                        std::size_t square_limit = default_square_limit);

// Catead data: the unique squares rho_u (left u, right id, bottom id) used to
// define F on verticals. Throws PreconditionError if X is not a catead.
std::vector<int> catead_rho(DoubleCategory const& X);

}  // namespace cornerkit
