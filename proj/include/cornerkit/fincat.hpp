#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace cornerkit {

// Malformed input: dangling ids, non-composable table entries, schema errors.
class InputError : public std::runtime_error {
 public:
  explicit InputError(std::string const& msg, std::string path = "")
      : std::runtime_error(msg), path_(std::move(path)) {}
  std::string const& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// A check was asked of data that does not meet the operation's precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BoundExceeded {
  int         cap = 0;
  std::string reason;
};

template <typename T>
using Bounded = std::variant<T, BoundExceeded>;

template <typename T>
bool exceeded(Bounded<T> const& b) {
  return std::holds_alternative<BoundExceeded>(b);
}

inline std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32)
         | static_cast<std::uint32_t>(b);
}

struct Morphism {
  std::string id;
  int         src = -1;
  int         tgt = -1;
};

// Objects and morphisms keep insertion order; composition of f then g is
// stored under (f, g) and read as g∘f.
class FinCategory {
 public:
  int add_object(std::string name);
  int add_morphism(std::string name, int src, int tgt);
  void set_identity(int object, int morphism);
  // Records g∘f. Throws InputError when tgt(f) != src(g).
  void set_composite(int f, int g, int gf);
  // Fills f∘id and id∘f for every identity pair not already present.
  void fill_unit_composites();

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  std::string const& object_name(int a) const { return objects_.at(a); }
  Morphism const& morphism(int f) const { return morphisms_.at(f); }
  int src(int f) const { return morphisms_[f].src; }
  int tgt(int f) const { return morphisms_[f].tgt; }
  int identity(int a) const { return identity_[a]; }
  bool is_identity(int f) const {
    return identity_[morphisms_[f].src] == f;
  }

  // g∘f, or -1 when the table has no entry.
  int compose(int f, int g) const {
    auto it = composition_.find(pair_key(f, g));
    return it == composition_.end() ? -1 : it->second;
  }
  bool has_composite(int f, int g) const {
    return composition_.count(pair_key(f, g)) != 0;
  }
  // Like compose but throws if undefined.
  int comp(int f, int g) const;

  std::vector<int> const& hom(int a, int b) const;
  std::vector<int> const& out(int a) const { return out_[a]; }
  std::vector<int> const& in(int b) const { return in_[b]; }

  std::optional<int> find_object(std::string const& name) const;
  std::optional<int> find_morphism(std::string const& name) const;
  int object_index(std::string const& name) const;
  int morphism_index(std::string const& name) const;

  std::unordered_map<std::uint64_t, int> const& composition_table() const {
    return composition_;
  }
  // Ordered list of (f, g, g∘f) sorted by (f, g).
  std::vector<std::tuple<int, int, int>> composition_entries() const;

  bool operator==(FinCategory const& other) const;

 private:
  std::vector<std::string>                 objects_;
  std::vector<Morphism>                    morphisms_;
  std::vector<int>                         identity_;
  std::unordered_map<std::uint64_t, int>   composition_;
  std::unordered_map<std::string, int>     object_ids_;
  std::unordered_map<std::string, int>     morphism_ids_;
  std::unordered_map<std::uint64_t, std::vector<int>> homs_;
  std::vector<std::vector<int>>            out_, in_;
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

ValidationReport validate_category(FinCategory const& C);

std::vector<int> hom_set(FinCategory const& C, std::string const& a,
                         std::string const& b);

// The two-sided inverse of f if there is one.
std::optional<int> is_isomorphism(FinCategory const& C, int f);

FinCategory opposite(FinCategory const& C);
FinCategory product(FinCategory const& A, FinCategory const& B);
FinCategory terminal_category();
FinCategory discrete_category(std::vector<std::string> const& names);

struct FinFunctor {
  std::vector<int> obj_map;
  std::vector<int> mor_map;
};

ValidationReport validate_functor(FinCategory const& C, FinCategory const& D,
                                  FinFunctor const& F);
FinFunctor identity_functor(FinCategory const& C);
FinFunctor compose_functors(FinFunctor const& F, FinFunctor const& G);
bool is_iso_functor(FinCategory const& C, FinCategory const& D,
                    FinFunctor const& F);
// Some isomorphism C → D, found by search.
std::optional<FinFunctor> find_isomorphism(FinCategory const& C,
                                           FinCategory const& D);

struct FinNatTrans {
  std::vector<int> components;  // per object of the source category
};

ValidationReport validate_nat_trans(FinCategory const& C, FinCategory const& D,
                                    FinFunctor const& F, FinFunctor const& G,
                                    FinNatTrans const& alpha);

struct FinFunction {
  int              dom = 0;
  int              cod = 0;
  std::vector<int> map;
  int operator()(int x) const { return map[x]; }
};

struct FinSpan {
  std::vector<std::pair<int, int>> apex;
  FinFunction                      p1, p2;
};

FinSpan pullback_finset(FinFunction const& f, FinFunction const& g);

// A path is a start vertex and a sequence of edges in traversal order.
struct Path {
  int              src = 0;
  std::vector<int> edges;
};

struct PresentedCategory {
  struct Edge {
    std::string id;
    int         src = 0;
    int         tgt = 0;
  };
  std::vector<std::string>             vertices;
  std::vector<Edge>                    edges;
  std::vector<std::pair<Path, Path>>   relations;
  int                                  cap = 6;

  int add_vertex(std::string name);
  int add_edge(std::string name, int src, int tgt);
  void add_relation(Path p, Path q);
  int path_target(Path const& p) const;
};

struct Quotient {
  FinCategory                   category;
  std::vector<std::vector<int>> words;       // shortest known word per morphism
  std::vector<int>              edge_class;  // image of each generator
  // Action table: next[m][e] for each morphism and outgoing edge.
  std::vector<std::unordered_map<int, int>> next;

  int class_of(Path const& p) const;
};

Bounded<Quotient> quotient_presented(PresentedCategory const& P);

struct CoinserterResult {
  FinCategory category;
  FinFunctor  F;
  FinNatTrans xi;  // components indexed by X1-object
};

Bounded<CoinserterResult> coinserter(FinCategory const& X0,
                                     FinCategory const& X1,
                                     FinFunctor const& d1,
                                     FinFunctor const& d0, int cap = 6);

struct CoequifierResult {
  FinCategory category;
  FinFunctor  Q;  // target category → quotient
};

Bounded<CoequifierResult> coequifier(FinCategory const& D,
                                     FinNatTrans const& alpha,
                                     FinNatTrans const& beta, int cap = 6);

}  // namespace cornerkit
