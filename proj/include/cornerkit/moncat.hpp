#pragma once

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "cornerkit/dblcat.hpp"
#include "cornerkit/fincat.hpp"

namespace cornerkit {

// A word in the generators (objects of the base).
using Tuple = std::vector<int>;
// A partial evaluation: dom is the concatenation of the blocks.
using Bracketing = std::vector<Tuple>;

// A query outside the enumerated range of a lazy structure.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A morphism dom -> cod of a strict monoidal category of words: dom is cut
// into consecutive blocks of the given lengths, and arrows[i] goes from
// block i to cod[i].
struct Corner {
  Tuple            dom, cod;
  std::vector<int> blocks;
  std::vector<int> arrows;
  auto operator<=>(Corner const&) const = default;
};

Bracketing cut(Tuple const& w, std::vector<int> const& blocks);
// All ways to write n as k ordered non-negative parts, each at most max_part.
std::vector<std::vector<int>> chunkings(int n, int k, int max_part = -1);
// All words of the given length over n generators, lexicographic.
std::vector<Tuple> words(int generators, int length);

// Strict monoidal category on words with concatenation as tensor; homs are
// computed on demand.
class LazyStrictMonoidal {
 public:
  virtual ~LazyStrictMonoidal() = default;

  virtual int         generator_count() const = 0;
  virtual std::string generator_name(int x) const = 0;
  virtual std::string arrow_name(int f) const = 0;

  virtual std::vector<Corner> hom(Tuple const& w, Tuple const& v) const = 0;
  virtual Corner              identity(Tuple const& w) const = 0;
  // g∘f
  virtual Corner compose(Corner const& f, Corner const& g) const = 0;

  Corner      tensor(Corner const& f, Corner const& g) const;
  std::string word_name(Tuple const& w) const;
  json        corner_json(Corner const& c) const;
};

// Category laws on every composable triple of words of length <= depth,
// and the strict monoidal laws for concatenation on the same homs.
PredicateReport validate_strict_monoidal(LazyStrictMonoidal const& S,
                                         int depth);

// Unbiased colax monoidal structure on a finite category. The tensor, the
// coassociator gamma and the counitor iota are total oracles, memoized.
// An oracle returns -1 where it is undefined.
class ColaxMonoidalCategory {
 public:
  using TensorObj = std::function<int(Tuple const&)>;
  using TensorMor = std::function<int(Tuple const&)>;
  using Gamma     = std::function<int(Bracketing const&)>;
  using Iota      = std::function<int(int)>;

  ColaxMonoidalCategory(FinCategory base, std::string rule, TensorObj t0,
                        TensorMor t1, Gamma gamma, Iota iota);

  FinCategory const& base() const { return base_; }
  std::string const& rule() const { return rule_; }

  // Throw InputError where the oracle is undefined.
  int tensor(Tuple const& w) const;
  int tensor_mor(Tuple const& fs) const;
  int gamma(Bracketing const& alpha) const;  // ⊗(concat) -> ⊗(⊗ blocks)
  int iota(int a) const;                     // ⊗(a) -> a

  // Copy with gamma replaced at one bracketing.
  ColaxMonoidalCategory with_gamma(Bracketing const& alpha, int f) const;

 private:
  struct Memo {
    std::shared_mutex                   lock;
    std::map<Tuple, int>                t0, t1;
    std::map<Bracketing, int>           gamma;
    std::map<int, int>                  iota;
  };
  int cached(std::map<Tuple, int>& m, Tuple const& key,
             std::function<int(Tuple const&)> const& f) const;

  FinCategory           base_;
  std::string           rule_;
  TensorObj             t0_;
  TensorMor             t1_;
  Gamma                 gamma_;
  Iota                  iota_;
  std::shared_ptr<Memo> memo_;
};

// Functoriality of each tensor, typing and naturality of gamma and iota,
// the coassociativity cocycle and both counit laws, over nested words with
// at most depth leaves and at most depth entries per level.
PredicateReport validate_colax_monoidal(ColaxMonoidalCategory const& A,
                                        int depth);

// Cnr(A): words, and corners made of a partial evaluation and a tuple of
// morphisms ⊗(block i) -> cod[i].
class Strictification : public LazyStrictMonoidal {
 public:
  explicit Strictification(ColaxMonoidalCategory A) : A_(std::move(A)) {}

  ColaxMonoidalCategory const& colax() const { return A_; }

  int         generator_count() const override;
  std::string generator_name(int x) const override;
  std::string arrow_name(int f) const override;

  std::vector<Corner> hom(Tuple const& w, Tuple const& v) const override;
  Corner              identity(Tuple const& w) const override;
  Corner compose(Corner const& f, Corner const& g) const override;

 private:
  ColaxMonoidalCategory A_;
};

Strictification strictify(ColaxMonoidalCategory const& A);

// The unit P : A -> Cnr(A), a -> (a), f -> (f∘iota), with lax structure
// Pbar_w : w -> (⊗w) the single-block corner with identity arrow.
Corner unit_P(Strictification const& S, int f);
Corner unit_Pbar(Strictification const& S, Tuple const& w);
// Functoriality of P, naturality of Pbar, the associativity and unit
// equations of a lax monoidal functor, over words of length <= depth.
PredicateReport validate_unit_P(Strictification const& S, int depth);

// Q : Cnr(A) -> A, w -> ⊗w, (alpha, f) -> ⊗f ∘ gamma_alpha.
int Q_object(Strictification const& S, Tuple const& w);
int Q_morphism(Strictification const& S, Corner const& c);
// eta~_w : w -> (⊗w).
Corner unit_eta(Strictification const& S, Tuple const& w);

// Q is a functor, the counit iota and the unit eta~ are natural, and both
// triangle identities hold on every word of length <= depth. For normal A
// (iota invertible) also reports that P is injective on homs.
PredicateReport validate_adjunction(Strictification const& S, int depth);

// Fixtures.
// {0 < 1} with the meet as tensor and 1 as unit.
FinCategory           two_chain();
ColaxMonoidalCategory meet_poset(FinCategory const& P);
ColaxMonoidalCategory join_poset(FinCategory const& P);
ColaxMonoidalCategory min_poset();
// A one-object category with commutative composition, tensor given by
// composition, identity gamma and iota.
ColaxMonoidalCategory commutative_monoid(FinCategory const& M);

// Rule names accepted in JSON: meet-poset, join-poset, commutative-monoid.
ColaxMonoidalCategory colax_from_rule(FinCategory const& base,
                                      std::string const& rule);

}  // namespace cornerkit
