#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cornerkit/moncat.hpp"

namespace cornerkit {

struct MultiMorphism {
  std::string id;
  Tuple       src;
  int         tgt = -1;
};

// Plain multicategory, truncated to arities <= arity_bound. Composition
// g∘(f1..fn) is a function returning -1 where undefined.
struct Multicategory {
  using Compose = std::function<int(int, std::vector<int> const&)>;

  std::vector<std::string>   objects;
  std::vector<MultiMorphism> morphisms;
  std::vector<int>           identity;  // per object
  int                        arity_bound = 0;
  Compose                    compose;
  std::string                fixture;  // builder name, empty for tables

  // Rebuilds the hom index; call after editing morphisms.
  void index();
  std::vector<int> const& hom(Tuple const& src, int tgt) const;
  int                     find(std::string const& id) const;

 private:
  std::map<std::pair<Tuple, int>, std::vector<int>> homs_;
  std::map<std::string, int>                        ids_;
};

// Typing, identities, closure of composition, unit and associativity laws
// for all instances of total arity <= arity_bound.
PredicateReport validate_multicategory(Multicategory const& M, int arity_bound);

// One object, one morphism of each arity 0..n.
Multicategory terminal_multicategory(int n);
// Operations {0,1}^k -> {0,1} for k <= n, named "k:t0t1..." by truth table.
Multicategory endo2_multicategory(int n);
// One object, the identity and one ternary morphism; no other composites.
Multicategory ternary_multicategory(int n);

// F(M): words in M-objects, corners whose arrows are multimorphisms from
// block i to cod[i]. Words longer than length_bound throw BoundError;
// length_bound may not exceed the arity bound of M.
class FreeStrictMonoidal : public LazyStrictMonoidal {
 public:
  // Throws GuardError when length_bound exceeds the arity bound of M.
  FreeStrictMonoidal(Multicategory M, int length_bound);

  Multicategory const& multicategory() const { return M_; }
  int                  length_bound() const { return bound_; }

  int         generator_count() const override;
  std::string generator_name(int x) const override;
  std::string arrow_name(int f) const override;

  std::vector<Corner> hom(Tuple const& w, Tuple const& v) const override;
  Corner              identity(Tuple const& w) const override;
  Corner compose(Corner const& f, Corner const& g) const override;

 private:
  void check(Tuple const& w) const;

  Multicategory M_;
  int           bound_;
};

FreeStrictMonoidal free_strict_monoidal(Multicategory const& M,
                                        int length_bound);

// Coalgebra structure G : S -> Cnr(S). On objects a word of S-objects; on
// morphisms a corner over G(dom) whose arrows are S-morphisms.
struct Coalgebra {
  struct Image {
    std::vector<int>    blocks;
    std::vector<Corner> arrows;
  };
  std::function<std::vector<Tuple>(Tuple const&)> on_objects;
  std::function<Image(Corner const&)>              on_morphisms;
};

// G(w) = ((w1), ..., (wn)); a corner goes to its blocks with single-block
// corners as arrows.
Coalgebra canonical_coalgebra(LazyStrictMonoidal const& S);

struct PrimeResult {
  bool                holds = true;
  json                witness;
  Multicategory       multicategory;
  std::vector<Tuple>  primes;   // per object of the result
  std::vector<Corner> arrows;   // per morphism of the result
};

// Counit and coassociativity of G on words of length <= bound and on homs
// into primes, uniqueness of prime factorizations, then S^p: primes as
// objects and S-morphisms p1...pn -> q with q prime as multimorphisms.
// Composition in the result calls into S, which must outlive it.
PrimeResult prime_multicategory(LazyStrictMonoidal const& S, Coalgebra const& G,
                                int bound);

// Compares M with prime_multicategory(free_strict_monoidal(M)) along the
// canonical map m -> (m), f -> the single-block corner of f: hom counts
// for every source of length <= bound, identities and composition.
Decision multicategory_roundtrip(Multicategory const& M, int bound);

}  // namespace cornerkit
