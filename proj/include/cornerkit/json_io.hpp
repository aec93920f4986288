#pragma once

#include <optional>
#include <string>

#include "cornerkit/codescent.hpp"
#include "cornerkit/dblcat.hpp"
#include "cornerkit/factsys.hpp"
#include "cornerkit/fincat.hpp"
#include "cornerkit/moncat.hpp"
#include "cornerkit/multicat.hpp"

namespace cornerkit {

// Parsers reject unknown fields and dangling ids with an InputError whose
// path() is a JSON pointer into the document. `at` is the pointer of the
// value being parsed. Serializers omit composites forced by the unit laws;
// parsers fill them back in, so serialize(parse(x)) == x on canonical files.

std::string pointer_escape(std::string const& token);

json        category_to_json(FinCategory const& C);
FinCategory category_from_json(json const& j, std::string const& at = "");

// {"objects": {a: Fa}, "morphisms": {f: Ff}}
json       functor_to_json(FinCategory const& C, FinCategory const& D,
                           FinFunctor const& F);
FinFunctor functor_from_json(json const& j, FinCategory const& C,
                             FinCategory const& D, std::string const& at);

// {a: alpha_a}
json        nat_trans_to_json(FinCategory const& C, FinCategory const& D,
                              FinNatTrans const& alpha);
FinNatTrans nat_trans_from_json(json const& j, FinCategory const& C,
                                FinCategory const& D, std::string const& at);

// {"vertices": [...], "edges": [{"id","src","tgt"}], "relations":
// [[path, path]]}; a path is {"src": vertex, "edges": [...]}.
json              presented_to_json(PresentedCategory const& P);
PresentedCategory presented_from_json(json const& j, std::string const& at = "");

json           double_to_json(DoubleCategory const& X);
DoubleCategory double_from_json(json const& j, std::string const& at = "");

// The double schema plus "gamma": [[g1, g2, u]] and "iota": {a: u}, and the
// derived "iota_hat": {g: square}, "gamma_hat": [[g1, g2, g3, square]]. When
// the derived tables are absent they are computed as unique lifts.
json                  codcolax_to_json(CodomainColaxCategory const& X);
CodomainColaxCategory codcolax_from_json(json const& j,
                                         std::string const& at = "");

// {"base": category, "E": [ids], "M": [ids]}
json              classes_to_json(MorphismClassPair const& P);
MorphismClassPair classes_from_json(json const& j, std::string const& at = "");
// A class by name (all, identities, isos, surj, inj, bij, monotone) or a
// comma separated list of morphism ids.
std::vector<char> class_from_spec(FinCategory const& C, std::string const& spec);

// {"fixture": name, "arity_bound": n} for the named builders, otherwise
// {"objects", "arity_bound", "morphisms": [{"id","src":[...],"tgt"}],
// "identities": {a: id}, "composition": [[g, [f1..fn], c]]}.
json          multicat_to_json(Multicategory const& M);
Multicategory multicat_from_json(json const& j, std::string const& at = "");

// {"base", "tensor", "gamma", "iota"} for a colax rule, or {"tensor":
// "free-on-multicat", "multicategory", "gamma", "iota"}.
struct MoncatFile {
  std::string                          tensor;
  std::optional<ColaxMonoidalCategory> colax;
  std::optional<Multicategory>         multicategory;
};
json       moncat_to_json(ColaxMonoidalCategory const& A);
json       free_moncat_to_json(Multicategory const& M);
MoncatFile moncat_from_json(json const& j);

// One of category, presented, double, codcolax, classes, multicat, moncat,
// guessed from the top-level keys.
std::string document_kind(json const& j);

// Reads and parses a file; InputError when it is missing or not JSON.
json read_json_file(std::string const& path);
// Two-space indented; scalar arrays and small scalar records stay on one
// line. Ends with a newline.
std::string dump_json(json const& j);

}  // namespace cornerkit
