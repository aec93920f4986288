#include "cornerkit/goldens.hpp"

#include <map>

#include "cornerkit/fixtures.hpp"
#include "cornerkit/json_io.hpp"

namespace cornerkit {

namespace {

  using Builder = std::function<json(std::vector<int> const&)>;

  std::map<std::string, std::pair<int, Builder>> const& builders() {
    static std::map<std::string, std::pair<int, Builder>> const table = {
        {"walking_arrow", {0, [](auto const&) { return category_to_json(walking_arrow()); }}},
        {"triangle", {0, [](auto const&) { return category_to_json(triangle()); }}},
        {"cyclic_group", {1, [](auto const& p) { return category_to_json(cyclic_group(p[0])); }}},
        {"finset_leq", {1, [](auto const& p) { return category_to_json(finset_leq(p[0])); }}},
        {"sq_walking_arrow", {0, [](auto const&) { return double_to_json(sq_of(walking_arrow())); }}},
        {"sq_triangle", {0, [](auto const&) { return double_to_json(sq_of(triangle())); }}},
        {"x_prod_cyclic_walking_arrow",
         {1, [](auto const& p) {
            return double_to_json(x_prod(cyclic_group(p[0]), walking_arrow()));
          }}},
        {"perm_ord", {1, [](auto const& p) { return double_to_json(perm_ord(p[0])); }}},
        {"surj_inj",
         {1, [](auto const& p) {
            auto C = finset_leq(p[0]);
            return double_to_json(commutative_squares(C, surjections(C), injections(C)));
          }}},
        {"discrete_pq", {0, [](auto const&) { return double_to_json(discrete_double({"p", "q"})); }}},
        {"span_bounded",
         {2, [](auto const& p) { return double_to_json(span_bounded(p[0], p[1]).X); }}},
        {"comonad_const0",
         {0, [](auto const&) { return codcolax_to_json(comonad_codcolax(const0_comonad())); }}},
        {"comonad_identity_walking_arrow",
         {0, [](auto const&) {
            return codcolax_to_json(comonad_codcolax(identity_comonad(walking_arrow())));
          }}},
        {"min_poset", {0, [](auto const&) { return moncat_to_json(min_poset()); }}},
        {"cyclic_monoid",
         {1, [](auto const& p) { return moncat_to_json(commutative_monoid(cyclic_group(p[0]))); }}},
        {"multicat_terminal",
         {1, [](auto const& p) { return multicat_to_json(terminal_multicategory(p[0])); }}},
        {"multicat_endo2",
         {1, [](auto const& p) { return multicat_to_json(endo2_multicategory(p[0])); }}},
        {"free_terminal",
         {1, [](auto const& p) { return free_moncat_to_json(terminal_multicategory(p[0])); }}},
    };
    return table;
  }

  Golden golden(std::string name, std::vector<int> params, std::string file) {
    Golden g{name, params, std::move(file), {}};
    g.build = [name, params] { return emit_fixture(name, params); };
    return g;
  }

}  // namespace

std::vector<Golden> const& golden_fixtures() {
  static std::vector<Golden> const list = {
      golden("walking_arrow", {}, "walking_arrow.json"),
      golden("triangle", {}, "triangle.json"),
      golden("cyclic_group", {2}, "cyclic2.json"),
      golden("finset_leq", {2}, "finset_leq2.json"),
      golden("sq_walking_arrow", {}, "sq_walking_arrow.json"),
      golden("sq_triangle", {}, "sq_triangle.json"),
      golden("x_prod_cyclic_walking_arrow", {2}, "x_prod_z2_walking_arrow.json"),
      golden("perm_ord", {2}, "perm_ord2.json"),
      golden("perm_ord", {3}, "perm_ord3.json"),
      golden("surj_inj", {2}, "surj_inj2.json"),
      golden("discrete_pq", {}, "discrete_pq.json"),
      golden("span_bounded", {2, 2}, "span_2_2.json"),
      golden("comonad_const0", {}, "comonad_const0.json"),
      golden("comonad_identity_walking_arrow", {}, "comonad_identity_walking_arrow.json"),
      golden("min_poset", {}, "min_poset.json"),
      golden("cyclic_monoid", {2}, "cyclic_monoid2.json"),
      golden("multicat_terminal", {3}, "multicat_terminal3.json"),
      golden("multicat_endo2", {3}, "multicat_endo2_3.json"),
      golden("free_terminal", {3}, "free_terminal3.json"),
  };
  return list;
}

std::vector<std::pair<std::string, int>> fixture_names() {
  std::vector<std::pair<std::string, int>> out;
  for (auto const& [name, entry] : builders()) {
    out.emplace_back(name, entry.first);
  }
  return out;
}

json emit_fixture(std::string const& name, std::vector<int> const& params) {
  auto it = builders().find(name);
  if (it == builders().end()) {
    throw InputError("unknown fixture '" + name + "'");
  }
  if (static_cast<int>(params.size()) != it->second.first) {
    throw InputError("fixture '" + name + "' takes "
                     + std::to_string(it->second.first) + " parameter(s)");
  }
  return it->second.second(params);
}

}  // namespace cornerkit
