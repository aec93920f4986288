#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// shares code with the library beyond the FinCategory container.

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cornerkit/dblcat.hpp"
#include "cornerkit/fincat.hpp"

namespace oracle {

  using cornerkit::FinCategory;
  using cornerkit::FinFunctor;
  using cornerkit::Path;
  using cornerkit::PresentedCategory;

  // All maps {0..dom-1} -> {0..cod-1} as image lists, lexicographic order.
  inline std::vector<std::vector<int>> all_functions(int dom, int cod) {
    std::vector<std::vector<int>> out;
    if (dom > 0 && cod == 0) {
      return out;
    }
    std::vector<int> f(dom, 0);
    while (true) {
      out.push_back(f);
      int i = dom - 1;
      while (i >= 0 && f[i] == cod - 1) {
        f[i--] = 0;
      }
      if (i < 0) {
        break;
      }
      ++f[i];
    }
    return out;
  }

  inline bool is_category(FinCategory const& C) {
    int const n = static_cast<int>(C.morphism_count());
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        bool composable = C.tgt(f) == C.src(g);
        int  gf         = C.compose(f, g);
        if (composable != (gf >= 0)) {
          return false;
        }
        if (gf >= 0 && (C.src(gf) != C.src(f) || C.tgt(gf) != C.tgt(g))) {
          return false;
        }
      }
    }
    for (int a = 0; a < static_cast<int>(C.object_count()); ++a) {
      int i = C.identity(a);
      for (int f = 0; f < n; ++f) {
        if (C.src(f) == a && C.compose(i, f) != f) {
          return false;
        }
        if (C.tgt(f) == a && C.compose(f, i) != f) {
          return false;
        }
      }
    }
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
          int gf = C.compose(f, g), hg = C.compose(g, h);
          if (gf >= 0 && hg >= 0 && C.compose(gf, h) != C.compose(f, hg)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Categories with at most max_mor morphisms. Non-identity endpoints are
  // listed in sorted order, which removes most relabelings but not all.
  inline std::vector<FinCategory> small_categories(int max_mor) {
    std::vector<FinCategory> out;
    for (int k = 0; k <= max_mor; ++k) {
      for (int extra = 0; k + extra <= max_mor; ++extra) {
        if (k == 0 && extra > 0) {
          continue;
        }
        auto ends = all_functions(2 * extra, std::max(k, 1));
        for (auto const& e : ends) {
          bool sorted = true;
          for (int i = 1; i < extra; ++i) {
            if (std::make_pair(e[2 * i - 2], e[2 * i - 1])
                > std::make_pair(e[2 * i], e[2 * i + 1])) {
              sorted = false;
            }
          }
          if (!sorted) {
            continue;
          }
          FinCategory base;
          for (int a = 0; a < k; ++a) {
            base.add_object("o" + std::to_string(a));
          }
          for (int a = 0; a < k; ++a) {
            base.set_identity(a, base.add_morphism("1_" + std::to_string(a), a, a));
          }
          for (int i = 0; i < extra; ++i) {
            base.add_morphism("m" + std::to_string(i), e[2 * i], e[2 * i + 1]);
          }
          base.fill_unit_composites();
          // free choices: composites of non-identity composable pairs
          std::vector<std::pair<int, int>> pairs;
          for (int f = k; f < k + extra; ++f) {
            for (int g = k; g < k + extra; ++g) {
              if (base.tgt(f) == base.src(g)) {
                pairs.emplace_back(f, g);
              }
            }
          }
          std::vector<int> choice(pairs.size(), 0);
          std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == pairs.size()) {
              FinCategory C = base;
              for (std::size_t j = 0; j < pairs.size(); ++j) {
                C.set_composite(pairs[j].first, pairs[j].second, choice[j]);
              }
              if (is_category(C)) {
                out.push_back(C);
              }
              return;
            }
            auto const& h = base.hom(base.src(pairs[i].first),
                                     base.tgt(pairs[i].second));
            for (int x : h) {
              choice[i] = x;
              rec(i + 1);
            }
          };
          rec(0);
        }
      }
    }
    return out;
  }

  inline std::vector<FinFunctor> all_functors(FinCategory const& C,
                                              FinCategory const& D) {
    std::vector<FinFunctor> out;
    int const no = static_cast<int>(C.object_count());
    for (auto const& om : all_functions(no, static_cast<int>(D.object_count()))) {
      std::vector<std::vector<int>> choices;
      for (int f = 0; f < static_cast<int>(C.morphism_count()); ++f) {
        choices.push_back(D.hom(om[C.src(f)], om[C.tgt(f)]));
      }
      std::vector<int> mm(C.morphism_count(), -1);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == mm.size()) {
          for (int a = 0; a < no; ++a) {
            if (mm[C.identity(a)] != D.identity(om[a])) {
              return;
            }
          }
          for (auto const& [f, g, gf] : C.composition_entries()) {
            if (D.compose(mm[f], mm[g]) != mm[gf]) {
              return;
            }
          }
          out.push_back({om, mm});
          return;
        }
        for (int x : choices[i]) {
          mm[i] = x;
          rec(i + 1);
        }
      };
      rec(0);
    }
    return out;
  }

  struct PathClosure {
    std::vector<Path>                paths;
    std::vector<int>                 parent;
    std::vector<std::pair<int, int>> pairs_checked;

    int find(int x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    }
    bool same(int a, int b) { return find(a) == find(b); }
  };

  // Equivalence closure of {x p y ~ x q y} over all paths of length <= L.
  inline PathClosure path_congruence(PresentedCategory const& P, int L) {
    PathClosure R;
    std::map<std::pair<int, std::vector<int>>, int> index;
    std::vector<Path> frontier;
    for (int v = 0; v < static_cast<int>(P.vertices.size()); ++v) {
      frontier.push_back({v, {}});
    }
    for (int len = 0; len <= L; ++len) {
      std::vector<Path> next;
      for (auto const& p : frontier) {
        index[{p.src, p.edges}] = static_cast<int>(R.paths.size());
        R.paths.push_back(p);
        if (len == L) {
          continue;
        }
        int t = P.path_target(p);
        for (int e = 0; e < static_cast<int>(P.edges.size()); ++e) {
          if (P.edges[e].src == t) {
            Path q = p;
            q.edges.push_back(e);
            next.push_back(q);
          }
        }
      }
      frontier = std::move(next);
    }
    R.parent.resize(R.paths.size());
    std::iota(R.parent.begin(), R.parent.end(), 0);
    for (auto const& x : R.paths) {
      for (auto const& [p, q] : P.relations) {
        if (P.path_target(x) != p.src) {
          continue;
        }
        for (auto const& y : R.paths) {
          if (y.src != P.path_target(p)) {
            continue;
          }
          std::vector<int> a = x.edges, b = x.edges;
          a.insert(a.end(), p.edges.begin(), p.edges.end());
          b.insert(b.end(), q.edges.begin(), q.edges.end());
          a.insert(a.end(), y.edges.begin(), y.edges.end());
          b.insert(b.end(), y.edges.begin(), y.edges.end());
          auto ia = index.find({x.src, a});
          auto ib = index.find({x.src, b});
          if (ia != index.end() && ib != index.end()) {
            R.parent[R.find(ia->second)] = R.find(ib->second);
          }
        }
      }
    }
    for (int i = 0; i < static_cast<int>(R.paths.size()); ++i) {
      for (int j = i + 1; j < static_cast<int>(R.paths.size()); ++j) {
        if (R.paths[i].src == R.paths[j].src
            && P.path_target(R.paths[i]) == P.path_target(R.paths[j])) {
          R.pairs_checked.emplace_back(i, j);
        }
      }
    }
    return R;
  }

  using cornerkit::DoubleCategory;

  // Literal reading of the opcartesian definition: scans every square and
  // every vertical, no lookup tables.
  inline bool opcartesian(DoubleCategory const& X, int k) {
    int const ns = static_cast<int>(X.square_count());
    int const nv = static_cast<int>(X.vertical_count());
    for (int alpha = 0; alpha < ns; ++alpha) {
      if (X.top(alpha) != X.top(k)) {
        continue;
      }
      for (int v = 0; v < nv; ++v) {
        if (X.vertical.compose(X.right(k), v) != X.right(alpha)) {
          continue;
        }
        int count = 0;
        for (int beta = 0; beta < ns; ++beta) {
          if (X.top(beta) == X.bottom(k) && X.right(beta) == v
              && X.squares.compose(k, beta) == alpha) {
            ++count;
          }
        }
        if (count != 1) {
          return false;
        }
      }
    }
    return true;
  }

  // Squares with the given boundary, by scanning.
  inline int count_boundary(DoubleCategory const& X, int g, int u, int v,
                            int h) {
    int n = 0;
    for (int a = 0; a < static_cast<int>(X.square_count()); ++a) {
      n += X.top(a) == g && X.left(a) == u && X.right(a) == v
           && X.bottom(a) == h;
    }
    return n;
  }

}  // namespace oracle
