#include <algorithm>
#include <numeric>
#include <set>

#include "cornerkit/codescent.hpp"

namespace cornerkit {

namespace {
  // A candidate category: objects 0..n-1 with identities 0..n-1, then k
  // further morphisms with the given endpoints. comp[f][g] is g∘f over all
  // n + k morphisms, -1 when not composable.
  struct Shape {
    int                           n = 0, k = 0;
    std::vector<int>              src, tgt;
    std::vector<std::vector<int>> comp;
  };

  bool associative(Shape const& s) {
    int m = s.n + s.k;
    for (int f = 0; f < m; ++f) {
      for (int g = 0; g < m; ++g) {
        if (s.comp[f][g] < 0) {
          continue;
        }
        for (int h = 0; h < m; ++h) {
          if (s.comp[g][h] < 0) {
            continue;
          }
          if (s.comp[s.comp[f][g]][h] != s.comp[f][s.comp[g][h]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Encoding under a relabelling of objects and non-identity morphisms;
  // the least encoding over all relabellings names the iso class.
  std::vector<int> encode(Shape const& s, std::vector<int> const& op,
                          std::vector<int> const& mp) {
    int              m = s.n + s.k;
    std::vector<int> rel(m);
    for (int x = 0; x < s.n; ++x) {
      rel[x] = op[x];
    }
    for (int i = 0; i < s.k; ++i) {
      rel[s.n + i] = s.n + mp[i];
    }
    std::vector<int> inv(m);
    for (int f = 0; f < m; ++f) {
      inv[rel[f]] = f;
    }
    std::vector<int> code;
    for (int F = 0; F < m; ++F) {
      int f = inv[F];
      code.push_back(op[s.src[f]]);
      code.push_back(op[s.tgt[f]]);
    }
    for (int F = 0; F < m; ++F) {
      for (int G = 0; G < m; ++G) {
        int c = s.comp[inv[F]][inv[G]];
        code.push_back(c < 0 ? -1 : rel[c]);
      }
    }
    return code;
  }

  std::vector<int> canonical(Shape const& s) {
    std::vector<int> op(s.n), mp(s.k), best;
    std::iota(op.begin(), op.end(), 0);
    do {
      std::iota(mp.begin(), mp.end(), 0);
      do {
        auto c = encode(s, op, mp);
        if (best.empty() || c < best) {
          best = std::move(c);
        }
      } while (std::next_permutation(mp.begin(), mp.end()));
    } while (std::next_permutation(op.begin(), op.end()));
    return best;
  }

  FinCategory realize(Shape const& s) {
    FinCategory C;
    for (int x = 0; x < s.n; ++x) {
      C.add_object("o" + std::to_string(x));
    }
    for (int x = 0; x < s.n; ++x) {
      C.add_morphism("1_o" + std::to_string(x), x, x);
    }
    for (int i = 0; i < s.k; ++i) {
      C.add_morphism("m" + std::to_string(i), s.src[s.n + i], s.tgt[s.n + i]);
    }
    for (int x = 0; x < s.n; ++x) {
      C.set_identity(x, x);
    }
    int m = s.n + s.k;
    for (int f = 0; f < m; ++f) {
      for (int g = 0; g < m; ++g) {
        if (s.comp[f][g] >= 0) {
          C.set_composite(f, g, s.comp[f][g]);
        }
      }
    }
    return C;
  }

  void fill_tables(Shape& s, std::vector<std::pair<int, int>> const& free,
                   std::size_t i, std::set<std::vector<int>>& seen,
                   std::vector<FinCategory>& out) {
    if (i == free.size()) {
      if (!associative(s)) {
        return;
      }
      auto code = canonical(s);
      if (seen.insert(code).second) {
        out.push_back(realize(s));
      }
      return;
    }
    auto [f, g] = free[i];
    int m = s.n + s.k;
    for (int c = 0; c < m; ++c) {
      if (s.src[c] == s.src[f] && s.tgt[c] == s.tgt[g]) {
        s.comp[f][g] = c;
        fill_tables(s, free, i + 1, seen, out);
      }
    }
    s.comp[f][g] = -1;
  }

  void endpoints(Shape& s, int i, std::set<std::vector<int>>& seen,
                 std::vector<FinCategory>& out) {
    int m = s.n + s.k;
    if (i == m) {
      std::vector<std::pair<int, int>> free;
      s.comp.assign(m, std::vector<int>(m, -1));
      for (int f = 0; f < m; ++f) {
        for (int g = 0; g < m; ++g) {
          if (s.tgt[f] != s.src[g]) {
            continue;
          }
          if (f < s.n) {
            s.comp[f][g] = g;
          } else if (g < s.n) {
            s.comp[f][g] = f;
          } else {
            free.emplace_back(f, g);
          }
        }
      }
      fill_tables(s, free, 0, seen, out);
      return;
    }
    // endpoints of the extra morphisms in non-decreasing order
    int prev = i > s.n ? s.src[i - 1] * s.n + s.tgt[i - 1] : 0;
    for (int e = prev; e < s.n * s.n; ++e) {
      s.src[i] = e / s.n;
      s.tgt[i] = e % s.n;
      endpoints(s, i + 1, seen, out);
    }
  }
}  // namespace

std::vector<FinCategory> small_categories(int n) {
  if (n < 0) {
    throw InputError("probe bound must be non-negative", "/probe");
  }
  if (n > 4) {
    throw GuardError("probe bound " + std::to_string(n)
                     + " exceeds the supported maximum of 4");
  }
  std::vector<FinCategory> out;
  for (int m = 1; m <= n; ++m) {
    for (int objects = 1; objects <= m; ++objects) {
      Shape s;
      s.n = objects;
      s.k = m - objects;
      s.src.assign(m, 0);
      s.tgt.assign(m, 0);
      for (int x = 0; x < objects; ++x) {
        s.src[x] = s.tgt[x] = x;
      }
      std::set<std::vector<int>> seen;
      endpoints(s, objects, seen, out);
    }
  }
  return out;
}

}  // namespace cornerkit
