#include "skewbrace/ybe.hpp"

namespace skewbrace {

SetSolution make_solution(int n, std::vector<std::vector<Element>> first,
                          std::vector<std::vector<Element>> second) {
  if (n < 1) throw Error(errc::malformed_table, "empty solution");
  for (const auto* t : {&first, &second}) {
    if (static_cast<int>(t->size()) != n)
      throw Error(errc::malformed_table, "solution table is not n x n");
    for (const auto& row : *t) {
      if (static_cast<int>(row.size()) != n)
        throw Error(errc::malformed_table, "solution table is not n x n");
      for (Element e : row)
        if (e < 0 || e >= n)
          throw Error(errc::malformed_table, "solution entry out of range");
    }
  }
  std::vector<bool> hit(n * n, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int img = first[x][y] * n + second[x][y];
      if (hit[img])
        throw Error(errc::malformed_table,
                    "the pair map is not a bijection of X x X");
      hit[img] = true;
    }
  return SetSolution{n, std::move(first), std::move(second)};
}

bool braid_check(const SetSolution& r) {
  const auto& f = r.first;
  const auto& s = r.second;
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      for (int z = 0; z < r.n; ++z) {
        // (r x id)(id x r)(r x id)
        int a1 = f[x][y], b1 = s[x][y];
        int b2 = f[b1][z], c2 = s[b1][z];
        int a3 = f[a1][b2], b3 = s[a1][b2];
        // (id x r)(r x id)(id x r)
        int p1 = f[y][z], q1 = s[y][z];
        int o2 = f[x][p1], p2 = s[x][p1];
        int p3 = f[p2][q1], q3 = s[p2][q1];
        if (a3 != o2 || b3 != p3 || c2 != q3) return false;
      }
  return true;
}

bool nondegeneracy_check(const SetSolution& r) {
  for (int x = 0; x < r.n; ++x) {
    std::vector<bool> hit(r.n, false);
    for (int y = 0; y < r.n; ++y) {
      Element v = r.first[x][y];
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  for (int y = 0; y < r.n; ++y) {
    std::vector<bool> hit(r.n, false);
    for (int x = 0; x < r.n; ++x) {
      Element v = r.second[x][y];
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

SetSolution solution_from_brace(const Digroup& d) {
  if (!is_skew_brace(d))
    throw Error(errc::not_a_brace, "solution requested for a non-brace");
  const int n = d.order();
  std::vector<std::vector<Element>> f(n, std::vector<Element>(n));
  std::vector<std::vector<Element>> s(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element u = lambda_apply(d, x, y);
      f[x][y] = u;
      s[x][y] = d.circ.mul(d.circ.mul(d.circ.inv[u], x), y);
    }
  return make_solution(n, std::move(f), std::move(s));
}

SetSolution flip_solution(int n) {
  std::vector<std::vector<Element>> f(n, std::vector<Element>(n));
  std::vector<std::vector<Element>> s(n, std::vector<Element>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      f[x][y] = y;
      s[x][y] = x;
    }
  return make_solution(n, std::move(f), std::move(s));
}

SetSolution identity_solution(int n) {
  std::vector<std::vector<Element>> f(n, std::vector<Element>(n));
  std::vector<std::vector<Element>> s(n, std::vector<Element>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      f[x][y] = x;
      s[x][y] = y;
    }
  return make_solution(n, std::move(f), std::move(s));
}

}  // namespace skewbrace
