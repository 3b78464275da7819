#pragma once

// Independent test oracles.  These deliberately avoid the library's linear
// algebra and combinatorics paths: plain dense elimination over a small
// prime, brute-force subword search, and direct subset counting.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

// rank of a dense matrix over F_p by textbook Gaussian elimination
inline int dense_rank_mod_p(std::vector<std::vector<int>> m, int p) {
  if (m.empty()) return 0;
  auto norm = [p](long long x) {
    long long r = x % p;
    return static_cast<int>(r < 0 ? r + p : r);
  };
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (norm(m[r][c]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    // scale pivot row to 1
    int inv = 1;
    for (int x = 1; x < p; ++x)
      if (norm(m[rank][c]) * x % p == 1) inv = x;
    for (int cc = 0; cc < cols; ++cc) m[rank][cc] = norm(static_cast<long long>(m[rank][cc]) * inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      int f = norm(m[r][c]);
      if (!f) continue;
      for (int cc = 0; cc < cols; ++cc)
        m[r][cc] = norm(m[r][cc] - static_cast<long long>(f) * m[rank][cc]);
    }
    ++rank;
  }
  return rank;
}

// number of m-subsets of {1..n} satisfying pred
inline long long count_subsets(int n, int m, const std::function<bool(const std::vector<int>&)>& pred) {
  std::vector<int> cur;
  long long count = 0;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == m) {
      if (pred(cur)) ++count;
      return;
    }
    if (next > n) return;
    for (int x = next; x <= n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return count;
}

// does any subword of w multiply out to the permutation perm (1-based
// one-line), using exactly len(perm-inversions) letters?
inline bool exhaustive_subword_reduced(const std::vector<int>& w, const std::vector<int>& target) {
  const int k = static_cast<int>(w.size());
  const int n = static_cast<int>(target.size());
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (target[i] > target[j]) ++inv;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) != inv) continue;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    for (int i = k - 1; i >= 0; --i) {
      if (!(mask & (1u << i))) continue;
      int r = w[i];
      for (auto& v : perm) {
        if (v == r)
          v = r + 1;
        else if (v == r + 1)
          v = r;
      }
    }
    if (perm == target) return true;
  }
  return false;
}

}  // namespace oracle
