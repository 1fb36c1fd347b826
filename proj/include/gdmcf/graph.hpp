#pragma once

#include <vector>

#include "gdmcf/matrix.hpp"

namespace gdmcf {

// Sparse binary user-item interaction structure in row-compressed form.
// Values are implicitly 1. Immutable after construction.
struct InteractionMatrix {
  int num_users = 0;
  int num_items = 0;
  std::vector<int> indptr;   // size num_users + 1
  std::vector<int> indices;  // per-row sorted ascending, no duplicates

  InteractionMatrix() { indptr.push_back(0); }
  InteractionMatrix(int users, int items)
      : num_users(users), num_items(items), indptr(static_cast<size_t>(users) + 1, 0) {}

  static InteractionMatrix from_rows(int num_users, int num_items,
                                     const std::vector<std::vector<int>>& rows);

  int nnz() const { return static_cast<int>(indices.size()); }
  int row_nnz(int u) const { return indptr[u + 1] - indptr[u]; }
  const int* row_begin(int u) const { return indices.data() + indptr[u]; }
  const int* row_end(int u) const { return indices.data() + indptr[u + 1]; }
  bool has(int u, int i) const;

  // throws std::invalid_argument when the row/column invariants are violated
  void validate() const;
};

// Logical (M+N)x(M+N) symmetric block adjacency [[0, R], [R^T, 0]], stored as
// the two sparse blocks. The transpose is built once per structure change.
struct BipartiteAdjacency {
  InteractionMatrix r;
  std::vector<int> col_ptr;  // size num_items + 1
  std::vector<int> col_idx;  // user ids per item, ascending

  int num_nodes() const { return r.num_users + r.num_items; }
};

struct DegreeStats {
  std::vector<int> degrees;          // length M+N, user nodes first
  int max_user_degree = 0;           // over user nodes only
  std::vector<double> inv_sqrt;      // 1/sqrt(degree), 0 where degree is 0
};

// user feature matrix, one row per user (stored user-major)
using FeatureMatrix = Matrix;

BipartiteAdjacency build_adjacency(const InteractionMatrix& r);

DegreeStats degree_stats(const BipartiteAdjacency& a);

// out = D^{-1/2} A D^{-1/2} z. Rows of zero-degree nodes map to zero.
// z must have M+N rows (users first). Parallel over output rows; the
// per-row accumulation order is ascending neighbor id, so the result is
// bitwise deterministic for any worker count.
Matrix propagate(const Matrix& z, const BipartiteAdjacency& a, const DegreeStats& deg);

}  // namespace gdmcf
