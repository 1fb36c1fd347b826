#include "gdmcf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gdmcf/threads.hpp"

namespace gdmcf {

InteractionMatrix InteractionMatrix::from_rows(int num_users, int num_items,
                                               const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != num_users)
    throw std::invalid_argument("from_rows: row count mismatch");
  InteractionMatrix r(num_users, num_items);
  for (int u = 0; u < num_users; ++u) {
    r.indices.insert(r.indices.end(), rows[u].begin(), rows[u].end());
    r.indptr[u + 1] = static_cast<int>(r.indices.size());
  }
  r.validate();
  return r;
}

bool InteractionMatrix::has(int u, int i) const {
  return std::binary_search(row_begin(u), row_end(u), i);
}

void InteractionMatrix::validate() const {
  if (num_users < 0 || num_items < 0) throw std::invalid_argument("negative dimensions");
  if (static_cast<int>(indptr.size()) != num_users + 1)
    throw std::invalid_argument("indptr size mismatch");
  if (indptr.front() != 0 || indptr.back() != nnz())
    throw std::invalid_argument("indptr endpoints inconsistent");
  for (int u = 0; u < num_users; ++u) {
    if (indptr[u] > indptr[u + 1]) throw std::invalid_argument("indptr not monotone");
    for (int k = indptr[u]; k < indptr[u + 1]; ++k) {
      int i = indices[k];
      if (i < 0 || i >= num_items)
        throw std::invalid_argument("item index out of range in row " + std::to_string(u));
      if (k > indptr[u] && indices[k - 1] >= i)
        throw std::invalid_argument("row " + std::to_string(u) + " not sorted strictly ascending");
    }
  }
}

BipartiteAdjacency build_adjacency(const InteractionMatrix& r) {
  BipartiteAdjacency a;
  a.r = r;
  a.col_ptr.assign(static_cast<size_t>(r.num_items) + 1, 0);
  for (int i : r.indices) a.col_ptr[i + 1]++;
  for (int i = 0; i < r.num_items; ++i) a.col_ptr[i + 1] += a.col_ptr[i];
  a.col_idx.resize(r.indices.size());
  std::vector<int> fill(a.col_ptr.begin(), a.col_ptr.end() - 1);
  for (int u = 0; u < r.num_users; ++u) {
    for (int k = r.indptr[u]; k < r.indptr[u + 1]; ++k) {
      a.col_idx[fill[r.indices[k]]++] = u;  // users visited in order, rows stay sorted
    }
  }
  return a;
}

DegreeStats degree_stats(const BipartiteAdjacency& a) {
  DegreeStats d;
  int m = a.r.num_users, n = a.r.num_items;
  d.degrees.resize(static_cast<size_t>(m) + n);
  for (int u = 0; u < m; ++u) {
    d.degrees[u] = a.r.row_nnz(u);
    d.max_user_degree = std::max(d.max_user_degree, d.degrees[u]);
  }
  for (int i = 0; i < n; ++i) d.degrees[m + i] = a.col_ptr[i + 1] - a.col_ptr[i];
  d.inv_sqrt.resize(d.degrees.size());
  for (size_t v = 0; v < d.degrees.size(); ++v)
    d.inv_sqrt[v] = d.degrees[v] > 0 ? 1.0 / std::sqrt(static_cast<double>(d.degrees[v])) : 0.0;
  return d;
}

Matrix propagate(const Matrix& z, const BipartiteAdjacency& a, const DegreeStats& deg) {
  int m = a.r.num_users, n = a.r.num_items;
  if (z.rows != m + n) throw std::invalid_argument("propagate: z must have M+N rows");
  Matrix out(z.rows, z.cols);
  parallel_rows(m + n, [&](int r0, int r1) {
    for (int v = r0; v < r1; ++v) {
      double* ov = out.row(v);
      double wv = deg.inv_sqrt[v];
      if (wv == 0.0) continue;
      if (v < m) {
        for (int k = a.r.indptr[v]; k < a.r.indptr[v + 1]; ++k) {
          int i = a.r.indices[k];
          double w = wv * deg.inv_sqrt[m + i];
          const double* zi = z.row(m + i);
          for (int c = 0; c < z.cols; ++c) ov[c] += w * zi[c];
        }
      } else {
        int i = v - m;
        for (int k = a.col_ptr[i]; k < a.col_ptr[i + 1]; ++k) {
          int u = a.col_idx[k];
          double w = wv * deg.inv_sqrt[u];
          const double* zu = z.row(u);
          for (int c = 0; c < z.cols; ++c) ov[c] += w * zu[c];
        }
      }
    }
  });
  return out;
}

}  // namespace gdmcf
