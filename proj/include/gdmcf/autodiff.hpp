#pragma once

#include <functional>
#include <vector>

#include "gdmcf/graph.hpp"
#include "gdmcf/matrix.hpp"

namespace gdmcf::ad {

// Minimal reverse-mode engine over dense matrices. Each op records a
// backward closure on the tape; backward() replays them in reverse and
// accumulates into per-node gradient buffers. The op set is exactly what
// the denoiser forward pass needs, each with a hand-written VJP.

struct Var {
  int i = -1;
  bool valid() const { return i >= 0; }
};

struct Scalar {
  int i = -1;
};

class Tape {
 public:
  Var input(Matrix value, bool needs_grad);

  Var matmul(Var a, Var b);
  // rows of r (binary, implicit 1s) times w: out = R * w
  Var sparse_matmul(const InteractionMatrix& r, Var w);
  Var concat_cols(const std::vector<Var>& parts);
  // out has `copies` rows, each equal to row `row` of table
  Var broadcast_row(Var table, int row, int copies);
  Var vstack(Var top, Var bottom);
  Var slice_rows(Var a, int begin, int end);
  Var gather_rows(Var a, std::vector<int> rows);
  Var propagate(Var z, const BipartiteAdjacency& adj, const DegreeStats& deg);
  Var scale(Var a, double alpha);
  Var add(Var a, Var b);

  // cosine similarity of every user row against every item row; zero-norm
  // rows score 0 with zero gradient
  Var cosine_scores(Var users, Var items);

  // mean over all entries of (pred - target)^2, the target being the binary
  // rows target_rows of r
  Scalar mse_binary(Var pred, const InteractionMatrix& r, const std::vector<int>& target_rows);
  Scalar mse_dense(Var pred, Matrix target);

  // InfoNCE over row pairs of (a, b) with cosine similarity and temperature
  // tau; positives are equal row indices, negatives the remaining rows of b.
  Scalar infonce(Var a, Var b, double tau);

  Scalar weighted_sum(const std::vector<std::pair<double, Scalar>>& terms);

  void backward(Scalar loss);

  const Matrix& value(Var v) const { return nodes_[v.i].value; }
  const Matrix& grad(Var v) const { return nodes_[v.i].grad; }
  double value(Scalar s) const { return scalars_[s.i].value; }

 private:
  struct Node {
    Matrix value;
    Matrix grad;  // allocated lazily
    bool needs_grad = false;
  };
  struct ScalarNode {
    double value = 0.0;
    double grad = 0.0;
  };

  Matrix& grad_buf(Var v);
  Var fresh(Matrix value, bool needs_grad);

  std::vector<Node> nodes_;
  std::vector<ScalarNode> scalars_;
  std::vector<std::function<void()>> ops_;
};

}  // namespace gdmcf::ad
