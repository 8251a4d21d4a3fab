#pragma once

#include <string>
#include <utility>
#include <vector>

#include "advnmt/ops.hpp"

namespace advnmt {

template <typename S>
using NamedParamsT = std::vector<std::pair<std::string, TensorT<S>>>;
using NamedParams = NamedParamsT<float>;

// Glorot-uniform init for a weight matrix.
template <typename S>
TensorT<S> glorot(int rows, int cols, Rng& rng) {
  const double r = std::sqrt(6.0 / (rows + cols));
  TensorT<S> t({rows, cols}, S(0), true);
  for (auto& x : t.data()) x = static_cast<S>(rng.uniform(-r, r));
  return t;
}

template <typename S>
TensorT<S> zeros_param(int n) {
  return TensorT<S>({n}, S(0), true);
}

// Gated recurrent unit cell:
//   z = sigmoid(x Wz + h Uz + bz)
//   r = sigmoid(x Wr + h Ur + br)
//   n = tanh(x Wn + (r*h) Un + bn)
//   h' = (1-z)*h + z*n
template <typename S>
struct GruCellT {
  int in = 0, hidden = 0;
  TensorT<S> wz, uz, bz, wr, ur, br, wn, un, bn;

  void init(int in_dim, int hidden_dim, Rng& rng) {
    in = in_dim;
    hidden = hidden_dim;
    wz = glorot<S>(in, hidden, rng);
    uz = glorot<S>(hidden, hidden, rng);
    bz = zeros_param<S>(hidden);
    wr = glorot<S>(in, hidden, rng);
    ur = glorot<S>(hidden, hidden, rng);
    br = zeros_param<S>(hidden);
    wn = glorot<S>(in, hidden, rng);
    un = glorot<S>(hidden, hidden, rng);
    bn = zeros_param<S>(hidden);
  }

  TensorT<S> step(const TensorT<S>& x, const TensorT<S>& h) const {
    auto z = sigmoid(add(add(matmul(x, wz), matmul(h, uz)), bz));
    auto r = sigmoid(add(add(matmul(x, wr), matmul(h, ur)), br));
    auto n = tanh(add(add(matmul(x, wn), matmul(mul(r, h), un)), bn));
    return add(mul(affine(z, S(-1), S(1)), h), mul(z, n));
  }

  void collect(const std::string& prefix, NamedParamsT<S>& out) {
    out.emplace_back(prefix + ".wz", wz);
    out.emplace_back(prefix + ".uz", uz);
    out.emplace_back(prefix + ".bz", bz);
    out.emplace_back(prefix + ".wr", wr);
    out.emplace_back(prefix + ".ur", ur);
    out.emplace_back(prefix + ".br", br);
    out.emplace_back(prefix + ".wn", wn);
    out.emplace_back(prefix + ".un", un);
    out.emplace_back(prefix + ".bn", bn);
  }
};

using GruCell = GruCellT<float>;

// h' = mask*h_new + (1-mask)*h_old, with mask broadcast to [N, hidden].
// Rows whose mask is 0 carry the previous state through unchanged.
template <typename S>
TensorT<S> masked_update(const TensorT<S>& h_new, const TensorT<S>& h_old,
                         const std::vector<S>& row_mask) {
  const int n = h_new.rows(), d = h_new.cols();
  TensorT<S> m({n, d});
  TensorT<S> inv({n, d});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) {
      m.at(i, j) = row_mask[static_cast<std::size_t>(i)];
      inv.at(i, j) = S(1) - row_mask[static_cast<std::size_t>(i)];
    }
  return add(mul(m, h_new), mul(inv, h_old));
}

}  // namespace advnmt
