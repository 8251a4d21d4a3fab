#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "advnmt/rng.hpp"
#include "advnmt/tensor.hpp"

namespace advnmt {

template <typename S>
using EMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename S>
using EMap = Eigen::Map<EMat<S>>;
template <typename S>
using ECMap = Eigen::Map<const EMat<S>>;

namespace detail {

template <typename S>
inline bool should_record(std::initializer_list<const TensorT<S>*> ins) {
  if (!Tape<S>::get().recording()) return false;
  for (const TensorT<S>* t : ins)
    if (t->requires_grad()) return true;
  return false;
}

template <typename S>
inline void accumulate(TensorImpl<S>* t, const S* src, std::size_t n) {
  Tape<S>::get().mark(t);
  S* g = t->g.data();
  for (std::size_t i = 0; i < n; ++i) g[i] += src[i];
}

[[noreturn]] inline void shape_error(const char* op, const std::vector<int>& a,
                                     const std::vector<int>& b) {
  throw std::invalid_argument(std::string(op) + ": shape mismatch " + shape_str(a) + " vs " +
                              shape_str(b));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// matmul

template <typename S>
TensorT<S> matmul(const TensorT<S>& a, const TensorT<S>& b) {
  if (a.ndim() != 2 || b.ndim() != 2 || a.cols() != b.rows())
    detail::shape_error("matmul", a.shape(), b.shape());
  const int m = a.rows(), k = a.cols(), n = b.cols();
  TensorT<S> out({m, n});
  EMap<S>(out.ptr(), m, n).noalias() = ECMap<S>(a.ptr(), m, k) * ECMap<S>(b.ptr(), k, n);
  if (detail::should_record<S>({&a, &b})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), bi = b.impl(), oi = out.impl();
    Tape<S>::get().record({"matmul", oi, {ai, bi}, [ai, bi, oi, m, k, n]() {
      ECMap<S> go(oi->g.data(), m, n);
      if (ai->requires_grad) {
        Tape<S>::get().mark(ai.get());
        EMap<S>(ai->g.data(), m, k).noalias() += go * ECMap<S>(bi->v.data(), k, n).transpose();
      }
      if (bi->requires_grad) {
        Tape<S>::get().mark(bi.get());
        EMap<S>(bi->g.data(), k, n).noalias() += ECMap<S>(ai->v.data(), m, k).transpose() * go;
      }
    }});
  }
  return out;
}

// ---------------------------------------------------------------------------
// add: same shape, or bias broadcast of a 1-d [cols] vector over rows

template <typename S>
TensorT<S> add(const TensorT<S>& a, const TensorT<S>& b) {
  const bool bias = (b.ndim() == 1 && a.ndim() == 2 && a.cols() == b.dim(0));
  if (!bias && a.shape() != b.shape()) detail::shape_error("add", a.shape(), b.shape());
  TensorT<S> out(a.shape());
  const std::size_t n = a.numel();
  const int cols = a.cols();
  const S* pa = a.ptr();
  const S* pb = b.ptr();
  S* po = out.ptr();
  if (bias) {
    for (std::size_t i = 0; i < n; ++i) po[i] = pa[i] + pb[i % cols];
  } else {
    for (std::size_t i = 0; i < n; ++i) po[i] = pa[i] + pb[i];
  }
  if (detail::should_record<S>({&a, &b})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), bi = b.impl(), oi = out.impl();
    Tape<S>::get().record({"add", oi, {ai, bi}, [ai, bi, oi, bias, cols, n]() {
      const S* go = oi->g.data();
      if (ai->requires_grad) detail::accumulate(ai.get(), go, n);
      if (bi->requires_grad) {
        Tape<S>::get().mark(bi.get());
        S* gb = bi->g.data();
        if (bias) {
          for (std::size_t i = 0; i < n; ++i) gb[i % cols] += go[i];
        } else {
          for (std::size_t i = 0; i < n; ++i) gb[i] += go[i];
        }
      }
    }});
  }
  return out;
}

// ---------------------------------------------------------------------------
// elementwise multiply

template <typename S>
TensorT<S> mul(const TensorT<S>& a, const TensorT<S>& b) {
  if (a.shape() != b.shape()) detail::shape_error("mul", a.shape(), b.shape());
  TensorT<S> out(a.shape());
  const std::size_t n = a.numel();
  for (std::size_t i = 0; i < n; ++i) out.ptr()[i] = a.ptr()[i] * b.ptr()[i];
  if (detail::should_record<S>({&a, &b})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), bi = b.impl(), oi = out.impl();
    Tape<S>::get().record({"mul", oi, {ai, bi}, [ai, bi, oi, n]() {
      const S* go = oi->g.data();
      if (ai->requires_grad) {
        Tape<S>::get().mark(ai.get());
        for (std::size_t i = 0; i < n; ++i) ai->g[i] += go[i] * bi->v[i];
      }
      if (bi->requires_grad) {
        Tape<S>::get().mark(bi.get());
        for (std::size_t i = 0; i < n; ++i) bi->g[i] += go[i] * ai->v[i];
      }
    }});
  }
  return out;
}

// ---------------------------------------------------------------------------
// affine: out = a * scale + shift (elementwise scalars)

template <typename S>
TensorT<S> affine(const TensorT<S>& a, S scale, S shift) {
  TensorT<S> out(a.shape());
  const std::size_t n = a.numel();
  for (std::size_t i = 0; i < n; ++i) out.ptr()[i] = a.ptr()[i] * scale + shift;
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    Tape<S>::get().record({"affine", oi, {ai}, [ai, oi, scale, n]() {
      Tape<S>::get().mark(ai.get());
      for (std::size_t i = 0; i < n; ++i) ai->g[i] += oi->g[i] * scale;
    }});
  }
  return out;
}

// ---------------------------------------------------------------------------
// concat / slice along columns and rows (2-d)

template <typename S>
TensorT<S> concat_cols(const TensorT<S>& a, const TensorT<S>& b) {
  if (a.ndim() != 2 || b.ndim() != 2 || a.rows() != b.rows())
    detail::shape_error("concat", a.shape(), b.shape());
  const int m = a.rows(), ca = a.cols(), cb = b.cols();
  TensorT<S> out({m, ca + cb});
  for (int i = 0; i < m; ++i) {
    std::copy_n(a.ptr() + static_cast<std::size_t>(i) * ca, ca, out.ptr() + static_cast<std::size_t>(i) * (ca + cb));
    std::copy_n(b.ptr() + static_cast<std::size_t>(i) * cb, cb, out.ptr() + static_cast<std::size_t>(i) * (ca + cb) + ca);
  }
  if (detail::should_record<S>({&a, &b})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), bi = b.impl(), oi = out.impl();
    Tape<S>::get().record({"concat", oi, {ai, bi}, [ai, bi, oi, m, ca, cb]() {
      const S* go = oi->g.data();
      if (ai->requires_grad) {
        Tape<S>::get().mark(ai.get());
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < ca; ++j) ai->g[static_cast<std::size_t>(i) * ca + j] += go[static_cast<std::size_t>(i) * (ca + cb) + j];
      }
      if (bi->requires_grad) {
        Tape<S>::get().mark(bi.get());
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < cb; ++j) bi->g[static_cast<std::size_t>(i) * cb + j] += go[static_cast<std::size_t>(i) * (ca + cb) + ca + j];
      }
    }});
  }
  return out;
}

template <typename S>
TensorT<S> concat_rows(const TensorT<S>& a, const TensorT<S>& b) {
  if (a.ndim() != 2 || b.ndim() != 2 || a.cols() != b.cols())
    detail::shape_error("concat", a.shape(), b.shape());
  const int c = a.cols();
  TensorT<S> out({a.rows() + b.rows(), c});
  std::copy_n(a.ptr(), a.numel(), out.ptr());
  std::copy_n(b.ptr(), b.numel(), out.ptr() + a.numel());
  if (detail::should_record<S>({&a, &b})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), bi = b.impl(), oi = out.impl();
    const std::size_t na = a.numel(), nb = b.numel();
    Tape<S>::get().record({"concat", oi, {ai, bi}, [ai, bi, oi, na, nb]() {
      if (ai->requires_grad) detail::accumulate(ai.get(), oi->g.data(), na);
      if (bi->requires_grad) {
        Tape<S>::get().mark(bi.get());
        for (std::size_t i = 0; i < nb; ++i) bi->g[i] += oi->g[na + i];
      }
    }});
  }
  return out;
}

template <typename S>
TensorT<S> slice_cols(const TensorT<S>& a, int start, int len) {
  if (a.ndim() != 2 || start < 0 || len <= 0 || start + len > a.cols())
    throw std::invalid_argument("slice: range [" + std::to_string(start) + "," +
                                std::to_string(start + len) + ") outside " + shape_str(a.shape()));
  const int m = a.rows(), c = a.cols();
  TensorT<S> out({m, len});
  for (int i = 0; i < m; ++i)
    std::copy_n(a.ptr() + static_cast<std::size_t>(i) * c + start, len, out.ptr() + static_cast<std::size_t>(i) * len);
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    Tape<S>::get().record({"slice", oi, {ai}, [ai, oi, m, c, start, len]() {
      Tape<S>::get().mark(ai.get());
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < len; ++j)
          ai->g[static_cast<std::size_t>(i) * c + start + j] += oi->g[static_cast<std::size_t>(i) * len + j];
    }});
  }
  return out;
}

template <typename S>
TensorT<S> slice_rows(const TensorT<S>& a, int start, int len) {
  if (a.ndim() != 2 || start < 0 || len <= 0 || start + len > a.rows())
    throw std::invalid_argument("slice: range [" + std::to_string(start) + "," +
                                std::to_string(start + len) + ") outside " + shape_str(a.shape()));
  const int c = a.cols();
  TensorT<S> out({len, c});
  std::copy_n(a.ptr() + static_cast<std::size_t>(start) * c, static_cast<std::size_t>(len) * c, out.ptr());
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    Tape<S>::get().record({"slice", oi, {ai}, [ai, oi, start, len, c]() {
      Tape<S>::get().mark(ai.get());
      for (std::size_t i = 0; i < static_cast<std::size_t>(len) * c; ++i)
        ai->g[static_cast<std::size_t>(start) * c + i] += oi->g[i];
    }});
  }
  return out;
}

// ---------------------------------------------------------------------------
// embedding lookup: rows of `table` gathered by id

template <typename S>
TensorT<S> embedding(const TensorT<S>& table, const std::vector<int>& ids) {
  if (table.ndim() != 2) detail::shape_error("embedding-lookup", table.shape(), {});
  const int v = table.rows(), d = table.cols();
  const int n = static_cast<int>(ids.size());
  for (int id : ids)
    if (id < 0 || id >= v)
      throw std::invalid_argument("embedding-lookup: id " + std::to_string(id) +
                                  " outside table " + shape_str(table.shape()));
  TensorT<S> out({n, d});
  for (int i = 0; i < n; ++i)
    std::copy_n(table.ptr() + static_cast<std::size_t>(ids[i]) * d, d, out.ptr() + static_cast<std::size_t>(i) * d);
  if (detail::should_record<S>({&table})) {
    out.set_requires_grad(true);
    auto ti = table.impl(), oi = out.impl();
    Tape<S>::get().record({"embedding-lookup", oi, {ti}, [ti, oi, ids, d, n]() {
      Tape<S>::get().mark(ti.get());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j)
          ti->g[static_cast<std::size_t>(ids[i]) * d + j] += oi->g[static_cast<std::size_t>(i) * d + j];
    }});
  }
  return out;
}

// per-row column pick: out[i,0] = a[i, ids[i]]

template <typename S>
TensorT<S> pick(const TensorT<S>& a, const std::vector<int>& ids) {
  if (a.ndim() != 2 || static_cast<int>(ids.size()) != a.rows())
    throw std::invalid_argument("pick: need one column index per row of " + shape_str(a.shape()));
  const int m = a.rows(), c = a.cols();
  for (int id : ids)
    if (id < 0 || id >= c) throw std::invalid_argument("pick: column " + std::to_string(id) + " outside " + shape_str(a.shape()));
  TensorT<S> out({m, 1});
  for (int i = 0; i < m; ++i) out.ptr()[i] = a.at(i, ids[i]);
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    Tape<S>::get().record({"pick", oi, {ai}, [ai, oi, ids, m, c]() {
      Tape<S>::get().mark(ai.get());
      for (int i = 0; i < m; ++i) ai->g[static_cast<std::size_t>(i) * c + ids[i]] += oi->g[i];
    }});
  }
  return out;
}

// ---------------------------------------------------------------------------
// pointwise nonlinearities

template <typename S>
TensorT<S> sigmoid(const TensorT<S>& a) {
  TensorT<S> out(a.shape());
  const std::size_t n = a.numel();
  for (std::size_t i = 0; i < n; ++i) out.ptr()[i] = S(1) / (S(1) + std::exp(-a.ptr()[i]));
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    Tape<S>::get().record({"sigmoid", oi, {ai}, [ai, oi, n]() {
      Tape<S>::get().mark(ai.get());
      for (std::size_t i = 0; i < n; ++i) {
        const S y = oi->v[i];
        ai->g[i] += oi->g[i] * y * (S(1) - y);
      }
    }});
  }
  return out;
}

template <typename S>
TensorT<S> tanh(const TensorT<S>& a) {
  TensorT<S> out(a.shape());
  const std::size_t n = a.numel();
  for (std::size_t i = 0; i < n; ++i) out.ptr()[i] = std::tanh(a.ptr()[i]);
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    Tape<S>::get().record({"tanh", oi, {ai}, [ai, oi, n]() {
      Tape<S>::get().mark(ai.get());
      for (std::size_t i = 0; i < n; ++i) {
        const S y = oi->v[i];
        ai->g[i] += oi->g[i] * (S(1) - y * y);
      }
    }});
  }
  return out;
}

// log with a floor at 1e-12 so probability streams cannot produce -inf;
// inside the floor region the derivative is defined as zero.

template <typename S>
TensorT<S> log(const TensorT<S>& a) {
  constexpr S kFloor = S(1e-12);
  TensorT<S> out(a.shape());
  const std::size_t n = a.numel();
  for (std::size_t i = 0; i < n; ++i) out.ptr()[i] = std::log(std::max(a.ptr()[i], kFloor));
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    Tape<S>::get().record({"log", oi, {ai}, [ai, oi, n]() {
      Tape<S>::get().mark(ai.get());
      for (std::size_t i = 0; i < n; ++i)
        if (ai->v[i] > kFloor) ai->g[i] += oi->g[i] / ai->v[i];
    }});
  }
  return out;
}

// row-wise softmax with max subtraction

template <typename S>
TensorT<S> softmax(const TensorT<S>& a) {
  if (a.ndim() != 2) detail::shape_error("softmax", a.shape(), {});
  const int m = a.rows(), c = a.cols();
  TensorT<S> out(a.shape());
  for (int i = 0; i < m; ++i) {
    const S* row = a.ptr() + static_cast<std::size_t>(i) * c;
    S* orow = out.ptr() + static_cast<std::size_t>(i) * c;
    S mx = row[0];
    for (int j = 1; j < c; ++j) mx = std::max(mx, row[j]);
    S sum = S(0);
    for (int j = 0; j < c; ++j) {
      orow[j] = std::exp(row[j] - mx);
      sum += orow[j];
    }
    for (int j = 0; j < c; ++j) orow[j] /= sum;
  }
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    Tape<S>::get().record({"softmax", oi, {ai}, [ai, oi, m, c]() {
      Tape<S>::get().mark(ai.get());
      for (int i = 0; i < m; ++i) {
        const S* y = oi->v.data() + static_cast<std::size_t>(i) * c;
        const S* go = oi->g.data() + static_cast<std::size_t>(i) * c;
        S* ga = ai->g.data() + static_cast<std::size_t>(i) * c;
        S dot = S(0);
        for (int j = 0; j < c; ++j) dot += go[j] * y[j];
        for (int j = 0; j < c; ++j) ga[j] += y[j] * (go[j] - dot);
      }
    }});
  }
  return out;
}

// ---------------------------------------------------------------------------
// reductions

template <typename S>
TensorT<S> sum_all(const TensorT<S>& a) {
  TensorT<S> out({1});
  out.ptr()[0] = std::accumulate(a.ptr(), a.ptr() + a.numel(), S(0));
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    const std::size_t n = a.numel();
    Tape<S>::get().record({"sum", oi, {ai}, [ai, oi, n]() {
      Tape<S>::get().mark(ai.get());
      for (std::size_t i = 0; i < n; ++i) ai->g[i] += oi->g[0];
    }});
  }
  return out;
}

template <typename S>
TensorT<S> mean_all(const TensorT<S>& a) {
  const S inv = S(1) / static_cast<S>(a.numel());
  TensorT<S> out({1});
  out.ptr()[0] = std::accumulate(a.ptr(), a.ptr() + a.numel(), S(0)) * inv;
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    const std::size_t n = a.numel();
    Tape<S>::get().record({"mean", oi, {ai}, [ai, oi, n, inv]() {
      Tape<S>::get().mark(ai.get());
      for (std::size_t i = 0; i < n; ++i) ai->g[i] += oi->g[0] * inv;
    }});
  }
  return out;
}

// ---------------------------------------------------------------------------
// dropout with inverted scaling; eval mode is the identity

template <typename S>
TensorT<S> dropout(const TensorT<S>& a, double p, Rng& rng, bool train) {
  if (p < 0.0 || p >= 1.0) throw std::invalid_argument("dropout: p must be in [0,1)");
  if (!train || p == 0.0) return a;
  const std::size_t n = a.numel();
  std::vector<S> mask(n);
  const S keep_scale = S(1.0 / (1.0 - p));
  for (std::size_t i = 0; i < n; ++i) mask[i] = rng.bernoulli(1.0 - p) ? keep_scale : S(0);
  TensorT<S> out(a.shape());
  for (std::size_t i = 0; i < n; ++i) out.ptr()[i] = a.ptr()[i] * mask[i];
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    Tape<S>::get().record({"dropout", oi, {ai}, [ai, oi, mask = std::move(mask), n]() {
      Tape<S>::get().mark(ai.get());
      for (std::size_t i = 0; i < n; ++i) ai->g[i] += oi->g[i] * mask[i];
    }});
  }
  return out;
}

// ---------------------------------------------------------------------------
// grouped ops used by attention and pooling over [G, T] layouts flattened to
// [G*T, d]

// out[g*T+t, :] = a[g*T+t, :] + q[g, :]
template <typename S>
TensorT<S> group_add(const TensorT<S>& a, const TensorT<S>& q, int t_len) {
  if (a.ndim() != 2 || q.ndim() != 2 || a.cols() != q.cols() || a.rows() != q.rows() * t_len)
    detail::shape_error("group-add", a.shape(), q.shape());
  const int g = q.rows(), d = a.cols();
  TensorT<S> out(a.shape());
  for (int i = 0; i < g; ++i)
    for (int t = 0; t < t_len; ++t)
      for (int j = 0; j < d; ++j)
        out.at(i * t_len + t, j) = a.at(i * t_len + t, j) + q.at(i, j);
  if (detail::should_record<S>({&a, &q})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), qi = q.impl(), oi = out.impl();
    Tape<S>::get().record({"group-add", oi, {ai, qi}, [ai, qi, oi, g, t_len, d]() {
      if (ai->requires_grad) detail::accumulate(ai.get(), oi->g.data(), oi->g.size());
      if (qi->requires_grad) {
        Tape<S>::get().mark(qi.get());
        for (int i = 0; i < g; ++i)
          for (int t = 0; t < t_len; ++t)
            for (int j = 0; j < d; ++j)
              qi->g[static_cast<std::size_t>(i) * d + j] += oi->g[(static_cast<std::size_t>(i) * t_len + t) * d + j];
      }
    }});
  }
  return out;
}

// out[g, :] = sum_t w[g, t] * h[g*T+t, :]
template <typename S>
TensorT<S> group_weighted_sum(const TensorT<S>& w, const TensorT<S>& h) {
  if (w.ndim() != 2 || h.ndim() != 2 || h.rows() != w.rows() * w.cols())
    detail::shape_error("group-weighted-sum", w.shape(), h.shape());
  const int g = w.rows(), t_len = w.cols(), d = h.cols();
  TensorT<S> out({g, d});
  for (int i = 0; i < g; ++i) {
    S* orow = out.ptr() + static_cast<std::size_t>(i) * d;
    for (int t = 0; t < t_len; ++t) {
      const S wv = w.at(i, t);
      const S* hrow = h.ptr() + (static_cast<std::size_t>(i) * t_len + t) * d;
      for (int j = 0; j < d; ++j) orow[j] += wv * hrow[j];
    }
  }
  if (detail::should_record<S>({&w, &h})) {
    out.set_requires_grad(true);
    auto wi = w.impl(), hi = h.impl(), oi = out.impl();
    Tape<S>::get().record({"group-weighted-sum", oi, {wi, hi}, [wi, hi, oi, g, t_len, d]() {
      if (wi->requires_grad) Tape<S>::get().mark(wi.get());
      if (hi->requires_grad) Tape<S>::get().mark(hi.get());
      for (int i = 0; i < g; ++i) {
        const S* go = oi->g.data() + static_cast<std::size_t>(i) * d;
        for (int t = 0; t < t_len; ++t) {
          const std::size_t hoff = (static_cast<std::size_t>(i) * t_len + t) * d;
          if (wi->requires_grad) {
            S dot = S(0);
            for (int j = 0; j < d; ++j) dot += go[j] * hi->v[hoff + j];
            wi->g[static_cast<std::size_t>(i) * t_len + t] += dot;
          }
          if (hi->requires_grad) {
            const S wv = wi->v[static_cast<std::size_t>(i) * t_len + t];
            for (int j = 0; j < d; ++j) hi->g[hoff + j] += wv * go[j];
          }
        }
      }
    }});
  }
  return out;
}

// ---------------------------------------------------------------------------
// reshape (copying; gradient passes through unchanged)

template <typename S>
TensorT<S> reshape(const TensorT<S>& a, std::vector<int> shape) {
  std::size_t n = 1;
  for (int d : shape) n *= static_cast<std::size_t>(d);
  if (n != a.numel()) detail::shape_error("reshape", a.shape(), shape);
  TensorT<S> out(std::move(shape), std::vector<S>(a.ptr(), a.ptr() + a.numel()));
  if (detail::should_record<S>({&a})) {
    out.set_requires_grad(true);
    auto ai = a.impl(), oi = out.impl();
    Tape<S>::get().record({"reshape", oi, {ai}, [ai, oi, n]() {
      detail::accumulate(ai.get(), oi->g.data(), n);
    }});
  }
  return out;
}

}  // namespace advnmt
