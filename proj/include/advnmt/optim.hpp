#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "advnmt/gru.hpp"
#include "advnmt/tensor.hpp"

namespace advnmt {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Standard Adam with bias correction. step() consumes and zeroes the
// parameters' gradient buffers; a parameter that never received a gradient
// is an error (named in the exception).
template <typename S>
class AdamT {
 public:
  AdamT(NamedParamsT<S> params, AdamConfig cfg = {}) : params_(std::move(params)), cfg_(cfg) {
    m_.resize(params_.size());
    v_.resize(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i) {
      m_[i].assign(params_[i].second.numel(), S(0));
      v_[i].assign(params_[i].second.numel(), S(0));
    }
  }

  void step() {
    ++t_;
    const double bc1 = 1.0 - std::pow(cfg_.beta1, t_);
    const double bc2 = 1.0 - std::pow(cfg_.beta2, t_);
    for (std::size_t i = 0; i < params_.size(); ++i) {
      auto& p = params_[i].second;
      if (!p.has_grad())
        throw std::runtime_error("adam: missing gradient for parameter " + params_[i].first);
      const auto& g = p.grad();
      S* w = p.ptr();
      for (std::size_t j = 0; j < g.size(); ++j) {
        m_[i][j] = static_cast<S>(cfg_.beta1 * m_[i][j] + (1.0 - cfg_.beta1) * g[j]);
        v_[i][j] = static_cast<S>(cfg_.beta2 * v_[i][j] + (1.0 - cfg_.beta2) * g[j] * g[j]);
        const double mh = m_[i][j] / bc1;
        const double vh = v_[i][j] / bc2;
        w[j] -= static_cast<S>(cfg_.lr * mh / (std::sqrt(vh) + cfg_.eps));
      }
      p.zero_grad();
    }
  }

  long step_count() const { return t_; }

 private:
  NamedParamsT<S> params_;
  AdamConfig cfg_;
  std::vector<std::vector<S>> m_, v_;
  long t_ = 0;
};

using Adam = AdamT<float>;

struct AdafactorConfig {
  double lr = 1e-3;       // peak rate reached at the end of warmup
  int warmup_steps = 100; // linear warmup, then rsqrt decay
  double decay_pow = 0.8; // second-moment decay beta2_t = 1 - t^-decay_pow
  double eps1 = 1e-30;
  double clip = 1.0;      // update RMS clip threshold
};

inline double rsqrt_schedule(double base, int warmup, long t) {
  if (warmup <= 0) return base / std::sqrt(static_cast<double>(t));
  if (t <= warmup) return base * static_cast<double>(t) / warmup;
  return base * std::sqrt(static_cast<double>(warmup) / static_cast<double>(t));
}

// Adafactor: second-moment-only updates; matrices store factored row/column
// accumulators (rows+cols memory), everything else a full accumulator.
template <typename S>
class AdafactorT {
 public:
  AdafactorT(NamedParamsT<S> params, AdafactorConfig cfg = {}) : params_(std::move(params)), cfg_(cfg) {
    state_.resize(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i) {
      const auto& p = params_[i].second;
      auto& st = state_[i];
      if (p.ndim() == 2) {
        st.row.assign(p.rows(), 0.0);
        st.col.assign(p.cols(), 0.0);
      } else {
        st.full.assign(p.numel(), 0.0);
      }
    }
  }

  void step() {
    for (std::size_t i = 0; i < params_.size(); ++i) {
      auto& p = params_[i].second;
      if (!p.has_grad())
        throw std::runtime_error("adafactor: missing gradient for parameter " + params_[i].first);
      apply(i, p.grad());
      p.zero_grad();
    }
  }

  // Single-parameter update from an externally supplied gradient; the
  // asynchronous trainer calls this under its per-parameter lock.
  void apply(std::size_t index, const std::vector<S>& grad) {
    auto& p = params_[index].second;
    if (grad.size() != p.numel())
      throw std::invalid_argument("adafactor: gradient size mismatch for " + params_[index].first);
    auto& st = state_[index];
    const long t = ++st.t;
    const double beta2 = 1.0 - std::pow(static_cast<double>(t), -cfg_.decay_pow);
    const double alpha = rsqrt_schedule(cfg_.lr, cfg_.warmup_steps, t);
    S* w = p.ptr();
    const std::size_t n = p.numel();
    std::vector<double> u(n);
    if (p.ndim() == 2) {
      const int rows = p.rows(), cols = p.cols();
      std::vector<double> rsum(rows, 0.0), csum(cols, 0.0);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
          const double g2 = static_cast<double>(grad[static_cast<std::size_t>(r) * cols + c]) *
                                grad[static_cast<std::size_t>(r) * cols + c] +
                            cfg_.eps1;
          rsum[r] += g2;
          csum[c] += g2;
        }
      double rtot = 0.0;
      for (int r = 0; r < rows; ++r) {
        st.row[r] = beta2 * st.row[r] + (1.0 - beta2) * rsum[r];
        rtot += st.row[r];
      }
      for (int c = 0; c < cols; ++c) st.col[c] = beta2 * st.col[c] + (1.0 - beta2) * csum[c];
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
          const double vhat = st.row[r] * st.col[c] / rtot;
          u[static_cast<std::size_t>(r) * cols + c] =
              grad[static_cast<std::size_t>(r) * cols + c] / std::sqrt(vhat);
        }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        const double g2 = static_cast<double>(grad[j]) * grad[j] + cfg_.eps1;
        st.full[j] = beta2 * st.full[j] + (1.0 - beta2) * g2;
        u[j] = grad[j] / std::sqrt(st.full[j]);
      }
    }
    double rms = 0.0;
    for (std::size_t j = 0; j < n; ++j) rms += u[j] * u[j];
    rms = std::sqrt(rms / static_cast<double>(n));
    const double scale = alpha / std::max(1.0, rms / cfg_.clip);
    for (std::size_t j = 0; j < n; ++j) w[j] -= static_cast<S>(scale * u[j]);
  }

  std::size_t size() const { return params_.size(); }
  // Second-moment memory footprint (doubles) for parameter `index`.
  std::size_t moment_size(std::size_t index) const {
    const auto& st = state_[index];
    return st.row.size() + st.col.size() + st.full.size();
  }

 private:
  struct State {
    std::vector<double> row, col, full;
    long t = 0;
  };
  NamedParamsT<S> params_;
  AdafactorConfig cfg_;
  std::vector<State> state_;
};

using Adafactor = AdafactorT<float>;

template <typename S>
void zero_grads(NamedParamsT<S>& params) {
  for (auto& [name, t] : params) t.zero_grad();
}

}  // namespace advnmt
