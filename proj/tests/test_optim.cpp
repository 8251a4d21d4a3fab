#include <doctest.h>

#include <cmath>

#include "advnmt/optim.hpp"
#include "advnmt/ops.hpp"

using namespace advnmt;

TEST_SUITE_BEGIN("optim");

TEST_CASE("adam with zero gradient leaves parameters unchanged") {
  Tensor w({3}, {1.f, 2.f, 3.f}, true);
  w.zero_grad();
  Adam opt({{"w", w}}, {});
  opt.step();
  CHECK(w.data() == std::vector<float>{1.f, 2.f, 3.f});
}

TEST_CASE("adam moves against the gradient") {
  Tensor w({1}, {1.f}, true);
  w.zero_grad();
  const_cast<std::vector<float>&>(w.grad());  // ensure buffer exists
  w.impl()->g[0] = 1.f;
  Adam opt({{"w", w}}, {.lr = 0.1});
  opt.step();
  CHECK(w.data()[0] < 1.f);
}

TEST_CASE("adam missing gradient names the parameter") {
  Tensor w({2}, 0.f, true);
  Adam opt({{"stray", w}}, {});
  CHECK_THROWS_WITH_AS(opt.step(), doctest::Contains("stray"), std::runtime_error);
}

TEST_CASE("adam on a quadratic matches a hand-stepped reference trace") {
  // f(w) = (w-3)^2, df/dw = 2(w-3), 10 steps from w=0
  Tensor w({1}, {0.f}, true);
  AdamConfig cfg{.lr = 0.1, .beta1 = 0.9, .beta2 = 0.999, .eps = 1e-8};
  Adam opt({{"w", w}}, cfg);

  double rw = 0.0, m = 0.0, v = 0.0;
  for (int t = 1; t <= 10; ++t) {
    const float g = 2.f * (w.data()[0] - 3.f);
    w.zero_grad();
    w.impl()->g[0] = g;
    opt.step();

    const double rg = 2.0 * (rw - 3.0);
    m = cfg.beta1 * m + (1 - cfg.beta1) * rg;
    v = cfg.beta2 * v + (1 - cfg.beta2) * rg * rg;
    const double mh = m / (1 - std::pow(cfg.beta1, t));
    const double vh = v / (1 - std::pow(cfg.beta2, t));
    rw -= cfg.lr * mh / (std::sqrt(vh) + cfg.eps);
    CHECK(w.data()[0] == doctest::Approx(rw).epsilon(1e-4));
  }
  CHECK(std::fabs(w.data()[0] - 3.0) < 3.0);  // strictly closer than the start
}

TEST_CASE("adafactor with zero gradient and fresh state leaves parameters unchanged") {
  Tensor w({2, 2}, {1.f, 2.f, 3.f, 4.f}, true);
  w.zero_grad();
  Adafactor opt({{"w", w}}, {});
  opt.step();
  CHECK(w.data() == std::vector<float>{1.f, 2.f, 3.f, 4.f});
}

TEST_CASE("adafactor stores factored second moments for matrices") {
  Tensor w({8, 5}, 0.f, true);
  Tensor b({7}, 0.f, true);
  Adafactor opt({{"w", w}, {"b", b}}, {});
  CHECK(opt.moment_size(0) == 8 + 5);  // rows + cols, not rows * cols
  CHECK(opt.moment_size(1) == 7);
}

namespace {

// Full-matrix second-moment variant; test-side oracle for the factored one.
class FullMatrixAdafactor {
 public:
  FullMatrixAdafactor(Tensor w, AdafactorConfig cfg) : w_(w), cfg_(cfg), v_(w.numel(), 0.0) {}
  void apply(const std::vector<float>& g) {
    const long t = ++t_;
    const double beta2 = 1.0 - std::pow(static_cast<double>(t), -cfg_.decay_pow);
    const double alpha = rsqrt_schedule(cfg_.lr, cfg_.warmup_steps, t);
    std::vector<double> u(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      v_[i] = beta2 * v_[i] + (1 - beta2) * (static_cast<double>(g[i]) * g[i] + cfg_.eps1);
      u[i] = g[i] / std::sqrt(v_[i]);
    }
    double rms = 0;
    for (double x : u) rms += x * x;
    rms = std::sqrt(rms / static_cast<double>(u.size()));
    const double scale = alpha / std::max(1.0, rms / cfg_.clip);
    for (std::size_t i = 0; i < g.size(); ++i) w_.ptr()[i] -= static_cast<float>(scale * u[i]);
  }

 private:
  Tensor w_;
  AdafactorConfig cfg_;
  std::vector<double> v_;
  long t_ = 0;
};

float lsq_loss_and_grad(const Tensor& x, const Tensor& y, Tensor& w) {
  auto pred = matmul(x, w);
  auto diff = add(pred, affine(y, -1.f, 0.f));
  auto loss = mean_all(mul(diff, diff));
  backward(loss);
  const float out = loss.item();
  clear_tape<float>();
  return out;
}

}  // namespace

TEST_CASE("adafactor descends a least-squares toy, tracking the full-matrix variant") {
  Rng rng(3);
  const int n = 16, in = 4, out_dim = 3;
  Tensor x({n, in}), wstar({in, out_dim});
  for (auto& v : x.data()) v = static_cast<float>(rng.uniform(-1, 1));
  for (auto& v : wstar.data()) v = static_cast<float>(rng.uniform(-1, 1));
  Tensor y = matmul(x, wstar);

  AdafactorConfig cfg{.lr = 0.05, .warmup_steps = 20};
  Tensor w_fact({in, out_dim}, 0.f, true);
  Tensor w_full({in, out_dim}, 0.f, true);
  Adafactor fact({{"w", w_fact}}, cfg);
  FullMatrixAdafactor full(w_full, cfg);

  std::vector<float> fact_curve, full_curve;
  for (int step = 1; step <= 200; ++step) {
    w_fact.zero_grad();
    fact_curve.push_back(lsq_loss_and_grad(x, y, w_fact));
    fact.step();

    w_full.zero_grad();
    full_curve.push_back(lsq_loss_and_grad(x, y, w_full));
    full.apply(w_full.grad());
  }

  // monotone after warmup, modulo a small smoothing tolerance
  for (std::size_t i = static_cast<std::size_t>(cfg.warmup_steps); i + 1 < fact_curve.size(); ++i)
    CHECK(fact_curve[i + 1] <= fact_curve[i] + 1e-4f + 0.02f * fact_curve[i]);
  CHECK(fact_curve.back() < 0.05f * fact_curve.front());
  // factored path lands in the same regime as the full-matrix oracle
  CHECK(fact_curve.back() <= 4.0f * full_curve.back() + 1e-4f);
}

TEST_SUITE_END();
