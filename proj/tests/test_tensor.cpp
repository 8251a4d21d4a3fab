#include <doctest.h>

#include <cmath>

#include "advnmt/gru.hpp"
#include "advnmt/ops.hpp"
#include "gradcheck.hpp"

using namespace advnmt;

TEST_SUITE_BEGIN("tensor");

TEST_CASE("softmax rows form a probability simplex") {
  Tensor x({1, 3}, {1.f, 2.f, 3.f});
  auto y = softmax(x);
  float sum = 0;
  for (float v : y.data()) {
    CHECK(v >= 0.f);
    sum += v;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + rng.uniform_int(4), c = 1 + rng.uniform_int(7);
    Tensor z({m, c});
    for (auto& v : z.data()) v = static_cast<float>(rng.uniform(-8, 8));
    auto s = softmax(z);
    for (int i = 0; i < m; ++i) {
      float rs = 0;
      for (int j = 0; j < c; ++j) {
        CHECK(s.at(i, j) >= 0.f);
        rs += s.at(i, j);
      }
      CHECK(rs == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("matmul against identity returns the input exactly") {
  Tensor eye({3, 3});
  for (int i = 0; i < 3; ++i) eye.at(i, i) = 1.f;
  Tensor a({3, 2}, {1.f, 2.f, 3.f, 4.f, 5.f, 6.f});
  auto out = matmul(eye, a);
  for (std::size_t i = 0; i < a.numel(); ++i) CHECK(out.data()[i] == a.data()[i]);
}

TEST_CASE("shape mismatch names the op and shapes") {
  Tensor a({2, 3}), b({2, 3});
  CHECK_THROWS_WITH_AS(matmul(a, b), doctest::Contains("matmul"), std::invalid_argument);
  Tensor c({4, 1});
  CHECK_THROWS_AS(add(a, c), std::invalid_argument);
  CHECK_THROWS_AS(mul(a, c), std::invalid_argument);
}

TEST_CASE("gru cell matches a hand-stepped evaluation of the gate equations") {
  // 1 input unit, 2 hidden units with hand-set weights
  GruCellT<double> cell;
  Rng rng(1);
  cell.init(1, 2, rng);
  cell.wz = TensorT<double>({1, 2}, {0.5, -0.3});
  cell.uz = TensorT<double>({2, 2}, {0.1, 0.2, -0.1, 0.4});
  cell.bz = TensorT<double>({2}, {0.05, -0.05});
  cell.wr = TensorT<double>({1, 2}, {-0.2, 0.7});
  cell.ur = TensorT<double>({2, 2}, {0.3, -0.2, 0.0, 0.1});
  cell.br = TensorT<double>({2}, {0.0, 0.1});
  cell.wn = TensorT<double>({1, 2}, {0.9, 0.4});
  cell.un = TensorT<double>({2, 2}, {-0.3, 0.5, 0.2, -0.6});
  cell.bn = TensorT<double>({2}, {0.1, 0.0});

  const double x = 0.8;
  const double h0 = 0.25, h1 = -0.5;
  TensorT<double> xt({1, 1}, {x});
  TensorT<double> ht({1, 2}, {h0, h1});
  auto out = cell.step(xt, ht);

  // independent scalar walk through the same equations
  auto sig = [](double v) { return 1.0 / (1.0 + std::exp(-v)); };
  double z0 = sig(x * 0.5 + h0 * 0.1 + h1 * (-0.1) + 0.05);
  double z1 = sig(x * (-0.3) + h0 * 0.2 + h1 * 0.4 + (-0.05));
  double r0 = sig(x * (-0.2) + h0 * 0.3 + h1 * 0.0 + 0.0);
  double r1 = sig(x * 0.7 + h0 * (-0.2) + h1 * 0.1 + 0.1);
  double n0 = std::tanh(x * 0.9 + (r0 * h0) * (-0.3) + (r1 * h1) * 0.2 + 0.1);
  double n1 = std::tanh(x * 0.4 + (r0 * h0) * 0.5 + (r1 * h1) * (-0.6) + 0.0);
  double e0 = (1 - z0) * h0 + z0 * n0;
  double e1 = (1 - z1) * h1 + z1 * n1;

  CHECK(out.data()[0] == doctest::Approx(e0).epsilon(1e-12));
  CHECK(out.data()[1] == doctest::Approx(e1).epsilon(1e-12));
  clear_tape<double>();
}

TEST_CASE("backward of sum yields all-ones gradient") {
  Tensor x({2, 3}, 0.5f, true);
  auto s = sum_all(x);
  backward(s);
  for (float g : x.grad()) CHECK(g == 1.0f);
  clear_tape<float>();
}

TEST_CASE("backward of mean of squares") {
  Tensor x({2}, {1.f, 2.f}, true);
  auto loss = mean_all(mul(x, x));
  backward(loss);
  CHECK(x.grad()[0] == doctest::Approx(1.0));
  CHECK(x.grad()[1] == doctest::Approx(2.0));
  clear_tape<float>();
}

TEST_CASE("fan-out accumulates branch gradients exactly") {
  Tensor x({3}, {1.f, -2.f, 0.5f}, true);
  auto f = sum_all(mul(x, x));      // d/dx = 2x
  auto g = sum_all(affine(x, 3.f, 0.f));  // d/dx = 3
  auto tot = add(f, g);
  backward(tot);
  for (int i = 0; i < 3; ++i)
    CHECK(x.grad()[static_cast<std::size_t>(i)] ==
          doctest::Approx(2.0 * x.data()[static_cast<std::size_t>(i)] + 3.0));
  clear_tape<float>();
}

TEST_CASE("backward rejects non-scalar roots and off-graph tensors") {
  Tensor x({2, 2}, 1.f, true);
  auto y = mul(x, x);
  CHECK_THROWS_AS(backward(y), std::invalid_argument);
  Tensor leaf({1}, 2.f, true);
  CHECK_THROWS_AS(backward(leaf), std::invalid_argument);
  clear_tape<float>();
}

TEST_CASE("dropout is the identity in eval mode and rescales in train mode") {
  Rng rng(7);
  Tensor x({4, 8}, 2.0f);
  auto eval_out = dropout(x, 0.5, rng, /*train=*/false);
  CHECK(eval_out.impl() == x.impl());

  // inverted scaling keeps the expected value
  double total = 0;
  const int trials = 2000;
  for (int i = 0; i < trials; ++i) {
    auto out = dropout(x, 0.5, rng, true);
    for (float v : out.data()) total += v;
  }
  const double mean = total / (trials * x.numel());
  CHECK(mean == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("randomized two-layer network passes a finite-difference check") {
  Rng rng(42);
  for (int trial = 0; trial < 3; ++trial) {
    const int in = 3, hid = 4, out = 2, n = 2;
    auto w1 = glorot<double>(in, hid, rng);
    auto b1 = zeros_param<double>(hid);
    auto w2 = glorot<double>(hid, out, rng);
    auto b2 = zeros_param<double>(out);
    TensorT<double> x({n, in});
    for (auto& v : x.data()) v = rng.uniform(-1, 1);
    std::vector<int> targets = {rng.uniform_int(out), rng.uniform_int(out)};

    auto loss_fn = [&]() {
      auto h = advnmt::tanh(add(matmul(x, w1), b1));
      auto logits = add(matmul(h, w2), b2);
      auto probs = softmax(logits);
      auto lp = advnmt::log(pick(probs, targets));
      return affine(mean_all(lp), -1.0, 0.0);
    };
    auto res = advtest::check_gradients({w1, b1, w2, b2}, loss_fn);
    CHECK_MESSAGE(res.ok, res.detail);
  }
  clear_tape<double>();
}

TEST_CASE("grouped attention ops pass a finite-difference check") {
  Rng rng(5);
  const int g = 2, t = 3, d = 4;
  TensorT<double> p({g * t, d}, 0.0, true);
  TensorT<double> q({g, d}, 0.0, true);
  TensorT<double> w({g, t}, 0.0, true);
  for (auto& v : p.data()) v = rng.uniform(-1, 1);
  for (auto& v : q.data()) v = rng.uniform(-1, 1);
  for (auto& v : w.data()) v = rng.uniform(-1, 1);
  auto loss_fn = [&]() {
    auto scores = advnmt::tanh(group_add(p, q, t));
    auto mixed = group_weighted_sum(w, scores);
    return mean_all(mul(mixed, mixed));
  };
  auto res = advtest::check_gradients({p, q, w}, loss_fn);
  CHECK_MESSAGE(res.ok, res.detail);
  clear_tape<double>();
}

TEST_CASE("documented ops keep finite values on finite inputs") {
  Rng rng(9);
  Tensor a({4, 5}), b({4, 5});
  for (auto& v : a.data()) v = static_cast<float>(rng.uniform(-40, 40));
  for (auto& v : b.data()) v = static_cast<float>(rng.uniform(-40, 40));
  auto check_finite = [](const Tensor& t) {
    for (float v : t.data()) CHECK(std::isfinite(v));
  };
  check_finite(softmax(a));
  check_finite(sigmoid(a));
  check_finite(advnmt::tanh(a));
  check_finite(add(a, b));
  check_finite(mul(a, b));
  check_finite(advnmt::log(softmax(a)));
}

TEST_CASE("embedding lookup gathers rows and scatters gradients") {
  Tensor table({5, 2}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, true);
  auto e = embedding(table, {3, 0, 3});
  CHECK(e.at(0, 0) == 6.f);
  CHECK(e.at(1, 1) == 1.f);
  auto loss = sum_all(e);
  backward(loss);
  CHECK(table.grad()[6] == 2.0f);  // row 3 used twice
  CHECK(table.grad()[0] == 1.0f);
  CHECK(table.grad()[2] == 0.0f);
  clear_tape<float>();
}

TEST_SUITE_END();
