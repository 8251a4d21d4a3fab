#pragma once

// Finite-difference gradient checking used across the test suites. Runs in
// f64 so the comparison tolerance reflects the math, not the storage type.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "advnmt/ops.hpp"

namespace advtest {

struct GradCheckResult {
  bool ok = true;
  std::string detail;
  double worst_rel = 0.0;
};

// loss_fn must rebuild the graph from the current parameter values on every
// call and return the scalar loss tensor.
inline GradCheckResult check_gradients(std::vector<advnmt::TensorT<double>> params,
                                       const std::function<advnmt::TensorT<double>()>& loss_fn,
                                       double h = 1e-3, double tol = 1e-3) {
  using advnmt::Tape;
  GradCheckResult res;
  auto& tape = Tape<double>::get();
  tape.clear();
  for (auto& p : params) p.zero_grad();
  auto loss = loss_fn();
  tape.backward(loss);
  std::vector<std::vector<double>> analytic;
  for (auto& p : params) analytic.push_back(p.grad());
  tape.clear();

  for (std::size_t pi = 0; pi < params.size(); ++pi) {
    auto& p = params[pi];
    for (std::size_t j = 0; j < p.numel(); ++j) {
      const double orig = p.data()[j];
      p.data()[j] = orig + h;
      double lplus, lminus;
      {
        advnmt::NoGradGuardT<double> ng;
        lplus = loss_fn().item();
        p.data()[j] = orig - h;
        lminus = loss_fn().item();
      }
      p.data()[j] = orig;
      const double fd = (lplus - lminus) / (2.0 * h);
      const double an = analytic[pi][j];
      const double denom = std::max({std::fabs(fd), std::fabs(an), 1e-6});
      const double rel = std::fabs(fd - an) / denom;
      res.worst_rel = std::max(res.worst_rel, rel);
      if (std::fabs(fd - an) > tol * denom && std::fabs(fd - an) > 1e-7) {
        res.ok = false;
        res.detail = "param " + std::to_string(pi) + " coord " + std::to_string(j) +
                     ": analytic " + std::to_string(an) + " vs fd " + std::to_string(fd);
        return res;
      }
    }
  }
  return res;
}

}  // namespace advtest
