#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace advnmt {

// Reverse-mode tensor engine. Values are stored row-major; the scalar type
// is a template parameter so the same op library runs in f32 for training
// and in f64 for the finite-difference check mode used by the tests.
//
// Every op that consumes a tensor requiring gradients records a node on a
// thread-local tape (a Wengert list, which is already topologically
// ordered). backward() replays the list in reverse, visiting each node at
// most once and accumulating gradients additively across fan-out.

template <typename S>
struct TensorImpl {
  std::vector<int> shape;
  std::vector<S> v;  // values
  std::vector<S> g;  // gradient, sized lazily on first backward touch
  bool requires_grad = false;
  bool has_producer = false;       // true iff some tape node outputs this
  std::uint64_t mark_epoch = 0;    // backward-pass reachability mark

  std::size_t numel() const { return v.size(); }
};

inline std::string shape_str(const std::vector<int>& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

template <typename S>
class TensorT {
 public:
  using Impl = TensorImpl<S>;

  TensorT() = default;

  explicit TensorT(std::vector<int> shape, S fill = S(0), bool requires_grad = false)
      : p_(std::make_shared<Impl>()) {
    std::size_t n = 1;
    for (int d : shape) {
      if (d <= 0) throw std::invalid_argument("tensor: nonpositive dim in " + shape_str(shape));
      n *= static_cast<std::size_t>(d);
    }
    p_->shape = std::move(shape);
    p_->v.assign(n, fill);
    p_->requires_grad = requires_grad;
  }

  TensorT(std::vector<int> shape, std::vector<S> data, bool requires_grad = false)
      : p_(std::make_shared<Impl>()) {
    std::size_t n = 1;
    for (int d : shape) n *= static_cast<std::size_t>(d);
    if (n != data.size())
      throw std::invalid_argument("tensor: data size " + std::to_string(data.size()) +
                                  " does not match shape " + shape_str(shape));
    p_->shape = std::move(shape);
    p_->v = std::move(data);
    p_->requires_grad = requires_grad;
  }

  bool defined() const { return static_cast<bool>(p_); }
  const std::vector<int>& shape() const { return p_->shape; }
  std::size_t numel() const { return p_->numel(); }
  int dim(int i) const { return p_->shape[static_cast<std::size_t>(i)]; }
  int ndim() const { return static_cast<int>(p_->shape.size()); }

  // 2-d views: a 1-d tensor [n] reads as a single row.
  int rows() const { return ndim() == 1 ? 1 : p_->shape[0]; }
  int cols() const { return ndim() == 1 ? p_->shape[0] : p_->shape[1]; }

  std::vector<S>& data() { return p_->v; }
  const std::vector<S>& data() const { return p_->v; }
  S* ptr() { return p_->v.data(); }
  const S* ptr() const { return p_->v.data(); }

  S item() const {
    if (numel() != 1) throw std::invalid_argument("item: tensor is not scalar, shape " + shape_str(shape()));
    return p_->v[0];
  }

  S at(int r, int c) const { return p_->v[static_cast<std::size_t>(r) * cols() + c]; }
  S& at(int r, int c) { return p_->v[static_cast<std::size_t>(r) * cols() + c]; }

  bool requires_grad() const { return p_->requires_grad; }
  void set_requires_grad(bool b) { p_->requires_grad = b; }

  bool has_grad() const { return !p_->g.empty(); }
  // Gradient buffer; empty until a backward pass touched this tensor.
  const std::vector<S>& grad() const {
    if (p_->g.empty()) throw std::runtime_error("grad: no gradient recorded for this tensor");
    return p_->g;
  }
  void zero_grad() { p_->g.assign(p_->numel(), S(0)); }
  void drop_grad() { p_->g.clear(); }

  std::shared_ptr<Impl> impl() const { return p_; }

  TensorT clone() const {
    TensorT t;
    t.p_ = std::make_shared<Impl>();
    t.p_->shape = p_->shape;
    t.p_->v = p_->v;
    t.p_->requires_grad = p_->requires_grad;
    return t;
  }

  static TensorT from_impl(std::shared_ptr<Impl> p) {
    TensorT t;
    t.p_ = std::move(p);
    return t;
  }

 private:
  std::shared_ptr<Impl> p_;
};

template <typename S>
struct TapeNode {
  const char* op;
  std::shared_ptr<TensorImpl<S>> out;
  std::vector<std::shared_ptr<TensorImpl<S>>> ins;
  std::function<void()> backward;
};

template <typename S>
class Tape {
 public:
  static Tape& get() {
    static thread_local Tape tape;
    return tape;
  }

  bool recording() const { return record_depth_ == 0; }
  void push_no_grad() { ++record_depth_; }
  void pop_no_grad() { --record_depth_; }

  void record(TapeNode<S> node) {
    node.out->has_producer = true;
    nodes_.push_back(std::move(node));
  }

  std::size_t size() const { return nodes_.size(); }

  // Drops every recorded node. Leaf tensors (parameters) and their
  // accumulated gradients are untouched.
  void clear() { nodes_.clear(); }

  // Reverse pass from a scalar root. Each node runs at most once; a node
  // runs only if its output is reachable from the root.
  void backward(const TensorT<S>& root) {
    if (root.numel() != 1)
      throw std::invalid_argument("backward: root must be scalar, shape " + shape_str(root.shape()));
    auto rp = root.impl();
    if (!rp->has_producer)
      throw std::invalid_argument("backward: root is not on the compute graph");
    ++epoch_;
    mark(rp.get());
    rp->g[0] += S(1);
    for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
      if (it->out->mark_epoch == epoch_) it->backward();
    }
  }

  std::uint64_t epoch() const { return epoch_; }

  // Flags an impl as needing gradient flow this pass, zero-initialising its
  // buffer if this is its first touch since creation or zero_grad().
  void mark(TensorImpl<S>* t) {
    if (t->mark_epoch == epoch_) return;
    t->mark_epoch = epoch_;
    if (t->g.size() != t->numel()) t->g.assign(t->numel(), S(0));
  }

 private:
  std::vector<TapeNode<S>> nodes_;
  int record_depth_ = 0;
  std::uint64_t epoch_ = 0;
};

template <typename S>
class NoGradGuardT {
 public:
  NoGradGuardT() { Tape<S>::get().push_no_grad(); }
  ~NoGradGuardT() { Tape<S>::get().pop_no_grad(); }
  NoGradGuardT(const NoGradGuardT&) = delete;
  NoGradGuardT& operator=(const NoGradGuardT&) = delete;
};

using Tensor = TensorT<float>;
using NoGradGuard = NoGradGuardT<float>;

template <typename S>
void backward(const TensorT<S>& root) {
  Tape<S>::get().backward(root);
}

template <typename S>
void clear_tape() {
  Tape<S>::get().clear();
}

}  // namespace advnmt
