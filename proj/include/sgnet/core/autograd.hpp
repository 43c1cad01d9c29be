// Copyright 2026 The SGNet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SGNET_CORE_AUTOGRAD_HPP_
#define SGNET_CORE_AUTOGRAD_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_set>
#include <vector>

#include "sgnet/core/tensor.hpp"

namespace sgnet {

namespace detail {
inline uint64_t& node_seq_counter() {
  thread_local uint64_t counter = 0;
  return counter;
}
inline bool& grad_enabled_flag() {
  thread_local bool enabled = true;
  return enabled;
}
}  // namespace detail

// Define-by-run graph node. Ops allocate nodes, record their parents and a
// closure that routes the node's gradient into the parents' gradients.
template <typename T>
struct Node {
  Tensor<T> value;
  Tensor<T> grad;  // undefined until first accumulation
  bool requires_grad = false;
  uint64_t seq = 0;
  std::vector<std::shared_ptr<Node<T>>> parents;
  std::function<void(Node<T>&)> backprop;

  Tensor<T>& ensure_grad() {
    if (!grad.defined()) grad = Tensor<T>::zeros(value.shape());
    return grad;
  }

  void accumulate(const T* g, int64_t n) {
    Tensor<T>& dst = ensure_grad();
    T* d = dst.data();
    for (int64_t i = 0; i < n; ++i) d[i] += g[i];
  }
};

template <typename T>
using Var = std::shared_ptr<Node<T>>;

// While a NoGradGuard is alive, ops produce plain constants: no parents, no
// backprop closures, so intermediate activations die as soon as possible.
class NoGradGuard {
 public:
  NoGradGuard() : prev_(detail::grad_enabled_flag()) { detail::grad_enabled_flag() = false; }
  ~NoGradGuard() { detail::grad_enabled_flag() = prev_; }
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool prev_;
};

inline bool grad_enabled() { return detail::grad_enabled_flag(); }

template <typename T>
Var<T> make_node(Tensor<T> value) {
  auto n = std::make_shared<Node<T>>();
  n->value = std::move(value);
  n->seq = ++detail::node_seq_counter();
  return n;
}

// Leaf holding trainable state.
template <typename T>
Var<T> make_param(Tensor<T> value) {
  auto n = make_node<T>(std::move(value));
  n->requires_grad = true;
  return n;
}

template <typename T>
Var<T> make_const(Tensor<T> value) {
  return make_node<T>(std::move(value));
}

template <typename T>
bool any_requires_grad(const std::vector<Var<T>>& parents) {
  if (!grad_enabled()) return false;
  for (const auto& p : parents)
    if (p && p->requires_grad) return true;
  return false;
}

// Shares the value but cuts the graph.
template <typename T>
Var<T> detach(const Var<T>& v) {
  return make_const<T>(v->value);
}

// Reverse-mode sweep from `root` (seeded with ones). Nodes created by ops get
// increasing sequence numbers, so replaying reachable nodes in decreasing
// order is a valid topological order.
template <typename T>
void backward(const Var<T>& root) {
  std::vector<Node<T>*> order;
  std::unordered_set<Node<T>*> seen;
  std::vector<Node<T>*> stack{root.get()};
  seen.insert(root.get());
  while (!stack.empty()) {
    Node<T>* n = stack.back();
    stack.pop_back();
    order.push_back(n);
    for (const auto& p : n->parents) {
      if (p && p->requires_grad && seen.insert(p.get()).second) stack.push_back(p.get());
    }
  }
  std::sort(order.begin(), order.end(),
            [](const Node<T>* a, const Node<T>* b) { return a->seq > b->seq; });

  root->ensure_grad();
  T* g = root->grad.data();
  for (int64_t i = 0; i < root->grad.numel(); ++i) g[i] += T(1);

  for (Node<T>* n : order) {
    if (n->backprop && n->grad.defined()) n->backprop(*n);
  }
}

}  // namespace sgnet

#endif  // SGNET_CORE_AUTOGRAD_HPP_
