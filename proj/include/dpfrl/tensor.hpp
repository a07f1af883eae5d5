// Copyright 2026 The DPFRL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense tensors with a reverse-mode gradient tape.
//
// Every tensor that depends on a trainable leaf is recorded on the tape and
// receives a monotonically increasing node id. Because a node can only be
// created after its parents, ids give a valid topological order; backward()
// walks the reachable nodes in decreasing id order and visits each once.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpfrl::ad {

using Shape = std::vector<std::size_t>;

std::size_t numel(const Shape& shape);
std::string to_string(const Shape& shape);

/// Shape mismatch between operands of an op.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an op (log/sqrt of a negative).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// API misuse, e.g. backward() from a non-scalar root.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Non-finite value found by check_finite().
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
struct Node {
  Shape shape;
  std::vector<T> value;
  std::vector<T> grad;  // lazily allocated
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward_fn;
  std::uint64_t id = 0;  // 0 means off-tape constant
  bool requires_grad = false;
  const char* op = "leaf";

  std::vector<T>& grad_buffer() {
    if (grad.empty()) grad.assign(value.size(), T(0));
    return grad;
  }
};

std::uint64_t next_node_id();

template <typename T>
class Tensor {
 public:
  using value_type = T;

  Tensor() = default;
  explicit Tensor(std::shared_ptr<Node<T>> node) : node_(std::move(node)) {}

  static Tensor constant(Shape shape, std::vector<T> values);
  static Tensor full(Shape shape, T fill);
  static Tensor zeros(Shape shape) { return full(std::move(shape), T(0)); }
  static Tensor scalar(T v) { return constant({1}, {v}); }
  /// Trainable leaf; always recorded on the tape.
  static Tensor parameter(Shape shape, std::vector<T> values);

  bool defined() const { return static_cast<bool>(node_); }
  const Shape& shape() const { return node_->shape; }
  std::size_t dim(std::size_t axis) const { return node_->shape.at(axis); }
  std::size_t rank() const { return node_->shape.size(); }
  std::size_t numel() const { return node_->value.size(); }

  std::span<const T> values() const { return node_->value; }
  /// Direct write access. Only meaningful for leaves (optimizer, grad checks).
  std::span<T> mutable_values() { return node_->value; }
  T item() const;
  T at(std::size_t flat) const { return node_->value.at(flat); }

  /// Gradient after backward(); empty span if nothing flowed here.
  std::span<const T> grad() const { return node_->grad; }
  std::span<T> mutable_grad() { return node_->grad_buffer(); }
  bool has_grad() const { return !node_->grad.empty(); }
  void zero_grad() { node_->grad.clear(); }

  bool on_tape() const { return node_->requires_grad; }
  std::optional<std::uint64_t> node_id() const {
    if (!node_->requires_grad) return std::nullopt;
    return node_->id;
  }
  const char* op_name() const { return node_->op; }

  const std::shared_ptr<Node<T>>& node() const { return node_; }

 private:
  std::shared_ptr<Node<T>> node_;
};

/// Accumulates d(root)/d(node) into every reachable on-tape node.
template <typename T>
void backward(const Tensor<T>& root);

/// Throws NumericError naming `what` and the first offending index.
template <typename T>
void check_finite(const Tensor<T>& t, const std::string& what);

template <typename T>
bool all_finite(std::span<const T> values);

extern template class Tensor<float>;
extern template class Tensor<double>;

}  // namespace dpfrl::ad
