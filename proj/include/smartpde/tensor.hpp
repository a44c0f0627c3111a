#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smartpde/errors.hpp"

namespace smartpde::ad {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& shape);
std::string shape_str(const Shape& shape);

// Dense row-major float64 tensor. Plain value type; autograd state lives on
// the Tape, not here.
struct Tensor {
  Shape shape;
  std::vector<double> values;
  bool requires_grad = false;

  Tensor() = default;
  Tensor(Shape s, std::vector<double> v, bool rg = false);

  static Tensor zeros(Shape s, bool rg = false);
  static Tensor scalar(double v, bool rg = false);

  std::size_t size() const { return values.size(); }
  bool is_scalar() const { return values.size() == 1; }
  bool all_finite() const;

  double operator()(std::size_t i, std::size_t j) const {
    return values[i * shape[1] + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return values[i * shape[1] + j];
  }
};

enum class OpKind {
  kMatmul,
  kAdd,
  kSub,
  kElementwiseMul,
  kScalarMul,
  kTanh,
  kSin,
  kSum,
  kMean,
  kSquare,
};

// Handle to a node on a Tape. Valid only for the tape that produced it and
// only until that tape is reset.
struct Var {
  int id = -1;
  bool valid() const { return id >= 0; }
};

// Gradients of one backward pass, indexed by leaf Var.
class GradMap {
 public:
  explicit GradMap(std::size_t n) : grads_(n) {}

  bool has(Var v) const {
    return v.id >= 0 && static_cast<std::size_t>(v.id) < grads_.size() &&
           !grads_[v.id].values.empty();
  }
  const Tensor& at(Var v) const;

 private:
  friend class Tape;
  std::vector<Tensor> grads_;
};

// Define-by-run reverse-mode tape over the fixed op set. The tape is rebuilt
// per forward pass; reset() keeps node storage allocated so rebuilding is
// cheap inside training loops.
class Tape {
 public:
  struct Node {
    OpKind op = OpKind::kSum;
    int a = -1;
    int b = -1;
    double scalar = 0.0;  // kScalarMul coefficient
    Shape shape;
    std::vector<double> values;
    bool needs_grad = false;
    bool is_leaf = false;
    bool leaf_requires_grad = false;
  };

  Var leaf(const Tensor& t);
  Var leaf(Shape shape, std::vector<double> values, bool requires_grad);

  Var matmul(Var a, Var b);
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var elementwise_mul(Var a, Var b);
  Var scalar_mul(Var a, double c);
  Var tanh(Var a);
  Var sin(Var a);
  Var sum(Var a);
  Var mean(Var a);
  Var square(Var a);

  // Dispatch by kind; unary kinds expect one operand, binary kinds two.
  Var forward_op(OpKind kind, const std::vector<Var>& operands, double scalar = 0.0);

  GradMap backward(Var loss) const;

  const Shape& shape(Var v) const { return node(v).shape; }
  const std::vector<double>& values(Var v) const { return node(v).values; }
  Tensor tensor(Var v) const;
  double value(Var v) const;  // scalar nodes only

  std::size_t size() const { return nodes_.size(); }
  void reset() { nodes_.clear(); }

 private:
  const Node& node(Var v) const;
  Node& push(OpKind op, int a, int b, Shape shape);
  int check(Var v) const;

  std::vector<Node> nodes_;
};

}  // namespace smartpde::ad
