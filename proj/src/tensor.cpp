#include "smartpde/tensor.hpp"

#include <cmath>
#include <sstream>

namespace smartpde::ad {

std::size_t shape_numel(const Shape& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

std::string shape_str(const Shape& shape) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ",";
    os << shape[i];
  }
  os << ")";
  return os.str();
}

Tensor::Tensor(Shape s, std::vector<double> v, bool rg)
    : shape(std::move(s)), values(std::move(v)), requires_grad(rg) {
  if (shape_numel(shape) != values.size()) {
    throw ShapeMismatch("tensor shape " + shape_str(shape) + " does not match " +
                        std::to_string(values.size()) + " values");
  }
}

Tensor Tensor::zeros(Shape s, bool rg) {
  std::vector<double> v(shape_numel(s), 0.0);
  return Tensor(std::move(s), std::move(v), rg);
}

Tensor Tensor::scalar(double v, bool rg) { return Tensor({1}, {v}, rg); }

bool Tensor::all_finite() const {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

const Tensor& GradMap::at(Var v) const {
  if (!has(v)) {
    throw std::runtime_error("no gradient recorded for node " + std::to_string(v.id));
  }
  return grads_[v.id];
}

namespace {

bool same_shape(const Shape& a, const Shape& b) { return a == b; }

// (rows, cols) view of a tensor shape for matmul: rank-2 only.
void matmul_dims(const Shape& a, const Shape& b, std::size_t& m, std::size_t& k,
                 std::size_t& n) {
  if (a.size() != 2 || b.size() != 2 || a[1] != b[0]) {
    throw ShapeMismatch("matmul shapes " + shape_str(a) + " x " + shape_str(b));
  }
  m = a[0];
  k = a[1];
  n = b[1];
}

// C += A (m,k) * B (k,n), row-major, ikj order for contiguous inner access.
void gemm_acc(const double* A, const double* B, double* C, std::size_t m,
              std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* a_row = A + i * k;
    double* c_row = C + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double a = a_row[p];
      if (a == 0.0) continue;
      const double* b_row = B + p * n;
      for (std::size_t j = 0; j < n; ++j) c_row[j] += a * b_row[j];
    }
  }
}

// C += A^T (k,m)^T... gradient helpers for matmul backward.
// dA += dC (m,n) * B^T (n,k)
void gemm_bt_acc(const double* dC, const double* B, double* dA, std::size_t m,
                 std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* dc_row = dC + i * n;
    double* da_row = dA + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double* b_row = B + p * n;
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += dc_row[j] * b_row[j];
      da_row[p] += acc;
    }
  }
}

// dB += A^T (k,m) * dC (m,n)
void gemm_at_acc(const double* A, const double* dC, double* dB, std::size_t m,
                 std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* a_row = A + i * k;
    const double* dc_row = dC + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double a = a_row[p];
      if (a == 0.0) continue;
      double* db_row = dB + p * n;
      for (std::size_t j = 0; j < n; ++j) db_row[j] += a * dc_row[j];
    }
  }
}

}  // namespace

const Tape::Node& Tape::node(Var v) const {
  return nodes_[static_cast<std::size_t>(check(v))];
}

int Tape::check(Var v) const {
  if (v.id < 0 || static_cast<std::size_t>(v.id) >= nodes_.size()) {
    throw std::runtime_error("invalid tape handle");
  }
  return v.id;
}

Tape::Node& Tape::push(OpKind op, int a, int b, Shape shape) {
  Node n;
  n.op = op;
  n.a = a;
  n.b = b;
  n.shape = std::move(shape);
  n.values.assign(shape_numel(n.shape), 0.0);
  n.needs_grad = (a >= 0 && nodes_[a].needs_grad) || (b >= 0 && nodes_[b].needs_grad);
  nodes_.push_back(std::move(n));
  return nodes_.back();
}

Var Tape::leaf(const Tensor& t) { return leaf(t.shape, t.values, t.requires_grad); }

Var Tape::leaf(Shape shape, std::vector<double> values, bool requires_grad) {
  if (shape_numel(shape) != values.size()) {
    throw ShapeMismatch("leaf shape " + shape_str(shape) + " does not match " +
                        std::to_string(values.size()) + " values");
  }
  Node n;
  n.shape = std::move(shape);
  n.values = std::move(values);
  n.is_leaf = true;
  n.leaf_requires_grad = requires_grad;
  n.needs_grad = requires_grad;
  nodes_.push_back(std::move(n));
  return Var{static_cast<int>(nodes_.size() - 1)};
}

Var Tape::matmul(Var va, Var vb) {
  const int ia = check(va), ib = check(vb);
  std::size_t m, k, n;
  matmul_dims(nodes_[ia].shape, nodes_[ib].shape, m, k, n);
  Node& out = push(OpKind::kMatmul, ia, ib, Shape{m, n});
  gemm_acc(nodes_[ia].values.data(), nodes_[ib].values.data(), out.values.data(), m, k, n);
  return Var{static_cast<int>(nodes_.size() - 1)};
}

// add/sub/elementwise_mul accept identical shapes or a scalar on either side.
Var Tape::add(Var va, Var vb) {
  const int ia = check(va), ib = check(vb);
  const Node& a = nodes_[ia];
  const Node& b = nodes_[ib];
  if (same_shape(a.shape, b.shape)) {
    Node& out = push(OpKind::kAdd, ia, ib, a.shape);
    for (std::size_t i = 0; i < out.values.size(); ++i)
      out.values[i] = a.values[i] + b.values[i];
  } else if (b.values.size() == 1) {
    Node& out = push(OpKind::kAdd, ia, ib, a.shape);
    const double s = b.values[0];
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a.values[i] + s;
  } else if (a.values.size() == 1) {
    Node& out = push(OpKind::kAdd, ia, ib, b.shape);
    const double s = a.values[0];
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = s + b.values[i];
  } else {
    throw ShapeMismatch("add shapes " + shape_str(a.shape) + " vs " + shape_str(b.shape));
  }
  return Var{static_cast<int>(nodes_.size() - 1)};
}

Var Tape::sub(Var va, Var vb) {
  const int ia = check(va), ib = check(vb);
  const Node& a = nodes_[ia];
  const Node& b = nodes_[ib];
  if (same_shape(a.shape, b.shape)) {
    Node& out = push(OpKind::kSub, ia, ib, a.shape);
    for (std::size_t i = 0; i < out.values.size(); ++i)
      out.values[i] = a.values[i] - b.values[i];
  } else if (b.values.size() == 1) {
    Node& out = push(OpKind::kSub, ia, ib, a.shape);
    const double s = b.values[0];
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a.values[i] - s;
  } else if (a.values.size() == 1) {
    Node& out = push(OpKind::kSub, ia, ib, b.shape);
    const double s = a.values[0];
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = s - b.values[i];
  } else {
    throw ShapeMismatch("sub shapes " + shape_str(a.shape) + " vs " + shape_str(b.shape));
  }
  return Var{static_cast<int>(nodes_.size() - 1)};
}

Var Tape::elementwise_mul(Var va, Var vb) {
  const int ia = check(va), ib = check(vb);
  const Node& a = nodes_[ia];
  const Node& b = nodes_[ib];
  if (same_shape(a.shape, b.shape)) {
    Node& out = push(OpKind::kElementwiseMul, ia, ib, a.shape);
    for (std::size_t i = 0; i < out.values.size(); ++i)
      out.values[i] = a.values[i] * b.values[i];
  } else if (b.values.size() == 1) {
    Node& out = push(OpKind::kElementwiseMul, ia, ib, a.shape);
    const double s = b.values[0];
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a.values[i] * s;
  } else if (a.values.size() == 1) {
    Node& out = push(OpKind::kElementwiseMul, ia, ib, b.shape);
    const double s = a.values[0];
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = s * b.values[i];
  } else {
    throw ShapeMismatch("elementwise_mul shapes " + shape_str(a.shape) + " vs " +
                        shape_str(b.shape));
  }
  return Var{static_cast<int>(nodes_.size() - 1)};
}

Var Tape::scalar_mul(Var va, double c) {
  const int ia = check(va);
  const Node& a = nodes_[ia];
  Node& out = push(OpKind::kScalarMul, ia, -1, a.shape);
  out.scalar = c;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = c * a.values[i];
  return Var{static_cast<int>(nodes_.size() - 1)};
}

Var Tape::tanh(Var va) {
  const int ia = check(va);
  const Node& a = nodes_[ia];
  Node& out = push(OpKind::kTanh, ia, -1, a.shape);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = std::tanh(a.values[i]);
  return Var{static_cast<int>(nodes_.size() - 1)};
}

Var Tape::sin(Var va) {
  const int ia = check(va);
  const Node& a = nodes_[ia];
  Node& out = push(OpKind::kSin, ia, -1, a.shape);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = std::sin(a.values[i]);
  return Var{static_cast<int>(nodes_.size() - 1)};
}

Var Tape::sum(Var va) {
  const int ia = check(va);
  const Node& a = nodes_[ia];
  Node& out = push(OpKind::kSum, ia, -1, Shape{1});
  double acc = 0.0;
  for (double v : a.values) acc += v;
  out.values[0] = acc;
  return Var{static_cast<int>(nodes_.size() - 1)};
}

Var Tape::mean(Var va) {
  const int ia = check(va);
  const Node& a = nodes_[ia];
  Node& out = push(OpKind::kMean, ia, -1, Shape{1});
  double acc = 0.0;
  for (double v : a.values) acc += v;
  out.values[0] = acc / static_cast<double>(a.values.size());
  return Var{static_cast<int>(nodes_.size() - 1)};
}

Var Tape::square(Var va) {
  const int ia = check(va);
  const Node& a = nodes_[ia];
  Node& out = push(OpKind::kSquare, ia, -1, a.shape);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = a.values[i] * a.values[i];
  return Var{static_cast<int>(nodes_.size() - 1)};
}

Var Tape::forward_op(OpKind kind, const std::vector<Var>& operands, double scalar) {
  auto unary = [&](Var (Tape::*f)(Var)) {
    if (operands.size() != 1) throw ShapeMismatch("unary op expects 1 operand");
    return (this->*f)(operands[0]);
  };
  auto binary = [&](Var (Tape::*f)(Var, Var)) {
    if (operands.size() != 2) throw ShapeMismatch("binary op expects 2 operands");
    return (this->*f)(operands[0], operands[1]);
  };
  switch (kind) {
    case OpKind::kMatmul: return binary(&Tape::matmul);
    case OpKind::kAdd: return binary(&Tape::add);
    case OpKind::kSub: return binary(&Tape::sub);
    case OpKind::kElementwiseMul: return binary(&Tape::elementwise_mul);
    case OpKind::kScalarMul:
      if (operands.size() != 1) throw ShapeMismatch("scalar_mul expects 1 operand");
      return scalar_mul(operands[0], scalar);
    case OpKind::kTanh: return unary(&Tape::tanh);
    case OpKind::kSin: return unary(&Tape::sin);
    case OpKind::kSum: return unary(&Tape::sum);
    case OpKind::kMean: return unary(&Tape::mean);
    case OpKind::kSquare: return unary(&Tape::square);
  }
  throw std::runtime_error("unknown op kind");
}

Tensor Tape::tensor(Var v) const {
  const Node& n = node(v);
  return Tensor(n.shape, n.values, n.is_leaf && n.leaf_requires_grad);
}

double Tape::value(Var v) const {
  const Node& n = node(v);
  if (n.values.size() != 1) throw NotScalar("value() on non-scalar node");
  return n.values[0];
}

GradMap Tape::backward(Var loss) const {
  const int root = check(loss);
  const Node& root_node = nodes_[root];
  if (root_node.values.size() != 1) {
    throw NotScalar("backward requires a scalar loss, got shape " +
                    shape_str(root_node.shape));
  }

  // Adjoint buffers, allocated lazily per node. Creation order is a valid
  // topological order, so one reverse sweep visits every node exactly once.
  std::vector<std::vector<double>> adj(nodes_.size());
  auto adj_of = [&](int id) -> std::vector<double>& {
    if (adj[id].empty()) adj[id].assign(nodes_[id].values.size(), 0.0);
    return adj[id];
  };
  adj_of(root).assign(1, 1.0);

  for (int id = root; id >= 0; --id) {
    const Node& n = nodes_[id];
    if (n.is_leaf || !n.needs_grad || adj[id].empty()) continue;
    const std::vector<double>& up = adj[id];
    const bool a_needs = n.a >= 0 && nodes_[n.a].needs_grad;
    const bool b_needs = n.b >= 0 && nodes_[n.b].needs_grad;
    if (!a_needs && !b_needs) continue;

    switch (n.op) {
      case OpKind::kMatmul: {
        const Node& a = nodes_[n.a];
        const Node& b = nodes_[n.b];
        const std::size_t m = a.shape[0], k = a.shape[1], cols = b.shape[1];
        if (a_needs)
          gemm_bt_acc(up.data(), b.values.data(), adj_of(n.a).data(), m, k, cols);
        if (b_needs)
          gemm_at_acc(a.values.data(), up.data(), adj_of(n.b).data(), m, k, cols);
        break;
      }
      case OpKind::kAdd:
      case OpKind::kSub: {
        const double bsign = n.op == OpKind::kAdd ? 1.0 : -1.0;
        if (a_needs) {
          std::vector<double>& ga = adj_of(n.a);
          if (ga.size() == up.size()) {
            for (std::size_t i = 0; i < up.size(); ++i) ga[i] += up[i];
          } else {  // scalar operand broadcast over the result
            double acc = 0.0;
            for (double u : up) acc += u;
            ga[0] += acc;
          }
        }
        if (b_needs) {
          std::vector<double>& gb = adj_of(n.b);
          if (gb.size() == up.size()) {
            for (std::size_t i = 0; i < up.size(); ++i) gb[i] += bsign * up[i];
          } else {
            double acc = 0.0;
            for (double u : up) acc += u;
            gb[0] += bsign * acc;
          }
        }
        break;
      }
      case OpKind::kElementwiseMul: {
        const Node& a = nodes_[n.a];
        const Node& b = nodes_[n.b];
        if (a_needs) {
          std::vector<double>& ga = adj_of(n.a);
          if (ga.size() == up.size()) {
            if (b.values.size() == 1) {
              for (std::size_t i = 0; i < up.size(); ++i) ga[i] += up[i] * b.values[0];
            } else {
              for (std::size_t i = 0; i < up.size(); ++i) ga[i] += up[i] * b.values[i];
            }
          } else {
            double acc = 0.0;
            for (std::size_t i = 0; i < up.size(); ++i) acc += up[i] * b.values[i];
            ga[0] += acc;
          }
        }
        if (b_needs) {
          std::vector<double>& gb = adj_of(n.b);
          if (gb.size() == up.size()) {
            if (a.values.size() == 1) {
              for (std::size_t i = 0; i < up.size(); ++i) gb[i] += up[i] * a.values[0];
            } else {
              for (std::size_t i = 0; i < up.size(); ++i) gb[i] += up[i] * a.values[i];
            }
          } else {
            double acc = 0.0;
            for (std::size_t i = 0; i < up.size(); ++i) acc += up[i] * a.values[i];
            gb[0] += acc;
          }
        }
        break;
      }
      case OpKind::kScalarMul: {
        std::vector<double>& ga = adj_of(n.a);
        for (std::size_t i = 0; i < up.size(); ++i) ga[i] += n.scalar * up[i];
        break;
      }
      case OpKind::kTanh: {
        std::vector<double>& ga = adj_of(n.a);
        for (std::size_t i = 0; i < up.size(); ++i)
          ga[i] += up[i] * (1.0 - n.values[i] * n.values[i]);
        break;
      }
      case OpKind::kSin: {
        const Node& a = nodes_[n.a];
        std::vector<double>& ga = adj_of(n.a);
        for (std::size_t i = 0; i < up.size(); ++i)
          ga[i] += up[i] * std::cos(a.values[i]);
        break;
      }
      case OpKind::kSum: {
        std::vector<double>& ga = adj_of(n.a);
        for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += up[0];
        break;
      }
      case OpKind::kMean: {
        std::vector<double>& ga = adj_of(n.a);
        const double w = up[0] / static_cast<double>(ga.size());
        for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += w;
        break;
      }
      case OpKind::kSquare: {
        const Node& a = nodes_[n.a];
        std::vector<double>& ga = adj_of(n.a);
        for (std::size_t i = 0; i < up.size(); ++i)
          ga[i] += up[i] * 2.0 * a.values[i];
        break;
      }
    }
  }

  GradMap out(nodes_.size());
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const Node& n = nodes_[id];
    if (!n.is_leaf || !n.leaf_requires_grad) continue;
    // Unused leaves report a zero gradient of the leaf's shape.
    if (adj[id].empty()) adj[id].assign(n.values.size(), 0.0);
    out.grads_[id] = Tensor(n.shape, std::move(adj[id]));
  }
  return out;
}

}  // namespace smartpde::ad
