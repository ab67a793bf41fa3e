#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hap/array.hpp"

namespace hap {

enum class Op : uint8_t {
  Constant,
  MatMul,
  Transpose,
  Reshape,
  Add,
  BiasAdd,
  Mul,
  ScalarAffine,
  SoftmaxLastDim,
  LogSoftmaxLastDim,
  LayerNorm,
  Gelu,
  Sigmoid,
  Log,
  Exp,
  Clip,
  EmbeddingGather,
  ReduceSum,
  SelectIndex,
  GatedMix,
};

const char* op_name(Op op);

struct OpAttrs {
  double alpha = 1.0;  // ScalarAffine: alpha*x + beta
  double beta = 0.0;
  double lo = 0.0;  // Clip bounds
  double hi = 0.0;
  double eps = 1e-5;      // LayerNorm
  int64_t axis = 0;       // SelectIndex
  int64_t index = 0;      // SelectIndex
  Shape shape;            // Reshape target
  std::vector<int64_t> ids;  // EmbeddingGather row ids; GatedMix z indices
};

struct NodeRef {
  int32_t id = -1;
  bool valid() const { return id >= 0; }
};

// Reverse-mode tape over Arrays. Single-threaded per instance; weights and
// caches are attached as borrowed constants so parallel tapes can share them.
class Tape {
 public:
  Tape();

  // Owned leaf. Checks finiteness.
  NodeRef constant(Array v);
  // Borrowed leaf; caller keeps `v` alive for the tape's lifetime and has
  // validated it.
  NodeRef constant_ref(const Array* v);
  NodeRef param(Array v);
  NodeRef param_ref(const Array* v);

  // Marks a node as a differentiation root after creation. Must be called
  // before any dependent node is created.
  void set_requires_grad(NodeRef r);
  bool requires_grad(NodeRef r) const;

  NodeRef apply(Op op, const std::vector<NodeRef>& inputs, OpAttrs attrs = {});

  NodeRef matmul(NodeRef a, NodeRef b) { return apply(Op::MatMul, {a, b}); }
  NodeRef transpose(NodeRef a) { return apply(Op::Transpose, {a}); }
  NodeRef reshape(NodeRef a, Shape s) {
    OpAttrs at;
    at.shape = std::move(s);
    return apply(Op::Reshape, {a}, std::move(at));
  }
  NodeRef add(NodeRef a, NodeRef b) { return apply(Op::Add, {a, b}); }
  NodeRef bias_add(NodeRef a, NodeRef b) { return apply(Op::BiasAdd, {a, b}); }
  NodeRef mul(NodeRef a, NodeRef b) { return apply(Op::Mul, {a, b}); }
  NodeRef affine(NodeRef a, double alpha, double beta) {
    OpAttrs at;
    at.alpha = alpha;
    at.beta = beta;
    return apply(Op::ScalarAffine, {a}, std::move(at));
  }
  NodeRef sub(NodeRef a, NodeRef b) { return add(a, affine(b, -1.0, 0.0)); }
  NodeRef softmax(NodeRef a) { return apply(Op::SoftmaxLastDim, {a}); }
  NodeRef log_softmax(NodeRef a) { return apply(Op::LogSoftmaxLastDim, {a}); }
  NodeRef layernorm(NodeRef x, NodeRef gain, NodeRef bias, double eps) {
    OpAttrs at;
    at.eps = eps;
    return apply(Op::LayerNorm, {x, gain, bias}, std::move(at));
  }
  NodeRef gelu(NodeRef a) { return apply(Op::Gelu, {a}); }
  NodeRef sigmoid(NodeRef a) { return apply(Op::Sigmoid, {a}); }
  NodeRef log_(NodeRef a) { return apply(Op::Log, {a}); }
  NodeRef exp_(NodeRef a) { return apply(Op::Exp, {a}); }
  NodeRef clip(NodeRef a, double lo, double hi) {
    OpAttrs at;
    at.lo = lo;
    at.hi = hi;
    return apply(Op::Clip, {a}, std::move(at));
  }
  NodeRef gather_rows(NodeRef table, std::vector<int64_t> ids) {
    OpAttrs at;
    at.ids = std::move(ids);
    return apply(Op::EmbeddingGather, {table}, std::move(at));
  }
  NodeRef sum(NodeRef a) { return apply(Op::ReduceSum, {a}); }
  NodeRef select(NodeRef a, int64_t axis, int64_t index) {
    OpAttrs at;
    at.axis = axis;
    at.index = index;
    return apply(Op::SelectIndex, {a}, std::move(at));
  }
  // out = sum_i z[z_ids[i]] * a_i + (1 - z[z_ids[i]]) * c_i.
  // inputs: [z, a_0..a_{k-1}, c_0..c_{k-1}].
  NodeRef gated_mix(NodeRef z, const std::vector<NodeRef>& clean,
                    const std::vector<NodeRef>& corrupt, std::vector<int64_t> z_ids);

  const Array& value(NodeRef r) const;
  // Populates adjoints for every grad-requiring node reachable from loss.
  void backward(NodeRef loss);
  // Null when the node got no adjoint (not on a path to the loss).
  const Array* adjoint_ptr(NodeRef r) const;
  // Zero array of the node's shape when absent.
  Array adjoint(NodeRef r) const;

  size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Op op = Op::Constant;
    bool requires_grad = false;
    OpAttrs attrs;
    std::vector<int32_t> inputs;
    Array value_storage;
    const Array* external = nullptr;  // set for borrowed constants
    Array adjoint;
    bool has_adjoint = false;
  };

  const Array& val(int32_t id) const {
    const Node& n = nodes_[static_cast<size_t>(id)];
    return n.external ? *n.external : n.value_storage;
  }
  Array& adj(int32_t id);
  void backward_node(int32_t id);

  std::vector<Node> nodes_;
};

// Counters for the pass-budget assertions. Forward passes are counted by the
// model module; every Tape::backward counts one backward pass.
struct PassCounts {
  uint64_t forward = 0;
  uint64_t backward = 0;
};
PassCounts pass_counts();
void reset_pass_counts();
void count_forward_pass();

// Eager single-op evaluation. Validates shapes and finiteness of inputs.
Array forward_primitive(Op op, const std::vector<Array>& inputs, OpAttrs attrs = {});

// Max over all input coordinates of |analytic - central difference| /
// max(|analytic|, 1e-8), with the loss sum(output * R) for a fixed pseudo-
// random R. The numeric side uses forward evaluations only.
double grad_check(Op op, const std::vector<Array>& point, OpAttrs attrs = {}, double step = 1e-5,
                  uint64_t seed = 0x5eed);

}  // namespace hap
