#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ringsim {

enum class LayerKind { Conv, Fc, Pool, Activation };

const char* layer_kind_name(LayerKind kind);

/// One CNN layer record. Conv/pool layers carry explicit input dimensions so
/// no shape inference across layers is needed; fully-connected layers carry
/// feature counts only.
struct LayerSpec {
  std::string name;
  LayerKind kind = LayerKind::Conv;

  // conv / pool / activation
  int in_h = 0, in_w = 0, in_c = 0;
  int kernel_r = 0, kernel_s = 0;
  int out_channels = 0;  // conv only
  int stride = 1;
  int padding = 0;
  int groups = 1;        // conv only; depthwise when groups == in_c

  // fc
  int in_features = 0;
  int out_features = 0;

  void validate() const;

  /// Output spatial size along one axis: floor((dim + 2 pad - k)/stride) + 1.
  int out_dim(int in_dim, int k) const;
  bool produces_gemm() const { return kind == LayerKind::Conv || kind == LayerKind::Fc; }
  /// Output element count (activation/pool accounting).
  std::int64_t output_elems() const;
};

/// One general matrix multiplication extracted from a layer.
struct GemmOp {
  std::int64_t rows = 0;   // output channels
  std::int64_t inner = 0;  // reduction length
  std::int64_t cols = 0;   // output spatial positions
  std::string source_layer;

  std::int64_t mac_count() const { return rows * inner * cols; }
};

struct Model {
  std::string name;
  std::vector<LayerSpec> layers;
};

/// Load a model description from JSON. Schema violations report the layer
/// index/name and offending field. The layer list must be nonempty.
Model load_model(const std::string& path);

/// Convert one conv/fc layer to its GEMM operations. Grouped convolutions
/// emit one op per group with inner = (C/groups) R S. Non-GEMM layer kinds
/// are rejected.
std::vector<GemmOp> im2col(const LayerSpec& layer);

/// All GEMMs of a model, in layer order.
std::vector<GemmOp> model_gemms(const Model& model);

struct WorkloadSummary {
  std::int64_t total_macs = 0;
  std::int64_t gemm_count = 0;
  std::int64_t max_inner = 0;
};

WorkloadSummary workload_summary(const Model& model);

/// Path of a bundled model description under the data directory.
std::string bundled_model_path(const std::string& model_name);

}  // namespace ringsim
