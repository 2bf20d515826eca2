#include "ringsim/workload.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "ringsim/errors.hpp"
#include "ringsim/params.hpp"

namespace ringsim {

const char* layer_kind_name(LayerKind kind) {
  switch (kind) {
    case LayerKind::Conv: return "conv";
    case LayerKind::Fc: return "fc";
    case LayerKind::Pool: return "pool";
    case LayerKind::Activation: return "activation";
  }
  return "?";
}

namespace {

LayerKind kind_from_name(const std::string& s, const std::string& where) {
  if (s == "conv") return LayerKind::Conv;
  if (s == "fc") return LayerKind::Fc;
  if (s == "pool") return LayerKind::Pool;
  if (s == "activation") return LayerKind::Activation;
  throw ConfigError(where + ": unknown layer kind '" + s + "'");
}

}  // namespace

void LayerSpec::validate() const {
  const std::string where = "layer '" + name + "'";
  switch (kind) {
    case LayerKind::Conv: {
      if (in_h < 1 || in_w < 1 || in_c < 1) {
        throw ConfigError(where + ": input dims must be positive");
      }
      if (kernel_r < 1 || kernel_s < 1 || out_channels < 1) {
        throw ConfigError(where + ": kernel dims and out_channels must be positive");
      }
      if (stride < 1 || padding < 0) {
        throw ConfigError(where + ": stride must be >= 1, padding >= 0");
      }
      if (groups < 1 || in_c % groups != 0 || out_channels % groups != 0) {
        throw ConfigError(where + ": groups must divide in_c and out_channels");
      }
      if (out_dim(in_h, kernel_r) < 1 || out_dim(in_w, kernel_s) < 1) {
        throw ConfigError(where + ": kernel does not fit the padded input");
      }
      break;
    }
    case LayerKind::Fc:
      if (in_features < 1 || out_features < 1) {
        throw ConfigError(where + ": in_features and out_features must be positive");
      }
      break;
    case LayerKind::Pool:
      if (in_h < 1 || in_w < 1 || in_c < 1 || kernel_r < 1 || stride < 1) {
        throw ConfigError(where + ": pool dims must be positive");
      }
      break;
    case LayerKind::Activation:
      if (in_h < 1 || in_w < 1 || in_c < 1) {
        throw ConfigError(where + ": input dims must be positive");
      }
      break;
  }
}

int LayerSpec::out_dim(int in_dim, int k) const {
  return (in_dim + 2 * padding - k) / stride + 1;
}

std::int64_t LayerSpec::output_elems() const {
  switch (kind) {
    case LayerKind::Conv:
      return static_cast<std::int64_t>(out_dim(in_h, kernel_r)) *
             out_dim(in_w, kernel_s) * out_channels;
    case LayerKind::Fc:
      return out_features;
    case LayerKind::Pool:
      return static_cast<std::int64_t>(out_dim(in_h, kernel_r)) *
             out_dim(in_w, kernel_s) * in_c;
    case LayerKind::Activation:
      return static_cast<std::int64_t>(in_h) * in_w * in_c;
  }
  return 0;
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("model file '" + path + "': " + e.what());
  }

  Model model;
  try {
    model.name = doc.at("model").get<std::string>();
    const auto& layers = doc.at("layers");
    if (!layers.is_array() || layers.empty()) {
      throw ConfigError("model file '" + path + "': 'layers' must be a nonempty array");
    }
    int idx = 0;
    for (const auto& j : layers) {
      const std::string where =
          "model '" + model.name + "' layer " + std::to_string(idx);
      LayerSpec lay;
      lay.name = j.value("name", "layer" + std::to_string(idx));
      lay.kind = kind_from_name(j.at("kind").get<std::string>(), where);
      if (lay.kind == LayerKind::Fc) {
        lay.in_features = j.at("in_features").get<int>();
        lay.out_features = j.at("out_features").get<int>();
      } else {
        const auto& dims = j.at("input");
        if (!dims.is_array() || dims.size() != 3) {
          throw ConfigError(where + ": 'input' must be [H, W, C]");
        }
        lay.in_h = dims[0].get<int>();
        lay.in_w = dims[1].get<int>();
        lay.in_c = dims[2].get<int>();
        if (lay.kind != LayerKind::Activation) {
          const auto& kernel = j.at("kernel");
          if (!kernel.is_array() || kernel.size() != 2) {
            throw ConfigError(where + ": 'kernel' must be [R, S]");
          }
          lay.kernel_r = kernel[0].get<int>();
          lay.kernel_s = kernel[1].get<int>();
          lay.stride = j.value("stride", 1);
          lay.padding = j.value("padding", 0);
        }
        if (lay.kind == LayerKind::Conv) {
          lay.out_channels = j.at("out_channels").get<int>();
          lay.groups = j.value("groups", 1);
        }
      }
      try {
        lay.validate();
      } catch (const ConfigError& e) {
        throw ConfigError(where + ": " + e.what());
      }
      model.layers.push_back(std::move(lay));
      ++idx;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("model file '" + path + "': " + e.what());
  }
  return model;
}

std::vector<GemmOp> im2col(const LayerSpec& layer) {
  layer.validate();
  if (!layer.produces_gemm()) {
    throw ConfigError("im2col: layer '" + layer.name + "' of kind " +
                      layer_kind_name(layer.kind) + " carries no GEMM");
  }
  std::vector<GemmOp> ops;
  if (layer.kind == LayerKind::Fc) {
    ops.push_back({layer.out_features, layer.in_features, 1, layer.name});
    return ops;
  }
  const std::int64_t p = layer.out_dim(layer.in_h, layer.kernel_r);
  const std::int64_t q = layer.out_dim(layer.in_w, layer.kernel_s);
  const std::int64_t rows = layer.out_channels / layer.groups;
  const std::int64_t inner =
      static_cast<std::int64_t>(layer.in_c / layer.groups) * layer.kernel_r *
      layer.kernel_s;
  for (int g = 0; g < layer.groups; ++g) {
    std::string name = layer.name;
    if (layer.groups > 1) name += "#g" + std::to_string(g);
    ops.push_back({rows, inner, p * q, std::move(name)});
  }
  return ops;
}

std::vector<GemmOp> model_gemms(const Model& model) {
  std::vector<GemmOp> ops;
  for (const auto& layer : model.layers) {
    if (!layer.produces_gemm()) continue;
    auto layer_ops = im2col(layer);
    ops.insert(ops.end(), std::make_move_iterator(layer_ops.begin()),
               std::make_move_iterator(layer_ops.end()));
  }
  return ops;
}

WorkloadSummary workload_summary(const Model& model) {
  WorkloadSummary s;
  for (const auto& op : model_gemms(model)) {
    s.total_macs += op.mac_count();
    s.gemm_count += 1;
    s.max_inner = std::max(s.max_inner, op.inner);
  }
  return s;
}

std::string bundled_model_path(const std::string& model_name) {
  return default_data_dir() + "/models/" + model_name + ".json";
}

}  // namespace ringsim
