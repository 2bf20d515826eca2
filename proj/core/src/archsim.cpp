#include "ringsim/archsim.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "ringsim/errors.hpp"

namespace ringsim {

void TpcConfig::validate() const {
  if (n < 1 || m < 1) throw ConfigError("TpcConfig: n and m must be >= 1");
  if (n != m) throw ConfigError("TpcConfig: n must equal m");
  if (bits < 1 || bits > 8) throw ConfigError("TpcConfig: bits must be in [1, 8]");
  if (!(dr_sps > 0.0)) throw ConfigError("TpcConfig: dr_sps must be > 0");
}

void AcceleratorConfig::validate() const {
  tpc.validate();
  if (tpc_count < 2) {
    throw ConfigError("AcceleratorConfig: tpc_count must be >= 2 (8-bit pairing)");
  }
  if (tiles() * 4 < tpc_count) {
    throw ConfigError("AcceleratorConfig: tile grouping inconsistent");
  }
  if (buffer_overlap < 0.0 || buffer_overlap > 1.0) {
    throw ConfigError("AcceleratorConfig: buffer_overlap must be in [0, 1]");
  }
  if (tile_standby_mw < 0.0) {
    throw ConfigError("AcceleratorConfig: tile_standby_mw must be >= 0");
  }
  if (laser_mw_per_lambda < 0.0) {
    throw ConfigError("AcceleratorConfig: laser_mw_per_lambda must be >= 0");
  }
  peripherals.adc(tpc.dr_sps);  // must have an ADC record for this rate
}

AcceleratorConfig AcceleratorConfig::reference(PlatformId platform, double dr_sps) {
  struct Cell { int n; int count; };
  static const std::map<std::pair<PlatformId, double>, Cell> table = {
      {{PlatformId::Soi, 1e9}, {22, 132}}, {{PlatformId::Soi, 5e9}, {15, 155}},
      {{PlatformId::Soi, 10e9}, {13, 162}}, {{PlatformId::SiN, 1e9}, {47, 50}},
      {{PlatformId::SiN, 5e9}, {28, 95}},  {{PlatformId::SiN, 10e9}, {22, 116}},
  };
  auto it = table.find({platform, dr_sps});
  if (it == table.end()) {
    throw ConfigError("no reference accelerator configuration for platform " +
                      std::string(platform_name(platform)) + " at " +
                      std::to_string(dr_sps) + " S/s");
  }
  AcceleratorConfig cfg;
  cfg.tpc.n = cfg.tpc.m = it->second.n;
  cfg.tpc.dr_sps = dr_sps;
  cfg.tpc.platform_id = platform;
  cfg.tpc_count = it->second.count;
  return cfg;
}

GemmSchedule schedule_gemm(const GemmOp& op, const AcceleratorConfig& cfg) {
  cfg.validate();
  if (op.rows < 1 || op.inner < 1 || op.cols < 1) {
    throw ConfigError("schedule_gemm: GEMM dims must be >= 1 (op '" +
                      op.source_layer + "')");
  }
  const std::int64_t n = cfg.tpc.n;
  const std::int64_t m = cfg.tpc.m;
  const std::int64_t pairs = cfg.paired_tpcs();

  GemmSchedule s;
  s.outputs = op.rows * op.cols;
  s.chunks_per_output = (op.inner + n - 1) / n;
  s.waves = (s.outputs + pairs * m - 1) / (pairs * m);
  s.cycles = s.waves * s.chunks_per_output;
  s.dpe_cycles = 2 * s.outputs * s.chunks_per_output;
  s.buffer_reads = 2 * s.dpe_cycles;       // one input + one weight chunk per DPE-cycle
  s.buffer_writes = s.outputs;
  s.macs = op.mac_count();

  // pair-cycles with at least one busy DPE (laser on-time)
  const std::int64_t full_waves = s.outputs / (pairs * m);
  const std::int64_t rem = s.outputs - full_waves * pairs * m;
  std::int64_t busy_pairs = full_waves * pairs;
  if (rem > 0) busy_pairs += (rem + m - 1) / m;
  s.busy_pair_cycles = busy_pairs * s.chunks_per_output;
  return s;
}

CostBreakdown cost_gemm(const GemmOp& op, const AcceleratorConfig& cfg,
                        const GemmSchedule& s) {
  const auto& per = cfg.peripherals;
  const double dr = cfg.tpc.dr_sps;
  const double n = static_cast<double>(cfg.tpc.n);
  const std::int64_t accesses = s.buffer_reads + s.buffer_writes;

  CostBreakdown c;
  c.macs = s.macs;
  c.buffer_accesses = accesses;
  c.lat_compute = static_cast<double>(s.cycles) / dr;
  c.lat_buffer = static_cast<double>(accesses) * per.edram.latency_s *
                 (1.0 - cfg.buffer_overlap);

  c.e_edram = static_cast<double>(accesses) * per.edram_energy_per_access_j();
  // both MRMs of each multiplier re-encode every cycle
  c.e_mrm_eo = static_cast<double>(s.dpe_cycles) * n * 2.0 * cfg.tpc.bits *
               per.mrm_eo_energy_pj_per_bit * 1e-12;
  // one weight DAC conversion per multiplier per cycle
  c.e_dac = static_cast<double>(s.dpe_cycles) * n * per.dac.power_mw * 1e-3 / dr;
  // one sample per output per pair half
  c.e_adc = 2.0 * static_cast<double>(s.outputs) * per.adc(dr).power_mw * 1e-3 / dr;
  c.e_laser = 2.0 * static_cast<double>(s.busy_pair_cycles) * n *
              cfg.laser_mw_per_lambda * 1e-3 / dr;
  // chunk deliveries and output returns cross the tile bus and one router
  c.e_bus = static_cast<double>(accesses) * per.bus_power_mw * 1e-3 *
            per.bus_latency_cycles / dr;
  c.e_router = static_cast<double>(accesses) * per.router_power_mw * 1e-3 *
               per.router_latency_cycles / dr;
  // shift-and-add recombination of the two pair halves
  c.e_reduction = static_cast<double>(s.outputs) * per.reduction.power_mw * 1e-3 *
                  per.reduction.latency_s;
  (void)op;
  return c;
}

CostBreakdown& CostBreakdown::operator+=(const CostBreakdown& o) {
  lat_compute += o.lat_compute;
  lat_buffer += o.lat_buffer;
  lat_peripheral += o.lat_peripheral;
  e_laser += o.e_laser;
  e_mrm_eo += o.e_mrm_eo;
  e_dac += o.e_dac;
  e_adc += o.e_adc;
  e_edram += o.e_edram;
  e_bus += o.e_bus;
  e_router += o.e_router;
  e_reduction += o.e_reduction;
  e_activation += o.e_activation;
  e_pooling += o.e_pooling;
  e_io += o.e_io;
  e_tile_standby += o.e_tile_standby;
  macs += o.macs;
  buffer_accesses += o.buffer_accesses;
  return *this;
}

std::vector<std::pair<std::string, double>> CostBreakdown::energy_components() const {
  return {
      {"laser", e_laser},           {"mrm_eo", e_mrm_eo},
      {"dac", e_dac},               {"adc", e_adc},
      {"edram", e_edram},           {"bus", e_bus},
      {"router", e_router},         {"reduction", e_reduction},
      {"activation", e_activation}, {"pooling", e_pooling},
      {"io", e_io},                 {"tile_standby", e_tile_standby},
  };
}

CostBreakdown simulate_model(const Model& model, const AcceleratorConfig& cfg) {
  cfg.validate();
  if (model.layers.empty()) throw ConfigError("simulate_model: empty model");
  const auto& per = cfg.peripherals;
  const int tiles = cfg.tiles();

  CostBreakdown total;
  for (const auto& layer : model.layers) {
    if (layer.produces_gemm()) {
      for (const auto& op : im2col(layer)) {
        total += cost_gemm(op, cfg, schedule_gemm(op, cfg));
      }
    } else if (layer.kind == LayerKind::Activation) {
      const std::int64_t elems = layer.output_elems();
      total.lat_peripheral +=
          static_cast<double>((elems + tiles - 1) / tiles) * per.activation.latency_s;
      total.e_activation += static_cast<double>(elems) * per.activation.power_mw *
                            1e-3 * per.activation.latency_s;
    } else if (layer.kind == LayerKind::Pool) {
      const std::int64_t elems = layer.output_elems();
      total.lat_peripheral +=
          static_cast<double>((elems + tiles - 1) / tiles) * per.pooling.latency_s;
      total.e_pooling += static_cast<double>(elems) * per.pooling.power_mw * 1e-3 *
                         per.pooling.latency_s;
    }
  }

  const double t_frame = total.total_latency();
  total.e_io = per.io_interface.power_mw * 1e-3 * t_frame;
  total.e_tile_standby = cfg.tile_standby_mw * 1e-3 * tiles * t_frame;

  total.fps = 1.0 / t_frame;
  total.fps_per_watt = 1.0 / total.total_energy();  // batch 1: 1/(J per frame)
  return total;
}

double tpc_area_mm2(const TpcConfig& tpc, const PeripheralParams& per) {
  const double dpe_area = 2.0 * tpc.n * per.mrm_area_mm2 +
                          tpc.n * per.dac.area_mm2 + per.adc(tpc.dr_sps).area_mm2;
  return tpc.m * dpe_area + per.reduction.area_mm2;
}

std::vector<int> area_proportionate_counts(const std::vector<TpcConfig>& variants,
                                           double budget_mm2,
                                           const PeripheralParams& peripherals) {
  if (variants.empty()) throw ConfigError("area_proportionate_counts: no variants");
  if (!(budget_mm2 > 0.0)) throw ConfigError("area_proportionate_counts: zero budget");
  std::vector<int> counts;
  counts.reserve(variants.size());
  for (const auto& v : variants) {
    v.validate();
    counts.push_back(static_cast<int>(budget_mm2 / tpc_area_mm2(v, peripherals)));
  }
  return counts;
}

bool SimKey::operator<(const SimKey& o) const {
  return std::tie(model, platform, dr_sps) < std::tie(o.model, o.platform, o.dr_sps);
}

double gmean(const std::vector<double>& values) {
  if (values.empty()) throw ConfigError("gmean: empty input");
  double log_sum = 0.0;
  for (double v : values) {
    if (!(v > 0.0)) throw ConfigError("gmean: values must be positive");
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(values.size()));
}

NormalizedReport normalize_report(const std::map<SimKey, CostBreakdown>& reports,
                                  const SimKey& baseline) {
  auto base_it = reports.find(baseline);
  if (base_it == reports.end()) {
    throw ConfigError("normalize_report: baseline cell missing from report set");
  }
  const double base_fps = base_it->second.fps;
  const double base_fpw = base_it->second.fps_per_watt;

  NormalizedReport out;
  out.baseline = baseline;
  std::map<std::pair<PlatformId, double>, std::vector<double>> fps_by_cell;
  std::map<std::pair<PlatformId, double>, std::vector<double>> fpw_by_cell;
  for (const auto& [key, cost] : reports) {
    NormalizedEntry e;
    e.cost = cost;
    e.norm_fps = cost.fps / base_fps;
    e.norm_fps_per_watt = cost.fps_per_watt / base_fpw;
    out.entries[key] = e;
    fps_by_cell[{key.platform, key.dr_sps}].push_back(cost.fps);
    fpw_by_cell[{key.platform, key.dr_sps}].push_back(cost.fps_per_watt);
  }
  for (const auto& [cell, values] : fps_by_cell) {
    out.gmean_fps[cell] = gmean(values);
    out.gmean_norm_fps[cell] = out.gmean_fps[cell] / base_fps;
  }
  for (const auto& [cell, values] : fpw_by_cell) {
    out.gmean_fps_per_watt[cell] = gmean(values);
    out.gmean_norm_fps_per_watt[cell] = out.gmean_fps_per_watt[cell] / base_fpw;
  }
  return out;
}

}  // namespace ringsim
