#include "ringsim/funcsim.hpp"

#include <cmath>
#include <random>
#include <string>

#include "ringsim/errors.hpp"
#include "ringsim/units.hpp"

namespace ringsim {

void QuantizedVector::validate() const {
  if (values.empty()) throw ConfigError("QuantizedVector: empty vector");
  if (bits < 1 || bits > 8) throw ConfigError("QuantizedVector: bits must be in [1, 8]");
  const int max_mag = (1 << bits) - 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > max_mag || values[i] < -max_mag) {
      throw ConfigError("QuantizedVector: |values[" + std::to_string(i) +
                        "]| exceeds 2^bits - 1");
    }
  }
}

double encode_symbol(int value, int bits, const std::vector<WeightLevel>& levels) {
  const int n_levels = 1 << bits;
  if (static_cast<int>(levels.size()) != n_levels) {
    throw ConfigError("encode_symbol: level table size does not match bits");
  }
  if (value < 0 || value >= n_levels) {
    throw ConfigError("encode_symbol: value " + std::to_string(value) +
                      " outside [0, 2^bits - 1]");
  }
  const double t0 = levels.front().transmission;
  const double t1 = levels.back().transmission;
  return (levels[value].transmission - t0) / (t1 - t0);
}

double encode_symbol(int value, int bits, const MrmModel& model) {
  return encode_symbol(value, bits, weight_levels(model, bits));
}

double multiply_symbol(double input_level, double weight_level) {
  if (input_level < 0.0 || input_level > 1.0 || weight_level < 0.0 ||
      weight_level > 1.0) {
    throw ConfigError("multiply_symbol: levels must lie in [0, 1]");
  }
  return input_level * weight_level;
}

OpticalSymbol route_sign(double product_power, int sign) {
  if (product_power < 0.0) throw ConfigError("route_sign: negative power");
  if (sign != 1 && sign != -1) {
    throw ConfigError("route_sign: sign must be +1 or -1");
  }
  return {product_power, sign == 1 ? Lane::Positive : Lane::Negative};
}

double bpd_superpose(std::span<const OpticalSymbol> symbols, double responsivity) {
  double pos = 0.0;
  double neg = 0.0;
  for (const auto& s : symbols) {
    if (s.lane == Lane::Positive) {
      pos += s.power;
    } else {
      neg += s.power;
    }
  }
  return responsivity * (pos - neg);
}

AccumulatorState accumulate(AccumulatorState state, double cycle_current) {
  state.charge += cycle_current;
  state.cycles_elapsed += 1;
  if (std::abs(state.charge) > state.capacity) {
    throw SaturationError("accumulator saturated at cycle " +
                              std::to_string(state.cycles_elapsed) +
                              ": |charge| > capacity",
                          state.cycles_elapsed);
  }
  return state;
}

double NoiseConfig::cycle_sigma_a(double p_pos_w, double p_neg_w) const {
  const double q = PhysicalConstants::q;
  const double thermal = 4.0 * PhysicalConstants::k_B * params.temperature_k /
                         params.load_resistance_ohm;
  const double rin_lin = db_to_linear(params.rin_db_per_hz);
  auto density = [&](double p_w) {
    double rp = params.responsivity * p_w;
    return std::sqrt(2.0 * q * (rp + params.dark_current_a) + thermal +
                     rp * rp * rin_lin);
  };
  return (density(p_pos_w) + density(p_neg_w)) * std::sqrt(dr_sps / std::sqrt(2.0));
}

int required_adc_bits(std::size_t n, int bits) {
  const double max_mag = static_cast<double>((1 << bits) - 1);
  const double full_scale = static_cast<double>(n) * max_mag * max_mag;
  return 1 + static_cast<int>(std::ceil(std::log2(full_scale + 1.0)));
}

DotProductResult dot_product(const QuantizedVector& a, const QuantizedVector& b,
                             int n_per_cycle, const MrmModel& model, int adc_bits,
                             const NoiseConfig& noise, bool keep_trace) {
  a.validate();
  b.validate();
  if (a.values.size() != b.values.size()) {
    throw ConfigError("dot_product: length mismatch");
  }
  if (a.bits != b.bits) throw ConfigError("dot_product: operand bit widths differ");
  if (n_per_cycle < 1) throw ConfigError("dot_product: n_per_cycle must be >= 1");
  if (adc_bits < 1 || adc_bits > 63) {
    throw ConfigError("dot_product: adc_bits must be in [1, 63]");
  }

  const int bits = a.bits;
  const auto levels = weight_levels(model, bits);
  const double responsivity = noise.params.responsivity;
  const std::size_t len = a.values.size();

  // worst case |charge| = R * len (all full-scale, one lane); small headroom
  // so roundoff cannot trip the saturation check
  AccumulatorState state;
  state.capacity = responsivity * static_cast<double>(len) * (1.0 + 1e-9);

  std::mt19937_64 rng(noise.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  DotProductResult result;
  std::uint64_t cycle = 0;
  for (std::size_t base = 0; base < len; base += n_per_cycle, ++cycle) {
    const std::size_t chunk_end = std::min(len, base + n_per_cycle);
    std::vector<OpticalSymbol> symbols;
    symbols.reserve(chunk_end - base);
    for (std::size_t i = base; i < chunk_end; ++i) {
      const int av = a.values[i];
      const int bv = b.values[i];
      const double in_level = encode_symbol(std::abs(av), bits, levels);
      const double w_level = encode_symbol(std::abs(bv), bits, levels);
      const double product = multiply_symbol(in_level, w_level);
      const int sign = (av < 0) != (bv < 0) ? -1 : 1;
      symbols.push_back(route_sign(product, sign));
    }
    double current = bpd_superpose(symbols, responsivity);
    if (noise.enabled) {
      double p_pos = 0.0;
      double p_neg = 0.0;
      for (const auto& s : symbols) {
        (s.lane == Lane::Positive ? p_pos : p_neg) += s.power;
      }
      const double sigma_a =
          noise.cycle_sigma_a(p_pos * noise.full_scale_w, p_neg * noise.full_scale_w);
      // normalized current units carry a factor R per unit full-scale power
      current += gauss(rng) * sigma_a / noise.full_scale_w;
    }
    state = accumulate(state, current);
    if (keep_trace) {
      double pos = 0.0;
      double neg = 0.0;
      for (const auto& s : symbols) {
        (s.lane == Lane::Positive ? pos : neg) += s.power;
      }
      result.trace.push_back({cycle, pos, neg, current, state.charge});
    }
  }

  // Sample the integrated charge and undo the known normalization: the
  // responsivity scaling and the (2^bits - 1)^2 level quantization.
  const double max_mag = static_cast<double>((1 << bits) - 1);
  result.analog_pre_adc = state.charge / responsivity;
  result.required_adc_bits = required_adc_bits(len, bits);

  const double rescaled = result.analog_pre_adc * max_mag * max_mag;
  const double full_scale = static_cast<double>(len) * max_mag * max_mag;
  const double step = full_scale / static_cast<double>((1ull << (adc_bits - 1)) - 1);
  double code = std::round(rescaled / step);
  const double code_limit = static_cast<double>((1ull << (adc_bits - 1)) - 1);
  code = std::clamp(code, -code_limit, code_limit);
  result.digital = std::llround(code * step);
  return result;
}

}  // namespace ringsim
