#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ringsim/device.hpp"
#include "ringsim/params.hpp"

namespace ringsim {

/// Signed integer operand vector with a magnitude precision and a real scale
/// factor mapping the integers back to application values.
struct QuantizedVector {
  std::vector<int> values;
  int bits = 4;
  double scale = 1.0;

  void validate() const;  // |v| <= 2^bits - 1, nonempty
};

enum class Lane { Positive, Negative };

/// One optical product symbol on its aggregation lane.
struct OpticalSymbol {
  double power = 0.0;  // normalized units, >= 0
  Lane lane = Lane::Positive;
};

/// Charge integrator of the balanced photo-charge accumulator.
struct AccumulatorState {
  double charge = 0.0;
  std::uint64_t cycles_elapsed = 0;
  double capacity = 0.0;  // saturation bound on |charge|
};

/// Map an integer magnitude onto the device's weighting-level grid and
/// normalize so level 0 -> 0.0 and level 2^bits-1 -> 1.0.
double encode_symbol(int value, int bits, const std::vector<WeightLevel>& levels);
double encode_symbol(int value, int bits, const MrmModel& model);

/// Cascaded through-ports multiply in power.
double multiply_symbol(double input_level, double weight_level);

/// Route a product symbol to the aggregation lane matching its sign.
OpticalSymbol route_sign(double product_power, int sign);

/// Incoherent superposition for one symbol cycle: positive-lane power minus
/// negative-lane power, scaled by the photodiode responsivity.
double bpd_superpose(std::span<const OpticalSymbol> symbols, double responsivity);

/// Integrate one cycle of balanced photocurrent onto the accumulator.
/// Exceeding the capacity raises SaturationError with the cycle index.
AccumulatorState accumulate(AccumulatorState state, double cycle_current);

/// Per-cycle trace row for debugging dumps.
struct CycleTrace {
  std::uint64_t cycle;
  double positive_sum;
  double negative_sum;
  double bpd_current;
  double charge;
};

/// Optional additive shot/thermal/RIN noise, reusing the sensitivity
/// equation's spectral densities at the actual per-cycle lane powers.
struct NoiseConfig {
  bool enabled = false;
  std::uint64_t seed = 0;
  double full_scale_w = 1e-5;  // optical power of a full-scale symbol at the PD
  double dr_sps = 1e9;
  PlatformParams params = PlatformParams::defaults(PlatformId::SiN);

  /// Noise-current sigma (A) for one cycle with the given lane powers (W).
  double cycle_sigma_a(double p_pos_w, double p_neg_w) const;
};

struct DotProductResult {
  std::int64_t digital = 0;       // quantized integer dot product
  double analog_pre_adc = 0.0;    // accumulated value, normalized units
  int required_adc_bits = 0;      // bits for the ADC step to resolve +-1
  std::vector<CycleTrace> trace;  // filled when tracing is requested
};

/// Chunked dot product through the full symbol pipeline:
/// encode -> multiply -> route -> superpose -> accumulate, then one ADC
/// sample. In noiseless mode the pre-ADC analog value equals
/// sum(a_i b_i) / (2^bits - 1)^2 up to floating-point roundoff.
DotProductResult dot_product(const QuantizedVector& a, const QuantizedVector& b,
                             int n_per_cycle, const MrmModel& model, int adc_bits,
                             const NoiseConfig& noise = {},
                             bool keep_trace = false);

/// Smallest ADC width whose mid-tread step resolves unit increments over the
/// worst-case range of a length-n, `bits`-bit dot product.
int required_adc_bits(std::size_t n, int bits);

}  // namespace ringsim
