#include "ringsim/params.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>

#include <nlohmann/json.hpp>

#include "ringsim/errors.hpp"

namespace ringsim {

namespace {

using FieldPtr = double PlatformParams::*;

// Override-addressable fields, in declaration order.
const std::vector<std::pair<std::string, FieldPtr>>& field_table() {
  static const std::vector<std::pair<std::string, FieldPtr>> table = {
      {"p_laser_dbm", &PlatformParams::p_laser_dbm},
      {"p_smf_db", &PlatformParams::p_smf_db},
      {"p_coupling_db", &PlatformParams::p_coupling_db},
      {"wg_loss_db_per_cm", &PlatformParams::wg_loss_db_per_cm},
      {"p_inc_db_per_cm_per_lambda", &PlatformParams::p_inc_db_per_cm_per_lambda},
      {"splitter_il_db", &PlatformParams::splitter_il_db},
      {"mrm_il_db", &PlatformParams::mrm_il_db},
      {"mrr_il_db", &PlatformParams::mrr_il_db},
      {"mrm_obl_db", &PlatformParams::mrm_obl_db},
      {"mrr_obl_db", &PlatformParams::mrr_obl_db},
      {"penalty_db", &PlatformParams::penalty_db},
      {"responsivity", &PlatformParams::responsivity},
      {"dark_current_a", &PlatformParams::dark_current_a},
      {"load_resistance_ohm", &PlatformParams::load_resistance_ohm},
      {"temperature_k", &PlatformParams::temperature_k},
      {"rin_db_per_hz", &PlatformParams::rin_db_per_hz},
      {"d_mrr_cm", &PlatformParams::d_mrr_cm},
  };
  return table;
}

// Every loss-type field must stay nonnegative.
bool is_loss_field(const std::string& key) {
  return key == "p_smf_db" || key == "p_coupling_db" ||
         key == "wg_loss_db_per_cm" || key == "p_inc_db_per_cm_per_lambda" ||
         key == "splitter_il_db" || key == "mrm_il_db" || key == "mrr_il_db" ||
         key == "mrm_obl_db" || key == "mrr_obl_db" || key == "penalty_db";
}

}  // namespace

const char* platform_name(PlatformId id) {
  return id == PlatformId::Soi ? "soi" : "sin";
}

PlatformId platform_from_name(const std::string& name) {
  if (name == "soi" || name == "SOI") return PlatformId::Soi;
  if (name == "sin" || name == "SiN" || name == "SIN") return PlatformId::SiN;
  throw ConfigError("unknown platform '" + name + "' (expected soi or sin)");
}

PlatformParams PlatformParams::defaults(PlatformId id) {
  PlatformParams p;  // member initializers carry the SiN column
  p.platform_id = id;
  if (id == PlatformId::Soi) {
    p.wg_loss_db_per_cm = 1.5;
    p.p_inc_db_per_cm_per_lambda = 0.1;
    p.mrm_il_db = 4.0;
  }
  return p;
}

std::vector<std::string> PlatformParams::field_names() {
  std::vector<std::string> names;
  for (const auto& [key, ptr] : field_table()) names.push_back(key);
  return names;
}

void PlatformParams::set_field(const std::string& key, double value) {
  for (const auto& [name, ptr] : field_table()) {
    if (name == key) {
      if (!std::isfinite(value)) {
        throw ConfigError("parameter '" + key + "': non-finite value");
      }
      if (is_loss_field(key) && value < 0.0) {
        throw ConfigError("parameter '" + key + "': loss must be >= 0");
      }
      this->*ptr = value;
      return;
    }
  }
  throw ConfigError("unknown platform parameter '" + key + "'");
}

double PlatformParams::get_field(const std::string& key) const {
  for (const auto& [name, ptr] : field_table()) {
    if (name == key) return this->*ptr;
  }
  throw ConfigError("unknown platform parameter '" + key + "'");
}

void PlatformParams::validate() const {
  for (const auto& [name, ptr] : field_table()) {
    double v = this->*ptr;
    if (!std::isfinite(v)) {
      throw ConfigError("parameter '" + name + "': non-finite value");
    }
    if (is_loss_field(name) && v < 0.0) {
      throw ConfigError("parameter '" + name + "': loss must be >= 0");
    }
  }
  if (responsivity <= 0.0) throw ConfigError("responsivity must be > 0");
  if (load_resistance_ohm <= 0.0) throw ConfigError("load_resistance_ohm must be > 0");
  if (temperature_k <= 0.0) throw ConfigError("temperature_k must be > 0");
  if (d_mrr_cm <= 0.0) throw ConfigError("d_mrr_cm must be > 0");
}

PlatformParams load_platform(PlatformId id,
                             const std::map<std::string, double>& overrides) {
  PlatformParams p = PlatformParams::defaults(id);
  for (const auto& [key, value] : overrides) {
    p.set_field(key, value);
  }
  p.validate();
  return p;
}

std::map<PlatformId, PlatformParams> load_platforms_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open platform config '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("platform config '" + path + "': " + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("platform config '" + path + "': top level must be an object");
  }
  std::map<PlatformId, PlatformParams> out;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    PlatformId id = platform_from_name(it.key());
    if (!it.value().is_object()) {
      throw ConfigError("platform config: '" + it.key() + "' must be an object");
    }
    std::map<std::string, double> overrides;
    for (auto f = it.value().begin(); f != it.value().end(); ++f) {
      if (!f.value().is_number()) {
        throw ConfigError("platform config: key '" + f.key() + "' must be a number");
      }
      overrides[f.key()] = f.value().get<double>();
    }
    out[id] = load_platform(id, overrides);
  }
  return out;
}

const PeripheralRecord& PeripheralParams::adc(double rate_sps) const {
  auto it = adc_by_rate.find(rate_sps);
  if (it == adc_by_rate.end()) {
    throw ConfigError("no ADC record for data rate " + std::to_string(rate_sps) +
                      " S/s (listed: 1e9, 5e9, 10e9)");
  }
  return it->second;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("RINGSIM_DATA_DIR")) {
    return env;
  }
#ifdef RINGSIM_DEFAULT_DATA_DIR
  return RINGSIM_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace ringsim
