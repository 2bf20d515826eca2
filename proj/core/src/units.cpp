#include "ringsim/units.hpp"

#include <cmath>

#include "ringsim/errors.hpp"

namespace ringsim {

namespace {
void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw ConfigError(std::string(what) + ": non-finite value");
  }
}
}  // namespace

double dbm_to_mw(double p_dbm) {
  require_finite(p_dbm, "dbm_to_mw");
  return std::pow(10.0, p_dbm / 10.0);
}

double mw_to_dbm(double p_mw) {
  require_finite(p_mw, "mw_to_dbm");
  if (p_mw <= 0.0) {
    throw ConfigError("mw_to_dbm: power must be positive");
  }
  return 10.0 * std::log10(p_mw);
}

double dbm_to_w(double p_dbm) { return dbm_to_mw(p_dbm) * 1e-3; }

double db_to_linear(double x_db) {
  require_finite(x_db, "db_to_linear");
  return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double x) {
  require_finite(x, "linear_to_db");
  if (x <= 0.0) {
    throw ConfigError("linear_to_db: ratio must be positive");
  }
  return 10.0 * std::log10(x);
}

}  // namespace ringsim
