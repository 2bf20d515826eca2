#pragma once

namespace ringsim {

// Power/ratio conversions used throughout the link-budget math. All reject
// non-finite inputs.

/// dBm -> mW: 10^(p/10).
double dbm_to_mw(double p_dbm);

/// mW -> dBm. Requires p_mw > 0.
double mw_to_dbm(double p_mw);

/// dBm -> W.
double dbm_to_w(double p_dbm);

/// dB ratio -> dimensionless linear ratio: 10^(x/10).
double db_to_linear(double x_db);

/// Linear ratio -> dB. Requires x > 0.
double linear_to_db(double x);

}  // namespace ringsim
