#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "uptilt/geometry.hpp"

namespace uptilt {

struct EicicConfig {
  double beta = 0.5;  // USF duty cycle; down-tilted arrays are muted the rest of the frame
};

struct Association {
  int site_id = -1;
  AntennaSet set = AntennaSet::down;
  double rsrp_dbm = 0.0;
};

struct SirSample {
  int point_index = -1;
  Association assoc;
  double sir_usf_db = 0.0;
  std::optional<double> sir_csf_db;  // defined only for up-set associations
  double rate_usf_bps_hz = 0.0;
  double rate_csf_bps_hz = 0.0;
};

struct RateStats {
  double min = 0.0;
  double median = 0.0;
  double sum = 0.0;
};

struct SirReport {
  std::vector<SirSample> samples;
  double min_sir_usf_db = 0.0;
  double median_sir_usf_db = 0.0;
  std::optional<double> min_sir_csf_db;
  std::optional<double> median_sir_csf_db;
  std::vector<double> cdf_usf_db;  // sorted ascending
  std::vector<double> cdf_csf_db;  // up-associated points only
  RateStats rate_usf;
  RateStats rate_csf;
};

/// SIR in dB from linear powers; throws on a zero interference sum.
double sir_db(double serving_linear, double interference_linear);

/// Shannon rates per subframe type. Up-set users transmit in both subframe
/// kinds; down-set users only in USFs, so their rate carries the beta factor
/// and is reported identically in both columns.
struct SubframeRates {
  double usf_bps_hz = 0.0;
  double csf_bps_hz = 0.0;
};
SubframeRates subframe_rates(AntennaSet serving_set, double sir_usf_db,
                             std::optional<double> sir_csf_db, const EicicConfig& eicic);

/// Recomputes the aggregate fields from samples (sorted CDFs, minima,
/// medians, rate stats).
void finalize_report(SirReport& report);

/// CSV with stable column order:
/// x_m,y_m,site_id,antenna_set,sir_usf_db,sir_csf_db,rate_usf_bps_hz,rate_csf_bps_hz
void write_report_csv(std::ostream& os, const SirReport& report, const EvalGrid& grid);

}  // namespace uptilt
