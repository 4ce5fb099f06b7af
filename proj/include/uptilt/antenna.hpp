#pragma once

#include <Eigen/Dense>
#include <iosfwd>

namespace uptilt {

struct ElementParams {
  double g_max_dbi = 8.0;
  double theta_3db_deg = 65.0;
  double sll_limit_db = 30.0;
};

/// Vertical ULA; tilt is the signed boresight elevation (negative = down-tilt).
struct AntennaArrayConfig {
  int n_elements = 8;
  double tilt_deg = 0.0;
  ElementParams element{};
  double spacing_wavelengths = 0.5;
};

/// Element power gain in dB: g_max - min{12 (theta/theta_3dB)^2, sll_limit}.
double element_gain_db(double theta_deg, const ElementParams& p);

/// ULA power ratio A_f^2 as a function of sin(theta) - sin(tilt).
/// Peaks at n_elements when the argument is 0 (removable singularity).
double array_power_ratio(double sin_diff, int n_elements, double spacing_wavelengths = 0.5);
Eigen::ArrayXd array_power_ratio(const Eigen::ArrayXd& sin_diff, int n_elements,
                                 double spacing_wavelengths = 0.5);

/// 10 log10(A_f^2); 10 log10(n_elements) at boresight.
double array_factor_power_db(double theta_deg, const AntennaArrayConfig& cfg);

/// Element plus array gain, dB.
double total_gain_db(double theta_deg, const AntennaArrayConfig& cfg);
double total_gain_linear(double theta_deg, const AntennaArrayConfig& cfg);

/// Width of the main lobe between the -3 dB points nearest boresight,
/// found by bisection on each side to 0.01 degrees.
double hpbw_deg(const AntennaArrayConfig& cfg);

/// CSV of (theta, element dB, array dB, total dB) from -90 to +90.
void write_pattern_csv(std::ostream& os, const AntennaArrayConfig& cfg, double step_deg = 0.1);

}  // namespace uptilt
