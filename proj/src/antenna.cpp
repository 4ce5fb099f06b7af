#include "uptilt/antenna.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "uptilt/common.hpp"

namespace uptilt {

namespace {
// Below this, sin(pi * spacing * x) is treated as the removable singularity
// of the ULA ratio; its limit there is n_elements exactly.
constexpr double kSingularSin = 1e-9;
}  // namespace

double element_gain_db(double theta_deg, const ElementParams& p) {
  if (theta_deg < -90.0 || theta_deg > 90.0) {
    throw std::invalid_argument("element_gain_db: theta outside [-90, 90]");
  }
  const double q = theta_deg / p.theta_3db_deg;
  return p.g_max_dbi - std::min(12.0 * q * q, p.sll_limit_db);
}

double array_power_ratio(double sin_diff, int n_elements, double spacing_wavelengths) {
  const double u = kPi * spacing_wavelengths * sin_diff;
  const double s = std::sin(u);
  if (std::abs(s) < kSingularSin) {
    return static_cast<double>(n_elements);
  }
  const double num = std::sin(n_elements * u);
  return (num * num) / (s * s * n_elements);
}

Eigen::ArrayXd array_power_ratio(const Eigen::ArrayXd& sin_diff, int n_elements,
                                 double spacing_wavelengths) {
  const Eigen::ArrayXd u = kPi * spacing_wavelengths * sin_diff;
  const Eigen::ArrayXd s = u.sin();
  const Eigen::ArrayXd num = (n_elements * u).sin();
  const Eigen::ArrayXd ratio = num.square() / (s.square() * n_elements);
  return (s.abs() < kSingularSin).select(static_cast<double>(n_elements), ratio);
}

double array_factor_power_db(double theta_deg, const AntennaArrayConfig& cfg) {
  if (theta_deg < -90.0 || theta_deg > 90.0) {
    throw std::invalid_argument("array_factor_power_db: theta outside [-90, 90]");
  }
  const double x = std::sin(deg2rad(theta_deg)) - std::sin(deg2rad(cfg.tilt_deg));
  return linear_to_db(array_power_ratio(x, cfg.n_elements, cfg.spacing_wavelengths));
}

double total_gain_db(double theta_deg, const AntennaArrayConfig& cfg) {
  return element_gain_db(theta_deg, cfg.element) + array_factor_power_db(theta_deg, cfg);
}

double total_gain_linear(double theta_deg, const AntennaArrayConfig& cfg) {
  return db_to_linear(total_gain_db(theta_deg, cfg));
}

namespace {

// Bisection between a point above the -3 dB level and one below it.
double bisect_crossing(const AntennaArrayConfig& cfg, double level_db, double inside_deg,
                       double outside_deg) {
  for (int it = 0; it < 200 && std::abs(outside_deg - inside_deg) > 0.005; ++it) {
    const double mid = 0.5 * (inside_deg + outside_deg);
    if (total_gain_db(mid, cfg) >= level_db) {
      inside_deg = mid;
    } else {
      outside_deg = mid;
    }
  }
  return 0.5 * (inside_deg + outside_deg);
}

}  // namespace

double hpbw_deg(const AntennaArrayConfig& cfg) {
  if (cfg.n_elements < 2) {
    throw std::invalid_argument("hpbw_deg: needs at least 2 elements");
  }
  const double level = total_gain_db(cfg.tilt_deg, cfg) - 3.0;
  // Walk outward from boresight until the pattern drops below the level,
  // then bisect. 0.05 degrees is far finer than any main lobe here.
  const double walk = 0.05;
  double lo = std::numeric_limits<double>::quiet_NaN();
  double hi = lo;
  for (double t = cfg.tilt_deg; t - walk >= -90.0; t -= walk) {
    if (total_gain_db(t - walk, cfg) < level) {
      lo = bisect_crossing(cfg, level, t, t - walk);
      break;
    }
  }
  for (double t = cfg.tilt_deg; t + walk <= 90.0; t += walk) {
    if (total_gain_db(t + walk, cfg) < level) {
      hi = bisect_crossing(cfg, level, t, t + walk);
      break;
    }
  }
  if (std::isnan(lo) || std::isnan(hi)) {
    throw std::runtime_error("hpbw_deg: no -3 dB crossing within [-90, 90]");
  }
  return hi - lo;
}

void write_pattern_csv(std::ostream& os, const AntennaArrayConfig& cfg, double step_deg) {
  os << "theta_deg,element_db,array_db,total_db\n";
  const long steps = std::lround(180.0 / step_deg);
  for (long i = 0; i <= steps; ++i) {
    const double theta = -90.0 + i * step_deg;
    const double e = element_gain_db(theta, cfg.element);
    const double a = array_factor_power_db(theta, cfg);
    os << format_double(theta) << ',' << format_double(e) << ',' << format_double(a) << ','
       << format_double(e + a) << '\n';
  }
}

}  // namespace uptilt
