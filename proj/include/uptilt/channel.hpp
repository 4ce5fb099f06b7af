#pragma once

#include <iosfwd>

#include "uptilt/antenna.hpp"
#include "uptilt/geometry.hpp"

namespace uptilt {

struct ChannelParams {
  double wavelength_m = 0.15;
  double eps_r = 15.0;        // relative ground permittivity
  double alpha0 = 3.5;        // ground-level propagation exponent
  double h_tc_m = 500.0;      // taper threshold of the reflected-path gain
  double tx_power_dbm = 46.0;
};

/// Received power split into the two-ray decomposition. The reflected field
/// exists only for down-tilted arrays; reflected_only_dbm is -inf otherwise.
struct RxPower {
  double power_dbm = 0.0;
  double direct_only_dbm = 0.0;
  double reflected_only_dbm = 0.0;
};

/// Reflection coefficients for a flat lossless dielectric ground.
double fresnel_h(double psi_deg, double eps_r);
double fresnel_v(double psi_deg, double eps_r);
/// Cross-polarized combination (R_H - R_V) / 2.
double fresnel_reflection(double psi_deg, double eps_r);

/// Height schedule applied to the incident-path linear gain:
/// full below h_t = 2 h_gbs_down + 2, halved up to 2 h_t, then a linear
/// taper reaching 0.5 at 500 m and constant beyond.
double reflected_path_gain(double h_m, double g_incident_linear, double h_gbs_down_m,
                           double h_tc_m);

/// Height-dependent exponent: alpha0 at ground level, sloping to the
/// free-space value; clamped to 2 from 2x the array height upward.
double propagation_exponent(double h_m, double h_array_m, double alpha0);

/// Two-ray received power for one (site, antenna set) link. cfg must carry
/// the signed boresight of the requested set.
RxPower received_power(const GbsSite& site, AntennaSet set, const LinkGeometry& geom,
                       const ChannelParams& cp, const AntennaArrayConfig& cfg,
                       double rx_height_m);

/// CSV of (d2d, total dBm, direct dBm, reflected dBm) at fixed height/tilts.
void write_curves_csv(std::ostream& os, const GbsSite& site, const ChannelParams& cp,
                      const AntennaArrayConfig& down_cfg, double rx_height_m, double d_min_m,
                      double d_max_m, double step_m);

}  // namespace uptilt
