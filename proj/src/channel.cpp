#include "uptilt/channel.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "uptilt/common.hpp"

namespace uptilt {

namespace {

void check_psi(double psi_deg) {
  if (!(psi_deg > 0.0) || psi_deg > 90.0) {
    throw std::invalid_argument("fresnel: grazing angle outside (0, 90]");
  }
}

}  // namespace

double fresnel_h(double psi_deg, double eps_r) {
  check_psi(psi_deg);
  const double s = std::sin(deg2rad(psi_deg));
  const double c = std::cos(deg2rad(psi_deg));
  const double root = std::sqrt(eps_r - c * c);
  return (s - root) / (s + root);
}

double fresnel_v(double psi_deg, double eps_r) {
  check_psi(psi_deg);
  const double s = std::sin(deg2rad(psi_deg));
  const double c = std::cos(deg2rad(psi_deg));
  const double root = std::sqrt(eps_r - c * c);
  return (eps_r * s - root) / (eps_r * s + root);
}

double fresnel_reflection(double psi_deg, double eps_r) {
  return 0.5 * (fresnel_h(psi_deg, eps_r) - fresnel_v(psi_deg, eps_r));
}

double reflected_path_gain(double h_m, double g_incident_linear, double h_gbs_down_m,
                           double h_tc_m) {
  const double h_t = 2.0 * h_gbs_down_m + 2.0;
  if (h_m < h_t) {
    return g_incident_linear;
  }
  if (h_m <= 2.0 * h_t) {
    return g_incident_linear / 2.0;
  }
  if (h_m <= 500.0) {
    return g_incident_linear / 2.0 - h_m / (2.0 * h_tc_m) * (g_incident_linear - 1.0);
  }
  return 0.5;
}

double propagation_exponent(double h_m, double h_array_m, double alpha0) {
  // As printed: passes through 2 at the array height, dips below 2 on
  // (h_array, 2 h_array), and clamps to 2 from there on.
  if (h_m < 2.0 * h_array_m) {
    return alpha0 - h_m * (alpha0 - 2.0) / h_array_m;
  }
  return 2.0;
}

RxPower received_power(const GbsSite& site, AntennaSet set, const LinkGeometry& geom,
                       const ChannelParams& cp, const AntennaArrayConfig& cfg,
                       double rx_height_m) {
  const double h_array = site.array_height_m(set);
  const double k_mw = dbm_to_mw(cp.tx_power_dbm) *
                      (cp.wavelength_m / (4.0 * kPi)) * (cp.wavelength_m / (4.0 * kPi));
  const double alpha = propagation_exponent(rx_height_m, h_array, cp.alpha0);

  const double direct = total_gain_linear(geom.theta_deg, cfg) / geom.l_m;

  RxPower out;
  if (set == AntennaSet::up) {
    // main beams point skyward; no ground-reflected field
    const double p = k_mw * std::pow(std::abs(direct), alpha);
    out.power_dbm = mw_to_dbm(p);
    out.direct_only_dbm = out.power_dbm;
    out.reflected_only_dbm = -std::numeric_limits<double>::infinity();
    return out;
  }

  const double r = fresnel_reflection(geom.psi_deg, cp.eps_r);
  const double g_incident = total_gain_linear(-geom.psi_deg, cfg);
  const double g_refl = reflected_path_gain(rx_height_m, g_incident, site.h_down_m, cp.h_tc_m);
  const double dphi = 2.0 * kPi * geom.delta_d_m / cp.wavelength_m;
  const double refl = r * g_refl / (geom.r1_m + geom.r2_m);

  const double re = direct + refl * std::cos(dphi);
  const double im = refl * std::sin(dphi);
  out.power_dbm = mw_to_dbm(k_mw * std::pow(std::hypot(re, im), alpha));
  out.direct_only_dbm = mw_to_dbm(k_mw * std::pow(std::abs(direct), alpha));
  out.reflected_only_dbm = mw_to_dbm(k_mw * std::pow(std::abs(refl), alpha));
  return out;
}

void write_curves_csv(std::ostream& os, const GbsSite& site, const ChannelParams& cp,
                      const AntennaArrayConfig& down_cfg, double rx_height_m, double d_min_m,
                      double d_max_m, double step_m) {
  if (step_m <= 0.0 || d_min_m <= 0.0 || d_max_m < d_min_m) {
    throw std::invalid_argument("write_curves_csv: bad distance range");
  }
  os << "d2d_m,total_dbm,direct_dbm,reflected_dbm\n";
  const long steps = std::lround((d_max_m - d_min_m) / step_m);
  for (long i = 0; i <= steps; ++i) {
    const double d = d_min_m + i * step_m;
    const LinkGeometry g =
        link_geometry(site, AntennaSet::down, Eigen::Vector2d(d, 0.0), rx_height_m);
    const RxPower p = received_power(site, AntennaSet::down, g, cp, down_cfg, rx_height_m);
    os << format_double(d) << ',' << format_double(p.power_dbm) << ','
       << format_double(p.direct_only_dbm) << ',' << format_double(p.reflected_only_dbm) << '\n';
  }
}

}  // namespace uptilt
