#include "uptilt/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "uptilt/common.hpp"

namespace uptilt {

NetworkLayout build_layout(double isd_m) {
  if (isd_m <= 0.0) {
    throw std::invalid_argument("build_layout: isd must be positive");
  }
  NetworkLayout layout;
  layout.isd_m = isd_m;
  layout.tiers = 2;
  layout.center_site_index = 0;

  auto add_site = [&layout](double x, double y) {
    GbsSite s;
    s.id = static_cast<int>(layout.sites.size());
    s.position = Eigen::Vector2d(x, y);
    layout.sites.push_back(s);
  };

  add_site(0.0, 0.0);
  // tier 1: six neighbors at isd, counter-clockwise from +x
  for (int k = 0; k < 6; ++k) {
    const double a = deg2rad(kTier1BaseAngleDeg + 60.0 * k);
    add_site(isd_m * std::cos(a), isd_m * std::sin(a));
  }
  // tier 2: twelve sites by ascending angle; corners at 2 isd alternate with
  // edge midpoints at sqrt(3) isd
  for (int k = 0; k < 12; ++k) {
    const double a = deg2rad(kTier1BaseAngleDeg + 30.0 * k);
    const double r = (k % 2 == 0) ? 2.0 * isd_m : std::sqrt(3.0) * isd_m;
    add_site(r * std::cos(a), r * std::sin(a));
  }
  return layout;
}

bool point_in_center_cell(const Eigen::Vector2d& p, double isd_m) {
  // Inside iff the projection on every neighbor direction stays below the
  // half-ISD apothem. Boundary points count as inside.
  const double limit = isd_m / 2.0 + 1e-9 * isd_m;
  for (int k = 0; k < 6; ++k) {
    const double a = deg2rad(kTier1BaseAngleDeg + 60.0 * k);
    if (p.x() * std::cos(a) + p.y() * std::sin(a) > limit) {
      return false;
    }
  }
  return true;
}

EvalGrid build_eval_grid(const NetworkLayout& layout, double height_m, double resolution_m) {
  if (resolution_m <= 0.0) {
    throw std::invalid_argument("build_eval_grid: resolution must be positive");
  }
  EvalGrid grid;
  grid.height_m = height_m;
  grid.resolution_m = resolution_m;

  const Eigen::Vector2d center = layout.sites.at(layout.center_site_index).position;
  const double circumradius = layout.isd_m / std::sqrt(3.0);
  const int n = static_cast<int>(std::floor(circumradius / resolution_m + 1e-9));
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      const Eigen::Vector2d offset(i * resolution_m, j * resolution_m);
      if (point_in_center_cell(offset, layout.isd_m)) {
        grid.points.push_back(center + offset);
      }
    }
  }
  if (grid.points.empty()) {
    throw std::runtime_error("build_eval_grid: no lattice point falls inside the center cell");
  }
  return grid;
}

LinkGeometry link_geometry(const GbsSite& site, AntennaSet set, const Eigen::Vector2d& point,
                           double rx_height_m) {
  const double h_array = site.array_height_m(set);
  LinkGeometry g;
  g.d2d_m = (point - site.position).norm();
  const double dh = rx_height_m - h_array;
  if (g.d2d_m == 0.0 && dh == 0.0) {
    throw std::invalid_argument("link_geometry: zero-length link");
  }
  g.l_m = std::hypot(g.d2d_m, dh);
  g.theta_deg = rad2deg(std::atan2(dh, g.d2d_m));

  // Specular reflection off flat ground: mirror-image construction, equal
  // grazing angles on both legs.
  const double h_sum = h_array + rx_height_m;
  const double r_total = std::hypot(g.d2d_m, h_sum);
  g.psi_deg = rad2deg(std::atan2(h_sum, g.d2d_m));
  const double sin_psi = h_sum / r_total;
  g.r1_m = h_array / sin_psi;
  g.r2_m = rx_height_m / sin_psi;
  g.delta_d_m = r_total - g.l_m;
  return g;
}

VisibilityBand gr_visibility_band(double h_gbs_m, double h_uav_m, double dt_angle_deg,
                                  double hpbw_deg) {
  VisibilityBand band;
  const double h_sum = h_gbs_m + h_uav_m;
  const double phi1 = dt_angle_deg - 0.5 * hpbw_deg;
  const double phi2 = dt_angle_deg + 0.5 * hpbw_deg;
  band.d2_m = h_sum / std::tan(deg2rad(phi2));
  if (phi1 <= 0.0) {
    // upper edge of the main lobe points at or above the horizon: the
    // reflected band has no far edge
    band.d1_unbounded = true;
    band.d1_m = std::numeric_limits<double>::infinity();
  } else {
    band.d1_m = h_sum / std::tan(deg2rad(phi1));
  }
  return band;
}

double main_lobe_ground_distance(double h_gbs_m, double dt_angle_deg) {
  return h_gbs_m / std::tan(deg2rad(dt_angle_deg));
}

std::string layout_json(const NetworkLayout& layout) {
  std::ostringstream os;
  os << "{\"isd_m\":" << format_double(layout.isd_m) << ",\"sites\":[";
  for (size_t i = 0; i < layout.sites.size(); ++i) {
    const GbsSite& s = layout.sites[i];
    if (i) os << ",";
    os << "{\"id\":" << s.id << ",\"x_m\":" << format_double(s.position.x())
       << ",\"y_m\":" << format_double(s.position.y())
       << ",\"h_down_m\":" << format_double(s.h_down_m)
       << ",\"h_sep_m\":" << format_double(s.h_sep_m)
       << ",\"dt_angle_deg\":" << format_double(s.dt_angle_deg)
       << ",\"ut_angle_deg\":" << format_double(s.ut_angle_deg) << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace uptilt
