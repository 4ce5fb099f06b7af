#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace uptilt {

enum class AntennaSet { down, up };

inline const char* antenna_set_name(AntennaSet s) { return s == AntennaSet::down ? "down" : "up"; }

/// One base-station site carrying a down-tilted and an up-tilted array.
struct GbsSite {
  int id = 0;
  Eigen::Vector2d position{0.0, 0.0};
  double h_down_m = 30.0;      // height of the down-tilted array
  double h_sep_m = 1.0;        // up array sits h_sep above the down array
  double dt_angle_deg = 6.0;   // down-tilt (boresight below horizon)
  double ut_angle_deg = 0.0;   // up-tilt (boresight above horizon), the decision variable

  double array_height_m(AntennaSet s) const {
    return s == AntennaSet::down ? h_down_m : h_down_m + h_sep_m;
  }
  /// Signed boresight elevation: -dt for the down set, +ut for the up set.
  double boresight_deg(AntennaSet s) const {
    return s == AntennaSet::down ? -dt_angle_deg : ut_angle_deg;
  }
};

struct NetworkLayout {
  std::vector<GbsSite> sites;
  double isd_m = 0.0;
  int tiers = 2;
  int center_site_index = 0;
};

// Tier-1 neighbors sit at kTier1BaseAngleDeg + k*60; the center cell's
// hexagon has edge normals along those directions.
inline constexpr double kTier1BaseAngleDeg = 0.0;

/// Two-tier hexagonal grid of 19 sites. Site 0 at the origin, then tier 1
/// counter-clockwise from the +x axis, then tier 2 by ascending angle.
NetworkLayout build_layout(double isd_m);

/// Membership in the center cell's hexagon, boundary included.
bool point_in_center_cell(const Eigen::Vector2d& p, double isd_m);

struct EvalGrid {
  std::vector<Eigen::Vector2d> points;
  double height_m = 0.0;
  double resolution_m = 0.0;
};

/// Axis-aligned lattice at the given spacing clipped to the center hexagon.
EvalGrid build_eval_grid(const NetworkLayout& layout, double height_m, double resolution_m);

/// Flat-earth link geometry between one array and a receiver position.
struct LinkGeometry {
  double d2d_m = 0.0;     // horizontal distance
  double l_m = 0.0;       // 3-D direct-path length
  double theta_deg = 0.0; // elevation of the receiver seen from the array (+90 zenith)
  double r1_m = 0.0;      // array -> ground reflection point
  double r2_m = 0.0;      // reflection point -> receiver
  double psi_deg = 0.0;   // grazing angle at the reflection point
  double delta_d_m = 0.0; // (r1 + r2) - l
};

LinkGeometry link_geometry(const GbsSite& site, AntennaSet set, const Eigen::Vector2d& point,
                           double rx_height_m);

/// Horizontal-distance band where the reflected main lobe reaches a receiver
/// at h_uav. d1 is the far edge; when dt_angle <= hpbw/2 the upper ray never
/// descends and d1 is unbounded.
struct VisibilityBand {
  double d1_m = 0.0;
  double d2_m = 0.0;
  bool d1_unbounded = false;
};

VisibilityBand gr_visibility_band(double h_gbs_m, double h_uav_m, double dt_angle_deg,
                                  double hpbw_deg);

/// Distance at which the down-tilted main lobe first touches the ground.
double main_lobe_ground_distance(double h_gbs_m, double dt_angle_deg);

/// Debug dump: site id, position, heights, tilts.
std::string layout_json(const NetworkLayout& layout);

}  // namespace uptilt
