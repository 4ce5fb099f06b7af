#pragma once

#include <Eigen/Dense>

#include "uptilt/channel.hpp"
#include "uptilt/geometry.hpp"
#include "uptilt/radio.hpp"

namespace uptilt {

/// One up-tilt angle per site, degrees.
using TiltVector = Eigen::ArrayXd;

struct EvalOptions {
  bool include_up_sets = true;    // false: up arrays absent from serving and interference
  bool associate_up_sets = true;  // false: up arrays interfere but never serve (GUE policy)
};

/// Precomputes everything that does not depend on the up-tilt angles over a
/// fixed grid, then evaluates association / SIR for arbitrary tilt vectors.
/// Down-set powers (direct + ground reflection) are tilt-invariant and cached
/// as a dense points-by-sites matrix; up-set powers reduce to the array power
/// ratio in sin(theta) - sin(tilt), applied columnwise per site.
class NetworkEvaluator {
 public:
  NetworkEvaluator(const NetworkLayout& layout, const EvalGrid& grid, int n_elements,
                   const ElementParams& element, const ChannelParams& channel,
                   const EvalOptions& options);

  /// Fast path for the optimizer: min over grid points of the serving-set
  /// USF SIR. Associations are recomputed for the given tilts.
  double min_usf_sir_db(const TiltVector& ut_angles_deg) const;

  /// Full per-point report (associations, USF/CSF SIRs, rates, aggregates).
  SirReport evaluate(const TiltVector& ut_angles_deg, const EicicConfig& eicic) const;

  /// Up-set linear received powers (mW), points x sites.
  Eigen::MatrixXd up_powers_mw(const TiltVector& ut_angles_deg) const;
  const Eigen::MatrixXd& down_powers_mw() const { return p_down_mw_; }

  int n_sites() const { return static_cast<int>(layout_.sites.size()); }
  int n_points() const { return static_cast<int>(grid_.points.size()); }
  const NetworkLayout& layout() const { return layout_; }
  const EvalGrid& grid() const { return grid_; }
  const EvalOptions& options() const { return options_; }

 private:
  NetworkLayout layout_;
  EvalGrid grid_;
  EvalOptions options_;
  int n_elements_;

  double k_mw_ = 0.0;      // P_GBS (mW) * (lambda / 4 pi)^2
  double alpha_up_ = 2.0;  // exponent toward the up arrays (one receiver height per grid)
  double spacing_wl_ = 0.5;

  Eigen::MatrixXd p_down_mw_;       // tilt-invariant down-set powers
  Eigen::ArrayXd p_down_row_sum_;   // cached row reductions of p_down_mw_
  Eigen::ArrayXd p_down_row_max_;
  Eigen::ArrayXXd sin_theta_up_;    // sin of elevation toward each up array
  Eigen::ArrayXXd up_scale_;        // element linear gain / direct path length
};

}  // namespace uptilt
