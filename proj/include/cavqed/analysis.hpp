#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cavqed/concurrence.hpp"
#include "cavqed/model.hpp"

namespace cavqed {

struct TrajectoryRow {
  AmplitudeVector amps;
  ConcurrenceSet concurrence;
  double norm = 0.0;     // sum_i |alpha_i|^2
  double quartet = 0.0;  // C_AB^2 + C_Ab^2 + C_Ba^2 + C_ab^2
};

/// Uniformly sampled closed-form evolution on [0, t_max].
struct Trajectory {
  ModelParams params;
  std::vector<double> times;
  std::vector<TrajectoryRow> rows;
};

/// n uniform samples on [0, t_max], each row from the closed form.
/// Rows are independent and evaluated in parallel; the result is
/// bit-identical to the serial reference below.
/// Throws std::invalid_argument unless t_max > 0 and n >= 2.
Trajectory sample_trajectory(const ModelParams& params, double t_max,
                             std::size_t n);

/// A strict interior local maximum of one concurrence series, refined by a
/// parabola through the three bracketing samples.
struct PeakRecord {
  PairId pair;
  double t_peak = 0.0;
  double value = 0.0;
  std::size_t index = 0;  // sample index of the bracket centre
};

/// All strict interior local maxima of the chosen series, sorted by time.
/// Throws std::invalid_argument for trajectories with fewer than 3 samples.
std::vector<PeakRecord> find_peaks(const Trajectory& traj, PairId pair);

/// Times of refined peaks with value >= threshold within [0, horizon].
/// The series is sampled densely (1024 points per half-period pi/Omega)
/// before peak detection. threshold must lie in [0, 1]; threshold = 0
/// returns every detected peak.
std::vector<double> complete_transfer_times(const ModelParams& params,
                                            PairId pair, double threshold,
                                            double horizon);

/// Estimate of sup_t C_pair(t) over [0, horizon]: the maximum refined peak
/// value, with the window endpoints included. The grid error is bounded by
/// the parabolic-refinement residual. Requires horizon >= 3*pi/Omega (three
/// Rabi periods) and n >= 1000.
double sup_concurrence(const ModelParams& params, PairId pair, double horizon,
                       std::size_t n);

/// Closed interval; lo == hi denotes a fixed coordinate.
struct Range {
  double lo;
  double hi;
};

struct OptimizationResult {
  PairId pair;
  double theta_best = 0.0;
  double ratio_best = 0.0;  // g_b / g_a with g_a = 1
  double t_best = 0.0;
  double value_best = 0.0;
  std::size_t evaluations = 0;  // objective calls
};

/// Maximizes max_t C_pair(t) over (theta, ratio) at delta = 0 with g_a = 1,
/// g_b = ratio: a coarse 41x41 grid (theta linear, ratio log-spaced),
/// followed by golden-section refinement on each coordinate in turn until
/// both intervals shrink below 1e-4. The reported value is the objective
/// re-evaluated at the returned point and is never below the best
/// coarse-grid value. The horizon should cover at least one full period
/// 2*pi/Omega of the slowest cell; at delta = 0 the dynamics is periodic,
/// so one period captures the supremum.
OptimizationResult optimize_transfer(PairId pair, Range theta_range,
                                     Range ratio_range, double horizon);

/// Cross-validation of the closed form against the spectral propagator and
/// of the amplitude-product concurrences against the Wootters construction
/// on reduced density matrices, over seeded random parameter draws.
struct OracleReport {
  std::size_t cases = 0;
  std::uint64_t seed = 0;
  double max_amplitude_dev = 0.0;
  double max_concurrence_dev = 0.0;
};

/// Deterministic for a fixed seed; cases are evaluated in parallel with
/// results merged by index. Throws std::invalid_argument if n_cases == 0.
OracleReport verify_oracle(std::size_t n_cases, std::uint64_t seed);

/// Grid of sup_concurrence over theta (linear) x ratio (log-spaced), with
/// g_a = 1, g_b = ratio and the given delta. Cells are evaluated in
/// parallel; values are stored row-major (theta outer, ratio inner).
struct SweepGrid {
  PairId pair{};
  std::vector<double> thetas;
  std::vector<double> ratios;
  std::vector<double> sup;  // thetas.size() * ratios.size(), row-major
};

SweepGrid sweep_sup(PairId pair, double delta, Range theta_range,
                    std::size_t n_theta, Range ratio_range,
                    std::size_t n_ratio, double horizon, std::size_t n_samples);

/// One named tolerance check of the verification suite.
struct InvariantCheck {
  std::string name;
  double max_dev = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Runs the full invariant suite (normalization, antisymmetric-component
/// constancy, amplitude ratio, periodicity, concurrence range and
/// proportionality, resonant special cases, quartet conservation,
/// propagator unitarity, oracle equivalence, ratio-inversion symmetry).
std::vector<InvariantCheck> run_invariant_suite(std::size_t n_cases,
                                                std::uint64_t seed);

/// Serial reference implementations of the parallel kernels, kept for
/// consistency tests and benchmarking. Outputs are bit-identical to the
/// parallel versions.
namespace serial {
Trajectory sample_trajectory(const ModelParams& params, double t_max,
                             std::size_t n);
OracleReport verify_oracle(std::size_t n_cases, std::uint64_t seed);
SweepGrid sweep_sup(PairId pair, double delta, Range theta_range,
                    std::size_t n_theta, Range ratio_range,
                    std::size_t n_ratio, double horizon, std::size_t n_samples);
}  // namespace serial

}  // namespace cavqed
