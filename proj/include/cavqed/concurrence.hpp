#pragma once

#include "cavqed/model.hpp"

namespace cavqed {

/// The six pairwise concurrences of the single-excitation state at one
/// instant, indexed by PairId. Every value lies in [0, 1].
struct ConcurrenceSet {
  std::array<double, 6> value{};
  double t = 0.0;

  double operator[](PairId p) const { return value[pair_index(p)]; }
  double& operator[](PairId p) { return value[pair_index(p)]; }
};

/// Concurrences directly from the amplitudes:
///   C_AB = 2|a1 a2*|, C_ab = 2|a3 a4*|, C_Aa = 2|a3 a1*|,
///   C_Ab = 2|a4 a1*|, C_Ba = 2|a2 a3*|, C_Bb = 2|a2 a4*|.
/// Throws std::invalid_argument if amps is not normalized to 1e-12.
ConcurrenceSet pairwise_concurrences(const AmplitudeVector& amps);

/// Resonant symmetric special case (theta = pi/4, delta = 0, g_a = g_b = g):
///   C_AB = cos^2(2gt), C_ab = sin^2(2gt), cross pairs = |sin(4gt)|/2.
/// Throws std::invalid_argument unless g > 0 and t >= 0.
double resonant_symmetric_case(double g, double t, PairId pair);

/// Exact resonant expression for C_Aa and C_Ba at delta = 0:
///   C_Aa = (4 g_a / Omega) |sin(Omega t)| |w0 (u0 - w0) + 2 w0^2 cos^2(Omega t / 2)|
/// and the sin^2 variant for Ba. Written with the w0 factor multiplied
/// through so that w0 = 0 yields 0 instead of 0/0. Algebraically identical
/// to the pairwise values for every coupling ratio.
/// Throws std::invalid_argument if params.delta != 0 or pair is not Aa/Ba.
double resonant_exact_aa_ba(const ModelParams& params, double t, PairId pair);

/// C_AB^2 + C_Ab^2 + C_Ba^2 + C_ab^2. Conserved (== 1) in the resonant
/// symmetric regime; elsewhere it is reported, never asserted.
double quartet_sum(const ConcurrenceSet& cs);

}  // namespace cavqed
