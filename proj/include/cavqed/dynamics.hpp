#pragma once

#include "cavqed/model.hpp"

namespace cavqed {

/// Initial-condition weights for mixing angle theta:
///   u0 = (cos(theta) - sin(theta)) / 2
///   w0 = (cos(theta) + sin(theta)) / 2
/// Throws std::invalid_argument for non-finite theta. Any finite theta is
/// accepted here; the [0, 2*pi) restriction applies to ModelParams only.
InitialWeights initial_weights(double theta);

/// Detuned Rabi frequency Omega = sqrt(delta^2 + 2*(g_a^2 + g_b^2)).
double rabi_frequency(const ModelParams& params);

/// Closed-form amplitudes of the single-excitation state at time t >= 0,
/// starting from (cos(theta), sin(theta), 0, 0):
///   alpha_1 = u0 + w0 * B(t)
///   alpha_2 = -u0 + w0 * B(t)
///   alpha_3 = -2i * (w0 g_a / Omega) * e^{i delta t} * sin(Omega t)
///   alpha_4 = -2i * (w0 g_b / Omega) * e^{i delta t} * sin(Omega t)
/// with B(t) = e^{i delta t} * [cos(Omega t) - i (delta/Omega) sin(Omega t)].
/// Throws std::invalid_argument for negative or non-finite t.
AmplitudeVector amplitudes_closed_form(const ModelParams& params, double t);

}  // namespace cavqed
