#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>

namespace cavqed {

/// Physical parameters of one system instance: two two-level emitters
/// coupled to two single-mode resonators, restricted to the
/// single-excitation sector.
///
/// All frequencies are dimensionless, expressed in units of a reference
/// coupling g_ref = max(g_a, g_b); times are in units of 1/g_ref.
///
/// NOTE on the detuning convention: `delta` is the HALF detuning,
///   2*delta = omega_0 - omega_c,
/// i.e. half the gap between the emitter transition frequency and the
/// common mode frequency. This is the quantity that enters the detuned
/// Rabi frequency sqrt(delta^2 + 2(g_a^2 + g_b^2)) directly.
struct ModelParams {
  double theta;  // initial-state mixing angle, radians, in [0, 2*pi)
  double delta;  // half detuning (see note above), any finite value
  double g_a;    // coupling of both emitters to mode a, >= 0
  double g_b;    // coupling of both emitters to mode b, >= 0

  // Validates on construction; throws std::invalid_argument on non-finite
  // values, theta outside [0, 2*pi), negative couplings, or g_a + g_b == 0.
  ModelParams(double theta, double delta, double g_a, double g_b);

  double reference_coupling() const { return g_a > g_b ? g_a : g_b; }
};

/// Weights of the antisymmetric (u0, frozen) and symmetric (w0, radiating)
/// two-emitter components of the initial state. Satisfies
/// u0^2 + w0^2 = 1/2 up to 1e-14.
struct InitialWeights {
  double u0;
  double w0;
};

/// State of the single-excitation subspace at time t: the four complex
/// amplitudes on the basis
///   |1> = |e g ; 0 0>,  |2> = |g e ; 0 0>,
///   |3> = |g g ; 1 0>,  |4> = |g g ; 0 1>.
/// Closed dynamics: sum_i |alpha_i|^2 = 1 to 1e-12.
struct AmplitudeVector {
  std::array<std::complex<double>, 4> alpha{};
  double t = 0.0;

  double norm_sq() const;
  bool is_normalized(double tol = 1e-12) const;
};

/// The six pairs of qubits: emitters A, B and modes a, b.
enum class PairId : int { AB = 0, ab = 1, Aa = 2, Ab = 3, Ba = 4, Bb = 5 };

inline constexpr std::array<PairId, 6> kAllPairs{PairId::AB, PairId::ab,
                                                 PairId::Aa, PairId::Ab,
                                                 PairId::Ba, PairId::Bb};

constexpr int pair_index(PairId p) { return static_cast<int>(p); }

std::string_view to_string(PairId p);
std::optional<PairId> parse_pair(std::string_view s);

}  // namespace cavqed
