#pragma once

#include "tfl/types.hpp"

namespace tfl {

// Time-frequency shift (pi(k,l) f)(t) = e^{2 pi i l t / N} f((t - k) mod N);
// modulation applied after translation. Unitary on C^N.
Signal tf_shift(PhasePoint z, const Signal& f);

// Dense matrix of pi(z) acting on C^N.
CMatrix tf_shift_matrix(PhasePoint z, int n);

// The scalar c of modulus 1 with pi(z1) pi(z2) = c pi(z2) pi(z1).
// With the shift convention above, c = e^{2 pi i (l1 k2 - l2 k1) / N}.
Complex commutation_phase(PhasePoint z1, PhasePoint z2, int n);

// Phase picked up when composing shifts:
// pi(z1) pi(z2) = composition_phase(z1, z2) * pi(z1 + z2),
// composition_phase = e^{-2 pi i l2 k1 / N}.
Complex composition_phase(PhasePoint z1, PhasePoint z2, int n);

// Short-time Fourier transform V_phi f(k,l) = <f, pi(k,l) phi>
//                                           = sum_t f(t) conj(phi(t-k)) e^{-2 pi i l t / N}.
// No 1/N factor; the resolution of identity reads V* V = N ||phi||^2 I.
// Satisfies the Moyal identity sum_{k,l} |V_phi f|^2 = N ||f||^2 ||phi||^2.
TFMatrix stft(const Window& phi, const Signal& f);

// Adjoint V*_phi F = sum_{k,l} F(k,l) pi(k,l) phi. Exact adjoint of stft under
// the phase-space inner product: <V* F, g> = <F, V g>.
Signal stft_adjoint(const Window& phi, const TFMatrix& F);

// Periodized Gaussian phi(t) = sum_{|j| <= J} e^{-pi (t + jN)^2 / N}, l2-normalized.
// J is fixed so the dropped tail is below 1e-15.
Window gaussian_window(int n);

// Indicator of {0, .., width-1}, l2-normalized (1/sqrt(width) on its support).
// box_window(n, 1) is the unit impulse at t = 0.
Window box_window(int n, int width);

}  // namespace tfl
