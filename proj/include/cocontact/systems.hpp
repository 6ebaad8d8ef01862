#pragma once

#include "cocontact/hamiltonian.hpp"
#include "cocontact/lagrangian.hpp"

namespace cocontact {

/// Damped vibrating string family on the k=2, n=1 frame (t1, x, u, ut, ux,
/// zt, zx): density ut^2/2 minus a stretch term f over (t1, ux), minus a
/// source potential g over (t1, u), with the zt slot coupled through a decay
/// profile gamma over (x). Pass fields parsed with those variable subsets;
/// the parser aliases accept t for t1.
LagrangianSystem wave_lagrangian(const ScalarField& f, const ScalarField& g,
                                 const ScalarField& gamma);

/// Momentum-side twin for the quadratic stretch f = ux^2/2:
/// h = pt^2/2 - px^2/2 + g + gamma * zt.
HamiltonianSystem wave_hamiltonian(const ScalarField& g, const ScalarField& gamma);

/// Single damped driven oscillator on the k=1, n=1 momentum frame
/// (t, q, p, z): h = p^2/2 + omega^2 q^2/2 + gamma z - q * forcing(t).
HamiltonianSystem oscillator_hamiltonian(double omega, double gamma, const ScalarField& forcing);

/// Closed-form displacement and velocity of the damped driven oscillator
/// with forcing cos(nu t), started from rest at the origin. Underdamped
/// parameters only (gamma^2 < 4 omega^2).
struct OscillatorReference {
  double omega = 1.0;
  double gamma = 0.0;
  double nu = 1.0;

  double q(double t) const;
  double v(double t) const;
};

}  // namespace cocontact
