#pragma once

// Every numeric decision threshold used by the library lives here so that the
// solvers, the oracle, and the test suite agree on a single set of values.

namespace qsat::tol {

// Acceptance threshold on the normalized per-edge residual of a product state.
inline constexpr double residual = 1e-8;

// Target tolerance for univariate root finding (companion matrix + Newton).
inline constexpr double root = 1e-12;

// Collinearity threshold (sine of angle) for duplicate-pair reconciliation.
inline constexpr double collinear = 1e-6;

// Relative pruning threshold for multivariate polynomial coefficients.
inline constexpr double poly_prune = 1e-14;

// Trailing-coefficient strip threshold for univariate polynomials, relative
// to the one-norm of the coefficient vector.
inline constexpr double uni_strip = 1e-12;

// Root-cluster radius used when dividing out shared zeros of a gamma pair.
inline constexpr double common_zero = 1e-9;

// Independent verifier threshold: |H|psi>| / |psi| for a claimed solution.
inline constexpr double null_space = 1e-6;

// A Hamiltonian whose smallest eigenvalue is below this is satisfiable.
inline constexpr double satisfiable_eig = 1e-9;

// Assembled Hamiltonians must be PSD up to this slack.
inline constexpr double psd_slack = -1e-10;

// Relative singular-value threshold deciding the Schmidt rank of a cut.
inline constexpr double schmidt_rank = 1e-10;

// Transfer-matrix invariant: |eval(c, phi x T phi)| per unit input norms.
inline constexpr double transfer_invariant = 1e-10;

// Relative threshold below which an evaluated transfer value counts as zero
// (triggers kernel substitution / the degenerate fallback).
inline constexpr double eval_zero = 1e-12;

// Maximum number of seeded basis rotations tried when a univariate
// specialization degenerates to a constant.
inline constexpr int max_rotations = 8;

}  // namespace qsat::tol
