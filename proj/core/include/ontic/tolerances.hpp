#pragma once

namespace ontic {

// Normalization tolerance for probability tables, state norms and projector
// algebra (entrywise).
inline constexpr double kNormTol = 1e-9;

// Events with probability at or below this threshold count as unsupported.
// This is the decidable stand-in for "strictly positive probability".
inline constexpr double kSupportEps = 1e-12;

// Default tolerance for the Markov / independence / statistics checks.
inline constexpr double kCheckTol = 1e-7;

// Relative singular-value cutoff for the projector span rank test.
inline constexpr double kRankRelTol = 1e-8;

// Two states are the same wave function when |<a|b>| >= 1 - kPhaseTol.
inline constexpr double kPhaseTol = 1e-9;

// Minimum top eigenvalue for a fitted density operator to count as pure.
inline constexpr double kPurityMin = 0.99;

}  // namespace ontic
