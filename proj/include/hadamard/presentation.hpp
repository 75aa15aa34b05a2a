#pragma once

#include "hadamard/core.hpp"

namespace hadamard {

/// True iff the rows of h are pairwise orthogonal with squared norm n.
bool verify_sign_hadamard(const SignMatrix& h);

/// Same test carried out on the columns; agrees with verify_sign_hadamard on
/// every square input.
bool verify_sign_hadamard_columns(const SignMatrix& h);

bool is_normalized(const SignMatrix& h);

/// Negates the rows whose first entry is -1, then the columns whose first
/// entry is -1. Throws NotHadamard if h is not a Hadamard matrix.
SignMatrix normalize(const SignMatrix& h);

/// The sign flips of normalize() without the Hadamard check.
SignMatrix normalize_signs(SignMatrix h);

/// Lower-right block of a normalized sign matrix with -1 -> 1, +1 -> 0.
/// Throws NotNormalized if the first row or column holds a -1.
BitMatrix zo_from_pm(const SignMatrix& h);

/// Inverse of zo_from_pm: borders t with +1 and maps entries x -> 1 - 2x.
SignMatrix pm_from_zo(const BitMatrix& t);

}  // namespace hadamard
