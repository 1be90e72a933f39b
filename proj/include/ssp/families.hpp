#pragma once

#include "ssp/schemes.hpp"

namespace ssp {

// Eigenvalue evaluators, one per family. `form` selects among the printed
// summation forms where more than one exists (Krawtchouk and Eberlein have
// three, Grassmann two); all forms agree and the tests enforce it.

Int krawtchouk(long d, long q, long j, long i, int form = 1);
Int eberlein(long n, long d, long j, long i, int form = 1);

// Last Johnson column: E_d(i) = (-1)^i binom(n-d-i, d-i).
Int kneser_eigen(long n, long d, long i);

Int grassmann_eigen(long q, long n, long d, long j, long i, int form = 1);
Int dualpolar_eigen(long q, long d, HalfInt e, long j, long i);
Int bilinear_eigen(long q, long d, long e, long j, long i);
Int alternating_eigen(long q, long n, long j, long i);
Int hermitian_eigen(long q, long d, long j, long i);

int form_count(const SchemeId& s);
Int eigen_entry(const SchemeId& s, long j, long i, int form = 1);

// Full eigenmatrix from the family formula, cross-checked entry by entry
// against the classical-parameter recurrence; a mismatch names (i, j).
EigenMatrix eigenmatrix(const SchemeId& s);

// Recurrence only; for hot loops that evaluate many schemes.
EigenMatrix eigenmatrix_unchecked(const SchemeId& s);

}  // namespace ssp
