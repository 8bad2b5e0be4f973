#pragma once

/** @file
 *  Reference implementations used by the verification suites and tests.
 *  Kept deliberately independent of the Gram-Cholesky kernels: everything
 *  here goes through a plain LU decomposition with partial pivoting.
 */

#include "undet/linalg.hpp"

namespace undet::oracles {

// Solves a square dense system; throws std::runtime_error on a zero pivot.
Vector lu_solve(Matrix a, Vector b);

double determinant(Matrix a);

// Minimum-distance point of {y : H y = b} from x, computed from the saddle
// system [[I, Ht], [H, 0]] (y, lambda) = (x, b).
Vector kkt_project(const Vector& x, const Matrix& h, const Vector& b);

}  // namespace undet::oracles
