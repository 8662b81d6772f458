#pragma once

// Elimination and identity-checking kernels. Each kernel exists twice: a
// plain serial loop kept as the reference for tests and benchmarks, and an
// OpenMP version that parallelises the data-parallel inner loop. Both must
// produce bit-identical results.

#include <cstddef>

#include "leibniz/linalg.hpp"

namespace leib {
class Algebra;
}

namespace leib::kernels {

RrefResult rref_serial(const Matrix& m);
/// Row updates for each pivot run in parallel.
RrefResult rref_parallel(const Matrix& m);

enum class Identity { RightLeibniz, LeftLeibniz };

/// Exhaustive check of the identity over all basis triples.
bool check_identity_serial(const Algebra& a, Identity which);
/// Same, with the outermost basis index distributed over threads.
bool check_identity_parallel(const Algebra& a, Identity which);

/// Number of threads OpenMP kernels may use (1 when built without OpenMP).
int max_threads();

}  // namespace leib::kernels
