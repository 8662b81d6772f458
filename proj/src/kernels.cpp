#include "leibniz/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "leibniz/algebra.hpp"

namespace leib::kernels {

namespace {

// Moves a nonzero entry of column `col` (searching rows >= r) into row r and
// scales it to 1. Returns false when the column has no pivot.
bool place_pivot(Matrix& a, std::size_t r, std::size_t col) {
  std::size_t p = r;
  while (p < a.rows() && a.at(p, col).is_zero()) ++p;
  if (p == a.rows()) return false;
  if (p != r) std::swap_ranges(a.row(p).begin(), a.row(p).end(), a.row(r).begin());
  const Scalar inv = a.at(r, col).inverse();
  for (std::size_t c = col; c < a.cols(); ++c) {
    if (!a.at(r, c).is_zero()) a.at(r, c) *= inv;
  }
  return true;
}

void eliminate_row(Matrix& a, std::size_t target, std::size_t pivot_row, std::size_t col) {
  if (a.at(target, col).is_zero()) return;
  const Scalar factor = a.at(target, col);
  for (std::size_t c = col; c < a.cols(); ++c) {
    const Scalar& pv = a.at(pivot_row, c);
    if (!pv.is_zero()) a.at(target, c).sub_mul(factor, pv);
  }
}

}  // namespace

RrefResult rref_serial(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    if (!place_pivot(a, r, col)) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r) eliminate_row(a, i, r, col);
    }
    res.pivots.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

RrefResult rref_parallel(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const auto rows = static_cast<long>(a.rows());
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    if (!place_pivot(a, r, col)) continue;
    const auto pr = static_cast<long>(r);
#pragma omp parallel for schedule(static) if (rows > 64)
    for (long i = 0; i < rows; ++i) {
      if (i != pr) eliminate_row(a, static_cast<std::size_t>(i), r, col);
    }
    res.pivots.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

namespace {

// Coefficient of e_t in [[e_i, e_j], e_k].
Scalar left_nested(const Algebra& a, std::size_t i, std::size_t j, std::size_t k, std::size_t t) {
  Scalar s = Scalar::zero(a.field());
  for (std::size_t m = 0; m < a.dim(); ++m) {
    if (!a.c(i, j, m).is_zero() && !a.c(m, k, t).is_zero()) s += a.c(i, j, m) * a.c(m, k, t);
  }
  return s;
}

// Coefficient of e_t in [e_i, [e_j, e_k]].
Scalar right_nested(const Algebra& a, std::size_t i, std::size_t j, std::size_t k, std::size_t t) {
  Scalar s = Scalar::zero(a.field());
  for (std::size_t m = 0; m < a.dim(); ++m) {
    if (!a.c(j, k, m).is_zero() && !a.c(i, m, t).is_zero()) s += a.c(j, k, m) * a.c(i, m, t);
  }
  return s;
}

bool triple_holds(const Algebra& a, Identity which, std::size_t i, std::size_t j, std::size_t k) {
  for (std::size_t t = 0; t < a.dim(); ++t) {
    if (which == Identity::RightLeibniz) {
      // [[x,y],z] = [[x,z],y] + [x,[y,z]]
      if (!(left_nested(a, i, j, k, t) == left_nested(a, i, k, j, t) + right_nested(a, i, j, k, t))) {
        return false;
      }
    } else {
      // [x,[y,z]] = [[x,y],z] + [y,[x,z]]
      if (!(right_nested(a, i, j, k, t) == left_nested(a, i, j, k, t) + right_nested(a, j, i, k, t))) {
        return false;
      }
    }
  }
  return true;
}

bool slab_holds(const Algebra& a, Identity which, std::size_t i) {
  for (std::size_t j = 0; j < a.dim(); ++j) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (!triple_holds(a, which, i, j, k)) return false;
    }
  }
  return true;
}

}  // namespace

bool check_identity_serial(const Algebra& a, Identity which) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!slab_holds(a, which, i)) return false;
  }
  return true;
}

bool check_identity_parallel(const Algebra& a, Identity which) {
  const auto n = static_cast<long>(a.dim());
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok) if (n > 4)
  for (long i = 0; i < n; ++i) {
    ok = ok && slab_holds(a, which, static_cast<std::size_t>(i));
  }
  return ok;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace leib::kernels
