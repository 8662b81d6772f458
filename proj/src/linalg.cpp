#include "leibniz/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "leibniz/error.hpp"
#include "leibniz/kernels.hpp"

namespace leib {

namespace {

void require_field(const FieldDesc& a, const FieldDesc& b) {
  if (!(a == b)) throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
}

void require_len(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": length " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

}  // namespace

Vector zero_vector(const FieldDesc& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(const FieldDesc& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_len(a.size(), b.size(), "vector add");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_len(a.size(), b.size(), "vector sub");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Scalar& s, std::span<const Scalar> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

std::string vector_to_string(std::span<const Scalar> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

Matrix::Matrix(const FieldDesc& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(const FieldDesc& field, std::initializer_list<std::initializer_list<long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require_len(r.size(), cols_, "matrix literal row");
    for (long v : r) entries_.emplace_back(field, v);
  }
}

Matrix::Matrix(const FieldDesc& field, std::size_t rows, std::size_t cols,
               std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_len(entries_.size(), rows * cols, "matrix entries");
  for (const auto& s : entries_) require_field(s.field(), field);
}

Matrix Matrix::identity(const FieldDesc& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldDesc& field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_len(rows[r].size(), cols, "from_rows");
    for (std::size_t c = 0; c < cols; ++c) {
      require_field(rows[r][c].field(), field);
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const FieldDesc& field, std::size_t rows,
                            std::span<const Vector> cols) {
  return from_rows(field, rows, cols).transpose();
}

Matrix Matrix::reshape(const FieldDesc& field, std::size_t rows, std::size_t cols,
                       std::span<const Scalar> flat) {
  return Matrix(field, rows, cols, std::vector<Scalar>(flat.begin(), flat.end()));
}

Matrix Matrix::elementary(const FieldDesc& field, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(field, n, n);
  m.at(i, j) = Scalar::one(field);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

bool Matrix::is_zero() const { return leib::is_zero(entries_); }

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw SingularMap("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, n + r) = Scalar::one(field_);
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) throw SingularMap("matrix is singular");
  Matrix inv(field_, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.reduced.at(r, n + c);
  }
  return inv;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  require_len(v.size(), cols_, "matrix-vector product");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero() && !at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add shape");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub shape");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& e : m.entries_) e *= s;
  return m;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", " : "") << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RrefResult rref(const Matrix& m) { return kernels::rref_parallel(m); }

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace nullspace(const Matrix& m) {
  const FieldDesc& f = m.field();
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(f, m.cols(), free);
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> rhs) {
  require_len(rhs.size(), m.rows(), "solve rhs");
  const FieldDesc& f = m.field();
  for (const auto& s : rhs) require_field(s.field(), f);
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[r];
  }
  const RrefResult red = rref(aug);
  if (red.rank > 0 && red.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(f, m.cols());
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivots[r]] = red.reduced.at(r, m.cols());
  return x;
}

Subspace Subspace::zero(const FieldDesc& field, std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(const FieldDesc& field, std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Subspace(ambient_dim, Matrix::identity(field, ambient_dim), std::move(piv));
}

Subspace Subspace::span(const FieldDesc& field, std::size_t ambient_dim,
                        std::span<const Vector> vectors) {
  if (vectors.empty()) return zero(field, ambient_dim);
  return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult red = rref(m);
  Matrix basis(m.field(), red.rank, m.cols());
  for (std::size_t r = 0; r < red.rank; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) basis.at(r, c) = red.reduced.at(r, c);
  }
  return Subspace(m.cols(), std::move(basis), std::move(red.pivots));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < dim(); ++r) {
    out.emplace_back(basis_.row(r).begin(), basis_.row(r).end());
  }
  return out;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  require_len(v.size(), ambient_, "subspace reduce");
  Vector out(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar coeff = out[pivots_[r]];
    if (coeff.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (!basis_.at(r, c).is_zero()) out[c].sub_mul(coeff, basis_.at(r, c));
    }
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  for (const auto& s : v) require_field(s.field(), field());
  return leib::is_zero(reduce(v));
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords;
  coords.reserve(dim());
  for (auto p : pivots_) coords.push_back(v[p]);
  return coords;
}

Vector Subspace::combine(std::span<const Scalar> coords) const {
  require_len(coords.size(), dim(), "subspace combine");
  Vector out = zero_vector(field(), ambient_);
  for (std::size_t r = 0; r < dim(); ++r) {
    if (coords[r].is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c) out[c] += coords[r] * basis_.at(r, c);
  }
  return out;
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t r = 0; r < dim(); ++r) os << (r ? ", " : "") << vector_to_string(basis_.row(r));
  os << '}';
  return os.str();
}

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  require_field(a.field(), b.field());
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspaces of different ambient dimension");
  }
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::vector<Vector> rows = a.basis_vectors();
  for (auto& v : b.basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const FieldDesc& f = a.field();
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(f, n);
  // x A = y B  <=>  (x, y) in ker [A; -B]^T; the intersection is {x A}.
  const std::size_t k = a.dim() + b.dim();
  Matrix sys(f, n, k);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < a.dim(); ++r) sys.at(c, r) = a.basis().at(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r) sys.at(c, a.dim() + r) = -b.basis().at(r, c);
  }
  const Subspace ker = nullspace(sys);
  std::vector<Vector> vecs;
  for (const auto& sol : ker.basis_vectors()) {
    vecs.push_back(a.combine(std::span<const Scalar>(sol).first(a.dim())));
  }
  return Subspace::span(f, n, vecs);
}

bool subspace_contains(const Subspace& a, std::span<const Scalar> v) { return a.contains(v); }

bool subspace_leq(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    if (!b.contains(a.basis().row(r))) return false;
  }
  return true;
}

}  // namespace leib
