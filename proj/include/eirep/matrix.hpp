#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eirep/field.hpp"

namespace eirep {

using Vec = std::vector<Fq>;

/// Dense row-major matrix over a finite field. Modules act on column vectors.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Fq> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  Fq& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Fq operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  Vec row(std::size_t r) const { return Vec(data.begin() + r * cols, data.begin() + (r + 1) * cols); }
  Vec column(std::size_t c) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
};

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_add(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Field& f, Fq s, const Matrix& a);
Matrix transpose(const Matrix& a);
Vec apply(const Field& f, const Matrix& a, const Vec& v);

/// Reduces a to reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& a);
std::size_t rank(const Field& f, Matrix a);
/// Basis of {x : a x = 0}, one basis vector per row.
Matrix nullspace(const Field& f, const Matrix& a);
std::optional<Matrix> inverse(const Field& f, const Matrix& a);
bool is_invertible(const Field& f, const Matrix& a);
/// Reduced echelon basis of the row space (zero rows removed).
Matrix row_space(const Field& f, Matrix a);

/// Subspace of F^n held as a reduced echelon basis; supports membership and reduction.
class Subspace {
 public:
  Subspace(const Field& f, std::size_t n) : field_(f), n_(n) {}
  const Field& field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection onto the pivot coordinates (zero iff v lies in the span).
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v if independent; returns true when the dimension grew.
  bool add(const Vec& v);
  /// Coordinates of a vector of the subspace in the echelon basis.
  Vec coordinates(const Vec& v) const;
  Matrix as_matrix() const { return Matrix::from_rows(rows_, n_); }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing the seeds and stable under every generator.
Subspace spin(const Field& f, const std::vector<Matrix>& gens, const std::vector<Vec>& seeds);

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng);
Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng);
void set_block(Matrix& a, std::size_t r0, std::size_t c0, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
std::string to_string(const Matrix& a);

}  // namespace eirep
