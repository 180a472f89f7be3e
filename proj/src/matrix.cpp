#include "eirep/matrix.hpp"

#include <algorithm>

#include "eirep/error.hpp"

namespace eirep {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data.begin() + r * cols);
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows);
  for (std::size_t r = 0; r < rows; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](Fq v) { return v == 0; });
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw InputError("matrix product: dimension mismatch");
  Matrix c(a.rows, b.cols);
  if (f.degree() == 1) {
    const std::uint64_t p = f.characteristic();
    std::vector<std::uint64_t> acc(b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols; ++k) {
        const std::uint64_t v = a(i, k);
        if (v == 0) continue;
        const Fq* brow = &b.data[k * b.cols];
        for (std::size_t j = 0; j < b.cols; ++j) acc[j] = (acc[j] + v * brow[j]) % p;
      }
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = static_cast<Fq>(acc[j]);
    }
    return c;
  }
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const auto v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = f.add(c(i, j), f.mul(v, b(k, j)));
    }
  return c;
}

Matrix mat_add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw InputError("matrix sum: dimension mismatch");
  Matrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = f.add(a.data[i], b.data[i]);
  return c;
}

Matrix mat_sub(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw InputError("matrix difference: dimension mismatch");
  Matrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = f.sub(a.data[i], b.data[i]);
  return c;
}

Matrix mat_scale(const Field& f, Fq s, const Matrix& a) {
  Matrix c = a;
  for (auto& v : c.data) v = f.mul(s, v);
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

Vec apply(const Field& f, const Matrix& a, const Vec& v) {
  if (a.cols != v.size()) throw InputError("matrix-vector product: dimension mismatch");
  Vec out(a.rows, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    Fq acc = 0;
    for (std::size_t j = 0; j < a.cols; ++j)
      if (v[j] != 0 && a(i, j) != 0) acc = f.add(acc, f.mul(a(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

std::vector<std::size_t> rref(const Field& f, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t piv = r;
    while (piv < a.rows && a(piv, c) == 0) ++piv;
    if (piv == a.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(piv, j), a(r, j));
    const auto inv = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols; ++j) a(r, j) = f.mul(inv, a(r, j));
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const auto factor = f.neg(a(i, c));
      for (std::size_t j = c; j < a.cols; ++j)
        if (a(r, j) != 0) a(i, j) = f.add(a(i, j), f.mul(factor, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& f, Matrix a) { return rref(f, a).size(); }

Matrix nullspace(const Field& f, const Matrix& a) {
  Matrix r = a;
  auto pivots = rref(f, r);
  std::vector<bool> is_pivot(a.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(basis, a.cols);
}

std::optional<Matrix> inverse(const Field& f, const Matrix& a) {
  if (a.rows != a.cols) return std::nullopt;
  const auto n = a.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(f, aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool is_invertible(const Field& f, const Matrix& a) { return a.rows == a.cols && rank(f, a) == a.rows; }

Matrix row_space(const Field& f, Matrix a) {
  auto piv = rref(f, a);
  Matrix out(piv.size(), a.cols);
  std::copy(a.data.begin(), a.data.begin() + piv.size() * a.cols, out.data.begin());
  return out;
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto c = v[pivots_[i]];
    if (c == 0) continue;
    const auto factor = field_.neg(c);
    const auto& row = rows_[i];
    for (std::size_t j = 0; j < n_; ++j)
      if (row[j] != 0) v[j] = field_.add(v[j], field_.mul(factor, row[j]));
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Fq x) { return x == 0; });
}

bool Subspace::add(const Vec& v) {
  auto r = reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && r[piv] == 0) ++piv;
  if (piv == n_) return false;
  const auto inv = field_.inv(r[piv]);
  for (auto& x : r) x = field_.mul(inv, x);
  // Keep the basis fully reduced so that coordinates are read off at the pivots.
  for (auto& row : rows_) {
    const auto c = row[piv];
    if (c == 0) continue;
    const auto factor = field_.neg(c);
    for (std::size_t j = 0; j < n_; ++j)
      if (r[j] != 0) row[j] = field_.add(row[j], field_.mul(factor, r[j]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace spin(const Field& f, const std::vector<Matrix>& gens, const std::vector<Vec>& seeds) {
  const auto n = seeds.empty() ? (gens.empty() ? 0 : gens[0].cols) : seeds[0].size();
  Subspace s(f, n);
  std::vector<Vec> queue;
  for (const auto& v : seeds)
    if (s.add(v)) queue.push_back(v);
  for (std::size_t k = 0; k < queue.size() && s.dim() < n; ++k)
    for (const auto& g : gens) {
      auto w = apply(f, g, queue[k]);
      if (s.add(w)) queue.push_back(std::move(w));
    }
  return s;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (auto& v : m.data) v = static_cast<Fq>(rng() % f.order());
  return m;
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = random_matrix(f, n, n, rng);
    if (is_invertible(f, m)) return m;
  }
}

void set_block(Matrix& a, std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) a(r0 + i, c0 + j) = b(i, j);
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows + b.rows, a.cols + b.cols);
  set_block(m, 0, 0, a);
  set_block(m, a.rows, a.cols, b);
  return m;
}

std::string to_string(const Matrix& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rows; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < a.cols; ++j) s += (j ? ", " : "") + std::to_string(a(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace eirep
