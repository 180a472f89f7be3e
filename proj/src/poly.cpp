#include "eirep/poly.hpp"

#include <algorithm>

#include "eirep/error.hpp"

namespace eirep::poly {

void trim(Polynomial& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Polynomial& a) { return static_cast<int>(a.size()) - 1; }

Polynomial add(const Field& f, const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Polynomial sub(const Field& f, const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Polynomial mul(const Field& f, const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

void divmod(const Field& f, const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.empty()) throw InputError("polynomial division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  const auto lead_inv = f.inv(b.back());
  while (r.size() >= b.size()) {
    const auto shift = r.size() - b.size();
    const auto c = f.mul(r.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, b[i]));
    r.pop_back();
    trim(r);
  }
  trim(q);
}

Polynomial mod(const Field& f, const Polynomial& a, const Polynomial& b) {
  Polynomial q, r;
  divmod(f, a, b, q, r);
  return r;
}

Polynomial monic(const Field& f, const Polynomial& a) {
  if (a.empty()) return a;
  const auto inv = f.inv(a.back());
  Polynomial r = a;
  for (auto& c : r) c = f.mul(inv, c);
  return r;
}

Polynomial gcd(const Field& f, Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Polynomial powmod(const Field& f, Polynomial base, std::uint64_t k, const Polynomial& m) {
  Polynomial r{1};
  r = mod(f, r, m);
  base = mod(f, base, m);
  while (k) {
    if (k & 1) r = mod(f, mul(f, r, base), m);
    base = mod(f, mul(f, base, base), m);
    k >>= 1;
  }
  return r;
}

Polynomial exact_div(const Field& f, const Polynomial& a, const Polynomial& b) {
  Polynomial q, r;
  divmod(f, a, b, q, r);
  if (!r.empty()) throw ConsistencyError("polynomial division is not exact");
  return q;
}

Polynomial charpoly(const Field& f, const Matrix& a) {
  if (a.rows != a.cols) throw InputError("characteristic polynomial of a non-square matrix");
  const auto n = a.rows;
  Matrix h = a;
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    const auto inv = f.inv(h(c + 1, c));
    for (std::size_t r = c + 2; r < n; ++r) {
      const auto u = f.mul(h(r, c), inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(r, j) = f.sub(h(r, j), f.mul(u, h(c + 1, j)));
      for (std::size_t i = 0; i < n; ++i) h(i, c + 1) = f.add(h(i, c + 1), f.mul(u, h(i, r)));
    }
  }
  // p_m = (t - h_mm) p_{m-1} - sum_i h_{m-i,m} (h_{m,m-1} ... h_{m-i+1,m-i}) p_{m-i-1}, 1-indexed.
  auto H = [&](std::size_t i, std::size_t j) { return h(i - 1, j - 1); };
  std::vector<Polynomial> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = mul(f, Polynomial{f.neg(H(m, m)), 1}, p[m - 1]);
    Fq t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, H(m - i + 1, m - i));
      const auto coeff = f.mul(H(m - i, m), t);
      if (coeff != 0) p[m] = sub(f, p[m], mul(f, Polynomial{coeff}, p[m - i - 1]));
    }
  }
  return p[n];
}

Matrix evaluate(const Field& f, const Polynomial& p, const Matrix& a) {
  Matrix r(a.rows, a.cols);
  for (std::size_t k = p.size(); k-- > 0;) {
    r = mat_mul(f, r, a);
    for (std::size_t i = 0; i < a.rows; ++i) r(i, i) = f.add(r(i, i), p[k]);
  }
  return r;
}

namespace {

Polynomial random_poly(const Field& f, std::size_t below, std::mt19937_64& rng) {
  Polynomial a(below);
  for (auto& c : a) c = static_cast<Fq>(rng() % f.order());
  trim(a);
  return a;
}

void equal_degree_split(const Field& f, const Polynomial& e, int d, std::mt19937_64& rng,
                        std::vector<Polynomial>& out) {
  if (degree(e) == d) {
    out.push_back(e);
    return;
  }
  const std::uint64_t q = f.order();
  for (int attempt = 0; attempt < 400; ++attempt) {
    auto a = random_poly(f, e.size() - 1, rng);
    if (degree(a) < 1) continue;
    auto g = gcd(f, a, e);
    if (degree(g) > 0 && degree(g) < degree(e)) {
      equal_degree_split(f, g, d, rng, out);
      equal_degree_split(f, exact_div(f, e, g), d, rng, out);
      return;
    }
    Polynomial b;
    if (q % 2 == 1) {
      // a^((q^d - 1) / 2) = (a^(1 + q + ... + q^(d-1)))^((q - 1) / 2)
      auto u = a, acc = mod(f, a, e);
      for (int i = 1; i < d; ++i) {
        u = powmod(f, u, q, e);
        acc = mod(f, mul(f, acc, u), e);
      }
      b = sub(f, powmod(f, acc, (q - 1) / 2, e), Polynomial{1});
    } else {
      // Trace map a + a^2 + ... + a^(2^(k d - 1)) with q = 2^k.
      const auto k = f.degree();
      auto u = mod(f, a, e);
      b = u;
      for (std::uint32_t i = 1; i < k * static_cast<std::uint32_t>(d); ++i) {
        u = mod(f, mul(f, u, u), e);
        b = add(f, b, u);
      }
    }
    g = gcd(f, b, e);
    if (degree(g) > 0 && degree(g) < degree(e)) {
      equal_degree_split(f, g, d, rng, out);
      equal_degree_split(f, exact_div(f, e, g), d, rng, out);
      return;
    }
  }
  throw ResourceError("equal-degree factorization did not converge");
}

}  // namespace

std::vector<Polynomial> irreducible_factors(const Field& f, const Polynomial& p, std::mt19937_64& rng) {
  auto g = monic(f, p);
  trim(g);
  std::vector<Polynomial> out;
  if (degree(g) < 1) return out;
  const std::uint64_t q = f.order();
  Polynomial x{0, 1};
  auto xq = mod(f, x, g);  // x^(q^d) mod g
  for (int d = 1; degree(g) >= d; ++d) {
    xq = powmod(f, xq, q, g);
    auto h = gcd(f, sub(f, xq, mod(f, x, g)), g);
    if (degree(h) >= 1) {
      equal_degree_split(f, h, d, rng, out);
      for (;;) {
        auto c = gcd(f, g, h);
        if (degree(c) < 1) break;
        g = exact_div(f, g, c);
      }
      xq = mod(f, xq, g);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace eirep::poly
