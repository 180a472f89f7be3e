#include "eirep/field.hpp"

#include <random>

#include "eirep/error.hpp"
#include "eirep/group.hpp"

namespace eirep {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = r * a % p;
    a = a * a % p;
    k >>= 1;
  }
  return r;
}

// Remainder of a by monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const auto db = b.size() - 1;
  while (a.size() > db) {
    const auto lead = a.back();
    const auto shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(b[i])) % p);
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const auto deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1 .. deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      auto c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxOrder) throw ResourceError("field order exceeds limit");
  Field f;
  f.p_ = p;
  f.e_ = 1;
  f.q_ = p;
  f.modulus_ = {0, 1};
  f.build_tables();
  return f;
}

Field Field::extension(std::uint32_t p, std::uint32_t e, std::uint64_t seed) {
  if (e == 1) return prime(p);
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw ResourceError("field order exceeds limit");
  }
  std::mt19937_64 rng(seed);
  Poly m(e + 1);
  m[e] = 1;
  for (int attempt = 0; attempt < 256; ++attempt) {
    for (std::uint32_t i = 0; i < e; ++i) m[i] = static_cast<std::uint32_t>(rng() % p);
    if (is_irreducible_mod_p(m, p)) return with_modulus(p, m);
  }
  // Deterministic fallback: the first irreducible in lexicographic order.
  for (std::uint64_t code = 0; code < q; ++code) {
    auto c = code;
    for (std::uint32_t i = 0; i < e; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible_mod_p(m, p)) return with_modulus(p, m);
  }
  throw ResourceError("no irreducible polynomial found");
}

Field Field::with_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (!is_irreducible_mod_p(modulus, p)) throw InputError("field modulus is not irreducible");
  const auto e = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw ResourceError("field order exceeds limit");
  }
  Field f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);
  f.modulus_ = modulus;
  f.build_tables();
  return f;
}

void Field::build_tables() {
  auto t = std::make_shared<Tables>();
  if (e_ == 1) {
    t->inverse.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) t->inverse[a] = static_cast<std::uint32_t>(pow_mod(a, q_ - 2, q_));
    tables_ = t;
    return;
  }
  // Polynomial multiplication by an element, reduced by the modulus.
  auto to_poly = [&](Fq a) {
    Poly v(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      v[i] = a % p_;
      a /= p_;
    }
    return v;
  };
  auto from_poly = [&](const Poly& v) {
    Fq a = 0;
    for (std::uint32_t i = e_; i-- > 0;) a = a * p_ + (i < v.size() ? v[i] : 0);
    return a;
  };
  auto slow_mul = [&](Fq a, Fq b) {
    auto pa = to_poly(a), pb = to_poly(b);
    Poly prod(2 * e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
      for (std::uint32_t j = 0; j < e_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p_);
    return from_poly(poly_mod(prod, modulus_, p_));
  };
  t->log.assign(q_, 0);
  t->exp.assign(q_, 0);
  bool found = false;
  for (Fq g = 2; g < q_ && !found; ++g) {
    std::vector<bool> seen(q_, false);
    Fq x = 1;
    bool primitive = true;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      if (seen[x]) {
        primitive = false;
        break;
      }
      seen[x] = true;
      t->exp[k] = x;
      t->log[x] = k;
      x = slow_mul(x, g);
    }
    found = primitive && x == 1;
  }
  if (!found) throw ResourceError("no primitive element found");
  t->inverse.assign(q_, 0);
  for (Fq a = 1; a < q_; ++a) t->inverse[a] = t->exp[(q_ - 1 - t->log[a]) % (q_ - 1)];
  tables_ = t;
}

std::string Field::describe() const {
  if (e_ == 1) return "GF(" + std::to_string(p_) + ")";
  std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ") mod ";
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) s += "+";
    first = false;
    if (modulus_[i] != 1 || i == 0) s += std::to_string(modulus_[i]);
    if (i >= 1) s += "t";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

Fq Field::from_int(std::int64_t v) const {
  auto m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Fq>(m);
}

Fq Field::add(Fq a, Fq b) const {
  if (e_ == 1) {
    auto s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fq r = 0, place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Fq Field::neg(Fq a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  Fq r = 0, place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

Fq Field::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq Field::mul(Fq a, Fq b) const {
  if (e_ == 1) return static_cast<Fq>(static_cast<std::uint64_t>(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  return tables_->exp[(tables_->log[a] + tables_->log[b]) % (q_ - 1)];
}

Fq Field::inv(Fq a) const {
  if (a == 0) throw InputError("division by zero in " + describe());
  return tables_->inverse[a];
}

Fq Field::pow(Fq a, std::uint64_t k) const {
  Fq r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

}  // namespace eirep
