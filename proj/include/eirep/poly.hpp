#pragma once

#include <random>
#include <vector>

#include "eirep/field.hpp"
#include "eirep/matrix.hpp"

namespace eirep {

/// Polynomial over a finite field, coefficients from low to high degree, no trailing zeros.
using Polynomial = std::vector<Fq>;

namespace poly {

void trim(Polynomial& a);
int degree(const Polynomial& a);
Polynomial add(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial sub(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial mul(const Field& f, const Polynomial& a, const Polynomial& b);
/// Quotient and remainder; b must be nonzero.
void divmod(const Field& f, const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
Polynomial mod(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial monic(const Field& f, const Polynomial& a);
/// Monic greatest common divisor.
Polynomial gcd(const Field& f, Polynomial a, Polynomial b);
Polynomial powmod(const Field& f, Polynomial base, std::uint64_t k, const Polynomial& m);
Polynomial exact_div(const Field& f, const Polynomial& a, const Polynomial& b);

/// Characteristic polynomial det(tI - a), computed by Hessenberg reduction.
Polynomial charpoly(const Field& f, const Matrix& a);
/// p(a) by Horner's rule.
Matrix evaluate(const Field& f, const Polynomial& p, const Matrix& a);
/// The distinct monic irreducible factors of f, sorted by degree.
std::vector<Polynomial> irreducible_factors(const Field& f, const Polynomial& p, std::mt19937_64& rng);

}  // namespace poly
}  // namespace eirep
