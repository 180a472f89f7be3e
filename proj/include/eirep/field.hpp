#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace eirep {

/// Field element: an integer in [0, q). For q = p^e, digit i in base p is the
/// coefficient of t^i in the polynomial basis.
using Fq = std::uint32_t;

/**
 * @brief Finite field GF(p^e) with table-driven multiplication.
 *
 * Prime fields use modular arithmetic directly. Extension fields store
 * log/antilog tables over a primitive element, so q is limited to 2^16.
 */
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  Field() = default;
  static Field prime(std::uint32_t p);
  /// GF(p^e) with a modulus found by a seeded search for an irreducible polynomial.
  static Field extension(std::uint32_t p, std::uint32_t e, std::uint64_t seed = 0);
  /// GF(p^e) with an explicit monic modulus (coefficients low to high, size e + 1).
  static Field with_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string describe() const;

  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  Fq from_int(std::int64_t v) const;
  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t k) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  struct Tables {
    std::vector<std::uint32_t> log, exp;
    std::vector<std::uint32_t> inverse;
  };
  void build_tables();

  std::uint32_t p_ = 2, e_ = 1, q_ = 2;
  std::vector<std::uint32_t> modulus_{0, 1};
  std::shared_ptr<const Tables> tables_;
};

/// True when the monic polynomial (coefficients low to high) is irreducible over GF(p).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace eirep
