#ifndef TURAN_PRIME_FIELD_HPP
#define TURAN_PRIME_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace turan {

/// Deterministic trial division; fine for moduli that index dense graphs.
inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// Arithmetic modulo a prime p. Elements are residues 0..p-1.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
    if (p > (std::int64_t{1} << 31)) throw std::invalid_argument("PrimeField: modulus too large");
  }

  std::int64_t modulus() const { return p_; }

  std::int64_t reduce(std::int64_t a) const {
    a %= p_;
    return a < 0 ? a + p_ : a;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(a * b); }
  std::int64_t neg(std::int64_t a) const { return reduce(-a); }

  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    std::int64_t result = 1;
    a = reduce(a);
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  /// Fermat inverse; throws on zero.
  std::int64_t inv(std::int64_t a) const {
    if (reduce(a) == 0) throw std::domain_error("PrimeField: zero has no inverse");
    return pow(a, p_ - 2);
  }

 private:
  std::int64_t p_;
};

}  // namespace turan

#endif  // TURAN_PRIME_FIELD_HPP
