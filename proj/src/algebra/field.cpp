#include "seqcm/field.hpp"

#include <cctype>

namespace seqcm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InvalidArgument("characteristic must be prime");
}

FieldElement PrimeField::element(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement PrimeField::from_decimal(std::string_view digits) const {
  std::uint64_t acc = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InvalidArgument("not a decimal integer");
    acc = (acc * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
  }
  return {static_cast<std::uint32_t>(acc)};
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.is_zero()) throw DivisionByZero();
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.value;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return {static_cast<std::uint32_t>(t)};
}

FieldElement field_inv(FieldElement a, std::uint32_t p) { return PrimeField(p).inv(a); }

}  // namespace seqcm
