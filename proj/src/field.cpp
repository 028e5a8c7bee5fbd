#include "curvelab/field.hpp"

#include <string>

#include "curvelab/error.hpp"

namespace curvelab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::NotHomogeneous: return "not-homogeneous";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::ConstructionFailure: return "construction-failure";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::NotACurve: return "not-a-curve";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(Coeff p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p))
    fail(ErrorKind::InvalidArgument,
         "characteristic must be an odd prime below 2^31, got " + std::to_string(p));
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1;
  Coeff base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) fail(ErrorKind::InvalidArgument, "division by zero in prime field");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

bool PrimeField::sqrt(Coeff a, Coeff& root) const {
  if (a == 0) {
    root = 0;
    return true;
  }
  if (pow(a, (p_ - 1) / 2) != 1) return false;
  // p - 1 = q * 2^s
  std::uint64_t q = p_ - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Coeff z = 2;
  while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;
  Coeff c = pow(z, q);
  Coeff x = pow(a, (q + 1) / 2);
  Coeff t = pow(a, q);
  int m = s;
  while (t != 1) {
    int i = 0;
    Coeff t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Coeff b = c;
    for (int k = 0; k < m - i - 1; ++k) b = mul(b, b);
    x = mul(x, b);
    c = mul(b, b);
    t = mul(t, c);
    m = i;
  }
  root = x;
  return true;
}

}  // namespace curvelab
