#include "curvelab/monomial.hpp"

#include "curvelab/error.hpp"

namespace curvelab {
namespace mono {

Mon from_exponents(const std::vector<int>& exps, int comp) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars))
    fail(ErrorKind::InvalidArgument, "too many variables in monomial");
  Mon m = static_cast<Mon>(comp) << 48;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExponent)
      fail(ErrorKind::ResourceLimit, "monomial exponent out of range [0, 127]");
    m |= static_cast<Mon>(exps[i]) << (8 * i);
  }
  return m;
}

std::vector<int> to_exponents(Mon m, int nvars) {
  std::vector<int> e(nvars);
  for (int i = 0; i < nvars; ++i) e[i] = exponent(m, i);
  return e;
}

namespace {
void enumerate(int var, int nvars, int remaining, Mon acc, std::vector<Mon>& out) {
  if (var == nvars - 1) {
    out.push_back(acc | (static_cast<Mon>(remaining) << (8 * var)));
    return;
  }
  for (int e = remaining; e >= 0; --e)
    enumerate(var + 1, nvars, remaining - e, acc | (static_cast<Mon>(e) << (8 * var)), out);
}
}  // namespace

std::vector<Mon> all_of_degree(int nvars, int degree) {
  std::vector<Mon> out;
  if (degree < 0 || nvars <= 0) return out;
  if (degree > kMaxExponent) fail(ErrorKind::ResourceLimit, "degree above 127");
  enumerate(0, nvars, degree, 0, out);
  return out;
}

}  // namespace mono

std::uint64_t MonomialOrder::key(Mon m) const noexcept {
  const int comp = mono::component(m);
  std::uint64_t k = 0;
  switch (kind_) {
    case Kind::DegRevLex: {
      const std::uint64_t deg = static_cast<std::uint64_t>(graded_degree(m) + 32768) & 0xFFFF;
      k = deg << 48;
      int pos = 5;
      for (int v = nvars_ - 1; v >= 0; --v, --pos)
        k |= static_cast<std::uint64_t>(255 - mono::exponent(m, v)) << (8 * pos);
      k |= static_cast<std::uint64_t>(255 - comp);
      break;
    }
    case Kind::PositionOverTerm: {
      const std::uint64_t deg = static_cast<std::uint64_t>(graded_degree(m) + 32768) & 0xFFFF;
      k = static_cast<std::uint64_t>(255 - comp) << 56;
      k |= deg << 40;
      int pos = 4;
      for (int v = nvars_ - 1; v >= 0; --v, --pos)
        k |= static_cast<std::uint64_t>(255 - mono::exponent(m, v)) << (8 * pos);
      break;
    }
    case Kind::BlockElimination: {
      int pos = 7;
      int d1 = 0;
      for (int v = 0; v < block_; ++v) d1 += mono::exponent(m, v);
      k |= static_cast<std::uint64_t>(d1) << (8 * pos--);
      for (int v = block_ - 1; v >= 0; --v)
        k |= static_cast<std::uint64_t>(255 - mono::exponent(m, v)) << (8 * pos--);
      int d2 = 0;
      for (int v = block_; v < nvars_; ++v) d2 += mono::exponent(m, v);
      k |= static_cast<std::uint64_t>(d2) << (8 * pos--);
      for (int v = nvars_ - 1; v >= block_; --v)
        k |= static_cast<std::uint64_t>(255 - mono::exponent(m, v)) << (8 * pos--);
      if (pos >= 0) k |= static_cast<std::uint64_t>(255 - comp) << (8 * pos);
      break;
    }
  }
  return k;
}

}  // namespace curvelab
