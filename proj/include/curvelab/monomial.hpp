#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace curvelab {

/// Packed monomial: byte i (i < 6) holds the exponent of variable i, byte 6
/// holds the free-module component (0 for ring elements). Exponents must stay
/// below 128 so that bytewise comparisons can be done with SWAR arithmetic.
using Mon = std::uint64_t;

namespace mono {

inline constexpr int kMaxVars = 5;
inline constexpr int kMaxExponent = 127;
inline constexpr Mon kExpMask = 0x0000FFFFFFFFFFFFULL;
inline constexpr Mon kHighBits = 0x0000808080808080ULL;

inline int exponent(Mon m, int var) { return static_cast<int>((m >> (8 * var)) & 0xFF); }
inline int component(Mon m) { return static_cast<int>((m >> 48) & 0xFF); }
inline Mon exponents_only(Mon m) { return m & kExpMask; }
inline Mon with_component(Mon m, int comp) {
  return (m & kExpMask) | (static_cast<Mon>(comp) << 48);
}
inline Mon with_exponent(Mon m, int var, int e) {
  return (m & ~(Mon{0xFF} << (8 * var))) | (static_cast<Mon>(e) << (8 * var));
}
inline int degree(Mon m) {
  return static_cast<int>((((m & kExpMask) * 0x0101010101010101ULL) >> 40) & 0xFF);
}
inline Mon variable(int var) { return Mon{1} << (8 * var); }

/// Product of a module monomial with a ring monomial (one side has component 0).
inline Mon mul(Mon a, Mon b) { return a + b; }

inline bool divides(Mon a, Mon b) {
  if (component(a) != component(b)) return false;
  const Mon x = a & kExpMask;
  const Mon y = b & kExpMask;
  return (((y | kHighBits) - x) & kHighBits) == kHighBits;
}
/// b / a, assuming divides(a, b); result is a ring monomial.
inline Mon quotient(Mon b, Mon a) { return (b & kExpMask) - (a & kExpMask); }

inline Mon lcm(Mon a, Mon b) {
  Mon out = a & ~kExpMask;
  for (int i = 0; i < 6; ++i) {
    const Mon ea = (a >> (8 * i)) & 0xFF;
    const Mon eb = (b >> (8 * i)) & 0xFF;
    out |= (ea > eb ? ea : eb) << (8 * i);
  }
  return out;
}
inline bool coprime(Mon a, Mon b) {
  for (int i = 0; i < 6; ++i)
    if (((a >> (8 * i)) & 0xFF) && ((b >> (8 * i)) & 0xFF)) return false;
  return true;
}

Mon from_exponents(const std::vector<int>& exps, int comp = 0);
std::vector<int> to_exponents(Mon m, int nvars);

/// All monomials of the given degree in nvars variables, in no particular order.
std::vector<Mon> all_of_degree(int nvars, int degree);

}  // namespace mono

/// Term orders on packed monomials. Every order is encoded as a 64-bit key
/// whose unsigned comparison is the order itself.
class MonomialOrder {
 public:
  enum class Kind {
    DegRevLex,         ///< graded reverse lexicographic; components break ties (TOP)
    PositionOverTerm,  ///< component index first (lower index is larger), then degrevlex
    BlockElimination,  ///< degrevlex on the first `block` variables, then degrevlex on the rest
  };

  static MonomialOrder degrevlex(int nvars) { return MonomialOrder(Kind::DegRevLex, nvars); }
  static MonomialOrder degrevlex(int nvars, std::vector<int> shifts) {
    MonomialOrder o(Kind::DegRevLex, nvars);
    o.shifts_ = std::move(shifts);
    return o;
  }
  static MonomialOrder position_over_term(int nvars, std::vector<int> shifts = {}) {
    MonomialOrder o(Kind::PositionOverTerm, nvars);
    o.shifts_ = std::move(shifts);
    return o;
  }
  static MonomialOrder block_elimination(int nvars, int block) {
    MonomialOrder o(Kind::BlockElimination, nvars);
    o.block_ = block;
    return o;
  }

  Kind kind() const noexcept { return kind_; }
  int nvars() const noexcept { return nvars_; }
  int block() const noexcept { return block_; }
  const std::vector<int>& shifts() const noexcept { return shifts_; }
  int shift(int comp) const noexcept {
    return comp < static_cast<int>(shifts_.size()) ? shifts_[comp] : 0;
  }

  /// Degree of a module monomial including the twist of its component.
  int graded_degree(Mon m) const noexcept { return mono::degree(m) + shift(mono::component(m)); }

  std::uint64_t key(Mon m) const noexcept;

  bool less(Mon a, Mon b) const noexcept { return key(a) < key(b); }

 private:
  MonomialOrder(Kind k, int nvars) : kind_(k), nvars_(nvars) {}

  Kind kind_;
  int nvars_;
  int block_ = 0;
  std::vector<int> shifts_;
};

}  // namespace curvelab
