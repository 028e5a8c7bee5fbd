#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvelab/groebner.hpp"
#include "curvelab/hilbert.hpp"
#include "curvelab/polynomial.hpp"

namespace curvelab {

/// Homogeneous map F -> G between graded free modules. Column i is the image
/// of the i-th basis element of F, an element of G; it has degree
/// source_degrees[i] once the components of G are twisted by target_degrees.
struct GradedMap {
  RingPtr ring;
  std::vector<int> source_degrees;
  std::vector<int> target_degrees;
  std::vector<Polynomial> columns;

  std::size_t rank_source() const { return source_degrees.size(); }
  std::size_t rank_target() const { return target_degrees.size(); }
  /// Entry in row r (target basis index) and column c.
  Polynomial entry(std::size_t r, std::size_t c) const { return columns[c].component(static_cast<int>(r)); }
  /// Transpose G* -> F*, with dual degrees negated.
  GradedMap transpose() const;
  /// Composition this * other (other maps into the source of this).
  GradedMap compose(const GradedMap& other) const;
};

/// Groebner basis of the syzygy module of the columns, living in the source
/// module with components twisted by the source degrees.
GroebnerBasis syzygy_module(const GradedMap& map);

/// Generators of the first syzygy module of homogeneous ideal generators,
/// as elements of R^n (component i pairs with gens[i]).
std::vector<Polynomial> syzygy_basis(const std::vector<Polynomial>& gens);

struct PieceRank {
  std::size_t rank = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
};
/// Rank of the map restricted to degree-e pieces, by dense elimination.
PieceRank graded_piece_rank(const GradedMap& map, int e);

/// Minimal homogeneous generators of the submodule spanned by `elems` in a
/// free module with the given component twists. Sorted by degree.
std::vector<Polynomial> minimal_generators(const RingPtr& ring, const std::vector<Polynomial>& elems,
                                           const std::vector<int>& shifts);

/// Graded Betti numbers beta_{i,j}: i homological index, j internal degree.
class BettiTable {
 public:
  void add(int i, int j, int count = 1) {
    if (count) table_[{i, j}] += count;
  }
  int get(int i, int j) const {
    auto it = table_.find({i, j});
    return it == table_.end() ? 0 : it->second;
  }
  const std::map<std::pair<int, int>, int>& entries() const& { return table_; }
  std::map<std::pair<int, int>, int> entries() && { return std::move(table_); }
  int length() const;
  /// Degrees of the i-th free module, repeated by multiplicity, ascending.
  std::vector<int> degrees(int i) const;
  bool operator==(const BettiTable& o) const { return table_ == o.table_; }
  /// Macaulay2-style diagram: rows j - i, columns i.
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, int> table_;
};

/// Minimal graded free resolution of R / I: maps[0] : F1 -> F0 = R, and so on.
struct Resolution {
  RingPtr ring;
  std::vector<GradedMap> maps;

  BettiTable betti() const;
  int length() const { return static_cast<int>(maps.size()); }
};

Resolution minimal_free_resolution(const RingPtr& ring, const std::vector<Polynomial>& ideal_gens);

/// Hilbert series of coker(map), the quotient of the target by the image.
HilbertSeries cokernel_series(const GradedMap& map);

/// dim of a twisted free module in degree e.
std::int64_t free_module_dimension(const std::vector<int>& degrees, int nvars, int e);

}  // namespace curvelab
