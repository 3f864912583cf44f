#pragma once

// Frieze data model and the mesh relations
//
//   F[i][k] * F[i][k+1] = 1 + prod_{j<i} F[j][k]^{-C[i][j]} * prod_{j>i} F[j][k+1]^{-C[i][j]}
//
// Solving for column k+1 must run i = n-1 down to 0 (entry i of the new
// column reads only entries j > i of it); solving for column k runs i = 0 up.

#include "frieze/dynkin.hpp"
#include "frieze/numeric.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace frieze {

class FriezeSlice {
 public:
  /// Throws std::invalid_argument on a size mismatch or an entry < 1.
  FriezeSlice(DynkinType t, std::vector<BigInt> values);

  const DynkinType& dynkin() const { return type_; }
  const std::vector<BigInt>& values() const { return values_; }
  const BigInt& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const FriezeSlice& a, const FriezeSlice& b) {
    return a.type_ == b.type_ && a.values_ == b.values_;
  }
  /// Entrywise lexicographic order (types compared first).
  friend bool operator<(const FriezeSlice& a, const FriezeSlice& b);

 private:
  DynkinType type_;
  std::vector<BigInt> values_;
};

class FriezePattern {
 public:
  /// One fundamental domain; column indices are taken mod period().
  FriezePattern(DynkinType t, std::vector<FriezeSlice> columns);

  const DynkinType& dynkin() const { return type_; }
  std::size_t period() const { return columns_.size(); }
  std::size_t rank() const { return type_.size(); }
  const std::vector<FriezeSlice>& columns() const { return columns_; }
  const FriezeSlice& column(long k) const;
  const BigInt& entry(std::size_t i, long k) const { return column(k)[i]; }

  /// Column k of the result is column k + shift of this pattern.
  FriezePattern rotated(long shift) const;

  friend bool operator==(const FriezePattern&, const FriezePattern&) = default;
  friend bool operator<(const FriezePattern& a, const FriezePattern& b);

 private:
  DynkinType type_;
  std::vector<FriezeSlice> columns_;
};

struct MeshViolation {
  std::size_t vertex;
  std::size_t column;
  BigInt lhs;
  BigInt rhs;
};

/// Propagation failed: the division solving for this vertex was not exact.
struct Indivisible {
  std::size_t vertex;
};

using Propagation = std::variant<FriezeSlice, Indivisible>;

struct PeriodFound {
  std::size_t period;
  std::vector<FriezeSlice> columns;
};

struct DeadEnd {
  std::size_t step;  // index of the column that could not be produced
  std::size_t vertex;
};

struct NoRecurrence {
  std::size_t cap;
};

using PeriodResult = std::variant<PeriodFound, DeadEnd, NoRecurrence>;

/// The product on the right-hand side of the mesh relation at vertex i,
/// without the leading 1. The empty product is 1.
BigInt mesh_product(std::size_t i, const FriezeSlice& col_k, const FriezeSlice& col_k1);
BigInt mesh_product(const MeshStructure& mesh, std::size_t i, const std::vector<BigInt>& col_k,
                    const std::vector<BigInt>& col_k1);

Propagation propagate_forward(const FriezeSlice& s);
Propagation propagate_backward(const FriezeSlice& s);

/// Raw forms used in hot loops. `out` must have mesh.size() entries; its
/// prior contents are never read. Returns the failing vertex, if any.
std::optional<std::size_t> forward_into(const MeshStructure& mesh, const std::vector<BigInt>& col,
                                        std::vector<BigInt>& out);
std::optional<std::size_t> backward_into(const MeshStructure& mesh, const std::vector<BigInt>& col,
                                         std::vector<BigInt>& out);

PeriodResult detect_period(const FriezeSlice& seed, std::size_t cap);

/// Empty iff every mesh relation holds cyclically.
std::vector<MeshViolation> verify_pattern(const FriezePattern& f);

/// Smallest q dividing f.period() such that f is q-periodic.
std::size_t minimal_period(const FriezePattern& f);

/// The pattern restricted to its minimal period, rotated to the
/// lexicographically least column sequence.
FriezePattern canonical_orbit(const FriezePattern& f);

/// The all-ones pattern of period 1 for a type (never a frieze).
FriezePattern constant_one_pattern(const DynkinType& t);

}  // namespace frieze
