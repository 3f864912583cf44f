#pragma once

// Catalog of finite-type Dynkin diagrams.
//
// Vertices are 0-based in the C++ API; every text format (frieze documents,
// DOT, CLI reports) prints them 1-based.
//
// Index conventions:
//   A_n  path 1-2-...-n
//   B_n  path, C[n-1][n] = -2, C[n][n-1] = -1 (short root last)
//   C_n  transpose of B_n
//   D_n  path 1-...-(n-2), with n-1 and n both attached to n-2
//   E_n  the E8 ordering below restricted to its first n vertices:
//          1-3-4-5-6-7-8 with 2 attached to 4
//   F_4  C[2][3] = -2, C[3][2] = -1
//   G_2  C[1][2] = -1, C[2][1] = -3

#include "frieze/numeric.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frieze {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

class InadmissibleType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DynkinType {
 public:
  /// Throws InadmissibleType naming the violated rank constraint.
  DynkinType(Family family, int rank);

  /// Parses tokens such as "E8" or "a3".
  static DynkinType parse(std::string_view token);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::size_t size() const { return static_cast<std::size_t>(rank_); }
  bool simply_laced() const;
  std::string name() const;

  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;

 private:
  Family family_;
  int rank_;
};

/// Every admissible type whose rank does not exceed max_rank.
std::vector<DynkinType> catalog_up_to_rank(int max_rank);

class CartanMatrix {
 public:
  CartanMatrix(std::size_t n, std::vector<int> entries);

  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<int> entries_;
};

class InverseCartan {
 public:
  InverseCartan(std::size_t n, std::vector<Rational> entries);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

struct TypeProfile {
  DynkinType dynkin;
  std::vector<Rational> b;  // row sums of the inverse Cartan matrix
  std::vector<int> d;       // d_i = sum over j != i of -C[i][j]
  int period_cap;           // Coxeter number + 2
};

/// A neighbor j of vertex i in the mesh relation at i, with exponent -C[i][j].
struct Neighbor {
  std::size_t vertex;
  unsigned exponent;
};

/// Neighbors split by index: the mesh relation at (i, k) reads lower
/// neighbors in column k and upper neighbors in column k + 1.
struct MeshStructure {
  std::vector<std::vector<Neighbor>> lower;
  std::vector<std::vector<Neighbor>> upper;

  std::size_t size() const { return lower.size(); }
};

struct QuiverVertex {
  std::size_t vertex;
  long column;

  friend bool operator==(const QuiverVertex&, const QuiverVertex&) = default;
};

struct Arrow {
  QuiverVertex from;
  QuiverVertex to;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

int coxeter_number(const DynkinType& t);

CartanMatrix cartan_matrix(const DynkinType& t);
InverseCartan inverse_cartan(const DynkinType& t);
TypeProfile type_profile(const DynkinType& t);
MeshStructure mesh_structure(const CartanMatrix& c);
MeshStructure mesh_structure(const DynkinType& t);

/// Arrows (i,k)->(j,k) and (j,k)->(i,k+1) for each edge i<j and k in
/// [k_lo, k_hi], ordered by k, then i, then j.
std::vector<Arrow> repetition_arrows(const DynkinType& t, long k_lo, long k_hi);

/// Exact inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
std::vector<Rational> invert_exact(std::size_t n, const std::vector<Rational>& m);

}  // namespace frieze
