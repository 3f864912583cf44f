#pragma once

// Average-logarithm vectors, the exact (C a)_i in (0, 1] certificate, the
// per-entry and count bounds, and the refined bounds for friezes whose
// entries are all at least 2.
//
// Everything that decides a verdict is exact. Doubles are derived from exact
// integers or rationals at the last step and are only for reporting.

#include "frieze/dynkin.hpp"
#include "frieze/frieze.hpp"
#include "frieze/numeric.hpp"

#include <cstddef>
#include <vector>

namespace frieze {

struct LogVector {
  std::vector<double> a;   // a_i = (1/p) sum_k log2 F[i][k]
  std::vector<double> ca;  // C * a
};

struct LemmaRow {
  BigInt m;        // prod_k F[i][k]^2
  BigInt p;        // prod_{j != i} (prod_k F[j][k])^{-C[i][j]}
  BigInt upper;    // 2^period * p
  bool pass;       // p < m <= upper
};

struct LemmaCertificate {
  std::size_t period;
  std::vector<LemmaRow> rows;

  bool passed() const;
};

struct ProductCheckRow {
  BigInt row_product;  // over `period` columns
  Rational exponent;   // period * b_i
  bool product_pass;   // row_product <= 2^exponent
  bool entries_pass;   // every entry <= 2^exponent
};

struct ProductCheck {
  std::size_t period;
  std::vector<ProductCheckRow> rows;

  bool passed() const;
};

struct RefinedRow {
  double formula_bound_log2;       // p * sum_j Cinv[i][j] * log2(1 + 2^-d_j)
  double flat_exponent_bound_log2; // p * log2(prod_j (1 + 2^-d_j))
};

struct BoundsReport {
  DynkinType dynkin;
  std::size_t period;
  std::vector<Rational> b;
  std::vector<Rational> entry_cap_exponents;  // period * b_i
  Rational count_bound_exponent;              // period^2 * sum_i b_i
  std::vector<int> d;
  std::vector<double> refined_rowwise_log2;
  Rational unit_exponent_base;                // prod_j (1 + 2^-d_j)
  double unit_exponent_log2;                  // log2(unit_exponent_base^period)
};

/// Row products over `period` columns, computed exactly as
/// (product over the stored period)^(period / stored period).
/// Throws std::invalid_argument unless f.period() divides period.
std::vector<BigInt> row_products(const FriezePattern& f, std::size_t period);

LogVector a_vector(const FriezePattern& f, std::size_t period);
LemmaCertificate lemma_check_exact(const FriezePattern& f, std::size_t period);
ProductCheck check_pattern_against_bounds(const FriezePattern& f, std::size_t period);
BoundsReport bounds_report(const DynkinType& t, std::size_t period);
std::vector<RefinedRow> refined_min2_report(const DynkinType& t, std::size_t period);

/// floor(2^(period * b_i)) for every row: the largest admissible entry and
/// the largest admissible row product over `period` columns.
std::vector<BigInt> entry_caps(const TypeProfile& profile, std::size_t period);

}  // namespace frieze
