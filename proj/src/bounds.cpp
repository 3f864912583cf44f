#include "frieze/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace frieze {

bool LemmaCertificate::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const LemmaRow& r) { return r.pass; });
}

bool ProductCheck::passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ProductCheckRow& r) { return r.product_pass && r.entries_pass; });
}

std::vector<BigInt> row_products(const FriezePattern& f, std::size_t period) {
  if (period == 0 || period % f.period() != 0) {
    throw std::invalid_argument("period " + std::to_string(period) +
                                " is not a multiple of the stored period " +
                                std::to_string(f.period()));
  }
  const unsigned long reps = period / f.period();
  std::vector<BigInt> out(f.rank(), BigInt(1));
  for (const auto& col : f.columns()) {
    for (std::size_t i = 0; i < f.rank(); ++i) out[i] *= col[i];
  }
  for (auto& v : out) v = pow_ui(v, reps);
  return out;
}

LogVector a_vector(const FriezePattern& f, std::size_t period) {
  const auto products = row_products(f, period);
  const CartanMatrix c = cartan_matrix(f.dynkin());
  const std::size_t n = f.rank();
  LogVector out{std::vector<double>(n), std::vector<double>(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) out.a[i] = log2(products[i]) / static_cast<double>(period);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.ca[i] += c(i, j) * out.a[j];
  }
  return out;
}

LemmaCertificate lemma_check_exact(const FriezePattern& f, std::size_t period) {
  const auto products = row_products(f, period);
  const CartanMatrix c = cartan_matrix(f.dynkin());
  const std::size_t n = f.rank();
  const BigInt two_p = pow2(period);
  LemmaCertificate cert{period, {}};
  for (std::size_t i = 0; i < n; ++i) {
    LemmaRow row;
    row.m = products[i] * products[i];
    row.p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && c(i, j) != 0) row.p *= pow_ui(products[j], static_cast<unsigned long>(-c(i, j)));
    }
    row.upper = two_p * row.p;
    row.pass = row.p < row.m && row.m <= row.upper;
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

ProductCheck check_pattern_against_bounds(const FriezePattern& f, std::size_t period) {
  const auto products = row_products(f, period);
  const TypeProfile prof = type_profile(f.dynkin());
  ProductCheck out{period, {}};
  for (std::size_t i = 0; i < f.rank(); ++i) {
    ProductCheckRow row;
    row.row_product = products[i];
    row.exponent = Rational(static_cast<unsigned long>(period)) * prof.b[i];
    row.exponent.canonicalize();
    row.product_pass = leq_pow2(row.row_product, row.exponent);
    row.entries_pass = true;
    for (const auto& col : f.columns()) {
      if (!leq_pow2(col[i], row.exponent)) row.entries_pass = false;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

// 1 + 2^-d as an exact rational.
Rational unit_factor(int d) {
  const BigInt pow = pow2(static_cast<unsigned long>(d));
  return make_rational(pow + 1, pow);
}

}  // namespace

std::vector<RefinedRow> refined_min2_report(const DynkinType& t, std::size_t period) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  const TypeProfile prof = type_profile(t);
  const InverseCartan inv = inverse_cartan(t);
  const std::size_t n = t.size();
  const double p = static_cast<double>(period);

  Rational base = 1;
  for (int dj : prof.d) base *= unit_factor(dj);
  const double flat = p * log2(base);

  std::vector<RefinedRow> out;
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += inv(i, j).get_d() * log2(unit_factor(prof.d[j]));
    out.push_back({p * sum, flat});
  }
  return out;
}

BoundsReport bounds_report(const DynkinType& t, std::size_t period) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  const TypeProfile prof = type_profile(t);
  const Rational p(static_cast<unsigned long>(period));
  BoundsReport r{t, period, prof.b, {}, Rational(0), prof.d, {}, Rational(1), 0.0};
  Rational sum_b = 0;
  for (const auto& bi : prof.b) {
    Rational e = p * bi;
    e.canonicalize();
    r.entry_cap_exponents.push_back(e);
    sum_b += bi;
  }
  r.count_bound_exponent = p * p * sum_b;
  r.count_bound_exponent.canonicalize();
  for (int dj : prof.d) r.unit_exponent_base *= unit_factor(dj);
  r.unit_exponent_base.canonicalize();
  r.unit_exponent_log2 = static_cast<double>(period) * log2(r.unit_exponent_base);
  for (const auto& row : refined_min2_report(t, period)) {
    r.refined_rowwise_log2.push_back(row.formula_bound_log2);
  }
  return r;
}

std::vector<BigInt> entry_caps(const TypeProfile& profile, std::size_t period) {
  std::vector<BigInt> out;
  const Rational p(static_cast<unsigned long>(period));
  for (const auto& bi : profile.b) {
    Rational e = p * bi;
    e.canonicalize();
    out.push_back(pow2_floor(e));
  }
  return out;
}

}  // namespace frieze
