#include "frieze/frieze.hpp"

#include <algorithm>
#include <stdexcept>

namespace frieze {

FriezeSlice::FriezeSlice(DynkinType t, std::vector<BigInt> values)
    : type_(t), values_(std::move(values)) {
  if (values_.size() != type_.size()) {
    throw std::invalid_argument("slice for " + type_.name() + " needs " +
                                std::to_string(type_.size()) + " entries, got " +
                                std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (v < 1) throw std::invalid_argument("frieze entries must be positive, got " + to_string(v));
  }
}

bool operator<(const FriezeSlice& a, const FriezeSlice& b) {
  if (a.type_ != b.type_) return a.type_ < b.type_;
  return std::lexicographical_compare(a.values_.begin(), a.values_.end(), b.values_.begin(),
                                      b.values_.end());
}

FriezePattern::FriezePattern(DynkinType t, std::vector<FriezeSlice> columns)
    : type_(t), columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("a frieze pattern needs at least one column");
  for (const auto& c : columns_) {
    if (c.dynkin() != type_) throw std::invalid_argument("column type differs from pattern type");
  }
}

const FriezeSlice& FriezePattern::column(long k) const {
  const long p = static_cast<long>(columns_.size());
  return columns_[static_cast<std::size_t>(((k % p) + p) % p)];
}

FriezePattern FriezePattern::rotated(long shift) const {
  std::vector<FriezeSlice> cols;
  cols.reserve(columns_.size());
  for (std::size_t k = 0; k < columns_.size(); ++k) cols.push_back(column(static_cast<long>(k) + shift));
  return FriezePattern(type_, std::move(cols));
}

bool operator<(const FriezePattern& a, const FriezePattern& b) {
  if (a.type_ != b.type_) return a.type_ < b.type_;
  return std::lexicographical_compare(a.columns_.begin(), a.columns_.end(), b.columns_.begin(),
                                      b.columns_.end());
}

BigInt mesh_product(const MeshStructure& mesh, std::size_t i, const std::vector<BigInt>& col_k,
                    const std::vector<BigInt>& col_k1) {
  BigInt prod = 1;
  for (const auto& nb : mesh.lower[i]) {
    prod *= nb.exponent == 1 ? col_k[nb.vertex] : pow_ui(col_k[nb.vertex], nb.exponent);
  }
  for (const auto& nb : mesh.upper[i]) {
    prod *= nb.exponent == 1 ? col_k1[nb.vertex] : pow_ui(col_k1[nb.vertex], nb.exponent);
  }
  return prod;
}

BigInt mesh_product(std::size_t i, const FriezeSlice& col_k, const FriezeSlice& col_k1) {
  if (col_k.dynkin() != col_k1.dynkin()) throw std::invalid_argument("mesh_product: type mismatch");
  if (i >= col_k.size()) throw std::out_of_range("mesh_product: vertex out of range");
  return mesh_product(mesh_structure(col_k.dynkin()), i, col_k.values(), col_k1.values());
}

std::optional<std::size_t> forward_into(const MeshStructure& mesh, const std::vector<BigInt>& col,
                                        std::vector<BigInt>& out) {
  BigInt num;
  for (std::size_t i = mesh.size(); i-- > 0;) {
    num = mesh_product(mesh, i, col, out) + 1;
    if (!mpz_divisible_p(num.get_mpz_t(), col[i].get_mpz_t())) return i;
    mpz_divexact(out[i].get_mpz_t(), num.get_mpz_t(), col[i].get_mpz_t());
  }
  return std::nullopt;
}

std::optional<std::size_t> backward_into(const MeshStructure& mesh, const std::vector<BigInt>& col,
                                         std::vector<BigInt>& out) {
  BigInt num;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    num = mesh_product(mesh, i, out, col) + 1;
    if (!mpz_divisible_p(num.get_mpz_t(), col[i].get_mpz_t())) return i;
    mpz_divexact(out[i].get_mpz_t(), num.get_mpz_t(), col[i].get_mpz_t());
  }
  return std::nullopt;
}

namespace {

Propagation propagate(const FriezeSlice& s, bool forward) {
  const MeshStructure mesh = mesh_structure(s.dynkin());
  std::vector<BigInt> out(s.size());
  auto failed = forward ? forward_into(mesh, s.values(), out) : backward_into(mesh, s.values(), out);
  if (failed) return Indivisible{*failed};
  return FriezeSlice(s.dynkin(), std::move(out));
}

}  // namespace

Propagation propagate_forward(const FriezeSlice& s) { return propagate(s, true); }

Propagation propagate_backward(const FriezeSlice& s) { return propagate(s, false); }

PeriodResult detect_period(const FriezeSlice& seed, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("detect_period: cap must be positive");
  const MeshStructure mesh = mesh_structure(seed.dynkin());
  std::vector<std::vector<BigInt>> cols{seed.values()};
  std::vector<BigInt> next(seed.size());
  for (std::size_t step = 1; step <= cap; ++step) {
    if (auto failed = forward_into(mesh, cols.back(), next)) return DeadEnd{step, *failed};
    if (next == cols.front()) {
      PeriodFound found{step, {}};
      found.columns.reserve(step);
      for (auto& c : cols) found.columns.emplace_back(seed.dynkin(), std::move(c));
      return found;
    }
    cols.push_back(next);
  }
  return NoRecurrence{cap};
}

std::vector<MeshViolation> verify_pattern(const FriezePattern& f) {
  const MeshStructure mesh = mesh_structure(f.dynkin());
  std::vector<MeshViolation> out;
  for (std::size_t k = 0; k < f.period(); ++k) {
    const auto& col = f.column(static_cast<long>(k)).values();
    const auto& next = f.column(static_cast<long>(k) + 1).values();
    for (std::size_t i = 0; i < f.rank(); ++i) {
      BigInt lhs = col[i] * next[i];
      BigInt rhs = mesh_product(mesh, i, col, next) + 1;
      if (lhs != rhs) out.push_back({i, k, std::move(lhs), std::move(rhs)});
    }
  }
  return out;
}

std::size_t minimal_period(const FriezePattern& f) {
  const std::size_t p = f.period();
  for (std::size_t q = 1; q < p; ++q) {
    if (p % q != 0) continue;
    bool periodic = true;
    for (std::size_t k = q; k < p && periodic; ++k) {
      periodic = f.columns()[k] == f.columns()[k - q];
    }
    if (periodic) return q;
  }
  return p;
}

FriezePattern canonical_orbit(const FriezePattern& f) {
  const std::size_t q = minimal_period(f);
  std::vector<FriezeSlice> base(f.columns().begin(), f.columns().begin() + static_cast<long>(q));
  FriezePattern domain(f.dynkin(), std::move(base));
  FriezePattern best = domain;
  for (std::size_t s = 1; s < q; ++s) {
    FriezePattern r = domain.rotated(static_cast<long>(s));
    if (r < best) best = std::move(r);
  }
  return best;
}

FriezePattern constant_one_pattern(const DynkinType& t) {
  return FriezePattern(t, {FriezeSlice(t, std::vector<BigInt>(t.size(), BigInt(1)))});
}

}  // namespace frieze
