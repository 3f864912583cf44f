#include "frieze/dynkin.hpp"

#include <cctype>
#include <charconv>

namespace frieze {

namespace {

std::string family_name(Family f) { return std::string(1, static_cast<char>(f)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw InadmissibleType(what);
}

}  // namespace

DynkinType::DynkinType(Family family, int rank) : family_(family), rank_(rank) {
  const std::string name = family_name(family) + std::to_string(rank);
  switch (family) {
    case Family::A: require(rank >= 1, name + ": type A requires rank >= 1"); break;
    case Family::B: require(rank >= 2, name + ": type B requires rank >= 2"); break;
    case Family::C: require(rank >= 2, name + ": type C requires rank >= 2"); break;
    case Family::D: require(rank >= 4, name + ": type D requires rank >= 4"); break;
    case Family::E:
      require(rank >= 6 && rank <= 8, name + ": type E requires rank 6, 7 or 8");
      break;
    case Family::F: require(rank == 4, name + ": type F requires rank 4"); break;
    case Family::G: require(rank == 2, name + ": type G requires rank 2"); break;
    default: throw InadmissibleType("unknown Dynkin family");
  }
}

DynkinType DynkinType::parse(std::string_view token) {
  if (token.size() < 2) throw InadmissibleType("malformed type token '" + std::string(token) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
  if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos) {
    throw InadmissibleType("unknown Dynkin family in '" + std::string(token) + "'");
  }
  int rank = 0;
  auto digits = token.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InadmissibleType("malformed rank in '" + std::string(token) + "'");
  }
  return DynkinType(static_cast<Family>(letter), rank);
}

bool DynkinType::simply_laced() const {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E;
}

std::string DynkinType::name() const { return family_name(family_) + std::to_string(rank_); }

std::vector<DynkinType> catalog_up_to_rank(int max_rank) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::B, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::C, n);
  for (int n = 4; n <= max_rank; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.emplace_back(Family::E, n);
  if (max_rank >= 4) out.emplace_back(Family::F, 4);
  if (max_rank >= 2) out.emplace_back(Family::G, 2);
  return out;
}

CartanMatrix::CartanMatrix(std::size_t n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw std::invalid_argument("Cartan matrix: wrong entry count");
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 2) throw std::invalid_argument("Cartan matrix: diagonal entry != 2");
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j) continue;
      if ((*this)(i, j) > 0) throw std::invalid_argument("Cartan matrix: positive off-diagonal");
      if (((*this)(i, j) == 0) != ((*this)(j, i) == 0)) {
        throw std::invalid_argument("Cartan matrix: asymmetric zero pattern");
      }
    }
  }
}

InverseCartan::InverseCartan(std::size_t n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw std::invalid_argument("inverse Cartan: wrong entry count");
}

int coxeter_number(const DynkinType& t) {
  const int n = t.rank();
  switch (t.family()) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case Family::F: return 12;
    case Family::G: return 6;
  }
  throw std::logic_error("unreachable");
}

CartanMatrix cartan_matrix(const DynkinType& t) {
  const std::size_t n = t.size();
  std::vector<int> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) c[i * n + i] = 2;
  auto edge = [&](std::size_t i, std::size_t j, int cij = -1, int cji = -1) {
    c[i * n + j] = cij;
    c[j * n + i] = cji;
  };
  switch (t.family()) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 2, n - 1, -2, -1);
      break;
    case Family::C:
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 2, n - 1, -1, -2);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 3 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 2);
      edge(n - 3, n - 1);
      break;
    case Family::E: {
      constexpr std::size_t kEdges[][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
      for (const auto& e : kEdges) {
        if (e[1] < n) edge(e[0], e[1]);
      }
      break;
    }
    case Family::F:
      edge(0, 1);
      edge(1, 2, -2, -1);
      edge(2, 3);
      break;
    case Family::G:
      edge(0, 1, -1, -3);
      break;
  }
  return CartanMatrix(n, std::move(c));
}

std::vector<Rational> invert_exact(std::size_t n, const std::vector<Rational>& m) {
  std::vector<Rational> a = m;
  std::vector<Rational> inv(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("invert_exact: singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    }
    const Rational scale = a[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] /= scale;
      inv[col * n + j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const Rational f = a[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] -= f * a[col * n + j];
        inv[r * n + j] -= f * inv[col * n + j];
      }
    }
  }
  for (auto& q : inv) q.canonicalize();
  return inv;
}

InverseCartan inverse_cartan(const DynkinType& t) {
  const CartanMatrix c = cartan_matrix(t);
  const std::size_t n = c.size();
  std::vector<Rational> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) m[i] = c.entries()[i];
  std::vector<Rational> inv = invert_exact(n, m);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += m[i * n + k] * inv[k * n + j];
      if (s != (i == j ? 1 : 0)) throw std::logic_error("inverse_cartan: C * C^-1 != I");
    }
  }
  return InverseCartan(n, std::move(inv));
}

TypeProfile type_profile(const DynkinType& t) {
  const CartanMatrix c = cartan_matrix(t);
  const InverseCartan inv = inverse_cartan(t);
  const std::size_t n = c.size();
  TypeProfile out{t, std::vector<Rational>(n, Rational(0)), std::vector<int>(n, 0),
                  coxeter_number(t) + 2};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.b[i] += inv(i, j);
      if (j != i) out.d[i] -= c(i, j);
    }
    out.b[i].canonicalize();
  }
  return out;
}

MeshStructure mesh_structure(const CartanMatrix& c) {
  const std::size_t n = c.size();
  MeshStructure m{std::vector<std::vector<Neighbor>>(n), std::vector<std::vector<Neighbor>>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || c(i, j) == 0) continue;
      Neighbor nb{j, static_cast<unsigned>(-c(i, j))};
      (j < i ? m.lower[i] : m.upper[i]).push_back(nb);
    }
  }
  return m;
}

MeshStructure mesh_structure(const DynkinType& t) { return mesh_structure(cartan_matrix(t)); }

std::vector<Arrow> repetition_arrows(const DynkinType& t, long k_lo, long k_hi) {
  if (k_lo > k_hi) throw std::invalid_argument("repetition_arrows: k_lo > k_hi");
  const CartanMatrix c = cartan_matrix(t);
  const std::size_t n = c.size();
  std::vector<Arrow> out;
  for (long k = k_lo; k <= k_hi; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (c(i, j) >= 0) continue;
        out.push_back({{i, k}, {j, k}});
        out.push_back({{j, k}, {i, k + 1}});
      }
    }
  }
  return out;
}

}  // namespace frieze
