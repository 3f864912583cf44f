#include "frieze/frieze.hpp"
#include "frieze/io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace frieze;

namespace {

const DynkinType A1(Family::A, 1);
const DynkinType A2(Family::A, 2);
const DynkinType E8(Family::E, 8);

FriezeSlice slice(const DynkinType& t, std::vector<int> v) {
  return FriezeSlice(t, std::vector<BigInt>(v.begin(), v.end()));
}

FriezePattern load(const std::string& name) {
  std::ifstream in(std::string(FRIEZE_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_frieze(ss.str());
}

FriezePattern a2_orbit() {
  return FriezePattern(A2, {slice(A2, {1, 1}), slice(A2, {3, 2}), slice(A2, {1, 2}),
                            slice(A2, {2, 1}), slice(A2, {2, 3})});
}

}  // namespace

TEST(Slice, RejectsBadInput) {
  EXPECT_THROW(slice(A2, {1}), std::invalid_argument);
  EXPECT_THROW(slice(A2, {1, 0}), std::invalid_argument);
  EXPECT_THROW(slice(A2, {-3, 2}), std::invalid_argument);
  EXPECT_THROW(FriezePattern(A2, {}), std::invalid_argument);
  EXPECT_THROW(FriezePattern(A2, {slice(A1, {1})}), std::invalid_argument);
}

TEST(Mesh, Product) {
  EXPECT_EQ(mesh_product(0, slice(A1, {7}), slice(A1, {9})), 1);
  EXPECT_EQ(mesh_product(1, slice(A2, {1, 1}), slice(A2, {5, 8})), 1);
  EXPECT_EQ(mesh_product(0, slice(A2, {5, 8}), slice(A2, {4, 3})), 3);
  const FriezePattern f = load("e8_example.frieze");
  EXPECT_EQ(mesh_product(3, f.column(0), f.column(1)), 1188);
}

TEST(Mesh, ProductUsesExponents) {
  const DynkinType g2(Family::G, 2);
  // i = 1 reads F[0][k]^3
  EXPECT_EQ(mesh_product(1, slice(g2, {2, 5}), slice(g2, {7, 7})), 8);
  EXPECT_EQ(mesh_product(0, slice(g2, {2, 5}), slice(g2, {7, 4})), 4);
}

TEST(Propagate, Examples) {
  EXPECT_EQ(std::get<FriezeSlice>(propagate_forward(slice(A2, {1, 1}))), slice(A2, {3, 2}));
  EXPECT_EQ(std::get<FriezeSlice>(propagate_forward(slice(A2, {2, 3}))), slice(A2, {1, 1}));
  EXPECT_EQ(std::get<FriezeSlice>(propagate_forward(slice(A1, {1}))), slice(A1, {2}));
  EXPECT_EQ(std::get<FriezeSlice>(propagate_backward(slice(A2, {3, 2}))), slice(A2, {1, 1}));
  EXPECT_EQ(std::get<FriezeSlice>(propagate_backward(slice(A1, {2}))), slice(A1, {1}));
  const FriezeSlice c0 = slice(E8, {4, 6, 11, 29, 21, 13, 5, 2});
  const FriezeSlice c1 = slice(E8, {4, 7, 15, 41, 18, 13, 8, 3});
  EXPECT_EQ(std::get<FriezeSlice>(propagate_forward(c0)), c1);
  EXPECT_EQ(std::get<FriezeSlice>(propagate_backward(c1)), c0);
}

TEST(Propagate, Indivisible) {
  // (2,2): F[1][1] = 3/2
  const Propagation r = propagate_forward(slice(A2, {2, 2}));
  ASSERT_TRUE(std::holds_alternative<Indivisible>(r));
  EXPECT_EQ(std::get<Indivisible>(r).vertex, 1u);
}

TEST(Propagate, OutputBufferIsNeverRead) {
  std::mt19937_64 rng(11);
  for (const DynkinType& t : catalog_up_to_rank(8)) {
    const MeshStructure mesh = mesh_structure(t);
    std::vector<BigInt> col(t.size(), 1);
    for (int trial = 0; trial < 20; ++trial) {
      for (auto& v : col) v = BigInt(static_cast<unsigned long>(rng() % 5 + 1));
      std::vector<BigInt> a(t.size()), b(t.size());
      for (auto& v : a) v = BigInt(static_cast<unsigned long>(rng() % 1000 + 1));
      for (auto& v : b) v = BigInt(static_cast<unsigned long>(rng() % 1000 + 1));
      const auto fa = forward_into(mesh, col, a);
      const auto fb = forward_into(mesh, col, b);
      ASSERT_EQ(fa, fb) << t.name();
      if (!fa) EXPECT_EQ(a, b) << t.name();
      std::vector<BigInt> c(t.size(), 999), d(t.size(), 7);
      const auto ba = backward_into(mesh, col, c);
      const auto bb = backward_into(mesh, col, d);
      ASSERT_EQ(ba, bb) << t.name();
      if (!ba) EXPECT_EQ(c, d) << t.name();
    }
  }
}

TEST(Propagate, RoundTripRandomSlices) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (const DynkinType& t : catalog_up_to_rank(6)) {
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<BigInt> v(t.size());
      for (auto& x : v) x = BigInt(static_cast<unsigned long>(rng() % 6 + 1));
      const FriezeSlice s(t, v);
      const Propagation fwd = propagate_forward(s);
      if (const auto* next = std::get_if<FriezeSlice>(&fwd)) {
        EXPECT_EQ(std::get<FriezeSlice>(propagate_backward(*next)), s) << t.name();
        ++checked;
      }
      const Propagation bwd = propagate_backward(s);
      if (const auto* prev = std::get_if<FriezeSlice>(&bwd)) {
        EXPECT_EQ(std::get<FriezeSlice>(propagate_forward(*prev)), s) << t.name();
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Period, Examples) {
  const PeriodResult a2 = detect_period(slice(A2, {1, 1}), 7);
  const auto& found = std::get<PeriodFound>(a2);
  EXPECT_EQ(found.period, 5u);
  EXPECT_EQ(found.columns, a2_orbit().columns());

  const auto& a1 = std::get<PeriodFound>(detect_period(slice(A1, {1}), 4));
  EXPECT_EQ(a1.period, 2u);
  EXPECT_EQ(a1.columns, (std::vector<FriezeSlice>{slice(A1, {1}), slice(A1, {2})}));

  const auto& e8 = std::get<PeriodFound>(detect_period(slice(E8, {4, 6, 11, 29, 21, 13, 5, 2}), 32));
  EXPECT_EQ(e8.period, 4u);
  EXPECT_EQ(16 % e8.period, 0u);
}

TEST(Period, DeadEndAndNoRecurrence) {
  const auto dead = std::get<DeadEnd>(detect_period(slice(A2, {2, 2}), 7));
  EXPECT_EQ(dead.step, 1u);
  EXPECT_EQ(dead.vertex, 1u);
  EXPECT_EQ(std::get<NoRecurrence>(detect_period(slice(A2, {1, 1}), 4)).cap, 4u);
}

TEST(Period, FoundPatternsVerifyAndAreDistinct) {
  std::mt19937_64 rng(5);
  int found = 0;
  for (const DynkinType& t : catalog_up_to_rank(5)) {
    const std::size_t cap = static_cast<std::size_t>(type_profile(t).period_cap);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<BigInt> v(t.size());
      for (auto& x : v) x = BigInt(static_cast<unsigned long>(rng() % 4 + 1));
      const PeriodResult r = detect_period(FriezeSlice(t, v), cap);
      const auto* p = std::get_if<PeriodFound>(&r);
      if (!p) continue;
      ++found;
      const FriezePattern f(t, p->columns);
      EXPECT_TRUE(verify_pattern(f).empty()) << t.name();
      EXPECT_EQ(std::set<FriezeSlice>(p->columns.begin(), p->columns.end()).size(), p->period);
      EXPECT_EQ(minimal_period(f), p->period);
    }
  }
  EXPECT_GT(found, 20);
}

TEST(Verify, Fixtures) {
  EXPECT_TRUE(verify_pattern(load("e8_example.frieze")).empty());
  EXPECT_TRUE(verify_pattern(load("a1.frieze")).empty());
  EXPECT_TRUE(verify_pattern(a2_orbit()).empty());
  EXPECT_FALSE(verify_pattern(load("a2_perturbed.frieze")).empty());
}

TEST(Verify, ConstantOneFailsEverywhere) {
  const auto v = verify_pattern(FriezePattern(A2, {slice(A2, {1, 1})}));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].vertex, 0u);
  EXPECT_EQ(v[0].lhs, 1);
  EXPECT_EQ(v[0].rhs, 2);
  for (const DynkinType& t : catalog_up_to_rank(10)) {
    EXPECT_FALSE(verify_pattern(constant_one_pattern(t)).empty()) << t.name();
  }
}

TEST(Verify, RotationInvariance) {
  for (const FriezePattern& f : {load("e8_example.frieze"), a2_orbit(), load("a1.frieze")}) {
    for (long s = -7; s <= 7; ++s) {
      const FriezePattern r = f.rotated(s);
      EXPECT_TRUE(verify_pattern(r).empty());
      EXPECT_EQ(r.column(0), f.column(s));
      EXPECT_EQ(canonical_orbit(r), canonical_orbit(f));
    }
  }
}

TEST(Verify, EverySingleEntryPerturbationIsCaught) {
  const FriezePattern f = load("e8_example.frieze");
  for (std::size_t k = 0; k < f.period(); ++k) {
    for (std::size_t i = 0; i < f.rank(); ++i) {
      auto cols = f.columns();
      auto v = cols[k].values();
      v[i] += 1;
      cols[k] = FriezeSlice(E8, v);
      EXPECT_FALSE(verify_pattern(FriezePattern(E8, cols)).empty()) << i << "," << k;
    }
  }
}

TEST(Orbit, MinimalPeriodAndCanonical) {
  const FriezePattern a2 = a2_orbit();
  auto doubled = a2.columns();
  doubled.insert(doubled.end(), a2.columns().begin(), a2.columns().end());
  const FriezePattern d(A2, doubled);
  EXPECT_EQ(d.period(), 10u);
  EXPECT_EQ(minimal_period(d), 5u);
  EXPECT_EQ(canonical_orbit(d), a2);
  EXPECT_EQ(canonical_orbit(a2.rotated(3)), a2);
}
