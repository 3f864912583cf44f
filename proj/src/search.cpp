#include "frieze/search.hpp"

#include "frieze/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace frieze {

std::string_view to_string(Strategy s) {
  return s == Strategy::column_dfs ? "column_dfs" : "row_seeded";
}

Strategy parse_strategy(std::string_view s) {
  if (s == "column_dfs") return Strategy::column_dfs;
  if (s == "row_seeded") return Strategy::row_seeded;
  throw std::invalid_argument("unknown strategy '" + std::string(s) + "'");
}

bool supports_row_seeding(const DynkinType& t) {
  const MeshStructure mesh = mesh_structure(t);
  std::size_t edges = 0;
  std::size_t branch_vertices = 0;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const std::size_t degree = mesh.lower[i].size() + mesh.upper[i].size();
    edges += degree;
    if (degree > 2) ++branch_vertices;
  }
  return edges / 2 + 1 == mesh.size() && branch_vertices <= 1;
}

namespace {

// ---------------------------------------------------------------------------
// Shared machinery

struct SearchSpace {
  DynkinType type;
  MeshStructure mesh;
  std::size_t n;
  std::size_t p;
  std::vector<BigInt> entry_cap;  // min(floor(2^(p b_i)), override)
  std::vector<BigInt> row_cap;    // floor(2^(p b_i))
  std::vector<BigInt> rep_cap;    // floor(2^(b_i)), at most entry_cap
  bool truncated = false;
};

SearchSpace make_space(const SearchConfig& cfg) {
  const TypeProfile prof = type_profile(cfg.dynkin);
  SearchSpace s{cfg.dynkin, mesh_structure(cfg.dynkin), cfg.dynkin.size(),
                cfg.period_cap ? cfg.period_cap : static_cast<std::size_t>(prof.period_cap),
                {}, {}, {}, false};
  s.row_cap = entry_caps(prof, s.p);
  s.entry_cap = s.row_cap;
  if (cfg.entry_cap_override) {
    if (*cfg.entry_cap_override < 1) throw std::invalid_argument("entry cap override must be positive");
    for (auto& c : s.entry_cap) {
      if (*cfg.entry_cap_override < c) {
        c = *cfg.entry_cap_override;
        s.truncated = true;
      }
    }
  }
  for (std::size_t i = 0; i < s.n; ++i) s.rep_cap.push_back(std::min(pow2_floor(prof.b[i]), s.entry_cap[i]));
  return s;
}

// Residue class x = residue (mod modulus); empty when no solution exists.
struct Progression {
  BigInt residue = 0;
  BigInt modulus = 1;
  bool empty = false;
};

// Solutions of 1 + k x = 0 (mod m).
Progression solve_linear(const BigInt& k, const BigInt& m) {
  Progression out;
  if (m == 1) return out;
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t()) == 0) {
    out.empty = true;
    return out;
  }
  out.modulus = m;
  out.residue = (m - inv) % m;
  return out;
}

Progression merge(const Progression& a, const Progression& b) {
  if (a.empty || b.empty) return Progression{0, 1, true};
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.modulus.get_mpz_t(), b.modulus.get_mpz_t());
  BigInt diff = b.residue - a.residue;
  if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return Progression{0, 1, true};
  const BigInt m2 = b.modulus / g;
  BigInt inv = 1;
  if (m2 != 1) {
    BigInt a1 = (a.modulus / g) % m2;
    mpz_invert(inv.get_mpz_t(), a1.get_mpz_t(), m2.get_mpz_t());
  }
  BigInt t = ((diff / g) % m2) * inv % m2;
  if (t < 0) t += m2;
  Progression out;
  out.modulus = a.modulus * m2;
  out.residue = (a.residue + a.modulus * t) % out.modulus;
  if (out.residue < 0) out.residue += out.modulus;
  return out;
}

BigInt power(const BigInt& v, unsigned c) { return c == 1 ? v : pow_ui(v, c); }

class Progress {
 public:
  explicit Progress(std::ostream* out) : out_(out) {}

  void node() {
    const auto v = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (out_ && v % 1'000'000 == 0) {
      std::lock_guard lock(mu_);
      *out_ << "explored=" << v << " found=" << found_.load(std::memory_order_relaxed) << '\n';
      out_->flush();
    }
  }
  void found() { found_.fetch_add(1, std::memory_order_relaxed); }

 private:
  std::ostream* out_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> found_{0};
  std::mutex mu_;
};

struct PartitionResult {
  std::set<FriezePattern> orbits;
  std::uint64_t nodes = 0;
  std::vector<SearchDiagnostic> diagnostics;
  bool incomplete = false;
};

FriezePattern to_pattern(const DynkinType& t, const std::vector<std::vector<BigInt>>& cols) {
  std::vector<FriezeSlice> slices;
  slices.reserve(cols.size());
  for (const auto& c : cols) slices.emplace_back(t, c);
  return FriezePattern(t, std::move(slices));
}

// Runs one job per partition value 1..count and returns results in order.
std::vector<PartitionResult> run_partitions(std::uint64_t count, unsigned jobs,
                                            const std::function<PartitionResult(std::uint64_t)>& job) {
  std::vector<PartitionResult> results(count);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      const auto idx = next.fetch_add(1);
      if (idx >= count) return;
      try {
        results[idx] = job(idx + 1);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(count, 1024))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

SearchOutcome merge_results(const SearchSpace& space, Strategy strategy,
                            std::vector<PartitionResult>& parts) {
  SearchOutcome out{space.type, strategy, space.p, space.entry_cap, {}, 0, !space.truncated, 0, {}};
  std::set<FriezePattern> all;
  for (auto& part : parts) {
    all.merge(part.orbits);
    out.nodes_explored += part.nodes;
    if (part.incomplete) out.complete = false;
    for (auto& d : part.diagnostics) out.diagnostics.push_back(std::move(d));
  }
  for (const auto& orbit : all) {
    out.orbits.push_back({orbit, orbit.period()});
    out.frieze_count += orbit.period();
  }
  return out;
}

std::uint64_t partition_count(const BigInt& rep_cap) {
  if (!rep_cap.fits_ulong_p()) {
    throw std::invalid_argument("seed space too large to partition; pass an entry cap override");
  }
  return rep_cap.get_ui();
}

// ---------------------------------------------------------------------------
// column_dfs

class ColumnSearch {
 public:
  ColumnSearch(const SearchSpace& space, Progress& progress)
      : s_(space),
        progress_(progress),
        seed_(space.n),
        back_(space.p > 1 ? space.p - 1 : 0, std::vector<BigInt>(space.n)),
        rowprod_(space.n, BigInt(1)),
        next_(space.n) {}

  PartitionResult run(const BigInt& first) {
    assign_coordinate(0, first, first);
    return std::move(result_);
  }

 private:
  struct Congruence {
    BigInt modulus;
    BigInt k;
    unsigned exponent;
  };

  bool known(const BigInt& v) const { return v != 0; }

  // Value of column -d (d = 0 is the seed).
  std::vector<BigInt>& column(std::size_t d) { return d == 0 ? seed_ : back_[d - 1]; }

  // Enumerates the admissible values of seed coordinate m within [lo, hi].
  template <class Visit>
  void for_each_candidate(std::size_t m, BigInt lo, BigInt hi, Visit&& visit) {
    hi = std::min({hi, s_.entry_cap[m], BigInt(s_.row_cap[m] / rowprod_[m])});
    if (m == 0) hi = std::min(hi, s_.rep_cap[0]);

    // Entries of column -1 that the new coordinate completes.
    std::vector<Congruence> congruences;
    for (const auto& nb : s_.mesh.lower[m]) {
      const std::size_t i = nb.vertex;
      bool computable = true;
      BigInt k = 1;
      unsigned exponent = 0;
      for (const auto& up : s_.mesh.upper[i]) {
        if (up.vertex == m) {
          exponent = up.exponent;
        } else if (up.vertex > m) {
          computable = false;
        } else {
          k *= power(seed_[up.vertex], up.exponent);
        }
      }
      for (const auto& low : s_.mesh.lower[i]) {
        if (s_.p < 2 || !known(back_[0][low.vertex])) {
          computable = false;
        } else {
          k *= power(back_[0][low.vertex], low.exponent);
        }
      }
      if (!computable || s_.p < 2) continue;
      // (1 + k x^e) / seed[i] must stay within the caps of row i.
      const BigInt cap_i = std::min(s_.entry_cap[i], BigInt(s_.row_cap[i] / rowprod_[i]));
      const BigInt top = seed_[i] * cap_i;
      if (top < 1 + k) return;
      hi = std::min(hi, floor_root(BigInt((top - 1) / k), exponent));
      congruences.push_back({seed_[i], std::move(k), exponent});
    }
    if (lo > hi) return;

    auto satisfies = [&](const BigInt& x, bool linear_done) {
      for (const auto& c : congruences) {
        if (linear_done && c.exponent == 1) continue;
        BigInt v = c.k * power(x, c.exponent) + 1;
        if (!mpz_divisible_p(v.get_mpz_t(), c.modulus.get_mpz_t())) return false;
      }
      return true;
    };

    if (s_.mesh.upper[m].empty()) {
      // Forward relation at (m, 0) is already closed: x divides it.
      BigInt numerator = 1;
      for (const auto& low : s_.mesh.lower[m]) numerator *= power(seed_[low.vertex], low.exponent);
      numerator += 1;
      for (const auto& x : divisors_up_to(numerator, hi)) {
        if (x < lo || !satisfies(x, false)) continue;
        if (!visit(x)) return;
      }
      return;
    }

    Progression prog;
    for (const auto& c : congruences) {
      if (c.exponent == 1) prog = merge(prog, solve_linear(c.k % c.modulus, c.modulus));
    }
    if (prog.empty) return;
    BigInt x = lo + ((prog.residue - lo) % prog.modulus + prog.modulus) % prog.modulus;
    for (; x <= hi; x += prog.modulus) {
      if (!satisfies(x, true)) continue;
      if (!visit(x)) return;
    }
  }

  void dfs(std::size_t m) {
    for_each_candidate(m, BigInt(1), s_.entry_cap[m], [&](const BigInt& x) {
      try_value(m, x);
      return !stopped_;
    });
  }

  void assign_coordinate(std::size_t m, const BigInt& lo, const BigInt& hi) {
    for_each_candidate(m, lo, hi, [&](const BigInt& x) {
      try_value(m, x);
      return !stopped_;
    });
  }

  void try_value(std::size_t m, const BigInt& x) {
    ++result_.nodes;
    progress_.node();
    seed_[m] = x;
    rowprod_[m] *= x;
    const std::size_t mark = trail_.size();
    if (extend_triangle()) {
      if (m + 1 == s_.n) {
        finish_seed();
      } else {
        dfs(m + 1);
      }
    }
    undo(mark);
    rowprod_[m] /= x;
    seed_[m] = 0;
  }

  // Fills every entry of columns -1 .. -(p-1) that the known entries
  // determine; false when a division is inexact or a cap is exceeded.
  bool extend_triangle() {
    for (std::size_t d = 1; d <= back_.size(); ++d) {
      std::vector<BigInt>& prev = column(d - 1);
      std::vector<BigInt>& cur = column(d);
      for (std::size_t i = 0; i < s_.n; ++i) {
        if (known(cur[i]) || !known(prev[i])) continue;
        bool ready = true;
        for (const auto& up : s_.mesh.upper[i]) ready = ready && known(prev[up.vertex]);
        for (const auto& low : s_.mesh.lower[i]) ready = ready && known(cur[low.vertex]);
        if (!ready) continue;
        num_ = mesh_product(s_.mesh, i, cur, prev) + 1;
        if (!mpz_divisible_p(num_.get_mpz_t(), prev[i].get_mpz_t())) return false;
        mpz_divexact(val_.get_mpz_t(), num_.get_mpz_t(), prev[i].get_mpz_t());
        if (val_ > s_.entry_cap[i]) return false;
        rowprod_[i] *= val_;
        cur[i] = val_;
        trail_.push_back({d, i});
        if (rowprod_[i] > s_.row_cap[i]) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [d, i] = trail_.back();
      trail_.pop_back();
      BigInt& cell = column(d)[i];
      rowprod_[i] /= cell;
      cell = 0;
    }
  }

  void finish_seed() {
    if (visited_.count(seed_)) return;
    std::vector<std::vector<BigInt>> cols{seed_};
    std::vector<BigInt> prods = seed_;
    for (std::size_t step = 1; step <= s_.p; ++step) {
      if (forward_into(s_.mesh, cols.back(), next_)) return;
      if (next_ == cols.front()) {
        FriezePattern orbit = canonical_orbit(to_pattern(s_.type, cols));
        for (const auto& c : cols) visited_.insert(c);
        if (result_.orbits.insert(std::move(orbit)).second) progress_.found();
        return;
      }
      for (std::size_t i = 0; i < s_.n; ++i) {
        if (next_[i] > s_.entry_cap[i]) return;
        if (step < s_.p) {
          prods[i] *= next_[i];
          if (prods[i] > s_.row_cap[i]) return;
        }
      }
      cols.push_back(next_);
    }
    result_.incomplete = true;
    std::string seed_text;
    for (const auto& v : seed_) seed_text += (seed_text.empty() ? "" : ",") + v.get_str();
    result_.diagnostics.push_back({SearchDiagnostic::Kind::cap_exceeded,
                                   "seed (" + seed_text + ") did not recur within period cap " +
                                       std::to_string(s_.p)});
  }

  const SearchSpace& s_;
  Progress& progress_;
  bool stopped_ = false;
  std::vector<BigInt> seed_;
  std::vector<std::vector<BigInt>> back_;
  std::vector<BigInt> rowprod_;
  std::vector<std::pair<std::size_t, std::size_t>> trail_;
  std::vector<BigInt> next_;
  BigInt num_, val_;
  std::set<std::vector<BigInt>> visited_;
  PartitionResult result_;
};

// ---------------------------------------------------------------------------
// row_seeded

class RowSearch {
 public:
  RowSearch(const SearchSpace& space, Progress& progress, std::uint64_t node_budget)
      : s_(space), progress_(progress), budget_(node_budget), seed_row_(space.n - 1) {
    const std::size_t n = s_.n, p = s_.p;
    grid_.assign(n * p, BigInt(0));
    rowprod_.assign(n, BigInt(1));
    touching_.resize(n * p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < p; ++k) {
        Relation r{cell(i, k), cell(i, (k + 1) % p), {}};
        for (const auto& low : s_.mesh.lower[i]) r.rhs.push_back({cell(low.vertex, k), low.exponent});
        for (const auto& up : s_.mesh.upper[i]) r.rhs.push_back({cell(up.vertex, (k + 1) % p), up.exponent});
        const std::size_t id = relations_.size();
        touching_[r.a].push_back(id);
        if (r.b != r.a) touching_[r.b].push_back(id);
        for (const auto& t : r.rhs) touching_[t.cell].push_back(id);
        relations_.push_back(std::move(r));
      }
    }
  }

  PartitionResult run(const BigInt& t0) {
    if (t0 <= s_.entry_cap[seed_row_]) {
      ++result_.nodes;
      progress_.node();
      min_seed_ = t0;
      const std::size_t mark = trail_.size();
      if (assign(cell(seed_row_, 0), t0) && propagate()) search();
      undo(mark);
    }
    return std::move(result_);
  }

 private:
  struct Term {
    std::size_t cell;
    unsigned exponent;
  };
  // grid[a] * grid[b] = 1 + prod rhs
  struct Relation {
    std::size_t a;
    std::size_t b;
    std::vector<Term> rhs;
  };

  std::size_t cell(std::size_t i, std::size_t k) const { return i * s_.p + k; }
  std::size_t row_of(std::size_t c) const { return c / s_.p; }
  bool known(std::size_t c) const { return grid_[c] != 0; }

  bool assign(std::size_t c, const BigInt& v) {
    const std::size_t i = row_of(c);
    if (v < 1 || v > s_.entry_cap[i]) return false;
    if (i == seed_row_ && v < min_seed_) return false;
    BigInt prod = rowprod_[i] * v;
    if (prod > s_.row_cap[i]) return false;
    rowprod_[i] = std::move(prod);
    grid_[c] = v;
    trail_.push_back(c);
    for (auto id : touching_[c]) queue_.push_back(id);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t c = trail_.back();
      trail_.pop_back();
      rowprod_[row_of(c)] /= grid_[c];
      grid_[c] = 0;
    }
    queue_.clear();
  }

  // Known part of the right-hand side and its unknown terms.
  BigInt rhs_split(const Relation& r, std::vector<Term>& unknown) const {
    BigInt k = 1;
    unknown.clear();
    for (const auto& t : r.rhs) {
      if (known(t.cell)) {
        k *= power(grid_[t.cell], t.exponent);
      } else {
        unknown.push_back(t);
      }
    }
    return k;
  }

  bool propagate() {
    std::vector<Term> unknown;
    while (!queue_.empty()) {
      const Relation& r = relations_[queue_.back()];
      queue_.pop_back();
      const bool ka = known(r.a), kb = known(r.b);
      const BigInt k = rhs_split(r, unknown);
      if (ka && kb) {
        const BigInt lhs = grid_[r.a] * grid_[r.b];
        if (unknown.empty()) {
          if (lhs != k + 1) return false;
        } else if (unknown.size() == 1) {
          const BigInt rest = lhs - 1;
          if (rest == 0 || !mpz_divisible_p(rest.get_mpz_t(), k.get_mpz_t())) return false;
          auto root = exact_root(rest / k, unknown[0].exponent);
          if (!root || !assign(unknown[0].cell, *root)) return false;
        }
      } else if (unknown.empty() && (ka || kb)) {
        const BigInt total = k + 1;
        const std::size_t u = ka ? r.b : r.a;
        const BigInt& other = ka ? grid_[r.a] : grid_[r.b];
        if (!mpz_divisible_p(total.get_mpz_t(), other.get_mpz_t())) return false;
        if (!assign(u, total / other)) return false;
      } else if (unknown.empty() && r.a == r.b) {
        auto root = exact_root(k + 1, 2);
        if (!root || !assign(r.a, *root)) return false;
      }
    }
    return true;
  }

  bool charge() {
    ++result_.nodes;
    progress_.node();
    if (++branch_nodes_ > budget_) {
      if (!stopped_) {
        result_.incomplete = true;
        result_.diagnostics.push_back({SearchDiagnostic::Kind::factorization_explosion,
                                       "node budget of " + std::to_string(budget_) +
                                           " exhausted while branching (seed row minimum " +
                                           min_seed_.get_str() + ")"});
      }
      stopped_ = true;
      return false;
    }
    return true;
  }

  // Assigns the given cells (in order), propagates, recurses, and undoes.
  void branch(std::initializer_list<std::pair<std::size_t, BigInt>> cells) {
    const std::size_t mark = trail_.size();
    bool ok = true;
    for (const auto& [c, v] : cells) {
      if (!known(c)) {
        ok = ok && assign(c, v);
      } else {
        ok = ok && grid_[c] == v;
      }
    }
    if (ok && propagate()) search();
    undo(mark);
  }

  void search() {
    if (stopped_) return;
    // Next unknown cell of the seed row.
    for (std::size_t k = 1; k < s_.p; ++k) {
      if (!known(cell(seed_row_, k))) {
        branch_seed(k);
        return;
      }
    }
    std::vector<Term> unknown;
    // A relation whose left side is known but whose right side has several
    // unknowns: branch over factorizations of the remaining quotient.
    for (const auto& r : relations_) {
      if (!known(r.a) || !known(r.b)) continue;
      const BigInt k = rhs_split(r, unknown);
      if (unknown.size() < 2) continue;
      const BigInt rest = grid_[r.a] * grid_[r.b] - 1;
      if (rest == 0 || !mpz_divisible_p(rest.get_mpz_t(), k.get_mpz_t())) return;
      const BigInt target = rest / k;
      const Term u = unknown[0];
      for (const auto& dv : divisors(target)) {
        auto v = exact_root(dv, u.exponent);
        if (!v) continue;
        if (!charge()) return;
        branch({{u.cell, *v}});
        if (stopped_) return;
      }
      return;
    }
    // Left side with two unknown cells and a known right side.
    for (const auto& r : relations_) {
      if (known(r.a) || known(r.b) || r.a == r.b) continue;
      const BigInt k = rhs_split(r, unknown);
      if (!unknown.empty()) continue;
      const BigInt total = k + 1;
      for (const auto& dv : divisors_up_to(total, s_.entry_cap[row_of(r.a)])) {
        if (!charge()) return;
        branch({{r.a, dv}, {r.b, total / dv}});
        if (stopped_) return;
      }
      return;
    }
    // Fallback: first unknown cell over its full range.
    for (std::size_t c = 0; c < grid_.size(); ++c) {
      if (known(c)) continue;
      const BigInt hi = std::min(s_.entry_cap[row_of(c)], BigInt(s_.row_cap[row_of(c)] / rowprod_[row_of(c)]));
      for (BigInt v = 1; v <= hi; ++v) {
        if (!charge()) return;
        branch({{c, v}});
        if (stopped_) return;
      }
      return;
    }
    record_solution();
  }

  // Chooses seed-row entry k; entry k-1 is known.
  void branch_seed(std::size_t k) {
    const std::size_t prev = cell(seed_row_, k - 1);
    const std::size_t cur = cell(seed_row_, k);
    const Relation& r = relations_[seed_row_ * s_.p + (k - 1)];
    std::vector<Term> unknown;
    const BigInt kk = rhs_split(r, unknown);
    const BigInt t_max = std::min(s_.entry_cap[seed_row_], BigInt(s_.row_cap[seed_row_] / rowprod_[seed_row_]));
    if (t_max < min_seed_) return;

    if (unknown.size() == 1) {
      // prev * cur = 1 + kk * v^e: enumerate v.
      const Term u = unknown[0];
      const std::size_t urow = row_of(u.cell);
      const BigInt& a = grid_[prev];
      const BigInt top = a * t_max - 1;
      if (top < kk) return;
      BigInt v_hi = floor_root(BigInt(top / kk), u.exponent);
      v_hi = std::min({v_hi, s_.entry_cap[urow], BigInt(s_.row_cap[urow] / rowprod_[urow])});
      Progression prog;
      if (u.exponent == 1) prog = solve_linear(kk % a, a);
      if (prog.empty) return;
      BigInt v = 1 + ((prog.residue - 1) % prog.modulus + prog.modulus) % prog.modulus;
      for (; v <= v_hi; v += prog.modulus) {
        BigInt total = kk * power(v, u.exponent) + 1;
        if (!mpz_divisible_p(total.get_mpz_t(), a.get_mpz_t())) continue;
        BigInt t = total / a;
        if (t < min_seed_) continue;
        ++result_.nodes;
        progress_.node();
        branch({{u.cell, v}, {cur, t}});
        if (stopped_) return;
      }
      return;
    }
    for (BigInt t = min_seed_; t <= t_max; ++t) {
      ++result_.nodes;
      progress_.node();
      branch({{cur, t}});
      if (stopped_) return;
    }
  }

  void record_solution() {
    std::vector<std::vector<BigInt>> cols(s_.p, std::vector<BigInt>(s_.n));
    for (std::size_t i = 0; i < s_.n; ++i) {
      for (std::size_t k = 0; k < s_.p; ++k) cols[k][i] = grid_[cell(i, k)];
    }
    FriezePattern full = to_pattern(s_.type, cols);
    if (!verify_pattern(full).empty()) return;
    if (result_.orbits.insert(canonical_orbit(full)).second) progress_.found();
  }

  const SearchSpace& s_;
  Progress& progress_;
  std::uint64_t budget_;
  std::uint64_t branch_nodes_ = 0;
  bool stopped_ = false;
  std::size_t seed_row_;
  BigInt min_seed_ = 1;
  std::vector<BigInt> grid_;
  std::vector<BigInt> rowprod_;
  std::vector<Relation> relations_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> queue_;
  PartitionResult result_;
};

}  // namespace

SearchOutcome column_dfs(const SearchConfig& cfg) {
  const SearchSpace space = make_space(cfg);
  Progress progress(cfg.progress);
  const std::uint64_t count = partition_count(space.rep_cap[0]);
  auto parts = run_partitions(count, cfg.jobs, [&](std::uint64_t first) {
    ColumnSearch search(space, progress);
    return search.run(BigInt(static_cast<unsigned long>(first)));
  });
  return merge_results(space, Strategy::column_dfs, parts);
}

SearchOutcome row_seeded(const SearchConfig& cfg) {
  if (!supports_row_seeding(cfg.dynkin)) {
    throw std::invalid_argument("row seeding needs a path or a tree with one branch vertex");
  }
  const SearchSpace space = make_space(cfg);
  Progress progress(cfg.progress);
  const std::uint64_t count = partition_count(space.rep_cap[space.n - 1]);
  auto parts = run_partitions(count, cfg.jobs, [&](std::uint64_t t0) {
    RowSearch search(space, progress, cfg.node_budget);
    return search.run(BigInt(static_cast<unsigned long>(t0)));
  });
  return merge_results(space, Strategy::row_seeded, parts);
}

SearchOutcome enumerate_friezes(const SearchConfig& cfg) {
  return cfg.strategy == Strategy::column_dfs ? column_dfs(cfg) : row_seeded(cfg);
}

}  // namespace frieze
