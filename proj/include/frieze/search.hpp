#pragma once

// Exhaustive enumeration of friezes of a Dynkin type.
//
// Two independent strategies produce the same SearchOutcome:
//
//   column_dfs  depth-first search over seed columns F[.][0]. Coordinates are
//               assigned in index order. Each new coordinate is restricted by
//               exact divisibility of the mesh relations it closes, and every
//               entry derived from the partial column must respect the entry
//               and row-product caps. A complete seed is propagated forward
//               until it recurs.
//
//   row_seeded  depth-first search over cyclic tuples for the last row
//               F[n-1][0..p-1], solving the remaining rows through the mesh
//               relations and branching over factorizations where a relation
//               leaves a product of unknowns.
//
// Pruning is exact: divisibility, entry caps floor(2^(p b_i)) and row-product
// caps over p consecutive columns. Orbits are found through one
// representative each: column_dfs only seeds columns whose first entry is at
// most floor(2^(b_1)) and row_seeded only tuples whose first entry is their
// minimum; every orbit has such a column because the geometric mean of a row
// over a period is at most 2^(b_i).

#include "frieze/dynkin.hpp"
#include "frieze/frieze.hpp"
#include "frieze/numeric.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace frieze {

enum class Strategy { column_dfs, row_seeded };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view s);

struct SearchConfig {
  DynkinType dynkin;
  Strategy strategy = Strategy::column_dfs;
  std::size_t period_cap = 0;                // 0: the catalog period cap
  std::optional<BigInt> entry_cap_override;  // bounds every entry of every frieze
  unsigned jobs = 1;
  std::uint64_t node_budget = 100'000'000;   // factorization / fallback branching
  std::ostream* progress = nullptr;          // "explored=<n> found=<m>" per 10^6 nodes
};

struct Orbit {
  FriezePattern pattern;  // canonical rotation, minimal period
  std::size_t size;       // = pattern.period()
};

struct SearchDiagnostic {
  enum class Kind { cap_exceeded, factorization_explosion };
  Kind kind;
  std::string message;
};

struct SearchOutcome {
  DynkinType dynkin;
  Strategy strategy;
  std::size_t period_cap;
  std::vector<BigInt> entry_caps;  // effective per-row caps
  std::vector<Orbit> orbits;       // sorted by canonical pattern
  std::uint64_t frieze_count = 0;  // sum of orbit sizes
  bool complete = true;
  std::uint64_t nodes_explored = 0;
  std::vector<SearchDiagnostic> diagnostics;
};

SearchOutcome enumerate_friezes(const SearchConfig& cfg);
SearchOutcome column_dfs(const SearchConfig& cfg);
SearchOutcome row_seeded(const SearchConfig& cfg);

/// True when the diagram is a path or a tree with a single branch vertex.
bool supports_row_seeding(const DynkinType& t);

}  // namespace frieze
