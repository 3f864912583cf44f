#pragma once

// Text formats.
//
// Frieze documents:
//
//   # comment lines and blank lines are ignored
//   dynkin E8
//   period 4
//   row 4 4 3 3        <- one line per vertex, in Cartan index order
//   ...
//
// Reports are plain text by default and JSON on request. JSON rationals are
// "num/den" strings, big integers are decimal strings, doubles carry 9
// significant digits.

#include "frieze/bounds.hpp"
#include "frieze/dynkin.hpp"
#include "frieze/frieze.hpp"
#include "frieze/search.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frieze {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses a frieze document. The result is not verified.
FriezePattern parse_frieze(std::string_view text);

/// Canonical form: dynkin line, period line, then one row line per vertex.
std::string emit_frieze(const FriezePattern& f);

/// Graphviz digraph of the repetition quiver over columns [k_lo, k_hi].
/// Node ids are v<i>_<k> with 1-based i; labels are frieze values when a
/// pattern is given, "(i,k)" otherwise.
std::string emit_quiver_dot(const DynkinType& t, long k_lo, long k_hi,
                            const FriezePattern* f = nullptr);

/// Double rounded to 9 significant digits.
double round9(double v);

nlohmann::json analysis_json(const FriezePattern& f, std::size_t period, const LogVector& logs,
                             const LemmaCertificate& lemma, const ProductCheck& bounds);
nlohmann::json bounds_json(const BoundsReport& report, bool with_min2);
nlohmann::json enumeration_json(const SearchOutcome& outcome);

std::string analysis_text(const FriezePattern& f, std::size_t period, const LogVector& logs,
                          const LemmaCertificate& lemma, const ProductCheck& bounds);
std::string bounds_text(const BoundsReport& report, bool with_min2);
std::string enumeration_text(const SearchOutcome& outcome);

}  // namespace frieze
