#include "frieze/io.hpp"

#include <cstdio>
#include <sstream>

namespace frieze {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

BigInt parse_positive(const Token& tok, std::size_t line) {
  const std::string s(tok.text);
  bool digits = !s.empty();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool sign = i == 0 && (s[i] == '-' || s[i] == '+') && s.size() > 1;
    if (!sign && (s[i] < '0' || s[i] > '9')) digits = false;
  }
  if (!digits) throw ParseError(line, tok.column, "expected a positive integer, got '" + s + "'");
  BigInt v(s[0] == '+' ? s.substr(1) : s, 10);
  if (v < 1) throw ParseError(line, tok.column, "non-positive integer " + s);
  return v;
}

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& f, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += f(xs[i]);
  }
  return out;
}

}  // namespace

FriezePattern parse_frieze(std::string_view text) {
  std::optional<DynkinType> type;
  std::optional<std::size_t> period;
  std::vector<std::vector<BigInt>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const Token& key = tokens[0];
    if (key.text == "dynkin") {
      if (type) throw ParseError(line_no, key.column, "duplicate dynkin line");
      if (tokens.size() != 2) throw ParseError(line_no, key.column, "expected 'dynkin <type>'");
      try {
        type = DynkinType::parse(tokens[1].text);
      } catch (const InadmissibleType& e) {
        throw ParseError(line_no, tokens[1].column, std::string("unknown type token: ") + e.what());
      }
    } else if (key.text == "period") {
      if (period) throw ParseError(line_no, key.column, "duplicate period line");
      if (tokens.size() != 2) throw ParseError(line_no, key.column, "expected 'period <p>'");
      const BigInt p = parse_positive(tokens[1], line_no);
      if (!p.fits_ulong_p()) throw ParseError(line_no, tokens[1].column, "period too large");
      period = p.get_ui();
    } else if (key.text == "row") {
      if (!type) throw ParseError(line_no, key.column, "row before dynkin line");
      if (!period) throw ParseError(line_no, key.column, "row before period line");
      if (rows.size() == type->size()) {
        throw ParseError(line_no, key.column,
                         "too many rows: " + type->name() + " has " + std::to_string(type->size()));
      }
      if (tokens.size() - 1 != *period) {
        throw ParseError(line_no, key.column,
                         "period mismatch: row has " + std::to_string(tokens.size() - 1) +
                             " entries, period is " + std::to_string(*period));
      }
      std::vector<BigInt> row;
      for (std::size_t t = 1; t < tokens.size(); ++t) row.push_back(parse_positive(tokens[t], line_no));
      rows.push_back(std::move(row));
    } else {
      throw ParseError(line_no, key.column, "unknown keyword '" + std::string(key.text) + "'");
    }
    if (end == text.size()) break;
  }
  if (!type) throw ParseError(line_no, 1, "missing dynkin line");
  if (!period) throw ParseError(line_no, 1, "missing period line");
  if (rows.size() != type->size()) {
    throw ParseError(line_no, 1,
                     "missing rows: expected " + std::to_string(type->size()) + ", got " +
                         std::to_string(rows.size()));
  }
  std::vector<FriezeSlice> cols;
  for (std::size_t k = 0; k < *period; ++k) {
    std::vector<BigInt> col;
    for (const auto& row : rows) col.push_back(row[k]);
    cols.emplace_back(*type, std::move(col));
  }
  return FriezePattern(*type, std::move(cols));
}

std::string emit_frieze(const FriezePattern& f) {
  std::string out = "dynkin " + f.dynkin().name() + "\nperiod " + std::to_string(f.period()) + "\n";
  for (std::size_t i = 0; i < f.rank(); ++i) {
    out += "row";
    for (const auto& col : f.columns()) out += " " + col[i].get_str();
    out += "\n";
  }
  return out;
}

std::string emit_quiver_dot(const DynkinType& t, long k_lo, long k_hi, const FriezePattern* f) {
  if (f && f->dynkin() != t) throw std::invalid_argument("quiver: pattern type differs");
  const auto arrows = repetition_arrows(t, k_lo, k_hi);
  auto id = [](const QuiverVertex& v) {
    return "v" + std::to_string(v.vertex + 1) + "_" + std::to_string(v.column);
  };
  std::ostringstream os;
  os << "digraph repetition_quiver {\n";
  os << "  label=\"" << t.name() << " repetition quiver, columns " << k_lo << ".." << k_hi << "\";\n";
  os << "  node [shape=plaintext];\n";
  for (long k = k_lo; k <= k_hi; ++k) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const QuiverVertex v{i, k};
      const std::string label =
          f ? f->entry(i, k).get_str() : "(" + std::to_string(i + 1) + "," + std::to_string(k) + ")";
      os << "  " << id(v) << " [label=\"" << label << "\"];\n";
    }
  }
  for (const auto& a : arrows) os << "  " << id(a.from) << " -> " << id(a.to) << ";\n";
  os << "}\n";
  return os.str();
}

double round9(double v) { return std::stod(fmt9(v)); }

nlohmann::json analysis_json(const FriezePattern& f, std::size_t period, const LogVector& logs,
                             const LemmaCertificate& lemma, const ProductCheck& bounds) {
  using nlohmann::json;
  json a = json::array(), ca = json::array(), lem = json::array(), prod = json::array();
  for (double v : logs.a) a.push_back(round9(v));
  for (double v : logs.ca) ca.push_back(round9(v));
  for (const auto& r : lemma.rows) {
    lem.push_back({{"M", r.m.get_str()}, {"P", r.p.get_str()}, {"upper", r.upper.get_str()},
                   {"pass", r.pass}});
  }
  for (const auto& r : bounds.rows) {
    prod.push_back({{"row_product", r.row_product.get_str()},
                    {"exponent", to_fraction_string(r.exponent)},
                    {"product_pass", r.product_pass},
                    {"entries_pass", r.entries_pass}});
  }
  return {{"dynkin", f.dynkin().name()},
          {"stored_period", f.period()},
          {"period", period},
          {"a", a},
          {"ca", ca},
          {"lemma", lem},
          {"lemma_pass", lemma.passed()},
          {"row_bounds", prod},
          {"row_bounds_pass", bounds.passed()},
          {"exactness",
           {{"a", "float(1e-9)"}, {"ca", "float(1e-9)"}, {"lemma", "exact"}, {"row_bounds", "exact"}}}};
}

nlohmann::json bounds_json(const BoundsReport& r, bool with_min2) {
  using nlohmann::json;
  json b = json::array(), caps = json::array();
  for (const auto& q : r.b) b.push_back(to_fraction_string(q));
  for (const auto& q : r.entry_cap_exponents) caps.push_back(to_fraction_string(q));
  json out = {{"dynkin", r.dynkin.name()},
              {"period", r.period},
              {"b", b},
              {"entry_cap_exponents", caps},
              {"count_bound_exponent", to_fraction_string(r.count_bound_exponent)},
              {"d", r.d}};
  json exactness = {{"b", "exact"}, {"entry_cap_exponents", "exact"}, {"count_bound_exponent", "exact"},
                    {"d", "exact"}};
  if (with_min2) {
    json formula = json::array();
    for (double v : r.refined_rowwise_log2) formula.push_back(round9(v));
    out["refined_formula_log2"] = formula;
    out["refined_flat_log2"] = round9(r.unit_exponent_log2);
    out["unit_exponent_base"] = to_fraction_string(r.unit_exponent_base);
    exactness["refined_formula_log2"] = "float(1e-9)";
    exactness["refined_flat_log2"] = "float(1e-9)";
    exactness["unit_exponent_base"] = "exact";
  }
  out["exactness"] = exactness;
  return out;
}

nlohmann::json enumeration_json(const SearchOutcome& o) {
  using nlohmann::json;
  json orbits = json::array();
  for (const auto& orbit : o.orbits) {
    json rows = json::array();
    for (std::size_t i = 0; i < orbit.pattern.rank(); ++i) {
      json row = json::array();
      for (const auto& col : orbit.pattern.columns()) row.push_back(col[i].get_str());
      rows.push_back(row);
    }
    json first = json::array();
    for (const auto& v : orbit.pattern.columns().front().values()) first.push_back(v.get_str());
    orbits.push_back({{"period", orbit.size}, {"first_column", first}, {"rows", rows}});
  }
  json diags = json::array();
  for (const auto& d : o.diagnostics) {
    diags.push_back({{"kind", d.kind == SearchDiagnostic::Kind::cap_exceeded ? "cap_exceeded"
                                                                             : "factorization_explosion"},
                     {"message", d.message}});
  }
  json caps = json::array();
  for (const auto& c : o.entry_caps) caps.push_back(c.get_str());
  return {{"dynkin", o.dynkin.name()},
          {"strategy", std::string(to_string(o.strategy))},
          {"period_cap", o.period_cap},
          {"entry_caps", caps},
          {"frieze_count", o.frieze_count},
          {"orbits", orbits},
          {"complete", o.complete},
          {"nodes_explored", o.nodes_explored},
          {"diagnostics", diags},
          {"exactness", {{"frieze_count", "exact"}}}};
}

std::string analysis_text(const FriezePattern& f, std::size_t period, const LogVector& logs,
                          const LemmaCertificate& lemma, const ProductCheck& bounds) {
  std::ostringstream os;
  os << "type " << f.dynkin().name() << " period " << period << " (stored period " << f.period()
     << ")\n";
  os << "a [float(1e-9)]: " << join(logs.a, fmt9) << "\n";
  os << "C*a [float(1e-9)]: " << join(logs.ca, fmt9) << "\n";
  os << "lemma [exact] P < M <= 2^p*P:\n";
  for (std::size_t i = 0; i < lemma.rows.size(); ++i) {
    const auto& r = lemma.rows[i];
    os << "  row " << i + 1 << ": M=" << r.m << " P=" << r.p << " 2^p*P=" << r.upper << " "
       << (r.pass ? "pass" : "FAIL") << "\n";
  }
  os << "row product bound [exact] prod_k F[i][k] <= 2^(p*b_i):\n";
  for (std::size_t i = 0; i < bounds.rows.size(); ++i) {
    const auto& r = bounds.rows[i];
    os << "  row " << i + 1 << ": product=" << r.row_product << " exponent=" << to_string(r.exponent)
       << " product " << (r.product_pass ? "pass" : "FAIL") << ", entries "
       << (r.entries_pass ? "pass" : "FAIL") << "\n";
  }
  os << "lemma " << (lemma.passed() ? "pass" : "FAIL") << ", bounds "
     << (bounds.passed() ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::string bounds_text(const BoundsReport& r, bool with_min2) {
  auto q = [](const Rational& v) { return to_string(v); };
  std::ostringstream os;
  os << "type " << r.dynkin.name() << " period " << r.period << "\n";
  os << "b [exact]: " << join(r.b, q) << "\n";
  os << "entry cap exponents p*b_i [exact]: " << join(r.entry_cap_exponents, q) << "\n";
  os << "count bound exponent p^2*sum(b) [exact]: " << to_string(r.count_bound_exponent) << "\n";
  os << "d [exact]: " << join(r.d, [](int v) { return std::to_string(v); }) << "\n";
  if (with_min2) {
    os << "unit exponent base prod_j(1+2^-d_j) [exact]: " << to_string(r.unit_exponent_base) << "\n";
    os << "refined flat bound log2(base^p) [float(1e-9)]: " << fmt9(r.unit_exponent_log2) << "\n";
    os << "  flat reading: every factor (1+2^-d_j) raised to p\n";
    os << "refined formula bound per row p*sum_j Cinv[i][j]*log2(1+2^-d_j) [float(1e-9)]: "
       << join(r.refined_rowwise_log2, fmt9) << "\n";
    os << "  formula reading: factor j raised to p*Cinv[i][j]\n";
  }
  return os.str();
}

std::string enumeration_text(const SearchOutcome& o) {
  std::ostringstream os;
  os << "type " << o.dynkin.name() << " strategy " << to_string(o.strategy) << " period cap "
     << o.period_cap << "\n";
  os << "frieze_count [exact]: " << o.frieze_count << "\n";
  os << "orbits: " << o.orbits.size() << "\n";
  for (std::size_t k = 0; k < o.orbits.size(); ++k) {
    const auto& orbit = o.orbits[k];
    os << "  orbit " << k + 1 << ": period " << orbit.size << ", first column ("
       << join(orbit.pattern.columns().front().values(), [](const BigInt& v) { return v.get_str(); }, ",")
       << ")\n";
  }
  os << "complete: " << (o.complete ? "yes" : "no") << "\n";
  os << "nodes_explored: " << o.nodes_explored << "\n";
  for (const auto& d : o.diagnostics) os << "diagnostic: " << d.message << "\n";
  return os.str();
}

}  // namespace frieze
