#include "iwasawa/serialize.hpp"

#include <cctype>
#include <sstream>

#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) parse_fail("matrix has no rows");
  const std::size_t cols = rows.front().size();
  if (cols == 0) parse_fail("matrix has an empty row");
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      parse_fail("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) + " entries, expected " +
                 std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix nested_rows(const Json& arr, bool* was_decimal) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : arr) {
    if (!row.is_array()) parse_fail("matrix rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& x : row) out.push_back(rational_from_json(x, was_decimal));
  }
  return from_rows(rows);
}

Json rational_list(std::span<const Rational> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json float_matrix(const FloatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

FloatMatrix float_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_fail("expected a nested array of numbers");
  FloatMatrix m(j.size(), j.front().size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != m.cols) parse_fail("ragged float matrix");
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (!row[c].is_number()) parse_fail("float matrix entries must be numbers");
      m(i, c) = row[c].get<double>();
    }
  }
  return m;
}

std::string place_key(const Place& place) { return place.to_string(); }

}  // namespace

Json to_json(const Rational& x) { return x.to_string(); }

Rational rational_from_json(const Json& j, bool* was_decimal) {
  if (j.is_string()) return Rational::parse_exact(j.get<std::string>(), was_decimal);
  if (j.is_number()) return Rational::parse_exact(j.dump(), was_decimal);
  parse_fail("expected a rational, got " + j.dump());
}

Json to_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Valuation valuation_from_json(const Json& j) {
  if (j.is_number_integer()) return Valuation::finite(j.get<long>());
  if (j.is_string() && j.get<std::string>() == "inf") return Valuation::infinity();
  parse_fail("expected an integer valuation or \"inf\", got " + j.dump());
}

Json to_json(const RatMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

RatMatrix matrix_from_json(const Json& j, bool* was_decimal) {
  if (j.is_string()) return parse_matrix(j.get<std::string>(), was_decimal);
  if (j.is_array()) return nested_rows(j, was_decimal);
  if (!j.is_object()) parse_fail("expected a matrix, got " + j.dump());

  const Json& entries = field(j, "entries");
  if (!entries.is_array()) parse_fail("\"entries\" must be an array");
  RatMatrix m;
  const bool flat = !entries.empty() && !entries.front().is_array();
  if (flat) {
    const auto rows = field(j, "rows").get<std::size_t>();
    const auto cols = field(j, "cols").get<std::size_t>();
    if (rows * cols != entries.size() || rows == 0) parse_fail("flat entries do not match rows x cols");
    m = RatMatrix(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) m(k / cols, k % cols) = rational_from_json(entries[k], was_decimal);
  } else {
    m = nested_rows(entries, was_decimal);
  }
  if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows()) parse_fail("\"rows\" disagrees with entries");
  if (j.contains("cols") && j.at("cols").get<std::size_t>() != m.cols()) parse_fail("\"cols\" disagrees with entries");
  return m;
}

RatMatrix parse_matrix(std::string_view text, bool* was_decimal) {
  text = trim(text);
  if (text.empty()) parse_fail("empty matrix text");
  if (text.front() == '{' || text.front() == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      parse_fail(std::string("malformed JSON: ") + e.what());
    }
    return matrix_from_json(j, was_decimal);
  }

  std::vector<std::vector<Rational>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";\n", start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(trim(text.substr(start, end - start)));
    start = end + 1;
    if (line.empty()) continue;
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream in(line);
    auto& row = rows.emplace_back();
    for (std::string token; in >> token;) row.push_back(Rational::parse_exact(token, was_decimal));
  }
  return from_rows(rows);
}

Json to_json(const PadicIwasawa& dec) {
  Json out;
  out["prime"] = dec.prime.value();
  out["M"] = to_json(dec.M);
  out["N"] = to_json(dec.N);
  out["A"] = to_json(dec.A);
  out["K"] = to_json(dec.K);
  out["dilatons"] = rational_list(dec.dilatons);
  Json vals = Json::array();
  for (const auto& v : dec.dilaton_valuations) vals.push_back(to_json(v));
  out["dilaton_valuations"] = std::move(vals);
  return out;
}

PadicIwasawa padic_from_json(const Json& j) {
  PadicIwasawa dec;
  const Json& prime = field(j, "prime");
  if (!prime.is_number_unsigned()) parse_fail("\"prime\" must be a positive integer");
  dec.prime = Prime(prime.get<std::uint64_t>());
  dec.M = matrix_from_json(field(j, "M"));
  dec.N = matrix_from_json(field(j, "N"));
  dec.A = matrix_from_json(field(j, "A"));
  dec.K = matrix_from_json(field(j, "K"));
  if (j.contains("dilatons")) dec.dilatons = rationals_from_json(j.at("dilatons"));
  if (j.contains("dilaton_valuations")) {
    const Json& vals = j.at("dilaton_valuations");
    if (!vals.is_array()) parse_fail("\"dilaton_valuations\" must be an array");
    for (const auto& v : vals) dec.dilaton_valuations.push_back(valuation_from_json(v));
  }
  return dec;
}

Json to_json(const RealIwasawa& dec) {
  Json out;
  out["M"] = to_json(dec.M);
  out["N"] = to_json(dec.N);
  out["dilatons_squared"] = rational_list(dec.dilatons_squared);
  FloatMatrix a(dec.a_diagonal.size(), dec.a_diagonal.size());
  for (std::size_t i = 0; i < dec.a_diagonal.size(); ++i) a(i, i) = dec.a_diagonal[i];
  out["A_float"] = float_matrix(a);
  out["K_float"] = float_matrix(dec.K);
  out["residuals"] = {{"reconstruction", dec.residuals.reconstruction},
                      {"matrix_scale", dec.residuals.matrix_scale},
                      {"orthogonality", dec.residuals.orthogonality}};
  return out;
}

RealIwasawa real_from_json(const Json& j) {
  RealIwasawa dec;
  dec.M = matrix_from_json(field(j, "M"));
  dec.N = matrix_from_json(field(j, "N"));
  dec.dilatons_squared = rationals_from_json(field(j, "dilatons_squared"));
  FloatMatrix a = float_matrix_from_json(field(j, "A_float"));
  if (a.rows != a.cols) parse_fail("\"A_float\" must be square");
  for (std::size_t i = 0; i < a.rows; ++i) dec.a_diagonal.push_back(a(i, i));
  dec.K = float_matrix_from_json(field(j, "K_float"));
  if (j.contains("residuals")) {
    const Json& r = j.at("residuals");
    dec.residuals.reconstruction = r.value("reconstruction", 0.0);
    dec.residuals.matrix_scale = r.value("matrix_scale", 0.0);
    dec.residuals.orthogonality = r.value("orthogonality", 0.0);
  }
  return dec;
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return Json{{"pass", report.all_pass()}, {"checks", std::move(checks)}};
}

Json to_json(const PlueckerVector& v) {
  Json components = Json::array();
  for (const auto& c : v.components)
    components.push_back(Json{{"columns", c.columns.one_based()}, {"value", to_json(c.value)}});
  return Json{{"order", v.order}, {"components", std::move(components)}};
}

Json to_json(const IdentitySuiteReport& report) {
  Json identities = Json::object();
  for (std::size_t i = 0; i < kIdentityKinds; ++i) {
    const auto kind = static_cast<IdentityKind>(i);
    const auto& t = report.tally(kind);
    identities[std::string(to_string(kind))] =
        Json{{"checked", t.checked}, {"passed", t.passed}, {"failed", t.checked - t.passed}};
  }
  Json config{{"sizes", report.config.sizes},
              {"trials", report.config.trials},
              {"seed", report.config.seed},
              {"enumerate_up_to", report.config.enumerate_up_to},
              {"tuple_cap", report.config.tuple_cap}};
  return Json{{"pass", report.all_pass()},
              {"config", std::move(config)},
              {"identities", std::move(identities)},
              {"failures", report.failures}};
}

Json dilaton_table_to_json(const std::vector<std::vector<DilatonNorm>>& table, std::span<const Place> places) {
  Json header = Json::array();
  for (const auto& p : places) header.push_back(place_key(p));
  Json rows = Json::array();
  for (std::size_t r = 0; r < table.size(); ++r) {
    Json cells = Json::object();
    for (std::size_t c = 0; c < places.size(); ++c) {
      const DilatonNorm& cell = table[r][c];
      if (cell.place.is_finite())
        cells[place_key(cell.place)] = Json{{"valuation", to_json(cell.valuation)}, {"norm", to_json(cell.exact_value())}};
      else
        cells[place_key(cell.place)] = Json{{"y_squared", to_json(cell.y_squared)}};
    }
    rows.push_back(Json{{"k", r + 1}, {"places", std::move(cells)}});
  }
  return Json{{"places", std::move(header)}, {"rows", std::move(rows)}};
}

std::string dilaton_table_to_csv(const std::vector<std::vector<DilatonNorm>>& table, std::span<const Place> places) {
  std::ostringstream out;
  out << 'k';
  for (const auto& p : places) out << ',' << (p.is_finite() ? "|y_k|_" + place_key(p) : std::string("y_k^2"));
  out << '\n';
  for (std::size_t r = 0; r < table.size(); ++r) {
    out << r + 1;
    for (const auto& cell : table[r]) out << ',' << cell.exact_value().to_string();
    out << '\n';
  }
  return out.str();
}

}  // namespace iwasawa
