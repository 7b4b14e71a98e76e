#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "iwasawa/identities.hpp"
#include "iwasawa/padic_iwasawa.hpp"
#include "iwasawa/pluecker.hpp"
#include "iwasawa/real_iwasawa.hpp"
#include "iwasawa/report.hpp"

namespace iwasawa {

using Json = nlohmann::ordered_json;

// Rationals travel as strings ("3", "-2/7"). Readers also take JSON integers
// and decimal numbers/strings; decimals are converted exactly and flagged.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j, bool* was_decimal = nullptr);

// Integer, or the string "inf".
Json to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j);

// {"rows": m, "cols": n, "entries": [[...], ...]}
Json to_json(const RatMatrix& m);
// Accepts the object form, a bare nested array, or an inline string.
RatMatrix matrix_from_json(const Json& j, bool* was_decimal = nullptr);
// Inline text: JSON, or rows separated by ';' or newlines with entries
// separated by ',' or whitespace ("1,2;3,4"). Throws ParseError.
RatMatrix parse_matrix(std::string_view text, bool* was_decimal = nullptr);

Json to_json(const PadicIwasawa& dec);
PadicIwasawa padic_from_json(const Json& j);

Json to_json(const RealIwasawa& dec);
RealIwasawa real_from_json(const Json& j);

Json to_json(const VerificationReport& report);
Json to_json(const PlueckerVector& v);
Json to_json(const IdentitySuiteReport& report);

// One row per k, one column per place. Finite cells carry v_p(y_k) and the
// exact norm |y_k|_p; the real cell carries y_k^2.
Json dilaton_table_to_json(const std::vector<std::vector<DilatonNorm>>& table, std::span<const Place> places);
std::string dilaton_table_to_csv(const std::vector<std::vector<DilatonNorm>>& table, std::span<const Place> places);

}  // namespace iwasawa
