#include "iwasawa/iwasawa.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "iwasawa/error.hpp"
#include "iwasawa/random.hpp"
#include "iwasawa/serialize.hpp"

struct iw_matrix {
  iwasawa::RatMatrix value;
};

struct iw_padic {
  iwasawa::PadicIwasawa value;
};

struct iw_real {
  iwasawa::RealIwasawa value;
};

namespace {

using namespace iwasawa;

thread_local std::string g_last_error;

struct InvalidArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

iw_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return IW_ERR_NON_PRIME;
    case ErrorCode::IndexOutOfRange: return IW_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::DimensionMismatch: return IW_ERR_DIMENSION_MISMATCH;
    case ErrorCode::SingularMatrix: return IW_ERR_SINGULAR_MATRIX;
    case ErrorCode::ZeroPivot: return IW_ERR_ZERO_PIVOT;
    case ErrorCode::NotSpecialLinear: return IW_ERR_NOT_SPECIAL_LINEAR;
    case ErrorCode::InvalidFamilyParams: return IW_ERR_INVALID_FAMILY_PARAMS;
    case ErrorCode::PrecisionLoss: return IW_ERR_PRECISION_LOSS;
    case ErrorCode::ZeroVector: return IW_ERR_ZERO_VECTOR;
    case ErrorCode::ParseError: return IW_ERR_PARSE;
  }
  return IW_ERR_INTERNAL;
}

iw_status fail(iw_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
iw_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return IW_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(IW_ERR_PARSE, std::string("ParseError: ") + e.what());
  } catch (const InvalidArgument& e) {
    return fail(IW_ERR_INVALID_ARGUMENT, std::string("InvalidArgument: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(IW_ERR_INTERNAL, "Internal: out of memory");
  } catch (const std::exception& e) {
    return fail(IW_ERR_INTERNAL, std::string("Internal: ") + e.what());
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) throw InvalidArgument(std::string(name) + " is null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const Json& j, int pretty) { return j.dump(pretty ? 2 : -1); }

Json parse_json(const char* text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<Place> parse_places(const std::string& text) {
  std::vector<Place> places;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorCode::ParseError, "empty entry in place list '" + text + "'");
    places.push_back(Place::parse(item.substr(first, last - first + 1)));
  }
  if (places.empty()) throw Error(ErrorCode::ParseError, "empty place list");
  return places;
}

}  // namespace

extern "C" {

const char* iw_status_name(iw_status status) {
  switch (status) {
    case IW_OK: return "Ok";
    case IW_ERR_NON_PRIME: return "NonPrime";
    case IW_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case IW_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case IW_ERR_SINGULAR_MATRIX: return "SingularMatrix";
    case IW_ERR_ZERO_PIVOT: return "ZeroPivot";
    case IW_ERR_NOT_SPECIAL_LINEAR: return "NotSpecialLinear";
    case IW_ERR_INVALID_FAMILY_PARAMS: return "InvalidFamilyParams";
    case IW_ERR_PRECISION_LOSS: return "PrecisionLoss";
    case IW_ERR_ZERO_VECTOR: return "ZeroVector";
    case IW_ERR_PARSE: return "ParseError";
    case IW_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case IW_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* iw_last_error(void) { return g_last_error.c_str(); }

void iw_string_free(char* s) { std::free(s); }

iw_status iw_matrix_parse(const char* text, iw_matrix** out, int* decimal_converted) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    bool decimal = false;
    auto m = std::make_unique<iw_matrix>(iw_matrix{parse_matrix(text, &decimal)});
    if (decimal_converted) *decimal_converted = decimal ? 1 : 0;
    *out = m.release();
  });
}

iw_status iw_matrix_identity(size_t n, iw_matrix** out) {
  return guarded([&] {
    need(out, "out");
    if (n == 0) throw InvalidArgument("matrix size must be positive");
    *out = new iw_matrix{RatMatrix::identity(n)};
  });
}

iw_status iw_matrix_random_sl(size_t n, uint64_t seed, iw_matrix** out) {
  return guarded([&] {
    need(out, "out");
    if (n == 0) throw InvalidArgument("matrix size must be positive");
    MatrixGenerator gen(seed);
    *out = new iw_matrix{gen.special_linear_integer(n)};
  });
}

size_t iw_matrix_rows(const iw_matrix* m) { return m ? m->value.rows() : 0; }

size_t iw_matrix_cols(const iw_matrix* m) { return m ? m->value.cols() : 0; }

iw_status iw_matrix_entry(const iw_matrix* m, size_t i, size_t j, char** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    *out = copy_out(m->value.at(i, j).to_string());
  });
}

iw_status iw_matrix_to_json(const iw_matrix* m, int pretty, char** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    *out = copy_out(dump(to_json(m->value), pretty));
  });
}

iw_status iw_matrix_minor(const iw_matrix* m, const size_t* rows, const size_t* cols, size_t k, char** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    if (k > 0) {
      need(rows, "rows");
      need(cols, "cols");
    }
    std::span<const size_t> r(rows, k), c(cols, k);
    *out = copy_out(minor(m->value, r, c).to_string());
  });
}

void iw_matrix_free(iw_matrix* m) { delete m; }

int iw_is_prime(uint64_t n) { return is_prime(n) ? 1 : 0; }

iw_status iw_padic_valuation(const char* rational, uint64_t p, long* value, int* is_infinite) {
  return guarded([&] {
    need(rational, "rational");
    need(value, "value");
    need(is_infinite, "is_infinite");
    Valuation v = padic_valuation(Rational::parse_exact(rational), p);
    *is_infinite = v.is_infinite() ? 1 : 0;
    *value = v.is_infinite() ? 0 : v.value();
  });
}

iw_status iw_padic_decompose(const iw_matrix* m, uint64_t p, iw_padic** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    *out = new iw_padic{decompose_padic(m->value, Prime(p))};
  });
}

iw_status iw_padic_from_json(const char* json, iw_padic** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new iw_padic{padic_from_json(parse_json(json))};
  });
}

iw_status iw_padic_to_json(const iw_padic* dec, int pretty, char** out) {
  return guarded([&] {
    need(dec, "decomposition");
    need(out, "out");
    *out = copy_out(dump(to_json(dec->value), pretty));
  });
}

iw_status iw_padic_apply_family(const iw_padic* dec, const iw_matrix* x, const iw_matrix* y, iw_padic** out) {
  return guarded([&] {
    need(dec, "decomposition");
    need(x, "x");
    need(y, "y");
    need(out, "out");
    *out = new iw_padic{apply_family(dec->value, FamilyParams{x->value, y->value}, dec->value.prime)};
  });
}

iw_status iw_padic_verify(const iw_padic* dec, int* all_pass, char** report_json) {
  return guarded([&] {
    need(dec, "decomposition");
    need(all_pass, "all_pass");
    VerificationReport report = verify_membership(dec->value, dec->value.prime);
    *all_pass = report.all_pass() ? 1 : 0;
    if (report_json) *report_json = copy_out(dump(to_json(report), 0));
  });
}

iw_status iw_dilaton_valuations(const iw_matrix* m, uint64_t p, char** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    Json vals = Json::array();
    for (const auto& v : dilaton_valuations(m->value, Prime(p))) vals.push_back(to_json(v));
    *out = copy_out(vals.dump());
  });
}

void iw_padic_free(iw_padic* dec) { delete dec; }

iw_status iw_real_decompose(const iw_matrix* m, iw_real** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    *out = new iw_real{real_decompose(m->value)};
  });
}

iw_status iw_real_from_json(const char* json, iw_real** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new iw_real{real_from_json(parse_json(json))};
  });
}

iw_status iw_real_to_json(const iw_real* dec, int pretty, char** out) {
  return guarded([&] {
    need(dec, "decomposition");
    need(out, "out");
    *out = copy_out(dump(to_json(dec->value), pretty));
  });
}

iw_status iw_real_verify(const iw_real* dec, int* all_pass, char** report_json) {
  return guarded([&] {
    need(dec, "decomposition");
    need(all_pass, "all_pass");
    VerificationReport report = verify_real(dec->value);
    *all_pass = report.all_pass() ? 1 : 0;
    if (report_json) *report_json = copy_out(dump(to_json(report), 0));
  });
}

void iw_real_free(iw_real* dec) { delete dec; }

iw_status iw_pluecker_json(const iw_matrix* m, size_t order, int pretty, char** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    if (order != 0) {
      *out = copy_out(dump(to_json(pluecker(m->value, order)), pretty));
      return;
    }
    Json all = Json::array();
    for (size_t k = 1; k < m->value.rows(); ++k) all.push_back(to_json(pluecker(m->value, k)));
    *out = copy_out(dump(all, pretty));
  });
}

iw_status iw_dilaton_norms(const iw_matrix* m, const char* places, iw_format format, int pretty, char** out) {
  return guarded([&] {
    need(m, "matrix");
    need(places, "places");
    need(out, "out");
    const auto list = parse_places(places);
    const auto table = dilaton_norm_table(m->value, list);
    if (format == IW_FORMAT_CSV)
      *out = copy_out(dilaton_table_to_csv(table, list));
    else
      *out = copy_out(dump(dilaton_table_to_json(table, list), pretty));
  });
}

iw_status iw_verify_identities(const size_t* sizes, size_t n_sizes, size_t trials, uint64_t seed, int pretty,
                               int* all_pass, char** report_json) {
  return guarded([&] {
    need(all_pass, "all_pass");
    IdentitySuiteConfig config;
    if (n_sizes > 0) {
      need(sizes, "sizes");
      config.sizes.assign(sizes, sizes + n_sizes);
    }
    config.trials = trials;
    config.seed = seed;
    const IdentitySuiteReport report = run_identity_suite(config);
    *all_pass = report.all_pass() ? 1 : 0;
    if (report_json) *report_json = copy_out(dump(to_json(report), pretty));
  });
}

}  // extern "C"
