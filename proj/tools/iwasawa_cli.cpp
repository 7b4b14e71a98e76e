// Command-line front end over the C interface in iwasawa/iwasawa.h.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "iwasawa/iwasawa.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string input_path;
  std::string matrix_text;
  std::string format = "json";
  bool pretty = false;
  std::optional<std::uint64_t> prime;
  bool real = false;
  std::string places;
  std::string x_text;
  std::string y_text;
  std::string sizes = "2,3,4,5,6";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t order = 0;
};

// Thrown for problems with the command line or the input text.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Outcome of one pipeline run: serialized output or an error.
struct Outcome {
  std::string text;
  int exit_code = kExitOk;
  std::string error;  // "Name: message" when exit_code != 0 and no text
  bool warned_decimal = false;
};

int exit_code_for(iw_status status) {
  switch (status) {
    case IW_OK: return kExitOk;
    case IW_ERR_PARSE:
    case IW_ERR_INVALID_ARGUMENT:
    case IW_ERR_NON_PRIME: return kExitUsage;
    default: return kExitDomain;
  }
}

Outcome failure(iw_status status) { return Outcome{{}, exit_code_for(status), iw_last_error(), false}; }

std::string take(char* s) {
  std::string out = s ? s : "";
  iw_string_free(s);
  return out;
}

struct MatrixHandle {
  iw_matrix* ptr = nullptr;
  ~MatrixHandle() { iw_matrix_free(ptr); }
};

struct PadicHandle {
  iw_padic* ptr = nullptr;
  ~PadicHandle() { iw_padic_free(ptr); }
};

struct RealHandle {
  iw_real* ptr = nullptr;
  ~RealHandle() { iw_real_free(ptr); }
};

std::size_t max_dimension() {
  if (const char* env = std::getenv("IWASAWA_MAX_N")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError("IWASAWA_MAX_N must be a positive integer, got '" + std::string(env) + "'");
  }
  return 12;
}

std::string read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("--input: cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// "@path" reads a file, anything else is inline text.
std::string inline_or_file(const std::string& text) {
  return !text.empty() && text.front() == '@' ? read_file(text.substr(1)) : text;
}

// Parses and checks a matrix; on failure returns the outcome to report.
std::optional<Outcome> load_matrix(const std::string& text, const std::string& label, MatrixHandle& m,
                                   bool& decimal) {
  int converted = 0;
  const iw_status st = iw_matrix_parse(text.c_str(), &m.ptr, &converted);
  if (st != IW_OK) return Outcome{{}, kExitUsage, label + ": " + iw_last_error(), false};
  decimal = decimal || converted != 0;
  const std::size_t rows = iw_matrix_rows(m.ptr), cols = iw_matrix_cols(m.ptr);
  if (rows != cols)
    return Outcome{{}, kExitUsage,
                   "DimensionMismatch: " + label + " must be square, got " + std::to_string(rows) + "x" +
                       std::to_string(cols),
                   false};
  if (rows > max_dimension())
    return Outcome{{}, kExitUsage,
                   label + ": size " + std::to_string(rows) + " exceeds IWASAWA_MAX_N=" +
                       std::to_string(max_dimension()),
                   false};
  return std::nullopt;
}

Outcome run_decompose(const Options& opt, const std::string& item) {
  MatrixHandle m;
  bool decimal = false;
  if (auto bad = load_matrix(item, "input matrix", m, decimal)) return *bad;
  Outcome out;
  out.warned_decimal = decimal;
  char* text = nullptr;
  iw_status st;
  if (opt.real) {
    RealHandle dec;
    st = iw_real_decompose(m.ptr, &dec.ptr);
    if (st == IW_OK) st = iw_real_to_json(dec.ptr, 0, &text);
  } else {
    PadicHandle dec;
    st = iw_padic_decompose(m.ptr, *opt.prime, &dec.ptr);
    if (st == IW_OK) st = iw_padic_to_json(dec.ptr, 0, &text);
  }
  if (st != IW_OK) {
    Outcome f = failure(st);
    f.warned_decimal = decimal;
    return f;
  }
  out.text = take(text);
  return out;
}

Outcome run_dilaton_norms(const Options& opt, const std::string& item) {
  MatrixHandle m;
  bool decimal = false;
  if (auto bad = load_matrix(item, "input matrix", m, decimal)) return *bad;
  char* text = nullptr;
  const iw_format format = opt.format == "csv" ? IW_FORMAT_CSV : IW_FORMAT_JSON;
  const iw_status st = iw_dilaton_norms(m.ptr, opt.places.c_str(), format, 0, &text);
  Outcome out = st == IW_OK ? Outcome{take(text)} : failure(st);
  out.warned_decimal = decimal;
  return out;
}

Outcome run_pluecker(const Options& opt, const std::string& item) {
  MatrixHandle m;
  bool decimal = false;
  if (auto bad = load_matrix(item, "input matrix", m, decimal)) return *bad;
  char* text = nullptr;
  const iw_status st = iw_pluecker_json(m.ptr, opt.order, 0, &text);
  Outcome out = st == IW_OK ? Outcome{take(text)} : failure(st);
  out.warned_decimal = decimal;
  return out;
}

bool looks_like_decomposition(const std::string& text) {
  const Json j = Json::parse(text, nullptr, false);
  return j.is_object() && j.contains("N") && j.contains("K");
}

Outcome run_family(const Options& opt, const std::string& item) {
  PadicHandle dec;
  bool decimal = false;
  if (looks_like_decomposition(item)) {
    const iw_status st = iw_padic_from_json(item.c_str(), &dec.ptr);
    if (st != IW_OK) return Outcome{{}, kExitUsage, iw_last_error(), false};
  } else {
    if (!opt.prime) return Outcome{{}, kExitUsage, "--prime is required when the input is a matrix", false};
    MatrixHandle m;
    if (auto bad = load_matrix(item, "input matrix", m, decimal)) return *bad;
    const iw_status st = iw_padic_decompose(m.ptr, *opt.prime, &dec.ptr);
    if (st != IW_OK) return failure(st);
  }
  MatrixHandle x, y;
  if (auto bad = load_matrix(inline_or_file(opt.x_text), "--x", x, decimal)) return *bad;
  if (auto bad = load_matrix(inline_or_file(opt.y_text), "--y", y, decimal)) return *bad;

  PadicHandle moved;
  iw_status st = iw_padic_apply_family(dec.ptr, x.ptr, y.ptr, &moved.ptr);
  char* text = nullptr;
  if (st == IW_OK) st = iw_padic_to_json(moved.ptr, 0, &text);
  Outcome out = st == IW_OK ? Outcome{take(text)} : failure(st);
  out.warned_decimal = decimal;
  return out;
}

Outcome run_verify(const Options&, const std::string& item) {
  const Json j = Json::parse(item, nullptr, false);
  if (!j.is_object()) return Outcome{{}, kExitUsage, "ParseError: verify expects a decomposition JSON object", false};
  const bool real = j.contains("K_float");
  int pass = 0;
  char* report = nullptr;
  iw_status st;
  if (real) {
    RealHandle dec;
    st = iw_real_from_json(item.c_str(), &dec.ptr);
    if (st == IW_OK) st = iw_real_verify(dec.ptr, &pass, &report);
  } else {
    PadicHandle dec;
    st = iw_padic_from_json(item.c_str(), &dec.ptr);
    if (st == IW_OK) st = iw_padic_verify(dec.ptr, &pass, &report);
  }
  if (st != IW_OK) return Outcome{{}, kExitUsage, iw_last_error(), false};
  return Outcome{take(report), pass ? kExitOk : kExitDomain, {}, false};
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      if (static_cast<std::size_t>(v) > max_dimension())
        throw UsageError("--sizes: " + item + " exceeds IWASAWA_MAX_N=" + std::to_string(max_dimension()));
      sizes.push_back(static_cast<std::size_t>(v));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("--sizes: '" + item + "' is not a positive integer");
    }
  }
  if (sizes.empty()) throw UsageError("--sizes: empty list");
  return sizes;
}

Outcome run_verify_identities(const Options& opt) {
  const auto sizes = parse_sizes(opt.sizes);
  int pass = 0;
  char* report = nullptr;
  const iw_status st = iw_verify_identities(sizes.data(), sizes.size(), opt.trials, opt.seed, 0, &pass, &report);
  if (st != IW_OK) return failure(st);
  return Outcome{take(report), pass ? kExitOk : kExitDomain, {}, false};
}

// A top-level JSON array counts as a batch unless it is itself a nested
// array of scalars (a single matrix).
std::optional<std::vector<std::string>> split_batch(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '[') return std::nullopt;
  const Json j = Json::parse(text, nullptr, false);
  if (!j.is_array() || j.empty()) return std::nullopt;
  const Json& head = j.front();
  const bool single_matrix = head.is_array() && (head.empty() || !head.front().is_array());
  if (single_matrix) return std::nullopt;
  std::vector<std::string> items;
  for (const auto& e : j) items.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  return items;
}

template <class Run>
std::vector<Outcome> run_all(const std::vector<std::string>& items, Run run) {
  std::vector<Outcome> results(items.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(items.size(), std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = run(items[i]);
      } catch (const UsageError& e) {
        results[i] = Outcome{{}, kExitUsage, e.what(), false};
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

Json error_json(const std::string& message) {
  const auto colon = message.find(':');
  Json e;
  e["error"] = colon == std::string::npos ? message : message.substr(0, colon);
  e["message"] = message;
  return e;
}

std::string render(const std::string& text, const Options& opt) {
  if (opt.format == "csv") return text;
  const Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) return text;
  return j.dump(opt.pretty ? 2 : -1) + "\n";
}

template <class Run>
int emit(const Options& opt, const std::string& input, Run run) {
  const auto batch = split_batch(input);
  if (!batch) {
    Outcome out;
    try {
      out = run(input);
    } catch (const UsageError& e) {
      out = Outcome{{}, kExitUsage, e.what(), false};
    }
    if (out.warned_decimal) std::cerr << "warning: decimal entries were converted exactly to rationals\n";
    if (!out.text.empty()) std::cout << render(out.text, opt);
    if (!out.error.empty()) std::cerr << "error: " << out.error << "\n";
    return out.exit_code;
  }

  const auto results = run_all(*batch, run);
  int code = kExitOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].warned_decimal)
      std::cerr << "warning: item " << i + 1 << ": decimal entries were converted exactly to rationals\n";
    if (!results[i].error.empty()) std::cerr << "error: item " << i + 1 << ": " << results[i].error << "\n";
    code = std::max(code, results[i].exit_code);
  }
  if (opt.format == "csv") {
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << (results[i].text.empty() ? "error," + results[i].error + "\n" : results[i].text);
    }
    return code;
  }
  Json all = Json::array();
  for (const auto& r : results) {
    if (r.text.empty())
      all.push_back(error_json(r.error));
    else
      all.push_back(Json::parse(r.text));
  }
  std::cout << all.dump(opt.pretty ? 2 : -1) << "\n";
  return code;
}

void add_io_options(CLI::App* cmd, Options& opt) {
  auto* in = cmd->add_option("-i,--input", opt.input_path, "Read the input from a file ('-' for stdin)");
  auto* mat = cmd->add_option("-m,--matrix", opt.matrix_text, "Inline matrix, e.g. '1,0;1/5,1' or JSON");
  in->excludes(mat);
  cmd->add_flag("--pretty", opt.pretty, "Indent JSON output");
}

std::string read_input(const Options& opt) {
  if (!opt.matrix_text.empty()) return opt.matrix_text;
  return read_file(opt.input_path.empty() ? "-" : opt.input_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Iwasawa decompositions over Q_p and R"};
  app.require_subcommand(1);
  Options opt;
  std::string prime_text;

  auto* decompose = app.add_subcommand("decompose", "M = N A K at a prime or over the reals");
  add_io_options(decompose, opt);
  auto* prime_opt = decompose->add_option("-p,--prime", prime_text, "Finite prime");
  auto* real_flag = decompose->add_flag("--real", opt.real, "Real decomposition");
  prime_opt->excludes(real_flag);

  auto* norms = app.add_subcommand("dilaton-norms", "Per-place dilaton norms from Pluecker coordinates");
  add_io_options(norms, opt);
  norms->add_option("--places", opt.places, "Comma separated places, e.g. 2,3,inf")->required();
  norms->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* family = app.add_subcommand("family", "Move a p-adic decomposition along (X, Y)");
  add_io_options(family, opt);
  family->add_option("-p,--prime", prime_text, "Prime, when the input is a matrix");
  family->add_option("--x", opt.x_text, "Unit upper triangular X over Z_p ('@file' reads a file)")->required();
  family->add_option("--y", opt.y_text, "Diagonal Y over Z_p^x with det 1 ('@file' reads a file)")->required();

  auto* verify = app.add_subcommand("verify", "Membership report for a decomposition JSON");
  add_io_options(verify, opt);

  auto* identities = app.add_subcommand("verify-identities", "Exact minor identity suite on random matrices");
  identities->add_option("--sizes", opt.sizes, "Comma separated matrix sizes");
  identities->add_option("--trials", opt.trials, "Matrices per size");
  identities->add_option("--seed", opt.seed, "Random seed");
  identities->add_flag("--pretty", opt.pretty, "Indent JSON output");

  auto* pl = app.add_subcommand("pluecker", "Anti-leading minor vectors");
  add_io_options(pl, opt);
  pl->add_option("--order", opt.order, "Order k in 1..n-1; every order when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!prime_text.empty()) {
      std::size_t used = 0;
      unsigned long long p = 0;
      try {
        p = std::stoull(prime_text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != prime_text.size() || prime_text.front() == '-')
        throw UsageError("--prime: '" + prime_text + "' is not a positive integer");
      if (!iw_is_prime(p)) throw UsageError("NonPrime: --prime " + prime_text + " is not prime");
      opt.prime = p;
    }

    if (*decompose) {
      if (!opt.prime && !opt.real) throw UsageError("decompose needs --prime p or --real");
      return emit(opt, read_input(opt), [&](const std::string& s) { return run_decompose(opt, s); });
    }
    if (*norms) return emit(opt, read_input(opt), [&](const std::string& s) { return run_dilaton_norms(opt, s); });
    if (*family) return emit(opt, read_input(opt), [&](const std::string& s) { return run_family(opt, s); });
    if (*verify) return emit(opt, read_input(opt), [&](const std::string& s) { return run_verify(opt, s); });
    if (*pl) return emit(opt, read_input(opt), [&](const std::string& s) { return run_pluecker(opt, s); });
    if (*identities) {
      Outcome out = run_verify_identities(opt);
      if (!out.text.empty()) std::cout << render(out.text, opt);
      if (!out.error.empty()) std::cerr << "error: " << out.error << "\n";
      return out.exit_code;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
