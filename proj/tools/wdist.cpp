// wdist: distance from a real square matrix to the nearest matrix with a
// repeated eigenvalue. Reads an exact rational matrix (file or generator),
// runs the requested pipeline, and emits a structured JSON report.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "wdist/complexdist.hpp"
#include "wdist/digest.hpp"
#include "wdist/gallery.hpp"
#include "wdist/nearest.hpp"
#include "wdist/report.hpp"
#include "wdist/specpoly.hpp"

namespace {

using namespace wdist;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::PARSE_ERROR, "cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) raise(Errc::PARSE_ERROR, "cannot open output file '" + out_path + "'");
  out << text;
}

struct LoadedInput {
  Matrix matrix;
  std::string label;
};

LoadedInput load_input(const std::string& gen, const std::string& in_path) {
  if (!gen.empty() && !in_path.empty())
    raise(Errc::INVALID_PARAMS, "--gen and --in are mutually exclusive");
  if (gen.empty() && in_path.empty())
    raise(Errc::INVALID_PARAMS, "one of --gen or --in is required");
  LoadedInput input;
  if (!gen.empty()) {
    const GallerySpec spec = parse_gallery(gen);
    input.matrix = generate(spec);
    input.label = spec.label;
  } else {
    MatrixInput mi = read_matrix_json(read_file(in_path));
    input.matrix = std::move(mi.matrix);
    input.label = mi.label.empty() ? in_path : mi.label;
  }
  return input;
}

Json input_json(const LoadedInput& input) {
  Json out;
  out["n"] = input.matrix.n();
  out["digest"] = matrix_digest(input.matrix);
  out["label"] = input.label;
  return out;
}

// Variation counts of the Hankel-minor sequence: at z0 the full sequence
// 1, S_1(z0), ..., S_2n(z0); at zero only through S_n (the tail vanishes
// identically there). Their difference bounds the zero count on [0, z0].
Json localize_json(const Matrix& a, const Rat& z0) {
  const size_t n = a.n();
  const std::vector<UniPoly> minors = hankel_minors(a, 2 * n);
  std::vector<Rat> at_z0{Rat(1)}, at_zero{Rat(1)};
  for (size_t k = 0; k < minors.size(); ++k) {
    at_z0.push_back(eval(minors[k], z0));
    if (k < n) at_zero.push_back(eval(minors[k], Rat(0)));
  }
  const size_t v1 = variation_count(at_z0);
  const size_t v0 = variation_count(at_zero);
  Json out;
  out["kind"] = "localization";
  out["z0"] = rat_str(z0);
  out["variations_at_z0"] = v1;
  out["variations_at_zero"] = v0;
  out["zero_count_lower_bound"] = v1 > v0 ? v1 - v0 : v0 - v1;
  return out;
}

Json equation_only_json(const Matrix& a) {
  Json out;
  out["kind"] = "equations";
  out["equation"] = equation_json(distance_equation(a));
  out["complex_equation"] = a.n() >= 3 ? equation_json(complex_equation(a)) : Json(nullptr);
  return out;
}

std::string human_summary(const DistanceReport& rep) {
  std::ostringstream os;
  os << "status " << distance_status_name(rep.status);
  if (rep.has_candidate) os << ", d = " << sci_str(rep.d, 12);
  if (rep.has_lambda) os << ", lambda = " << sci_str(rep.lambda_star, 12);
  return os.str();
}

std::string human_summary(const ComplexReport& rep) {
  std::ostringstream os;
  os << "winner " << complex_winner_name(rep.winner) << ", d = " << sci_str(rep.d, 12);
  if (rep.has_complex_candidate)
    os << " (complex candidate " << sci_str(rep.d_complex, 12) << " at a = "
       << sci_str(rep.a0, 12) << ", b = " << sci_str(rep.b0, 12) << ")";
  return os.str();
}

struct BatchRow {
  std::string spec;
  Json row;
};

Json run_batch_row(const std::string& spec_text, const std::string& mode, unsigned digits) {
  Json row;
  row["spec"] = spec_text;
  const auto start = Clock::now();
  try {
    const GallerySpec spec = parse_gallery(spec_text);
    const Matrix a = generate(spec);
    row["n"] = a.n();
    if (mode == "complex" || mode == "both") {
      const ComplexReport rep = complex_distance(a, digits);
      row["status"] = distance_status_name(rep.real_branch.status);
      row["winner"] = complex_winner_name(rep.winner);
      row["d"] = sci_str(rep.d, digits);
      size_t zeros = 0;
      for (const auto& z : rep.real_branch.inventory) zeros += z.multiplicity;
      row["real_zeros"] = zeros;
      row["max_coefficient_length"] = [&] {
        size_t len = 0;
        for (const auto& c : clear_denominators(rep.real_branch.equation.f.coeffs_low()).ints)
          len = std::max(len, decimal_length(c));
        return len;
      }();
    } else {
      const DistanceReport rep = wilkinson_distance(a, digits, /*want_perturbation=*/false);
      row["status"] = distance_status_name(rep.status);
      if (rep.has_candidate) row["d"] = sci_str(rep.d, digits);
      size_t zeros = 0;
      for (const auto& z : rep.inventory) zeros += z.multiplicity;
      row["real_zeros"] = zeros;
      size_t len = 0;
      for (const auto& c : clear_denominators(rep.equation.f.coeffs_low()).ints)
        len = std::max(len, decimal_length(c));
      row["max_coefficient_length"] = len;
    }
  } catch (const Error& e) {
    row["error"] = e.what();
  } catch (const std::exception& e) {
    row["error"] = std::string("unexpected: ") + e.what();
  }
  row["timing_ms"] = ms_since(start);
  return row;
}

// Expand "frank:N" over --range, or split an explicit comma list.
std::vector<std::string> expand_batch(const std::string& tmpl, const std::string& range) {
  std::vector<std::string> specs;
  if (tmpl.find(',') != std::string::npos) {
    if (!range.empty())
      raise(Errc::INVALID_PARAMS, "--range does not apply to an explicit spec list");
    std::istringstream is(tmpl);
    std::string item;
    while (std::getline(is, item, ','))
      if (!item.empty()) specs.push_back(item);
    return specs;
  }
  const size_t pos = tmpl.find('N');
  if (pos == std::string::npos) {
    if (!range.empty())
      raise(Errc::INVALID_PARAMS, "--range needs an 'N' placeholder in the batch template");
    return {tmpl};
  }
  if (range.empty()) raise(Errc::INVALID_PARAMS, "an 'N' template needs --range lo..hi");
  const size_t dots = range.find("..");
  if (dots == std::string::npos) raise(Errc::INVALID_PARAMS, "--range must look like 3..12");
  long lo = 0, hi = 0;
  try {
    lo = std::stol(range.substr(0, dots));
    hi = std::stol(range.substr(dots + 2));
  } catch (const std::exception&) {
    raise(Errc::INVALID_PARAMS, "--range must look like 3..12");
  }
  if (lo < 1 || hi < lo) raise(Errc::INVALID_PARAMS, "--range bounds out of order");
  for (long k = lo; k <= hi; ++k) {
    std::string spec = tmpl;
    spec.replace(pos, 1, std::to_string(k));
    specs.push_back(spec);
  }
  return specs;
}

int run_batch(const std::string& tmpl, const std::string& range, const std::string& mode,
              unsigned digits, unsigned jobs, const std::string& out_path) {
  const std::vector<std::string> specs = expand_batch(tmpl, range);
  std::vector<Json> rows(specs.size());
  std::atomic<size_t> next{0};
  const unsigned workers =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(specs.size())));
  auto worker = [&] {
    set_thread_precision(digits + 10);
    for (size_t k = next.fetch_add(1); k < specs.size(); k = next.fetch_add(1))
      rows[k] = run_batch_row(specs[k], mode, digits);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Json doc;
  doc["kind"] = "batch";
  doc["mode"] = mode;
  doc["digits"] = digits;
  doc["rows"] = rows;
  emit(doc.dump(2) + "\n", out_path);

  for (size_t k = 0; k < specs.size(); ++k) {
    const Json& r = rows[k];
    std::cerr << specs[k] << ": "
              << (r.contains("error") ? r["error"].get<std::string>()
                  : r.contains("d")   ? r["d"].get<std::string>()
                                      : std::string("no candidate"))
              << " [" << r["timing_ms"].dump() << " ms]\n";
  }
  return 0;
}

int dispatch(const std::string& gen, const std::string& in_path, const std::string& out_path,
             const std::string& mode, unsigned digits, const std::string& z0_text,
             bool want_verify) {
  const LoadedInput input = load_input(gen, in_path);
  const auto start = Clock::now();

  Json doc;
  doc["tool"] = "wdist";
  doc["mode"] = mode;
  doc["input"] = input_json(input);
  doc["digits"] = digits;

  if (mode == "localize") {
    if (z0_text.empty()) raise(Errc::INVALID_PARAMS, "--mode localize needs --z0");
    doc["result"] = localize_json(input.matrix, parse_rat(z0_text));
    std::cerr << "variation lower bound "
              << doc["result"]["zero_count_lower_bound"].dump() << " on [0, " << z0_text
              << "]\n";
  } else if (mode == "equation-only") {
    doc["result"] = equation_only_json(input.matrix);
    std::cerr << "equation degree " << doc["result"]["equation"]["degree"].dump() << "\n";
  } else if (mode == "real") {
    const DistanceReport rep = wilkinson_distance(input.matrix, digits);
    doc["result"] = report_json(rep);
    if (want_verify) doc["verification"] = verify_json(verify_report(input.matrix, rep));
    std::cerr << human_summary(rep) << "\n";
  } else if (mode == "complex" || mode == "both") {
    const ComplexReport rep = complex_distance(input.matrix, digits);
    if (mode == "both") {
      Json result;
      result["real"] = report_json(rep.real_branch);
      result["complex"] = report_json(rep);
      doc["result"] = result;
    } else {
      doc["result"] = report_json(rep);
    }
    if (want_verify)
      doc["verification"] = verify_json(verify_report(input.matrix, rep.real_branch));
    std::cerr << human_summary(rep) << "\n";
  } else {
    raise(Errc::INVALID_PARAMS, "unknown --mode '" + mode + "'");
  }

  doc["timing_ms"] = ms_since(start);
  emit(doc.dump(2) + "\n", out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance to the nearest matrix with a repeated eigenvalue"};

  std::string gen, in_path, out_path, z0_text, batch_tmpl, range;
  std::string mode = "real";
  unsigned digits = 40;
  int tol = 0;
  unsigned jobs = 1;
  bool want_verify = false;

  app.add_option("--gen", gen, "generate a test matrix: family:order[:params]");
  app.add_option("--in", in_path, "matrix JSON file");
  app.add_option("--out", out_path, "report path (default: stdout)");
  app.add_option("--mode", mode, "real | complex | both | localize | equation-only")
      ->check(CLI::IsMember({"real", "complex", "both", "localize", "equation-only"}));
  app.add_option("--digits", digits, "decimal digits for refinement and output (default 40)")
      ->check(CLI::Range(1u, 100000u));
  app.add_option("--tol", tol,
                 "enclosure width exponent: refine zeros to width <= 10^-tol "
                 "(default: --digits)");
  app.add_option("--z0", z0_text, "right endpoint for --mode localize (exact rational)");
  app.add_option("--batch", batch_tmpl,
                 "batch over specs: template with N (needs --range) or comma list");
  app.add_option("--range", range, "order range lo..hi for an N template");
  app.add_option("--jobs", jobs, "concurrent batch rows")->check(CLI::Range(1u, 256u));
  app.add_flag("--verify", want_verify, "append a recomputation self-check to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    set_thread_precision(digits + 10);
    if (tol > 0) digits = std::max(digits, static_cast<unsigned>(tol));
    if (!batch_tmpl.empty()) {
      if (!gen.empty() || !in_path.empty())
        raise(Errc::INVALID_PARAMS, "--batch excludes --gen/--in");
      return run_batch(batch_tmpl, range, mode, digits, jobs, out_path);
    }
    return dispatch(gen, in_path, out_path, mode, digits, z0_text, want_verify);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code() == Errc::PARSE_ERROR || e.code() == Errc::INVALID_PARAMS) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
