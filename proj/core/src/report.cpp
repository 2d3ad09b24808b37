#include "wdist/report.hpp"

#include <sstream>

#include "wdist/digest.hpp"
#include "wdist/errors.hpp"

namespace wdist {
namespace {

Rat entry_to_rat(const Json& e) {
  if (e.is_string()) return parse_rat(e.get<std::string>());
  if (e.is_number_integer() || e.is_number_unsigned())
    return parse_rat(e.dump());  // decimal digits of the integer
  if (e.is_number_float())
    raise(Errc::PARSE_ERROR, "binary float entries are not exact; pass decimals as strings");
  raise(Errc::PARSE_ERROR, "matrix entries must be rational strings or integers");
}

Json coeff_block(const std::vector<Rat>& low_to_high) {
  const ClearedCoeffs cleared = clear_denominators(low_to_high);
  Json coeffs = Json::array();
  for (auto it = cleared.ints.rbegin(); it != cleared.ints.rend(); ++it)
    coeffs.push_back(it->get_str());
  Json out;
  out["degree"] = static_cast<long>(low_to_high.size()) - 1;
  out["denominator"] = cleared.den.get_str();
  out["coefficients"] = coeffs;
  out["digest"] = coeff_digest(low_to_high);
  return out;
}

Json real_str(const Real& x, unsigned digits) { return Json(sci_str(x, digits)); }

Json cplx_pair(const Cplx& x, unsigned digits) {
  return Json::array({sci_str(x.re, digits), sci_str(x.im, digits)});
}

}  // namespace

MatrixInput read_matrix_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    raise(Errc::PARSE_ERROR, std::string("matrix document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    raise(Errc::PARSE_ERROR, "matrix document needs an \"entries\" array of rows");
  const Json& rows = doc["entries"];
  const size_t n = rows.size();
  if (n == 0) raise(Errc::PARSE_ERROR, "matrix document has no rows");
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() && !doc["n"].is_number_unsigned())
      raise(Errc::PARSE_ERROR, "\"n\" must be an integer");
    if (doc["n"].get<long long>() != static_cast<long long>(n))
      raise(Errc::PARSE_ERROR, "\"n\" disagrees with the number of rows");
  }
  MatrixInput input;
  input.matrix = Matrix(n);
  for (size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      raise(Errc::PARSE_ERROR, "matrix rows must all have length n");
    for (size_t j = 0; j < n; ++j) input.matrix.at(i, j) = entry_to_rat(rows[i][j]);
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) raise(Errc::PARSE_ERROR, "\"label\" must be a string");
    input.label = doc["label"].get<std::string>();
  }
  return input;
}

std::string write_matrix_json(const Matrix& m, const std::string& label) {
  Json doc;
  doc["n"] = m.n();
  Json rows = Json::array();
  for (size_t i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.n(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(row);
  }
  doc["entries"] = rows;
  if (!label.empty()) doc["label"] = label;
  return doc.dump(2) + "\n";
}

std::string matrix_digest(const Matrix& m) {
  std::ostringstream os;
  os << "matrix:" << m.n() << ";";
  for (size_t i = 0; i < m.n(); ++i)
    for (size_t j = 0; j < m.n(); ++j)
      os << rat_str(m.at(i, j)) << (j + 1 == m.n() ? ";" : ",");
  return sha256_hex(os.str());
}

Json equation_json(const DistanceEquation& eq) {
  Json out = coeff_block(eq.f.coeffs_low());
  out["construction"] = eq.mode == DistanceEquation::Mode::SQRT_PHI ? "repeated-factor-deflation"
                                                                    : "discriminant";
  out["leading_check"] = eq.leading_check;
  return out;
}

Json equation_json(const ComplexDistanceEquation& eq) {
  Json out = coeff_block(eq.f_tilde.coeffs_low());
  out["stripped_power"] = eq.stripped_power;
  return out;
}

Json zero_json(const ZeroRecord& z, unsigned digits) {
  Json out;
  out["interval"] = Json::array({rat_str(z.lo), rat_str(z.hi)});
  out["exact"] = z.exact;
  out["multiplicity"] = z.multiplicity;
  out["value"] = real_str(z.value, digits);
  out["fate"] = zero_fate_name(z.fate);
  out["note"] = z.note;
  return out;
}

Json zero_json(const ComplexZeroRecord& z, unsigned digits) {
  Json out;
  out["interval"] = Json::array({rat_str(z.lo), rat_str(z.hi)});
  out["exact"] = z.exact;
  out["multiplicity"] = z.multiplicity;
  out["value"] = real_str(z.value, digits);
  out["fate"] = complex_fate_name(z.fate);
  out["note"] = z.note;
  return out;
}

Json matrix_json(const RealMat& m, unsigned digits) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(sci_str(x, digits));
    rows.push_back(r);
  }
  return rows;
}

Json matrix_json(const CplxMat& m, unsigned digits) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(cplx_pair(x, digits));
    rows.push_back(r);
  }
  return rows;
}

Json report_json(const DistanceReport& rep) {
  const unsigned digits = rep.digits;
  Json out;
  out["kind"] = "real_distance";
  out["n"] = rep.n;
  out["digits"] = digits;
  out["status"] = distance_status_name(rep.status);
  out["square_free_equation"] = rep.discriminant_guard;
  out["equation"] = equation_json(rep.equation);
  Json zeros = Json::array();
  for (const auto& z : rep.inventory) zeros.push_back(zero_json(z, digits));
  out["zeros"] = zeros;
  if (rep.has_candidate) {
    Json cand;
    cand["z_enclosure"] = Json::array({rat_str(rep.z_lo), rat_str(rep.z_hi)});
    cand["z"] = real_str(rep.z_star, digits);
    cand["d"] = real_str(rep.d, digits);
    out["candidate"] = cand;
  } else {
    out["candidate"] = nullptr;
  }
  out["lambda"] = rep.has_lambda ? real_str(rep.lambda_star, digits) : Json(nullptr);
  if (rep.has_perturbation) {
    Json pert;
    pert["sigma"] = real_str(rep.sigma, digits);
    pert["e"] = matrix_json(rep.e_star, digits);
    pert["b"] = matrix_json(rep.b_star, digits);
    out["perturbation"] = pert;
  } else if (!rep.perturbation_note.empty()) {
    out["perturbation"] = Json{{"withheld", rep.perturbation_note}};
  } else {
    out["perturbation"] = nullptr;
  }
  out["notes"] = rep.notes;
  return out;
}

Json report_json(const ComplexReport& rep) {
  const unsigned digits = rep.digits;
  Json out;
  out["kind"] = "complex_distance";
  out["n"] = rep.n;
  out["digits"] = digits;
  out["real_branch"] = report_json(rep.real_branch);
  out["equation"] = rep.equation.f_tilde.is_zero() ? Json(nullptr) : equation_json(rep.equation);
  Json zeros = Json::array();
  for (const auto& z : rep.inventory) zeros.push_back(zero_json(z, digits));
  out["zeros"] = zeros;
  if (rep.has_complex_candidate) {
    Json cand;
    cand["z_enclosure"] = Json::array({rat_str(rep.zt_lo), rat_str(rep.zt_hi)});
    cand["z_tilde"] = real_str(rep.z_tilde, digits);
    cand["a"] = real_str(rep.a0, digits);
    cand["b"] = real_str(rep.b0, digits);
    cand["d_complex"] = real_str(rep.d_complex, digits);
    out["candidate"] = cand;
  } else {
    out["candidate"] = nullptr;
  }
  if (rep.has_perturbation) {
    Json pert;
    pert["sigma"] = real_str(rep.sigma, digits);
    pert["e"] = matrix_json(rep.e0, digits);
    pert["b"] = matrix_json(rep.b0_matrix, digits);
    out["perturbation"] = pert;
  } else if (!rep.perturbation_note.empty()) {
    out["perturbation"] = Json{{"withheld", rep.perturbation_note}};
  } else {
    out["perturbation"] = nullptr;
  }
  out["d"] = real_str(rep.d, digits);
  out["winner"] = complex_winner_name(rep.winner);
  out["notes"] = rep.notes;
  return out;
}

Json verify_json(const VerifyReport& rep) {
  Json out;
  out["pass"] = rep.pass;
  out["skipped"] = rep.skipped;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["value"] = sci_str(c.value, 6);
    e["tol"] = sci_str(c.tol, 6);
    e["pass"] = c.pass;
    checks.push_back(e);
  }
  out["checks"] = checks;
  return out;
}

}  // namespace wdist
