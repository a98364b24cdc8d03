#include "cyclosum/json_io.hpp"

#include <complex>

namespace cyclosum {

namespace {

std::string rat_to_compact(const BigRat& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

// Printed form: a value that is in fact rational collapses to level 1, so the
// encoding of a result does not depend on which method computed it.
Cyclotomic print_form(const Cyclotomic& c) {
  if (c.level() == 1) return c;
  if (const auto q = as_rational(c)) return Cyclotomic(*q);
  return c;
}

}  // namespace

ordered_json cyclotomic_to_json(const Cyclotomic& value) {
  const Cyclotomic c = print_form(value);
  ordered_json coeffs = ordered_json::array();
  for (const BigRat& q : c.coeffs())
    coeffs.push_back(ordered_json::array({numerator(q).str(), denominator(q).str()}));
  const std::complex<double> z = to_complex(c);
  return ordered_json{{"level", c.level()},
                      {"coeffs", std::move(coeffs)},
                      {"approx", ordered_json::array({z.real(), z.imag()})}};
}

ordered_json char_to_json(const MultChar& chi) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : unit_group_structure(chi.modulus()).gens)
    gens.push_back(ordered_json::array({g.gen, g.order}));
  return ordered_json{{"modulus", chi.modulus()},
                      {"generators", std::move(gens)},
                      {"exponents", chi.exponents()}};
}

ordered_json make_envelope(const std::string& command, ordered_json params) {
  return ordered_json{{"tool", kToolName},
                      {"version", kToolVersion},
                      {"command", command},
                      {"params", std::move(params)}};
}

std::string to_exact_string(const Cyclotomic& value) {
  const Cyclotomic c = print_form(value);
  std::string s = std::to_string(c.level()) + ":[";
  bool first = true;
  for (const BigRat& q : c.coeffs()) {
    if (!first) s += ",";
    first = false;
    s += rat_to_compact(q);
  }
  return s + "]";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  return out + "\"";
}

}  // namespace cyclosum
