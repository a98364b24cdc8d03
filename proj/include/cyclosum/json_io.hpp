#pragma once

#include <string>

#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/residue_chars.hpp"
#include "json.hpp"

namespace cyclosum {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "cyclosum";
inline constexpr const char* kToolVersion = "1.0.0";

// {level, coeffs: [[num, den], ...], approx: [re, im]}. Numerators and
// denominators are decimal strings so arbitrary precision survives the trip;
// approx is advisory only.
ordered_json cyclotomic_to_json(const Cyclotomic& c);

// {modulus, generators: [[g, order], ...], exponents: [e_1, ...]}.
ordered_json char_to_json(const MultChar& chi);

// Top-level document envelope shared by every command.
ordered_json make_envelope(const std::string& command, ordered_json params);

// Compact exact rendering "level:[c0,c1,...]" with rationals as num or
// num/den; used in CSV cells and mismatch reports.
std::string to_exact_string(const Cyclotomic& c);

// RFC-4180 field quoting: wrap in double quotes when the field contains a
// comma, quote, or newline; double any embedded quotes.
std::string csv_field(const std::string& s);

}  // namespace cyclosum
