#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "lrca/analysis.hpp"
#include "lrca/codes.hpp"

namespace lrca {

using AnyCode = std::variant<EvaluationCode, ParityCheckCode>;

// Text code files: line-oriented records, field elements in canonical tokens
// (integers for prime fields, dot-joined coefficients otherwise), so a
// reloaded code reproduces identical matrices.
void save_code(std::ostream& os, const EvaluationCode& code);
void save_code(std::ostream& os, const ParityCheckCode& code);
void save_code_file(const std::string& path, const AnyCode& code);

AnyCode load_code(std::istream& is);
AnyCode load_code_file(const std::string& path);

// "field <p> <m> <c0> ... <cm>"
void save_field_record(std::ostream& os, const FiniteField& field);
FieldPtr parse_field_record(const std::string& line);

} // namespace lrca
