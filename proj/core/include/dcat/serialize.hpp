#ifndef DCAT_SERIALIZE_HPP
#define DCAT_SERIALIZE_HPP

#include <string>
#include <variant>

#include "dcat/category.hpp"
#include "dcat/diagnostics.hpp"
#include "dcat/double_category.hpp"
#include "dcat/double_module.hpp"
#include "dcat/square.hpp"

namespace dcat {

// JSON serialization with a top-level "kind" discriminator ("category",
// "double_module", "grid"). Output is canonical: keys sorted, arrays in id
// order, two-space indentation, trailing newline; saving a loaded file
// reproduces it byte for byte. See docs/file-format.md.

using Structure = std::variant<FiniteCategory, DoubleModule, SquareGrid>;

// Loading checks referential soundness (every id mentioned exists, table
// keys are possible) and throws ParseError / ReferenceError; it does not run
// the validators.
Structure parse_structure(const std::string& text, const std::string& origin);
Structure load_structure(const std::string& path);

std::string save_category(const FiniteCategory& cat);
std::string save_double_module(const DoubleModule& dm);
std::string save_grid(const SquareGrid& grid);
std::string save_structure(const Structure& s);

std::string save_crossed_module(const CrossedModule& cm,
                                const DiagnosticReport& report);

// Report rendering. The JSON schema is stable: {status, checks:[{name,
// status, instances, violations, sampling?, witnesses:[{bindings, detail}]}]}.
std::string render_report_text(const DiagnosticReport& report);
std::string render_report_json(const DiagnosticReport& report);

std::string render_square_json(const Square& q);

}  // namespace dcat

#endif  // DCAT_SERIALIZE_HPP
