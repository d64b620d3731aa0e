#pragma once

#include <string>
#include <utility>

#include "sri/checks.hpp"
#include "sri/semimodule.hpp"
#include "sri/semiring.hpp"

namespace sri {

// Semiring files:
//   {"name": str?, "size": n, "elements": [str]?,
//    "add": [[int]], "mul": [[int]], "zero": int, "one": int}
// add[i][j] is the index of i+j, row-major. Emitted JSON is canonical
// (zero = 0, one = 1) and reparses to identical tables.

TableData semiring_table_from_json(const std::string& text);
std::string semiring_to_json(const Semiring& S, int indent = 2);

SemiringPtr load_semiring_file(const std::string& path,
                               int size_cap = default_size_cap);

/// Accepts "gallery:<name>" or a filesystem path (relative ones resolved
/// against base_dir when nonempty).
SemiringPtr resolve_semiring_ref(const std::string& ref,
                                 const std::string& base_dir,
                                 int size_cap = default_size_cap);

// Module files:
//   {"name": str?, "ring": <semiring ref>, "size": k,
//    "add": [[int]], "zero": int, "action": [[int]]}
// The ring reference resolves relative to the module file's directory.
SemimodulePtr load_module_file(const std::string& path,
                               int size_cap = default_size_cap);

std::string report_to_json(const CheckReport& report, int indent = 2);

} // namespace sri
