#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "syzygy/garc.hpp"

namespace syzygy {

using Json = nlohmann::json;

// Scalars serialize as strings ("a/b" reduced with positive denominator
// over Q, decimal residues over F_p); matrices as row-major arrays of
// arrays of scalar strings. Degenerate shapes (zero rows or columns) are
// reconstructed from context on load, so every differential keeps the
// shape demanded by its neighboring terms.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldSpec& f, int rows, int cols);

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

// {"field", "dim", "labels", "unit", "structure_constants": [[i,j,k,"v"]...],
//  "idempotents", "radical_basis", "generators"} — omitted tensor entries
// are zero; omitted idempotents default to the unit (the local case).
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

// {"algebra": inline object or file path (or omitted when the surrounding
//  document provides one), "dim", "action": [matrix, ...]}
Json module_to_json(const Module& m, bool inline_algebra = true);
Module module_from_json(const Json& j, const Algebra* context,
                        const std::filesystem::path& base_dir);

// {"algebra", "low", "high", "terms": [module, ...], "differentials": [...]}
Json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j,
                               const std::filesystem::path& base_dir);

Json resolution_to_json(const Resolution& r);
Json orth_report_to_json(const OrthReport& r);
Json pd_certificate_to_json(const PdCertificate& c);
Json omega_result_to_json(const OmegaResult& r);
Json perfect_report_to_json(const PerfectReport& r);
Json garc_report_to_json(const GarcReport& r);
Json schulz_report_to_json(const SchulzScanReport& r);

// File helpers. Loaders validate what they load and throw Error with a
// description on malformed content; read_json wraps parse failures the
// same way.
Json read_json(const std::filesystem::path& p);
void write_json(const std::filesystem::path& p, const Json& j);
Algebra load_algebra(const std::filesystem::path& p);
Module load_module(const std::filesystem::path& p,
                   const Algebra* context = nullptr);
ChainComplex load_complex(const std::filesystem::path& p);

}  // namespace syzygy
