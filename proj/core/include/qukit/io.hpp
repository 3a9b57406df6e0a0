#pragma once

// JSON file formats and report serialization.
//
// State file:      { "n_sites": N, "local_dim": K, "amps": [[re, im], ...] }
//                  amps in basis_index order, length exactly K^N.
// Compressed file: { "n_sites": N, "local_dim": K,
//                    "convention": "unnormalized",
//                    "coeffs": [ { "occ": [n_1,...,n_K], "c": [re, im] }, ... ] }
//                  entries in canonical occupation order.
//
// Readers throw FileFormatError on any schema violation.

#include <filesystem>
#include <string>

#include "qukit/entanglement.hpp"
#include "qukit/symmetric_subspace.hpp"
#include "qukit/tensor_core.hpp"

namespace qukit {

void write_state_file(const std::filesystem::path& path, const StateVector& psi);
StateVector read_state_file(const std::filesystem::path& path);

void write_compressed_file(const std::filesystem::path& path,
                           const SymStateCompressed& sym);
SymStateCompressed read_compressed_file(const std::filesystem::path& path);

/// True if the JSON at path carries full amplitudes ("amps"), false if it is
/// a compressed file ("coeffs").
bool is_full_state_file(const std::filesystem::path& path);

/// Classification report:
/// { "verdict": "product"|"entangled", "defect": d, "factors": [...] | null,
///   "tolerance": t }.
std::string serialize_classification(const Classification& cls, double tol);

/// Same schema for the symmetric classifier; a Coherent verdict serializes
/// as "product" with the chart and tau attached as extra fields.
std::string serialize_sym_classification(const SymClassification& cls, double tol);

/// Parses "a", "bi", "a+bi", "a-bi" (also with e-notation exponents).
cdouble parse_complex(const std::string& text);

/// Comma-separated list of parse_complex entries.
std::vector<cdouble> parse_complex_list(const std::string& text);

/// Comma-separated occupation counts, e.g. "1,2,0".
Occupation parse_occupation(const std::string& text);

} // namespace qukit
