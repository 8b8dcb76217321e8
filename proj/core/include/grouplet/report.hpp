#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouplet/exact_matrix.hpp"
#include "grouplet/group_ring.hpp"
#include "grouplet/maschke.hpp"

namespace grouplet {

/// Matrix file format shared by the embed/extract subcommands: a JSON
/// array of rows, each row an array of field-element strings.
std::string matrix_to_json_text(const ExactMatrix& m);
ExactMatrix matrix_from_json_text(const std::string& text, const FieldSpec& spec);
ExactMatrix read_matrix_file(const std::string& path, const FieldSpec& spec);

/// Human-readable aligned rows.
std::string matrix_to_text(const ExactMatrix& m);

/// Verdict reports. The JSON layout is stable and byte-deterministic:
/// { "group", "field", "order", "characteristic", "outcome",
///   "radical_dimension" (int or {"at_least": d}), "certificate" {...} }.
std::string verdict_to_json_text(const MaschkeVerdict& v);
std::string verdict_to_text(const MaschkeVerdict& v);

/// Re-parses an emitted verdict report and re-verifies its certificate
/// from scratch against the given group: outcomes, determinants, witness
/// nilpotency, dimensions. Throws ValidationError on malformed input and
/// CertificateViolation on any mismatch.
void recheck_verdict_json_text(const std::string& text, const FiniteGroup& group);

/// Radical basis reports for the `radical` subcommand. `exact` says the
/// basis spans the whole radical (gram kernel and oracle methods) rather
/// than a lower bound (witness ideal).
std::string radical_report_json_text(const RadicalBasis& basis,
                                     const std::vector<int>& nilpotency_indices, bool exact);
std::string radical_report_text(const RadicalBasis& basis,
                                const std::vector<int>& nilpotency_indices, bool exact);

/// Element report for the `extract` subcommand.
std::string element_to_json_text(const GroupRingElement& x);
/// Comma-separated coefficient literal, re-parseable by the CLI.
std::string element_coeff_literal(const GroupRingElement& x);

/// Sweep reports over a list of verdict cells.
std::string sweep_to_json_text(const std::vector<MaschkeVerdict>& cells, std::uint64_t seed);
std::string sweep_to_text(const std::vector<MaschkeVerdict>& cells);

}  // namespace grouplet
