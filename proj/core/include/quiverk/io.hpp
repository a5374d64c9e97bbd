#pragma once

#include <string>
#include <vector>

#include "quiverk/cohomology.hpp"

namespace quiverk {

// ---- input --------------------------------------------------------------
// Malformed documents throw ParseError; well-formed documents describing
// invalid mathematics (non-roots, negative ranks, bad indices) throw
// DomainError.

// {"vertices": N, "arrows": [[tail, head], ...]} with 1-based vertex labels.
Quiver parse_quiver_json(const std::string& text);

// Either the JSON form {"m": [{"root": [d_1..d_N], "mult": k}, ...]} or the
// inline form "d_1,..,d_N:k; d_1,..,d_N:k; ..." (whitespace ignored).
// Each root is validated against the positive roots of q.
OrbitVector parse_orbit(const std::string& text, const Quiver& q);

// {"i": [...], "r": [...]} with 1-based vertices; zero-rank steps are
// dropped, negative ranks rejected.
ResolutionPair parse_resolution_json(const std::string& text);

// ---- canonical text forms -----------------------------------------------

std::string roots_text(const std::vector<DimVector>& roots);
std::string partition_parts_text(const RootPartition& parts);
std::string resolution_text(const ResolutionPair& rp);
// Delegates to the canonical term order of LaurentPoly.
std::string poly_text(const LaurentPoly& p);

// ---- JSON renderers -----------------------------------------------------
// Every document is a single-line object with a top-level "schema": 1 and
// one payload field per command; rationals render as "p" or "p/q"; term and
// entry orders are the canonical ones, so output is byte-identical across
// runs.

std::string roots_json(const std::vector<DimVector>& roots);
std::string resolve_json(const RootPartition& parts, const ResolutionPair& rp);
// {"schema":1, "<key>": {"terms": [{"c": "p/q", "m": [["var", e], ...]}, ...]}}
std::string poly_json(const std::string& key, const LaurentPoly& p);
std::string table_json(const QuiverCoefficientTable& t);
std::string coh_json(const ChernPoly& root_form, const LaurentPoly& class_form, int degree);
std::string gpoly_json(const IntegerSequence& lambda, int rank_n, int rank_p,
                       const LaurentPoly& g);

}  // namespace quiverk
