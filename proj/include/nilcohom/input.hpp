#pragma once

#include <string>
#include <vector>

#include "nilcohom/complex_structure.hpp"
#include "nilcohom/form.hpp"
#include "nilcohom/lie_algebra.hpp"

namespace nilcohom {

struct BracketEntry {
    int x = 0, y = 0;                          // 1-based, x < y
    std::vector<std::pair<int, std::string>> value;  // k -> scalar string
};

struct CoframeTerm {
    std::string coeff;     // scalar grammar
    std::string monomial;  // w/W notation, degree 2
};

enum class CsKind { Endomorphism, Coframe };

/// Parsed input file, still in wire form (scalars as strings). Scalars are
/// never native JSON numbers: exactness survives the file format.
struct InputDocument {
    std::string name;
    int dim = 0;
    std::vector<BracketEntry> brackets;
    CsKind cs_kind = CsKind::Endomorphism;
    std::vector<std::vector<std::string>> matrix;       // endomorphism rows
    std::vector<std::vector<CoframeTerm>> equations;    // d omega^a per generator
};

/// Reads and validates a JSON input document. Errors carry the offending
/// field path (ValidationError) or byte position (ParseError).
InputDocument load_document(const std::string& path);
InputDocument parse_document(const std::string& json_text, const std::string& origin);

/// Serializes back to the wire format (used by the catalog emitter).
std::string document_to_json(const InputDocument& doc);

struct Model {
    std::string name;
    LieAlgebra g;
    ComplexStructure cs;
};

/// Turns a document into a validated model. Coframe inputs are converted to
/// (brackets, J) first, and the re-derived coframe equations are checked
/// against the input exactly. Jacobi and nilpotency are enforced here; a
/// non-integrable endomorphism input is accepted (integrability is a
/// property the check command reports, and Dolbeault operations reject).
Model build_model(const InputDocument& doc);

/// Parses `w12`, `w1W2`, `W12` (optional `^` separators) into a multi-index
/// over the bigraded generators; indices must be strictly increasing within
/// each bar-kind. Throws ParseError.
Mono parse_mono(const std::string& text, int m);

}  // namespace nilcohom
