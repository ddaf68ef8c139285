#pragma once

#include <string>

#include "domino/betti.hpp"

namespace domino {

// {"n": .., "field": "Q", "indexing": "ideal", "entries": [{"i","j","value"}...]}
// entries sorted by (i, j); byte-deterministic for a fixed table
std::string table_to_json(const BettiTable& t, int n, int indent = 2);

struct ParsedTable {
    int n = 0;
    BettiTable table;
};

// inverse of table_to_json; throws std::invalid_argument on malformed input
ParsedTable table_from_json(const std::string& text);

// conventional Betti table layout: rows are j - i, columns are i
std::string table_to_text(const BettiTable& t);

std::string table_to_csv(const BettiTable& t);

// generators of I_n, its facet complex, Γ_n^c with link/deletion at y_{n-1},
// and the Betti tables of both methods, as one JSON document
std::string export_document(int n, FieldSpec f, int indent = 2);

}  // namespace domino
