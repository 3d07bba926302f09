#pragma once

// Small dense exact linear algebra over a number field: determinants, ranks
// and reduced row echelon forms of the tiny matrices this library works with
// (at most 6x5). Gaussian elimination with exact division throughout.

#include <vector>

#include "gpd/field.hpp"

namespace gpd::linalg {

using Row = std::vector<FieldElement>;
using Matrix = std::vector<Row>;

// Determinant of a square matrix by Gaussian elimination.
FieldElement determinant(Matrix m);

// Rank of an arbitrary rectangular matrix.
int rank(Matrix m);

// In-place reduced row echelon form; returns the rank. Zero rows sink to the
// bottom; pivots are normalized to 1 with zeros above and below.
int rref(Matrix& m);

}  // namespace gpd::linalg
