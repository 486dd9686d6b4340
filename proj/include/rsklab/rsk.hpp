#pragma once

#include "rsklab/matrix.hpp"
#include "rsklab/partition.hpp"
#include "rsklab/tableau.hpp"

namespace rsklab {

/// Insertion tableau P and recording tableau Q, always of equal shape.
struct TableauPair {
  Tableau p;
  Tableau q;
  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

struct InsertResult {
  Tableau tableau;
  Cell cell;
};

/// Pure form of Tableau::insert.
InsertResult row_insert(const Tableau& t, int x);

/// Inserts the bottom letters of the sorted biword into P, recording the
/// matching top letters in Q at each newly created cell.
TableauPair rsk_forward(const Biword& b);
TableauPair rsk_forward(const Matrix& m);

/// Inverse of rsk_forward for side-n matrices. Repeatedly removes the
/// largest Q entry (rightmost copy first, which is the last one recorded)
/// and reverse-bumps the matching P cell out of the first row.
///
/// Throws std::invalid_argument on shape mismatch, non-SSYT input or
/// entries outside [1, n].
Matrix rsk_inverse(const Tableau& p, const Tableau& q, int n);

/// Common RSK shape of the pair; the empty partition for the zero matrix.
Partition shape_of_matrix(const Matrix& m);

}  // namespace rsklab
