#ifndef FREEFIELD_IDENTITIES_HPP
#define FREEFIELD_IDENTITIES_HPP

#include <string>
#include <vector>

#include "freefield/expr.hpp"

namespace freefield {

/// Rectangular grid of field expressions.
using ExprMatrix = std::vector<std::vector<ExprPtr>>;

/// The (i, j)-quasideterminant (0-based indices):
///   |A|_ij = A_ij − A_{i, cols∖j} · (A^{i,j})^{-1} · A_{rows∖i, j},
/// with the inner inverse expanded through quasideterminant inversion for
/// sizes up to 2 (so A may be at most 3x3 in this version).  Inverse nodes
/// are left in place for the pipeline to eliminate.
ExprPtr quasideterminant(const ExprMatrix& a, std::size_t i, std::size_t j);

/// Quasi-Plücker coordinate of an n x m matrix (n < m), 0-based:
///   p^K_ij = (|A_{[n], {i}∪K}|_{r,i})^{-1} · |A_{[n], {j}∪K}|_{r,j},
/// where the quasideterminant positions are taken at row r and the column
/// of i (resp. j) inside the selected submatrix.  |K| = n-1, i ∉ K.
ExprPtr quasi_plucker(const ExprMatrix& a, std::size_t i, std::size_t j,
                      const std::vector<std::size_t>& k_cols, std::size_t r);

struct CorpusItem {
    std::string name;
    Alphabet alphabet;
    ExprPtr expr; // expected to zero-test through the pipeline
};

/// The fixed expected-zero corpus: the 3-variable rational identity in
/// inverse and star form, the one-variable word-problem example, the
/// geometric-series folding identity, and generated quasi-Plücker
/// skew-symmetry instances over a 2x3 matrix of distinct generators.
std::vector<CorpusItem> identity_corpus();

} // namespace freefield

#endif
