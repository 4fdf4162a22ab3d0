#ifndef FREEFIELD_MATRIX_HPP
#define FREEFIELD_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "freefield/rational.hpp"

namespace freefield {

using QVector = std::vector<Rational>;

/// Dense matrix of exact rationals.  Desk-scale dimensions; correctness
/// over sparsity.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;

    QMatrix operator*(const QMatrix& other) const;
    QMatrix operator+(const QMatrix& other) const;
    QMatrix operator-(const QMatrix& other) const;
    QMatrix scaled(const Rational& c) const;
    QMatrix transposed() const;

    /// Kronecker product; used by the Hadamard construction.
    static QMatrix kronecker(const QMatrix& a, const QMatrix& b);

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    QVector data_;
};

QVector row_times_matrix(const QVector& v, const QMatrix& m);
QVector matrix_times_col(const QMatrix& m, const QVector& v);
Rational dot(const QVector& a, const QVector& b);
bool is_zero_vector(const QVector& v);

/// Exact rank by Gaussian elimination.
std::size_t rank(QMatrix m);

/// Incremental row space kept in reduced row echelon form.  Pivot choice
/// is first-found (leftmost nonzero), pivots normalized to 1, so output
/// bases are deterministic.
class RowSpace {
public:
    explicit RowSpace(std::size_t width) : width_(width) {}

    /// Adds v to the space.  Returns true iff the dimension grew.
    bool insert(QVector v);

    /// Residual of v after elimination against the basis.
    QVector reduce(QVector v) const;

    bool contains(const QVector& v) const { return is_zero_vector(reduce(v)); }

    /// Coefficients c with v = sum c_i * row(i), if v lies in the space.
    std::optional<QVector> coordinates(const QVector& v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const QVector& row(std::size_t i) const { return rows_[i]; }

private:
    std::size_t width_;
    std::vector<QVector> rows_;       // insertion order
    std::vector<std::size_t> pivots_; // pivot column of rows_[i]
};

} // namespace freefield

#endif
