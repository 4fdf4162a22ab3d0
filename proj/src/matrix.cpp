#include "freefield/matrix.hpp"

#include "freefield/errors.hpp"

namespace freefield {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    for (const Rational& x : data_)
        if (x != 0) return false;
    return true;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_) throw DomainError("matrix product dimension mismatch");
    QMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& b = other.at(k, j);
                if (b == 0) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DomainError("matrix sum dimension mismatch");
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DomainError("matrix difference dimension mismatch");
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

QMatrix QMatrix::transposed() const {
    QMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

QMatrix QMatrix::kronecker(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& s = a.at(i, j);
            if (s == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Rational& t = b.at(k, l);
                    if (t == 0) continue;
                    out.at(i * b.rows() + k, j * b.cols() + l) = s * t;
                }
        }
    return out;
}

QVector row_times_matrix(const QVector& v, const QMatrix& m) {
    if (v.size() != m.rows()) throw DomainError("row-vector product dimension mismatch");
    QVector out(m.cols(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& b = m.at(i, j);
            if (b == 0) continue;
            out[j] += v[i] * b;
        }
    }
    return out;
}

QVector matrix_times_col(const QMatrix& m, const QVector& v) {
    if (v.size() != m.cols()) throw DomainError("column-vector product dimension mismatch");
    QVector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            const Rational& a = m.at(i, j);
            if (a == 0) continue;
            out[i] += a * v[j];
        }
    return out;
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw DomainError("dot product dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

bool is_zero_vector(const QVector& v) {
    for (const Rational& x : v)
        if (x != 0) return false;
    return true;
}

std::size_t rank(QMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Rational inv = 1 / m.at(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

bool RowSpace::insert(QVector v) {
    if (v.size() != width_) throw DomainError("row space width mismatch");
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < width_ && v[p] == 0) ++p;
    if (p == width_) return false;
    Rational inv = 1 / v[p];
    for (Rational& x : v) x *= inv;
    // Back-eliminate the new pivot from existing rows to stay in RREF.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational f = rows_[i][p];
        if (f == 0) continue;
        for (std::size_t j = 0; j < width_; ++j) rows_[i][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

QVector RowSpace::reduce(QVector v) const {
    if (v.size() != width_) throw DomainError("row space width mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational f = v[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < width_; ++j) v[j] -= f * rows_[i][j];
    }
    return v;
}

std::optional<QVector> RowSpace::coordinates(const QVector& v) const {
    if (v.size() != width_) throw DomainError("row space width mismatch");
    QVector coeffs(rows_.size(), Rational(0));
    QVector residual = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational f = residual[pivots_[i]];
        if (f == 0) continue;
        coeffs[i] = f;
        for (std::size_t j = 0; j < width_; ++j) residual[j] -= f * rows_[i][j];
    }
    if (!is_zero_vector(residual)) return std::nullopt;
    return coeffs;
}

} // namespace freefield
