#include <doctest.h>

#include <random>

#include "freefield/matrix.hpp"

using namespace freefield;

namespace {

QMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    QMatrix m(rows.size(), rows.at(0).size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("matrix product and kronecker") {
    QMatrix a = from_rows({{1, 2}, {0, 1}});
    QMatrix b = from_rows({{0, 1}, {1, 0}});
    QMatrix ab = a * b;
    CHECK(ab.at(0, 0) == 2);
    CHECK(ab.at(0, 1) == 1);
    CHECK(ab.at(1, 0) == 1);
    CHECK(ab.at(1, 1) == 0);

    QMatrix k = QMatrix::kronecker(a, b);
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 1) == 1); // a00 * b01
    CHECK(k.at(0, 3) == 2); // a01 * b01
}

TEST_CASE("rank") {
    CHECK(rank(QMatrix::identity(3)) == 3);
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(QMatrix(2, 2)) == 0);
    CHECK(rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("row space inserts and coordinates") {
    RowSpace s(3);
    CHECK(s.insert({Rational(1), Rational(2), Rational(0)}));
    CHECK(s.insert({Rational(0), Rational(0), Rational(5)}));
    CHECK_FALSE(s.insert({Rational(2), Rational(4), Rational(5)}));
    CHECK(s.dim() == 2);
    auto coords = s.coordinates({Rational(3), Rational(6), Rational(-5)});
    REQUIRE(coords.has_value());
    // reconstruct
    QVector rebuilt(3, Rational(0));
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < 3; ++j) rebuilt[j] += (*coords)[i] * s.row(i)[j];
    CHECK(rebuilt == QVector{Rational(3), Rational(6), Rational(-5)});
    CHECK_FALSE(s.coordinates({Rational(0), Rational(1), Rational(0)}).has_value());
}

TEST_CASE("row space matches matrix rank on random input") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> val(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + trial % 5, cols = 4;
        QMatrix m(rows, cols);
        RowSpace s(cols);
        for (std::size_t i = 0; i < rows; ++i) {
            QVector v(cols);
            for (std::size_t j = 0; j < cols; ++j) {
                m.at(i, j) = val(rng);
                v[j] = m.at(i, j);
            }
            s.insert(std::move(v));
        }
        CHECK(s.dim() == rank(m));
    }
}
