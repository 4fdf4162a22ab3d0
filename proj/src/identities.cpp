#include "freefield/identities.hpp"

#include <algorithm>

#include "freefield/errors.hpp"

namespace freefield {

namespace {

ExprMatrix submatrix(const ExprMatrix& a, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
    ExprMatrix out;
    for (std::size_t r : rows) {
        std::vector<ExprPtr> row;
        for (std::size_t c : cols) row.push_back(a.at(r).at(c));
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip) out.push_back(i);
    return out;
}

/// Inverse of a 1x1 or 2x2 expression matrix via quasideterminant
/// inversion: (A^{-1})_{ji} = (|A|_{ij})^{-1}.
ExprMatrix quasi_inverse(const ExprMatrix& a) {
    std::size_t n = a.size();
    ExprMatrix inv(n, std::vector<ExprPtr>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[j][i] = RatExpr::inverse(quasideterminant(a, i, j));
    return inv;
}

void check_rectangular(const ExprMatrix& a) {
    if (a.empty()) throw DomainError("empty matrix");
    for (const auto& row : a)
        if (row.size() != a.front().size()) throw DomainError("matrix is not rectangular");
}

} // namespace

ExprPtr quasideterminant(const ExprMatrix& a, std::size_t i, std::size_t j) {
    check_rectangular(a);
    std::size_t n = a.size();
    if (a.front().size() != n) throw DomainError("quasideterminant needs a square matrix");
    if (i >= n || j >= n) throw DomainError("quasideterminant index out of range");
    if (n == 1) return a[0][0];
    if (n > 3) throw DomainError("quasideterminants above 3x3 are unsupported in this version");

    std::vector<std::size_t> rows = all_but(n, i);
    std::vector<std::size_t> cols = all_but(n, j);
    ExprMatrix minor = submatrix(a, rows, cols);
    ExprMatrix minor_inv;
    if (n == 2) {
        minor_inv = {{RatExpr::inverse(minor[0][0])}};
    } else {
        minor_inv = quasi_inverse(minor);
    }
    // A_ij - (row i without j) * minor^{-1} * (column j without i)
    std::vector<ExprPtr> terms{a[i][j]};
    for (std::size_t s = 0; s < n - 1; ++s)
        for (std::size_t t = 0; t < n - 1; ++t)
            terms.push_back(RatExpr::neg(simplified_product(
                {a[i][cols[s]], minor_inv[s][t], a[rows[t]][j]})));
    return simplified_sum(std::move(terms));
}

ExprPtr quasi_plucker(const ExprMatrix& a, std::size_t i, std::size_t j,
                      const std::vector<std::size_t>& k_cols, std::size_t r) {
    check_rectangular(a);
    std::size_t n = a.size();
    std::size_t m = a.front().size();
    if (n >= m) throw DomainError("quasi-Plücker coordinates need more columns than rows");
    if (k_cols.size() != n - 1) throw DomainError("quasi-Plücker needs |K| = rows - 1");
    if (r >= n || i >= m || j >= m) throw DomainError("quasi-Plücker index out of range");
    for (std::size_t c : k_cols)
        if (c == i) throw DomainError("quasi-Plücker requires i not in K");

    auto columns_with = [&](std::size_t extra) {
        std::vector<std::size_t> cols = k_cols;
        cols.push_back(extra);
        std::sort(cols.begin(), cols.end());
        return cols;
    };
    std::vector<std::size_t> rows;
    for (std::size_t s = 0; s < n; ++s) rows.push_back(s);

    std::vector<std::size_t> cols_i = columns_with(i);
    std::vector<std::size_t> cols_j = columns_with(j);
    std::size_t pos_i = static_cast<std::size_t>(
        std::find(cols_i.begin(), cols_i.end(), i) - cols_i.begin());
    std::size_t pos_j = static_cast<std::size_t>(
        std::find(cols_j.begin(), cols_j.end(), j) - cols_j.begin());

    ExprPtr denom = quasideterminant(submatrix(a, rows, cols_i), r, pos_i);
    ExprPtr numer = quasideterminant(submatrix(a, rows, cols_j), r, pos_j);
    return simplified_product({RatExpr::inverse(denom), numer});
}

std::vector<CorpusItem> identity_corpus() {
    std::vector<CorpusItem> out;

    {
        Alphabet xyz = Alphabet::from_csv("x,y,z");
        out.push_back({"rational-identity",
                       xyz,
                       parse_expression("(x - z^-1) (1 - y x)^-1 (y - z) + "
                                        "(y^-1 - z^-1) (1 - x^-1 y^-1)^-1 (x^-1 - z)",
                                        xyz)});
        out.push_back({"rational-identity-star-form",
                       xyz,
                       parse_expression("(x - z') (y x)^* (y - z) + (y' - z') (x' y')^* (x' - z)",
                                        xyz)});
    }
    {
        Alphabet x = Alphabet::from_csv("x");
        out.push_back({"word-problem-example", x,
                       parse_expression("x^-1 (1 - x)^-1 - x^-1 - (1 - x)^-1", x)});
        out.push_back({"euler", x, parse_expression("(1 - x^-1)^-1 + x (1 - x)^-1", x)});
        out.push_back({"euler-star-form", x, parse_expression("x'^* + x x^*", x)});
    }
    {
        // Skew-symmetry p^k_ij p^i_jk + p^j_ik = 0 for a 2x3 matrix of
        // distinct generators, (i, j, k) = (0, 1, 2), both rows.
        Alphabet gens = Alphabet::from_csv("a,b,c,u,v,w");
        auto g = [&](const char* name) {
            return RatExpr::gen(Letter(static_cast<std::uint32_t>(gens.find(name)), false));
        };
        ExprMatrix mat{{g("a"), g("b"), g("c")}, {g("u"), g("v"), g("w")}};
        for (std::size_t r = 0; r < 2; ++r) {
            ExprPtr lhs = simplified_product(
                {quasi_plucker(mat, 0, 1, {2}, r), quasi_plucker(mat, 1, 2, {0}, r)});
            ExprPtr rhs = quasi_plucker(mat, 0, 2, {1}, r);
            out.push_back({"skew-symmetry-row" + std::to_string(r), gens,
                           simplified_sum({lhs, rhs})});
        }
    }
    return out;
}

} // namespace freefield
