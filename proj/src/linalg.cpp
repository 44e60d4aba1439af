#include "leafspace/linalg.hpp"

#include <stdexcept>

namespace leafspace {

QuadMatrix zero_matrix(size_t rows, size_t cols, long d) {
    return QuadMatrix(rows, QuadVector(cols, QuadScalar::zero(d)));
}

QuadMatrix identity_matrix(size_t n, long d) {
    QuadMatrix m = zero_matrix(n, n, d);
    for (size_t i = 0; i < n; ++i)
        m[i][i] = QuadScalar::one(d);
    return m;
}

QuadMatrix transpose(const QuadMatrix& m) {
    if (m.empty())
        return {};
    QuadMatrix t(m[0].size(), QuadVector(m.size(), QuadScalar::zero(m[0][0].discriminant())));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

QuadMatrix matmul(const QuadMatrix& x, const QuadMatrix& y) {
    if (x.empty())
        return {};
    if (x[0].empty())
        throw DimensionError("matmul: zero inner dimension, result shape ambiguous");
    if (y.empty() || x[0].size() != y.size())
        throw DimensionError("matrix product shape mismatch");
    const size_t inner = y.size();
    const long d = x[0][0].discriminant();
    QuadMatrix r = zero_matrix(x.size(), y[0].size(), d);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (x[i][k].is_zero())
                continue;
            for (size_t j = 0; j < y[0].size(); ++j)
                r[i][j] += x[i][k] * y[k][j];
        }
    return r;
}

QuadVector matvec(const QuadMatrix& m, const QuadVector& v) {
    if (m.empty())
        return {};
    if (m[0].size() != v.size())
        throw DimensionError("matrix-vector shape mismatch");
    const long d = m[0].empty() ? v[0].discriminant() : m[0][0].discriminant();
    QuadVector r(m.size(), QuadScalar::zero(d));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            r[i] += m[i][j] * v[j];
    return r;
}

std::vector<size_t> row_reduce(QuadMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty())
        return pivots;
    const size_t cols = m[0].size();
    size_t pivot_row = 0;
    for (size_t c = 0; c < cols && pivot_row < m.size(); ++c) {
        size_t sel = m.size();
        for (size_t r = pivot_row; r < m.size(); ++r)
            if (!m[r][c].is_zero()) {
                sel = r;
                break;
            }
        if (sel == m.size())
            continue;
        std::swap(m[pivot_row], m[sel]);
        const QuadScalar inv = QuadScalar::one(m[0][0].discriminant()) / m[pivot_row][c];
        for (size_t j = c; j < cols; ++j)
            m[pivot_row][j] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == pivot_row || m[r][c].is_zero())
                continue;
            const QuadScalar factor = m[r][c];
            for (size_t j = c; j < cols; ++j)
                m[r][j] -= factor * m[pivot_row][j];
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

size_t rank(QuadMatrix m) {
    return row_reduce(m).size();
}

std::vector<QuadVector> nullspace(QuadMatrix m, size_t cols, long d) {
    const std::vector<size_t> pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    std::vector<QuadVector> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        QuadVector x(cols, QuadScalar::zero(d));
        x[f] = QuadScalar::one(d);
        for (size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -m[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<QuadVector> solve(QuadMatrix m, QuadVector b, long d) {
    const size_t cols = m.empty() ? 0 : m[0].size();
    if (m.size() != b.size())
        throw DimensionError("solve: right-hand side length mismatch");
    for (size_t i = 0; i < m.size(); ++i)
        m[i].push_back(b[i]);
    if (m.empty())
        return QuadVector{};
    const std::vector<size_t> pivots = row_reduce(m);
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;  // pivot in the augmented column
    QuadVector x(cols, QuadScalar::zero(d));
    for (size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = m[i][cols];
    return x;
}

QuadMatrix solve_columns(const QuadMatrix& m, const QuadMatrix& b, long d) {
    const size_t cols = m.empty() ? 0 : m[0].size();
    const size_t rhs = b.empty() ? 0 : b[0].size();
    if (m.size() != b.size())
        throw DimensionError("solve_columns: row count mismatch");
    QuadMatrix aug = m;
    for (size_t i = 0; i < aug.size(); ++i)
        aug[i].insert(aug[i].end(), b[i].begin(), b[i].end());
    const std::vector<size_t> pivots =
        aug.empty() ? std::vector<size_t>{} : row_reduce(aug);
    for (size_t c : pivots)
        if (c >= cols)
            throw std::logic_error("solve_columns: inconsistent system");
    QuadMatrix x = zero_matrix(cols, rhs, d);
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < rhs; ++j)
            x[pivots[i]][j] = aug[i][cols + j];
    return x;
}

bool linearly_independent(const std::vector<QuadVector>& vectors, long d) {
    (void)d;
    if (vectors.empty())
        return true;
    return rank(vectors) == vectors.size();
}

std::optional<std::vector<mpz_class>> integer_solution(const QuadMatrix& a, const QuadVector& b) {
    const size_t rows = b.size();
    if (a.size() != rows)
        throw DimensionError("integer_solution: shape mismatch");
    const size_t cols = rows == 0 ? 0 : a[0].size();

    // Clear denominators row by row; entries must be rational. Each column
    // carries an identity tail so the combination can be read back.
    std::vector<std::vector<mpz_class>> col(cols, std::vector<mpz_class>(rows));
    std::vector<std::vector<mpz_class>> tail(cols, std::vector<mpz_class>(cols, 0));
    std::vector<mpz_class> rhs(rows);
    for (size_t j = 0; j < cols; ++j)
        tail[j][j] = 1;
    for (size_t i = 0; i < rows; ++i) {
        if (!b[i].is_rational())
            throw std::invalid_argument("integer_solution: irrational right-hand side");
        mpz_class lcm_den = b[i].rational_part().get_den();
        for (size_t j = 0; j < cols; ++j) {
            if (!a[i][j].is_rational())
                throw std::invalid_argument("integer_solution: irrational coefficient");
            mpz_class den = a[i][j].rational_part().get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
        Rational scale(lcm_den);
        for (size_t j = 0; j < cols; ++j) {
            Rational v = a[i][j].rational_part() * scale;
            v.canonicalize();
            col[j][i] = v.get_num();
        }
        Rational v = b[i].rational_part() * scale;
        v.canonicalize();
        rhs[i] = v.get_num();
    }

    auto add_multiple = [&](size_t dst, size_t src, const mpz_class& q) {
        for (size_t i = 0; i < rows; ++i)
            col[dst][i] -= q * col[src][i];
        for (size_t i = 0; i < cols; ++i)
            tail[dst][i] -= q * tail[src][i];
    };

    // Column echelon form by integer column operations (Hermite-style).
    std::vector<std::pair<size_t, size_t>> pivot_at;  // (row, column)
    size_t next_col = 0;
    for (size_t r = 0; r < rows && next_col < cols; ++r) {
        for (;;) {
            std::vector<size_t> nz;
            for (size_t j = next_col; j < cols; ++j)
                if (col[j][r] != 0)
                    nz.push_back(j);
            if (nz.empty())
                break;
            if (nz.size() == 1) {
                std::swap(col[next_col], col[nz[0]]);
                std::swap(tail[next_col], tail[nz[0]]);
                if (col[next_col][r] < 0) {
                    for (auto& e : col[next_col])
                        e = -e;
                    for (auto& e : tail[next_col])
                        e = -e;
                }
                pivot_at.emplace_back(r, next_col);
                ++next_col;
                break;
            }
            size_t jmin = nz[0];
            for (size_t j : nz)
                if (abs(col[j][r]) < abs(col[jmin][r]))
                    jmin = j;
            for (size_t j : nz) {
                if (j == jmin)
                    continue;
                mpz_class q = col[j][r] / col[jmin][r];  // truncated division
                if (q != 0)
                    add_multiple(j, jmin, q);
            }
        }
    }

    // Greedy membership reduction: coefficients of pivot columns are forced
    // top-down, so any divisibility failure is definitive.
    std::vector<mpz_class> x(cols, 0);
    for (auto [r, c] : pivot_at) {
        if (rhs[r] % col[c][r] != 0)
            return std::nullopt;
        mpz_class q = rhs[r] / col[c][r];
        for (size_t i = r; i < rows; ++i)
            rhs[i] -= q * col[c][i];
        for (size_t i = 0; i < cols; ++i)
            x[i] += q * tail[c][i];
    }
    for (const auto& e : rhs)
        if (e != 0)
            return std::nullopt;
    return x;
}

bool has_integer_solution(const QuadMatrix& a, const QuadVector& b) {
    return integer_solution(a, b).has_value();
}

}  // namespace leafspace
