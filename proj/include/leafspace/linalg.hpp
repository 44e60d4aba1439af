#ifndef LEAFSPACE_LINALG_HPP
#define LEAFSPACE_LINALG_HPP

#include <optional>
#include <vector>

#include "leafspace/quad.hpp"

namespace leafspace {

/// Dense matrix over Q(sqrt(d)), row major. Empty matrices are allowed.
using QuadMatrix = std::vector<QuadVector>;

QuadMatrix zero_matrix(size_t rows, size_t cols, long d);
QuadMatrix identity_matrix(size_t n, long d);
QuadMatrix transpose(const QuadMatrix& m);
QuadMatrix matmul(const QuadMatrix& x, const QuadMatrix& y);
QuadVector matvec(const QuadMatrix& m, const QuadVector& v);

/// Reduced row echelon form, in place. Pivot rule: columns left to right,
/// first row with a nonzero entry (deterministic). Returns pivot columns.
std::vector<size_t> row_reduce(QuadMatrix& m);

size_t rank(QuadMatrix m);

/// Basis of { x : m x = 0 }, one vector per free column, the free
/// coordinate set to 1. Deterministic.
std::vector<QuadVector> nullspace(QuadMatrix m, size_t cols, long d);

/// One solution of m x = b, or nullopt when inconsistent.
std::optional<QuadVector> solve(QuadMatrix m, QuadVector b, long d);

/// Column-wise solve of m X = B; every column of B must be consistent.
/// Throws std::logic_error otherwise (callers use it where solvability is
/// an invariant).
QuadMatrix solve_columns(const QuadMatrix& m, const QuadMatrix& b, long d);

bool linearly_independent(const std::vector<QuadVector>& vectors, long d);

/// Does  A x = b  admit an *integer* solution x? A and b are rational
/// (entries must have zero radical part). Decided exactly via a Hermite
/// normal form of the cleared-denominator system; returns one integer
/// solution when it exists.
std::optional<std::vector<mpz_class>> integer_solution(const QuadMatrix& a, const QuadVector& b);

bool has_integer_solution(const QuadMatrix& a, const QuadVector& b);

}  // namespace leafspace

#endif
