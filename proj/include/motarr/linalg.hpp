#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "motarr/scalar.hpp"

namespace motarr {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

struct Echelon {
    Matrix rows;                      // reduced row echelon form, nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// Exact Gauss-Jordan elimination; `cols` is needed when the matrix has no rows.
Echelon rref(const Matrix& m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);

// Basis of {x : m x = 0}.
std::vector<Vector> kernel(const Matrix& m, std::size_t cols, const Field& field);

// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b, std::size_t cols, const Field& field);

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

// Z-span of inserted integer vectors kept in row echelon (Hermite-like) form.
class IntegerLattice {
public:
    explicit IntegerLattice(std::size_t cols) : cols_(cols) {}

    void insert(IntVector v);
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    IntMatrix basis() const;

private:
    std::size_t cols_;
    std::map<std::size_t, IntVector> rows_;  // keyed by pivot column
};

// Nonzero diagonal entries of the Smith normal form, ascending and positive.
std::vector<mpz_class> smith_diagonal(IntMatrix m);

// Rank over Q, computed independently of the field code path.
std::size_t rational_rank(const IntMatrix& m);

}  // namespace motarr
