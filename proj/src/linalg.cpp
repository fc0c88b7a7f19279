#include "motarr/linalg.hpp"

#include <algorithm>
#include <utility>

namespace motarr {

Echelon rref(const Matrix& m, std::size_t cols)
{
    Echelon e;
    Matrix a = m;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][c].is_zero())
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[row], a[piv]);
        Scalar inv = a[row][c].inverse();
        for (auto& x : a[row])
            x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][c].is_zero())
                continue;
            Scalar f = a[i][c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] -= f * a[row][k];
        }
        e.pivots.push_back(c);
        ++row;
    }
    a.resize(row);
    e.rows = std::move(a);
    return e;
}

std::size_t rank(const Matrix& m, std::size_t cols)
{
    return rref(m, cols).pivots.size();
}

std::vector<Vector> kernel(const Matrix& m, std::size_t cols, const Field& field)
{
    Echelon e = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vector v(cols, Scalar(field, 0));
        v[free] = Scalar(field, 1);
        for (std::size_t i = 0; i < e.rows.size(); ++i)
            v[e.pivots[i]] = -e.rows[i][free];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b, std::size_t cols, const Field& field)
{
    Matrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i)
        aug[i].push_back(b[i]);
    Echelon e = rref(aug, cols + 1);
    Vector x(cols, Scalar(field, 0));
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == cols)
            return std::nullopt;
        x[e.pivots[i]] = e.rows[i][cols];
    }
    return x;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t leading(const IntVector& v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0)
            return i;
    }
    return v.size();
}

}  // namespace

void IntegerLattice::insert(IntVector v)
{
    for (;;) {
        std::size_t c = leading(v);
        if (c == cols_)
            return;
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            if (v[c] < 0) {
                for (auto& x : v)
                    x = -x;
            }
            rows_.emplace(c, std::move(v));
            return;
        }
        IntVector& p = it->second;
        mpz_class a = p[c], b = v[c];
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
            mpz_class q = b / a;
            for (std::size_t k = c; k < cols_; ++k)
                v[k] -= q * p[k];
            continue;
        }
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_class ag = a / g, bg = b / g;
        IntVector np(cols_), nv(cols_);
        for (std::size_t k = c; k < cols_; ++k) {
            np[k] = s * p[k] + t * v[k];
            nv[k] = ag * v[k] - bg * p[k];
        }
        p = std::move(np);
        v = std::move(nv);
    }
}

IntMatrix IntegerLattice::basis() const
{
    IntMatrix m;
    for (const auto& [c, row] : rows_)
        m.push_back(row);
    return m;
}

std::vector<mpz_class> smith_diagonal(IntMatrix m)
{
    std::vector<mpz_class> diag;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry of the remaining block becomes the pivot
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows)
            break;
        std::swap(m[t], m[pr]);
        for (auto& row : m)
            std::swap(row[t], row[pc]);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0)
                continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
            for (std::size_t j = t; j < cols; ++j)
                m[i][j] -= q * m[t][j];
            if (m[i][t] != 0)
                clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0)
                continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
            for (std::size_t i = t; i < rows; ++i)
                m[i][j] -= q * m[i][t];
            if (m[t][j] != 0)
                clean = false;
        }
        if (!clean)
            continue;
        // divisibility: fold any offending row into row t and retry
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i) {
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                    for (std::size_t k = t; k < cols; ++k)
                        m[t][k] += m[i][k];
                    divides = false;
                    break;
                }
            }
        }
        if (!divides)
            continue;
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    return diag;
}

std::size_t rational_rank(const IntMatrix& m)
{
    std::vector<std::vector<mpq_class>> a;
    for (const auto& row : m) {
        std::vector<mpq_class> r;
        for (const auto& x : row)
            r.emplace_back(x);
        a.push_back(std::move(r));
    }
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            if (a[i][c] == 0)
                continue;
            mpq_class f = a[i][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace motarr
