/** @file linalg.cpp

    @brief Exact dense and sparse elimination.
*/
#include "g1/linalg.hpp"

#include "g1/error.hpp"

namespace g1 {

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols && c < rows[r].size(); ++c)
            m(r, c) = rows[r][c];
    return m;
}

Vec Matrix::row(std::size_t r) const
{
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const Vec& row)
{
    if (row.size() != cols_)
        throw Error(ErrorKind::Internal, "row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> rref(Matrix& m)
{
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0)
                    m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vec> nullspace(const Matrix& m)
{
    Matrix e = m;
    const auto piv = rref(e);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv)
        is_piv[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f])
            continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = -e(r, f);
        basis.push_back(std::move(v));
    }
    return row_basis(basis, m.cols());
}

std::optional<Vec> solve(const Matrix& m, const Vec& b)
{
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols())
        return std::nullopt;
    Vec x(m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r)
        x[piv[r]] = aug(r, m.cols());
    return x;
}

std::vector<Vec> row_basis(const std::vector<Vec>& vectors, std::size_t cols)
{
    Matrix m = Matrix::from_rows(vectors, cols);
    const auto piv = rref(m);
    std::vector<Vec> out;
    for (std::size_t r = 0; r < piv.size(); ++r)
        out.push_back(m.row(r));
    return out;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntRow& row)
{
    Integer g = 0;
    for (const auto& [c, v] : row)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& [c, v] : row)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

} // namespace

bool SparseEchelon::add(const SparseRow& in)
{
    Integer den = 1;
    for (const auto& [c, v] : in)
        if (v != 0)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    IntRow row;
    row.reserve(in.size());
    for (const auto& [c, v] : in)
        if (v != 0) {
            Rational t = v * den;
            row.emplace_back(c, t.get_num());
        }
    make_primitive(row);
    IntRow next;
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            const std::size_t lead = row.front().first;
            pivots_.emplace(lead, std::move(row));
            return true;
        }
        const IntRow& p = it->second;
        // row <- p0*row - r0*p, cancelling the leading entry.
        const Integer p0 = p.front().second, r0 = row.front().second;
        const Integer g = gcd(p0, r0);
        const Integer fr = p0 / g, fp = r0 / g;
        next.clear();
        std::size_t i = 1, j = 1;
        while (i < row.size() || j < p.size()) {
            if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
                next.emplace_back(row[i].first, fr * row[i].second);
                ++i;
            } else if (i == row.size() || p[j].first < row[i].first) {
                next.emplace_back(p[j].first, -fp * p[j].second);
                ++j;
            } else {
                Integer v = fr * row[i].second - fp * p[j].second;
                if (v != 0)
                    next.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        make_primitive(next);
        row.swap(next);
    }
    return false;
}

} // namespace g1
