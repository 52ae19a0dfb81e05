#include "affweights/smith_normal_form.hpp"

#include "affweights/errors.hpp"

#include <utility>

namespace affweights {

namespace {

IntegerMatrix identity(std::size_t n)
{
    IntegerMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

// row_dst += factor * row_src, applied to A and to U.
void add_row(IntegerMatrix& a, IntegerMatrix& u, std::size_t dst, std::size_t src, const Integer& factor)
{
    for (std::size_t j = 0; j < a[dst].size(); ++j)
        a[dst][j] += factor * a[src][j];
    for (std::size_t j = 0; j < u[dst].size(); ++j)
        u[dst][j] += factor * u[src][j];
}

// col_dst += factor * col_src, applied to A and to V.
void add_col(IntegerMatrix& a, IntegerMatrix& v, std::size_t dst, std::size_t src, const Integer& factor)
{
    for (auto& row : a)
        row[dst] += factor * row[src];
    for (auto& row : v)
        row[dst] += factor * row[src];
}

void swap_rows(IntegerMatrix& a, IntegerMatrix& u, std::size_t i, std::size_t j)
{
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
}

void swap_cols(IntegerMatrix& a, IntegerMatrix& v, std::size_t i, std::size_t j)
{
    for (auto& row : a)
        std::swap(row[i], row[j]);
    for (auto& row : v)
        std::swap(row[i], row[j]);
}

void negate_row(IntegerMatrix& a, IntegerMatrix& u, std::size_t i)
{
    for (auto& x : a[i])
        x = -x;
    for (auto& x : u[i])
        x = -x;
}

} // namespace

IntegerMatrix to_integer_matrix(const IntMatrix& m)
{
    IntegerMatrix out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j);
    return out;
}

SmithForm smith_normal_form(IntegerMatrix a)
{
    SmithForm snf;
    snf.rows = a.size();
    snf.cols = a.empty() ? 0 : a[0].size();
    snf.u = identity(snf.rows);
    snf.v = identity(snf.cols);
    const std::size_t steps = std::min(snf.rows, snf.cols);

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // pivot: smallest nonzero |entry| of the trailing block
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < snf.rows; ++i)
                for (std::size_t j = t; j < snf.cols; ++j)
                    if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
            if (!found)
                break;
            swap_rows(a, snf.u, t, pi);
            swap_cols(a, snf.v, t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < snf.rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                add_row(a, snf.u, i, t, -floor_div(a[i][t], a[t][t]));
                dirty = dirty || a[i][t] != 0;
            }
            for (std::size_t j = t + 1; j < snf.cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                add_col(a, snf.v, j, t, -floor_div(a[t][j], a[t][t]));
                dirty = dirty || a[t][j] != 0;
            }
            if (dirty)
                continue;

            // divisibility: the pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < snf.rows && divides; ++i)
                for (std::size_t j = t + 1; j < snf.cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(a, snf.u, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (a[t][t] == 0)
            break;
        if (a[t][t] < 0)
            negate_row(a, snf.u, t);
        ++snf.rank;
    }
    snf.diagonal.resize(steps);
    for (std::size_t t = 0; t < steps; ++t)
        snf.diagonal[t] = a[t][t];
    return snf;
}

std::optional<std::vector<Integer>> solve_integer(const SmithForm& snf, const std::vector<Integer>& rhs)
{
    if (rhs.size() != snf.rows)
        throw InvalidInput("solve_integer: right-hand side has wrong length");
    std::vector<Integer> urhs(snf.rows, 0);
    for (std::size_t i = 0; i < snf.rows; ++i)
        for (std::size_t j = 0; j < snf.rows; ++j)
            urhs[i] += snf.u[i][j] * rhs[j];

    std::vector<Integer> y(snf.cols, 0);
    for (std::size_t i = 0; i < snf.rows; ++i) {
        if (i < snf.rank) {
            if (urhs[i] % snf.diagonal[i] != 0)
                return std::nullopt;
            y[i] = urhs[i] / snf.diagonal[i];
        } else if (urhs[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Integer> x(snf.cols, 0);
    for (std::size_t i = 0; i < snf.cols; ++i)
        for (std::size_t j = 0; j < snf.cols; ++j)
            x[i] += snf.v[i][j] * y[j];
    return x;
}

} // namespace affweights
