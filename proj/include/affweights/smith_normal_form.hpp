#pragma once

#include "affweights/cartan_data.hpp"
#include "affweights/integer.hpp"

#include <optional>
#include <vector>

namespace affweights {

using IntegerMatrix = std::vector<std::vector<Integer>>;

IntegerMatrix to_integer_matrix(const IntMatrix& m);

/// U * A * V = diag(s_0, ..., s_{r-1}, 0, ...) with U, V unimodular and
/// s_0 | s_1 | ... | s_{r-1}, all s_i > 0.
struct SmithForm {
    IntegerMatrix u;
    IntegerMatrix v;
    std::vector<Integer> diagonal; // length min(rows, cols)
    std::size_t rank = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
};

SmithForm smith_normal_form(IntegerMatrix a);

/// Integer x with A x = rhs, or nullopt if rhs is not in the integer column
/// span of A. Free coordinates are set to zero.
std::optional<std::vector<Integer>> solve_integer(const SmithForm& snf, const std::vector<Integer>& rhs);

inline bool in_column_span(const SmithForm& snf, const std::vector<Integer>& rhs)
{
    return solve_integer(snf, rhs).has_value();
}

} // namespace affweights
