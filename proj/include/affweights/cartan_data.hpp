#pragma once

#include "affweights/integer.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace affweights {

/// Affine families in the labelling of Kac, "Infinite dimensional Lie
/// algebras", Tables Aff 1-3. A2odd is A^(2)_{2l-1}, A2even is A^(2)_{2l},
/// D2 is D^(2)_{l+1}.
enum class Family {
    A1,
    B1,
    C1,
    D1,
    D2,
    A2odd,
    A2even,
    E1_6,
    E1_7,
    E1_8,
    E2_6,
    F1_4,
    G1_2,
    D3_4,
};

/// Family plus rank l; the Cartan matrix is (l+1) x (l+1).
struct AffineType {
    Family family;
    int rank;

    /// Parses "A1~2", "A2~4", "D2~5", "E1~6": letter, twist, '~', and the
    /// conventional subscript (which is not always l, e.g. D2~5 has l = 4).
    static AffineType parse(std::string_view text);

    /// Inverse of parse().
    std::string name() const;

    /// Smallest admissible l for the family (fixed rank for exceptionals).
    static int min_rank(Family family);
    static bool is_exceptional(Family family);

    friend bool operator==(const AffineType&, const AffineType&) = default;
};

/// Every supported (family, rank) with the family rank capped at max_rank;
/// exceptional types are always included.
std::vector<AffineType> all_types(int max_rank);

/// Dense small integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows)
        , cols_(cols)
        , data_(rows * cols, 0)
    {
    }

    int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool is_symmetric() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<int> data_;
};

/// Static data of one affine Cartan matrix. Rows and columns are numbered
/// 0..l; entry (i, j) is <h_i, alpha_j>.
class CartanData {
public:
    AffineType type;
    IntMatrix matrix;
    std::vector<int> marks;   // a_i, coefficients of delta
    std::vector<int> comarks; // a_i^vee, coefficients of c
    std::vector<int> lattice; // d_1..d_l (lattice[i-1] is d_i)

    int rank() const { return type.rank; }
    std::size_t size() const { return marks.size(); }

    int a(std::size_t i, std::size_t j) const { return matrix(i, j); }
    int mark(std::size_t i) const { return marks[i]; }
    int comark(std::size_t i) const { return comarks[i]; }
    /// d_i for 1 <= i <= l.
    int d(std::size_t i) const { return lattice[i - 1]; }

    /// a_i^vee / a_i, the diagonal of D in B = DA.
    Rational ratio(std::size_t i) const { return make_rational(comarks[i], marks[i]); }

    /// Throws ConsistencyError naming the first violated invariant.
    void validate() const;
};

/// Builds the Cartan data for a type; throws InvalidRank if the rank is
/// outside the family's range. The result is validated before returning.
CartanData build_cartan(const AffineType& type);

/// (alpha_i | alpha_j) = (a_i^vee / a_i) a_ij.
Rational bilinear_roots(const CartanData& data, std::size_t i, std::size_t j);

} // namespace affweights
