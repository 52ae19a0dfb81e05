#include "affweights/cartan_data.hpp"

#include "affweights/errors.hpp"

#include <charconv>
#include <numeric>
#include <optional>

namespace affweights {

namespace {

struct FamilyInfo {
    Family family;
    char letter;
    int twist;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::A1, 'A', 1},     {Family::B1, 'B', 1},     {Family::C1, 'C', 1},
    {Family::D1, 'D', 1},     {Family::D2, 'D', 2},     {Family::A2odd, 'A', 2},
    {Family::A2even, 'A', 2}, {Family::E1_6, 'E', 1},   {Family::E1_7, 'E', 1},
    {Family::E1_8, 'E', 1},   {Family::E2_6, 'E', 2},   {Family::F1_4, 'F', 1},
    {Family::G1_2, 'G', 1},   {Family::D3_4, 'D', 3},
};

const FamilyInfo& info(Family family)
{
    for (const auto& f : kFamilies)
        if (f.family == family)
            return f;
    throw InvalidInput("unknown family");
}

// Fixed rank of the exceptional families, 0 otherwise.
int fixed_rank(Family family)
{
    switch (family) {
    case Family::E1_6: return 6;
    case Family::E1_7: return 7;
    case Family::E1_8: return 8;
    case Family::E2_6: return 4;
    case Family::F1_4: return 4;
    case Family::G1_2: return 2;
    case Family::D3_4: return 2;
    default: return 0;
    }
}

// Conventional subscript of the type symbol for rank l.
int subscript(Family family, int l)
{
    switch (family) {
    case Family::D2: return l + 1;
    case Family::A2odd: return 2 * l - 1;
    case Family::A2even: return 2 * l;
    case Family::E1_6: return 6;
    case Family::E1_7: return 7;
    case Family::E1_8: return 8;
    case Family::E2_6: return 6;
    case Family::F1_4: return 4;
    case Family::G1_2: return 2;
    case Family::D3_4: return 4;
    default: return l;
    }
}

void link(IntMatrix& m, std::size_t i, std::size_t j, int aij = -1, int aji = -1)
{
    m(i, j) = aij;
    m(j, i) = aji;
}

IntMatrix with_diagonal(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 2;
    return m;
}

IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows)
{
    IntMatrix m(rows.size(), rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

// Matrix and labels for each family, transcribed from Kac, Tables Aff 1-3.
// The chain conventions for B, C, D, D^(2), A^(2) follow the explicit
// matrices written out in the congruence proofs.
CartanData transcribe(const AffineType& type)
{
    const int l = type.rank;
    const auto n = static_cast<std::size_t>(l + 1);
    CartanData data;
    data.type = type;
    data.marks.assign(n, 1);
    data.comarks.assign(n, 1);
    data.lattice.assign(static_cast<std::size_t>(l), 1);
    IntMatrix m = with_diagonal(n);

    switch (type.family) {
    case Family::A1:
        if (l == 1) {
            link(m, 0, 1, -2, -2);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                link(m, i, (i + 1) % n);
        }
        break;

    case Family::B1:
        link(m, 0, 2);
        link(m, 1, 2);
        for (int i = 2; i < l - 1; ++i)
            link(m, i, i + 1);
        link(m, l - 1, l, -1, -2);
        for (int i = 2; i <= l; ++i)
            data.marks[i] = 2;
        for (int i = 2; i < l; ++i)
            data.comarks[i] = 2;
        data.lattice[l - 1] = 2;
        break;

    case Family::C1:
        link(m, 0, 1, -1, -2);
        for (int i = 1; i < l - 1; ++i)
            link(m, i, i + 1);
        link(m, l - 1, l, -2, -1);
        for (int i = 1; i < l; ++i) {
            data.marks[i] = 2;
            data.lattice[i - 1] = 2;
        }
        break;

    case Family::D1:
        link(m, 0, 2);
        link(m, 1, 2);
        for (int i = 2; i < l - 2; ++i)
            link(m, i, i + 1);
        link(m, l - 2, l - 1);
        link(m, l - 2, l);
        for (int i = 2; i <= l - 2; ++i)
            data.marks[i] = data.comarks[i] = 2;
        break;

    case Family::D2:
        link(m, 0, 1, -2, -1);
        for (int i = 1; i < l - 1; ++i)
            link(m, i, i + 1);
        link(m, l - 1, l, -1, -2);
        for (int i = 1; i < l; ++i)
            data.comarks[i] = 2;
        break;

    case Family::A2odd:
        link(m, 0, 2);
        link(m, 1, 2);
        for (int i = 2; i < l - 1; ++i)
            link(m, i, i + 1);
        link(m, l - 1, l, -2, -1);
        for (int i = 2; i < l; ++i)
            data.marks[i] = 2;
        for (int i = 2; i <= l; ++i)
            data.comarks[i] = 2;
        break;

    case Family::A2even:
        if (l == 1) {
            link(m, 0, 1, -4, -1);
        } else {
            link(m, 0, 1, -2, -1);
            for (int i = 1; i < l - 1; ++i)
                link(m, i, i + 1);
            link(m, l - 1, l, -2, -1);
        }
        for (int i = 0; i < l; ++i)
            data.marks[i] = 2;
        for (int i = 1; i <= l; ++i)
            data.comarks[i] = 2;
        for (int i = 1; i < l; ++i)
            data.lattice[i - 1] = 2;
        break;

    case Family::E1_6:
        m = from_rows({
            {2, 0, 0, 0, 0, 0, -1},
            {0, 2, -1, 0, 0, 0, 0},
            {0, -1, 2, -1, 0, 0, 0},
            {0, 0, -1, 2, -1, 0, -1},
            {0, 0, 0, -1, 2, -1, 0},
            {0, 0, 0, 0, -1, 2, 0},
            {-1, 0, 0, -1, 0, 0, 2},
        });
        data.marks = data.comarks = {1, 1, 2, 3, 2, 1, 2};
        break;

    case Family::E1_7:
        m = from_rows({
            {2, -1, 0, 0, 0, 0, 0, 0},
            {-1, 2, -1, 0, 0, 0, 0, 0},
            {0, -1, 2, -1, 0, 0, 0, 0},
            {0, 0, -1, 2, -1, 0, 0, -1},
            {0, 0, 0, -1, 2, -1, 0, 0},
            {0, 0, 0, 0, -1, 2, -1, 0},
            {0, 0, 0, 0, 0, -1, 2, 0},
            {0, 0, 0, -1, 0, 0, 0, 2},
        });
        data.marks = data.comarks = {1, 2, 3, 4, 3, 2, 1, 2};
        break;

    case Family::E1_8:
        m = from_rows({
            {2, -1, 0, 0, 0, 0, 0, 0, 0},
            {-1, 2, -1, 0, 0, 0, 0, 0, 0},
            {0, -1, 2, -1, 0, 0, 0, 0, 0},
            {0, 0, -1, 2, -1, 0, 0, 0, 0},
            {0, 0, 0, -1, 2, -1, 0, 0, 0},
            {0, 0, 0, 0, -1, 2, -1, 0, -1},
            {0, 0, 0, 0, 0, -1, 2, -1, 0},
            {0, 0, 0, 0, 0, 0, -1, 2, 0},
            {0, 0, 0, 0, 0, -1, 0, 0, 2},
        });
        data.marks = data.comarks = {1, 2, 3, 4, 5, 6, 4, 2, 3};
        break;

    case Family::E2_6:
        link(m, 0, 1);
        link(m, 1, 2);
        link(m, 2, 3, -2, -1);
        link(m, 3, 4);
        data.marks = {1, 2, 3, 2, 1};
        data.comarks = {1, 2, 3, 4, 2};
        break;

    case Family::F1_4:
        link(m, 0, 1);
        link(m, 1, 2);
        link(m, 2, 3, -1, -2);
        link(m, 3, 4);
        data.marks = {1, 2, 3, 4, 2};
        data.comarks = {1, 2, 3, 2, 1};
        data.lattice = {1, 1, 2, 2};
        break;

    case Family::G1_2:
        link(m, 0, 1);
        link(m, 1, 2, -1, -3);
        data.marks = {1, 2, 3};
        data.comarks = {1, 2, 1};
        data.lattice = {1, 3};
        break;

    case Family::D3_4:
        link(m, 0, 1);
        link(m, 1, 2, -3, -1);
        data.marks = {1, 2, 1};
        data.comarks = {1, 2, 3};
        break;
    }
    data.matrix = m;
    return data;
}

int gcd_of(const std::vector<int>& v)
{
    int g = 0;
    for (int x : v)
        g = std::gcd(g, x);
    return g;
}

bool is_twisted(Family f)
{
    return f == Family::D2 || f == Family::A2odd || f == Family::A2even || f == Family::E2_6
        || f == Family::D3_4;
}

} // namespace

bool IntMatrix::is_symmetric() const
{
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

int AffineType::min_rank(Family family)
{
    switch (family) {
    case Family::A1: return 1;
    case Family::B1: return 3;
    case Family::C1: return 2;
    case Family::D1: return 4;
    case Family::D2: return 2;
    case Family::A2odd: return 3;
    case Family::A2even: return 1;
    default: return fixed_rank(family);
    }
}

bool AffineType::is_exceptional(Family family) { return fixed_rank(family) != 0; }

AffineType AffineType::parse(std::string_view text)
{
    auto fail = [&] {
        return InvalidInput("malformed type '" + std::string(text)
            + "': expected <letter><twist>~<subscript>, e.g. A1~2, A2~4, E1~6");
    };
    const auto tilde = text.find('~');
    if (tilde != 2 || text.size() < 4)
        throw fail();
    const char letter = text[0];
    const int twist = text[1] - '0';
    int sub = 0;
    const auto* first = text.data() + 3;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, sub);
    if (ec != std::errc() || ptr != last)
        throw fail();

    std::optional<AffineType> found;
    for (const auto& f : kFamilies) {
        if (f.letter != letter || f.twist != twist)
            continue;
        if (f.family == Family::A2odd && sub % 2 == 0)
            continue;
        if (f.family == Family::A2even && sub % 2 != 0)
            continue;
        if (const int fixed = fixed_rank(f.family)) {
            if (subscript(f.family, fixed) == sub)
                found = AffineType {f.family, fixed};
            continue;
        }
        int l = sub;
        if (f.family == Family::D2)
            l = sub - 1;
        else if (f.family == Family::A2odd)
            l = (sub + 1) / 2;
        else if (f.family == Family::A2even)
            l = sub / 2;
        found = AffineType {f.family, l};
    }
    if (!found)
        throw InvalidInput("unsupported affine type '" + std::string(text) + "'");
    if (found->rank < min_rank(found->family))
        throw InvalidRank("rank too small for type '" + std::string(text) + "'");
    return *found;
}

std::string AffineType::name() const
{
    const auto& f = info(family);
    return std::string(1, f.letter) + std::to_string(f.twist) + "~"
        + std::to_string(subscript(family, rank));
}

std::vector<AffineType> all_types(int max_rank)
{
    std::vector<AffineType> out;
    for (const auto& f : kFamilies) {
        if (const int fixed = fixed_rank(f.family)) {
            out.push_back({f.family, fixed});
            continue;
        }
        for (int l = AffineType::min_rank(f.family); l <= max_rank; ++l)
            out.push_back({f.family, l});
    }
    return out;
}

void CartanData::validate() const
{
    const std::size_t n = size();
    auto fail = [&](const std::string& what) {
        return ConsistencyError(type.name() + ": " + what);
    };
    if (matrix.rows() != n || matrix.cols() != n || comarks.size() != n
        || lattice.size() + 1 != n || static_cast<int>(n) != rank() + 1)
        throw fail("dimension mismatch");

    for (std::size_t i = 0; i < n; ++i) {
        if (matrix(i, i) != 2)
            throw fail("diagonal entry is not 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (matrix(i, j) > 0)
                throw fail("positive off-diagonal entry");
            if ((matrix(i, j) == 0) != (matrix(j, i) == 0))
                throw fail("zero pattern is not symmetric");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (marks[i] <= 0 || comarks[i] <= 0)
            throw fail("non-positive mark or comark");
        long row = 0;
        long col = 0;
        for (std::size_t j = 0; j < n; ++j) {
            row += static_cast<long>(matrix(i, j)) * marks[j];
            col += static_cast<long>(comarks[j]) * matrix(j, i);
        }
        if (row != 0)
            throw fail("A * marks != 0 in row " + std::to_string(i));
        if (col != 0)
            throw fail("comarks^T * A != 0 in column " + std::to_string(i));
    }
    if (gcd_of(marks) != 1 || gcd_of(comarks) != 1)
        throw fail("null vectors are not primitive");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (ratio(i) * matrix(i, j) != ratio(j) * matrix(j, i))
                throw fail("DA is not symmetric");

    for (int di : lattice)
        if (di <= 0)
            throw fail("non-positive lattice constant");
    if (type.family == Family::A2even) {
        if (marks[0] != 2)
            throw fail("A^(2)_{2l} requires a_0 = 2");
        for (std::size_t i = 1; i < n; ++i)
            if (d(i) != marks[i])
                throw fail("A^(2)_{2l} requires d_i = a_i");
    } else {
        if (marks[0] != 1)
            throw fail("a_0 must be 1");
        if (matrix.is_symmetric() || is_twisted(type.family)) {
            for (int di : lattice)
                if (di != 1)
                    throw fail("d_i must be 1 for symmetric and twisted types");
        } else {
            // untwisted: M is spanned by the long-root-normalised coroots
            for (std::size_t i = 1; i < n; ++i)
                if (d(i) * comarks[i] != marks[i])
                    throw fail("d_i != a_i / a_i^vee");
        }
    }
}

CartanData build_cartan(const AffineType& type)
{
    const int fixed = fixed_rank(type.family);
    if (fixed != 0 ? type.rank != fixed : type.rank < AffineType::min_rank(type.family))
        throw InvalidRank("rank " + std::to_string(type.rank) + " is not valid for family "
            + std::string(1, info(type.family).letter) + std::to_string(info(type.family).twist));
    CartanData data = transcribe(type);
    data.validate();
    return data;
}

Rational bilinear_roots(const CartanData& data, std::size_t i, std::size_t j)
{
    return data.ratio(i) * data.a(i, j);
}

} // namespace affweights
