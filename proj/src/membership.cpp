#include "affweights/membership.hpp"

#include "affweights/errors.hpp"

#include <algorithm>

namespace affweights {

MembershipCertificate delta_shift(const NbarTable& table, const Content& b)
{
    const auto& lambda = table.lambda();
    const auto& data = table.data();
    if (b.size() != data.size())
        throw InvalidInput("content has " + std::to_string(b.size()) + " entries, expected "
            + std::to_string(data.size()));

    MembershipCertificate cert;
    cert.query = b;
    cert.key = eta_tilde(lambda, b);
    const NbarEntry* entry = table.find(cert.key);
    if (!entry)
        throw NotEquivalentToLambda("no table representative for residue tuple (" + join(cert.key) + ")");
    cert.representative = entry->content;
    cert.difference = cert.representative - b;

    const Integer& k = table.level();
    const Integer a0 = data.mark(0);
    const Content& c = cert.difference;
    cert.alpha = RootVector::zero(data.size());
    for (std::size_t i = 1; i < data.size(); ++i)
        cert.alpha[i] = make_rational(a0 * c[i] - data.mark(i) * c[0], k * a0);
    if (!in_translation_lattice(data, cert.alpha))
        throw ConsistencyError("translation part is not in the lattice M");

    cert.zeta_alpha = bilinear(lambda, cert.alpha)
        - bilinear_rr(data, RootVector::from(cert.representative), cert.alpha);
    cert.alpha_alpha = bilinear_rr(data, cert.alpha, cert.alpha);
    const Rational s = make_rational(-c[0], a0) - (cert.zeta_alpha + cert.alpha_alpha * k / 2);
    if (!is_integral(s))
        throw ConsistencyError("delta-shift " + to_string(s) + " is not an integer");
    cert.shift = s.get_num();

    const Content replay = shift_by_delta(data, translate(lambda, cert.representative, cert.alpha), cert.shift);
    if (replay != b)
        throw ConsistencyError("certificate does not replay to the queried content");

    cert.defect = defect(lambda, b);
    cert.verdict = cert.shift >= 0;
    return cert;
}

bool is_weight(const NbarTable& table, const Content& b)
{
    const bool verdict = delta_shift(table, b).verdict;
    if (verdict && !b.nonnegative())
        throw ConsistencyError("positive verdict for a content with a negative entry");
    return verdict;
}

Content max_weight_of(const NbarTable& table, const Content& b)
{
    return shift_by_delta(table.data(), b, -delta_shift(table, b).shift);
}

RootVector real_root(const CartanData& data, std::size_t simple, const ReflectionWord& word)
{
    if (simple >= data.size())
        throw InvalidInput("simple root index out of range");
    RootVector root = RootVector::simple(data.size(), simple);
    for (std::size_t j : word) {
        if (j >= data.size())
            throw InvalidInput("reflection index out of range");
        root = reflect_root(data, root, j);
    }
    return root;
}

StringProfile string_profile(const NbarTable& table, const Content& b, const RootVector& root)
{
    if (!is_weight(table, b))
        throw NotAWeight("content (" + join(b.values()) + ") is not a weight");
    // eta + t root has content b - t root
    const Content step = root.to_content();
    Content low = b;
    while (is_weight(table, low + step))
        low = low + step;

    StringProfile profile;
    profile.root = root;
    for (Content current = low; is_weight(table, current); current = current - step) {
        profile.shifts.push_back(delta_shift(table, current).shift);
        profile.weights.push_back(current);
    }
    return profile;
}

bool is_palindromic(const std::vector<Integer>& shifts)
{
    return std::equal(shifts.begin(), shifts.end(), shifts.rbegin());
}

bool is_unimodal_with_plateau(const std::vector<Integer>& shifts)
{
    std::size_t i = 0;
    const std::size_t n = shifts.size();
    while (i + 1 < n && shifts[i] < shifts[i + 1])
        ++i;
    while (i + 1 < n && shifts[i] == shifts[i + 1])
        ++i;
    while (i + 1 < n && shifts[i] > shifts[i + 1])
        ++i;
    return i + 1 >= n;
}

std::vector<Integer> multicharge_labels(int e, const std::vector<int>& multicharge)
{
    if (e < 2)
        throw InvalidInput("e must be at least 2");
    if (multicharge.empty())
        throw InvalidInput("multicharge must be non-empty");
    std::vector<Integer> labels(static_cast<std::size_t>(e), 0);
    for (int r : multicharge) {
        if (r < 0 || r >= e)
            throw InvalidInput("multicharge entry " + std::to_string(r) + " is not a residue mod "
                + std::to_string(e));
        ++labels[static_cast<std::size_t>(r)];
    }
    return labels;
}

bool block_exists(int e, const std::vector<int>& multicharge, const Content& content)
{
    auto labels = multicharge_labels(e, multicharge);
    if (content.size() != static_cast<std::size_t>(e))
        throw InvalidInput("content must have e entries");
    const HighestWeight lambda(make_cartan({Family::A1, e - 1}), std::move(labels));
    return is_weight(build_nbar(lambda), content);
}

} // namespace affweights
