#include "affweights/class_congruence.hpp"

#include "affweights/errors.hpp"

namespace affweights {

namespace {

bool divisible(const Integer& x, long m) { return amod(x, Integer(m)) == 0; }

Integer sum_with_step(const HubVector& psi, std::size_t first, std::size_t last, std::size_t step)
{
    Integer s = 0;
    for (std::size_t j = first; j <= last; j += step)
        s += psi[j];
    return s;
}

} // namespace

bool satisfies_congruence(const CartanData& data, const HubVector& psi)
{
    const auto l = static_cast<std::size_t>(data.rank());
    switch (data.type.family) {
    case Family::A1: {
        Integer s = 0;
        for (std::size_t j = 1; j <= l; ++j)
            s += static_cast<unsigned long>(j) * psi[j];
        return divisible(s, static_cast<long>(l + 1));
    }
    case Family::B1:
        return divisible(psi[l], 2);
    case Family::C1:
        return divisible(sum_with_step(psi, 0, l, 2), 2);
    case Family::D1:
        if (l % 2 == 0)
            return divisible(psi[0] + psi[1], 2) && divisible(sum_with_step(psi, 1, l - 1, 2), 2);
        return divisible(psi[0] - psi[1] + 2 * sum_with_step(psi, 2, l - 1, 2), 4);
    case Family::D2:
        return divisible(psi[0], 2);
    case Family::A2odd:
        return divisible(sum_with_step(psi, 1, l, 2), 2);
    case Family::E1_6:
        return divisible(psi[0] + 2 * psi[6] - psi[5] - 2 * psi[4], 3);
    case Family::E1_7:
        return divisible(psi[0] + psi[2] + psi[7], 2);
    case Family::A2even:
    case Family::E1_8:
    case Family::E2_6:
    case Family::F1_4:
    case Family::G1_2:
    case Family::D3_4:
        return true;
    }
    throw InvalidInput("unknown family");
}

bool hub_equivalent(const CartanData& data, const HubVector& theta, const HubVector& kappa)
{
    if (theta.size() != data.size() || kappa.size() != data.size())
        throw InvalidInput("hub has wrong length");
    if (level(data, theta) != level(data, kappa))
        return false;
    return satisfies_congruence(data, theta - kappa);
}

LatticeOracle::LatticeOracle(const CartanData& data)
    : snf_(smith_normal_form(to_integer_matrix(data.matrix)))
{
}

bool LatticeOracle::contains(const HubVector& psi) const
{
    return in_column_span(snf_, psi.values());
}

bool hub_equivalent_oracle(const CartanData& data, const HubVector& theta, const HubVector& kappa)
{
    return LatticeOracle(data).equivalent(theta, kappa);
}

} // namespace affweights
