#pragma once

#include "affweights/smith_normal_form.hpp"
#include "affweights/weight_space.hpp"

namespace affweights {

/// theta == kappa modulo the hubs of the simple roots, decided by the
/// per-type congruence table: equal level plus at most two congruences on
/// psi = theta - kappa.
bool hub_equivalent(const CartanData& data, const HubVector& theta, const HubVector& kappa);

/// The per-type congruence alone, for a level-0 difference psi.
bool satisfies_congruence(const CartanData& data, const HubVector& psi);

/// Independent check: psi in the integer column span of the Cartan matrix,
/// via its Smith normal form. Construct once per type and reuse.
class LatticeOracle {
public:
    explicit LatticeOracle(const CartanData& data);

    bool contains(const HubVector& psi) const;
    bool equivalent(const HubVector& theta, const HubVector& kappa) const
    {
        return contains(theta - kappa);
    }
    const SmithForm& smith_form() const { return snf_; }

private:
    SmithForm snf_;
};

bool hub_equivalent_oracle(const CartanData& data, const HubVector& theta, const HubVector& kappa);

} // namespace affweights
