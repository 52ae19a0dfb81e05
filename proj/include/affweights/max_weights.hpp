#pragma once

#include "affweights/weight_space.hpp"
#include "affweights/weyl_action.hpp"

#include <map>
#include <vector>

namespace affweights {

/// Residue tuple ((a_0 b_i - a_i b_0) mod k d_i)_{i=1..l}.
using EtaTilde = std::vector<Integer>;

EtaTilde eta_tilde(const HighestWeight& lambda, const Content& b);

/// All positive hubs of level k equivalent to the hub of Lambda, sorted
/// lexicographically.
std::vector<HubVector> positive_hubs(const HighestWeight& lambda);

struct MaximalWeight {
    HubVector hub;
    Content content;
    Rational defect;
};

/// The maximal dominant weights N, one per positive hub, in positive_hubs()
/// order. Throws ConsistencyError if a hub passing the congruence test has
/// no integer content.
std::vector<MaximalWeight> maximal_dominant_weights(const HighestWeight& lambda);

/// One element of the finite-Weyl-group closure of N.
struct OrbitElement {
    Content content;
    HubVector hub;
    EtaTilde eta;
    Rational defect;
    std::size_t orbit; // index into NbarTable::maximal()
};

/// One T-class of the closure, keyed by its residue tuple.
struct NbarEntry {
    EtaTilde key;
    Content content; // representative: lexicographically smallest member
    HubVector hub;
    Rational defect;
    std::size_t orbit;
    std::vector<Content> t_class; // all members, sorted
};

class NbarTable {
public:
    const HighestWeight& lambda() const { return lambda_; }
    const CartanData& data() const { return lambda_.data(); }
    const Integer& level() const { return lambda_.level(); }
    const std::vector<MaximalWeight>& maximal() const { return maximal_; }
    /// Orbits in the order of maximal(); elements sorted within each orbit.
    const std::vector<OrbitElement>& elements() const { return elements_; }
    const std::map<EtaTilde, NbarEntry>& entries() const { return entries_; }

    std::size_t orbit_count() const { return maximal_.size(); }
    const NbarEntry* find(const EtaTilde& key) const;
    bool is_representative(const Content& b) const;

    /// k^l prod d_i, or k^l for A^(2)_{2l}.
    Integer expected_size() const;

    friend NbarTable build_nbar(const HighestWeight& lambda, std::size_t orbit_cap);

private:
    explicit NbarTable(HighestWeight lambda)
        : lambda_(std::move(lambda))
    {
    }

    HighestWeight lambda_;
    std::vector<MaximalWeight> maximal_;
    std::vector<OrbitElement> elements_;
    std::map<EtaTilde, NbarEntry> entries_;
};

/// Builds N, its W-orbit closure and the T-class table, checking the
/// cardinality and image of the residue map.
NbarTable build_nbar(const HighestWeight& lambda, std::size_t orbit_cap = default_orbit_cap());

/// The image of the residue map for this type: every key must satisfy it.
bool in_residue_image(const CartanData& data, const EtaTilde& key);

} // namespace affweights
