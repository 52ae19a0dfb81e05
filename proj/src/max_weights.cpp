#include "affweights/max_weights.hpp"

#include "affweights/class_congruence.hpp"
#include "affweights/errors.hpp"

#include <algorithm>

namespace affweights {

EtaTilde eta_tilde(const HighestWeight& lambda, const Content& b)
{
    const auto& data = lambda.data();
    EtaTilde out;
    out.reserve(data.size() - 1);
    for (std::size_t i = 1; i < data.size(); ++i)
        out.push_back(amod(data.mark(0) * b[i] - data.mark(i) * b[0], lambda.level() * data.d(i)));
    return out;
}

namespace {

void compositions(const CartanData& data, std::size_t i, Integer remaining, std::vector<Integer>& current,
    std::vector<HubVector>& out)
{
    if (i + 1 == data.size()) {
        if (remaining % data.comark(i) == 0) {
            current[i] = remaining / data.comark(i);
            out.emplace_back(current);
        }
        return;
    }
    for (Integer v = 0; v * data.comark(i) <= remaining; ++v) {
        current[i] = v;
        compositions(data, i + 1, remaining - v * data.comark(i), current, out);
    }
}

} // namespace

std::vector<HubVector> positive_hubs(const HighestWeight& lambda)
{
    const auto& data = lambda.data();
    std::vector<HubVector> all;
    std::vector<Integer> current(data.size(), 0);
    compositions(data, 0, lambda.level(), current, all);
    const HubVector base = lambda.hub();
    std::vector<HubVector> out;
    for (auto& theta : all)
        if (hub_equivalent(data, theta, base))
            out.push_back(std::move(theta));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MaximalWeight> maximal_dominant_weights(const HighestWeight& lambda)
{
    std::vector<MaximalWeight> out;
    for (auto& theta : positive_hubs(lambda)) {
        auto gamma = hub_to_content(lambda, theta);
        if (!gamma)
            throw ConsistencyError("hub [" + join(theta.values()) + "] passes the congruence test "
                + "but has no integer content");
        if (!gamma->nonnegative())
            throw ConsistencyError("maximal content has a negative entry");
        Rational def = defect(lambda, *gamma);
        out.push_back({std::move(theta), std::move(*gamma), std::move(def)});
    }
    return out;
}

const NbarEntry* NbarTable::find(const EtaTilde& key) const
{
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

bool NbarTable::is_representative(const Content& b) const
{
    const auto* entry = find(eta_tilde(lambda_, b));
    return entry && entry->content == b;
}

Integer NbarTable::expected_size() const
{
    const auto& d = data();
    Integer size = 1;
    for (int i = 1; i <= d.rank(); ++i) {
        size *= level();
        if (d.type.family != Family::A2even)
            size *= d.d(static_cast<std::size_t>(i));
    }
    return size;
}

bool in_residue_image(const CartanData& data, const EtaTilde& key)
{
    if (data.type.family != Family::A2even)
        return true;
    for (std::size_t i = 0; i + 1 < key.size(); ++i)
        if (amod(key[i], Integer(2)) != 0)
            return false;
    return true;
}

NbarTable build_nbar(const HighestWeight& lambda, std::size_t orbit_cap)
{
    NbarTable table(lambda);
    table.maximal_ = maximal_dominant_weights(lambda);

    std::vector<Content> seeds;
    for (const auto& m : table.maximal_)
        seeds.push_back(m.content);
    const auto orbits = finite_orbit(lambda, seeds, orbit_cap);
    if (orbits.size() != seeds.size())
        throw ConsistencyError("two maximal dominant weights share a finite Weyl orbit");

    for (std::size_t o = 0; o < orbits.size(); ++o) {
        for (const auto& b : orbits[o].elements) {
            OrbitElement element {b, content_to_hub(lambda, b), eta_tilde(lambda, b), defect(lambda, b), o};
            if (element.defect != table.maximal_[o].defect)
                throw ConsistencyError("defect is not constant on a Weyl orbit");
            auto [it, inserted] = table.entries_.try_emplace(element.eta);
            NbarEntry& entry = it->second;
            if (inserted || b < entry.content) {
                entry.key = element.eta;
                entry.content = b;
                entry.hub = element.hub;
                entry.defect = element.defect;
                entry.orbit = o;
            }
            entry.t_class.push_back(b);
            table.elements_.push_back(std::move(element));
        }
    }
    for (auto& [key, entry] : table.entries_) {
        std::sort(entry.t_class.begin(), entry.t_class.end());
        if (!in_residue_image(lambda.data(), key))
            throw ConsistencyError("residue tuple outside the image of the residue map");
    }
    if (Integer(static_cast<unsigned long>(table.entries_.size())) != table.expected_size())
        throw ConsistencyError("T-class table has " + std::to_string(table.entries_.size())
            + " entries, expected " + to_string(table.expected_size()));
    return table;
}

} // namespace affweights
