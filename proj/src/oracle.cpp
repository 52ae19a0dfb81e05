#include "affweights/oracle.hpp"

#include "affweights/weyl_action.hpp"

#include <algorithm>
#include <set>

namespace affweights {

bool is_weight_oracle(const HighestWeight& lambda, const Content& b)
{
    return to_dominant(lambda, b).content.nonnegative();
}

std::vector<Content> enumerate_weights(const HighestWeight& lambda, long floor_bound)
{
    if (floor_bound < 0)
        return {};
    const std::size_t n = lambda.size();
    std::set<Content> found;
    // layer t holds the weights with content sum t
    std::vector<Content> layer {Content::zero(n)};
    found.insert(layer.front());
    while (!layer.empty()) {
        std::set<Content> next;
        for (const auto& b : layer) {
            for (std::size_t i = 0; i < n; ++i) {
                Content lower = b;
                lower[i] += 1;
                if (lower[0] > floor_bound || found.count(lower) || next.count(lower))
                    continue;
                if (is_weight_oracle(lambda, lower))
                    next.insert(std::move(lower));
            }
        }
        found.insert(next.begin(), next.end());
        layer.assign(next.begin(), next.end());
    }
    return {found.begin(), found.end()};
}

std::vector<Content> floor_of(const std::vector<Content>& weights, long floor)
{
    std::vector<Content> out;
    std::copy_if(weights.begin(), weights.end(), std::back_inserter(out),
        [&](const Content& b) { return b[0] == floor; });
    return out;
}

} // namespace affweights
