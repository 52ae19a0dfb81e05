#include "affweights/weyl_action.hpp"

#include "affweights/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

namespace affweights {

Content reflect(const HighestWeight& lambda, const Content& b, std::size_t i)
{
    const auto& data = lambda.data();
    Integer theta = lambda.labels()[i];
    for (std::size_t j = 0; j < b.size(); ++j)
        if (data.a(i, j) != 0)
            theta -= data.a(i, j) * b[j];
    Content out = b;
    out[i] += theta;
    return out;
}

Content apply_word(const HighestWeight& lambda, Content b, const ReflectionWord& word)
{
    for (std::size_t i : word)
        b = reflect(lambda, b, i);
    return b;
}

RootVector reflect_root(const CartanData& data, const RootVector& x, std::size_t i)
{
    Rational pairing = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
        pairing += data.a(i, j) * x[j];
    RootVector out = x;
    out[i] -= pairing;
    return out;
}

std::size_t default_orbit_cap()
{
    if (const char* env = std::getenv("WEIGHTS_MAX_ORBIT")) {
        try {
            const auto cap = std::stoull(env);
            if (cap > 0)
                return static_cast<std::size_t>(cap);
        } catch (const std::exception&) {
        }
        throw InvalidInput(std::string("WEIGHTS_MAX_ORBIT is not a positive integer: ") + env);
    }
    return 10'000'000;
}

std::vector<Orbit> finite_orbit(const HighestWeight& lambda, const std::vector<Content>& seeds, std::size_t cap)
{
    const std::size_t l = static_cast<std::size_t>(lambda.data().rank());
    std::set<Content> seen;
    std::vector<Orbit> orbits;
    for (const auto& seed : seeds) {
        if (seen.count(seed))
            continue;
        Orbit orbit {seed, {}};
        std::deque<Content> queue {seed};
        seen.insert(seed);
        while (!queue.empty()) {
            Content current = std::move(queue.front());
            queue.pop_front();
            for (std::size_t i = 1; i <= l; ++i) {
                Content next = reflect(lambda, current, i);
                if (seen.insert(next).second) {
                    if (seen.size() > cap)
                        throw ConsistencyError("orbit closure exceeded the cap of "
                            + std::to_string(cap) + " elements");
                    queue.push_back(std::move(next));
                }
            }
            orbit.elements.push_back(std::move(current));
        }
        std::sort(orbit.elements.begin(), orbit.elements.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

bool in_translation_lattice(const CartanData& data, const RootVector& alpha)
{
    if (alpha.size() != data.size() || alpha[0] != 0)
        return false;
    for (std::size_t i = 1; i < alpha.size(); ++i)
        if (!is_integral(alpha[i] * data.mark(0) / data.d(i)))
            return false;
    return true;
}

Content translate(const HighestWeight& lambda, const Content& b, const RootVector& alpha)
{
    const auto& data = lambda.data();
    if (!in_translation_lattice(data, alpha))
        throw NotInLattice("translation vector is not in the lattice M");
    const Rational k = lambda.level();
    const RootVector content = RootVector::from(b);
    // (eta|alpha) with eta = Lambda - sum b_i alpha_i
    const Rational eta_alpha = bilinear(lambda, alpha) - bilinear_rr(data, content, alpha);
    const Rational coeff = eta_alpha + bilinear_rr(data, alpha, alpha) * k / 2;
    // eta' = eta + k alpha - coeff delta  =>  b' = b - k alpha + coeff a
    RootVector out = content - k * alpha + coeff * RootVector::delta(data);
    if (!out.integral())
        throw ConsistencyError("translation produced a non-integral content");
    return out.to_content();
}

DominantReduction to_dominant(const HighestWeight& lambda, const Content& b)
{
    DominantReduction result {b, {}};
    for (;;) {
        const HubVector theta = content_to_hub(lambda, result.content);
        std::size_t i = 0;
        while (i < theta.size() && theta[i] >= 0)
            ++i;
        if (i == theta.size())
            return result;
        result.content[i] += theta[i];
        result.word.push_back(i);
    }
}

} // namespace affweights
