#pragma once

#include "affweights/weight_space.hpp"

#include <cstddef>
#include <vector>

namespace affweights {

using ReflectionWord = std::vector<std::size_t>;

/// s_i: eta -> eta - <h_i, eta> alpha_i, on contents: b_i += theta_i.
Content reflect(const HighestWeight& lambda, const Content& b, std::size_t i);

/// Applies s_{word[0]} first, then s_{word[1]}, ...
Content apply_word(const HighestWeight& lambda, Content b, const ReflectionWord& word);

/// s_i on the root span: x - <h_i, x> alpha_i.
RootVector reflect_root(const CartanData& data, const RootVector& x, std::size_t i);

/// Default cap on the number of elements an orbit closure may produce;
/// WEIGHTS_MAX_ORBIT overrides the built-in 10^7.
std::size_t default_orbit_cap();

struct Orbit {
    Content seed;
    std::vector<Content> elements; // sorted, contains seed
};

/// Closure of each seed under s_1..s_l (the finite Weyl group). Seeds that
/// fall in an earlier seed's orbit are not repeated. Throws ConsistencyError
/// if more than cap elements are produced in total.
std::vector<Orbit> finite_orbit(const HighestWeight& lambda, const std::vector<Content>& seeds,
    std::size_t cap = default_orbit_cap());

/// True if alpha lies in M = sum_i Z d_i alpha_i / a_0 (zero alpha_0 part).
bool in_translation_lattice(const CartanData& data, const RootVector& alpha);

/// t_alpha(eta) = eta + k alpha - ((eta|alpha) + (alpha|alpha) k / 2) delta.
/// Throws NotInLattice if alpha is not in M, ConsistencyError if the result
/// is not integral.
Content translate(const HighestWeight& lambda, const Content& b, const RootVector& alpha);

struct DominantReduction {
    Content content;
    ReflectionWord word;
};

/// Reflects at the smallest index with negative hub entry until the hub is
/// positive.
DominantReduction to_dominant(const HighestWeight& lambda, const Content& b);

} // namespace affweights
