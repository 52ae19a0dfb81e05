#pragma once

#include "affweights/max_weights.hpp"

#include <vector>

namespace affweights {

/// Witness for the verdict on eta = Lambda - sum b_i alpha_i:
/// eta = t_alpha(zeta) - shift * delta with zeta a table representative.
struct MembershipCertificate {
    Content query;
    EtaTilde key;
    Content representative; // zeta
    Content difference;     // c with eta - zeta = sum c_i alpha_i
    RootVector alpha;       // element of M
    Rational zeta_alpha;    // (zeta | alpha)
    Rational alpha_alpha;   // (alpha | alpha)
    Integer shift;          // s(eta)
    Rational defect;        // defect of eta
    bool verdict = false;   // shift >= 0
};

/// Non-recursive delta-shift of any integral content, with the replay
/// identity checked. Throws NotEquivalentToLambda on a table miss and
/// ConsistencyError if the certificate does not replay.
MembershipCertificate delta_shift(const NbarTable& table, const Content& b);

/// eta in P(Lambda). Throws ConsistencyError if a positive verdict comes
/// with a negative content entry.
bool is_weight(const NbarTable& table, const Content& b);

/// b - s(eta) a, the maximal weight above eta.
Content max_weight_of(const NbarTable& table, const Content& b);

/// Real root w(alpha_i): the simple root reflected by word[0], then word[1], ...
RootVector real_root(const CartanData& data, std::size_t simple, const ReflectionWord& word = {});

struct StringProfile {
    RootVector root;
    std::vector<Content> weights; // lambda, lambda + root, ..., lambda + t root
    std::vector<Integer> shifts;  // delta-shift at each position
};

/// The root-string through b, walked in both directions while membership
/// holds. Throws NotAWeight if b itself is not a weight.
StringProfile string_profile(const NbarTable& table, const Content& b, const RootVector& root);

/// s_i = s_{t-i}.
bool is_palindromic(const std::vector<Integer>& shifts);

/// Constant, or strictly increasing to a central plateau and then strictly
/// decreasing.
bool is_unimodal_with_plateau(const std::vector<Integer>& shifts);

/// Labels of Lambda = sum_j Lambda_{charge_j} over A^(1)_{e-1}.
std::vector<Integer> multicharge_labels(int e, const std::vector<int>& multicharge);

/// Existence of the cyclotomic Hecke block with residue content b: the
/// weight Lambda - sum b_i alpha_i for A^(1)_{e-1} lies in P(Lambda).
bool block_exists(int e, const std::vector<int>& multicharge, const Content& content);

} // namespace affweights
