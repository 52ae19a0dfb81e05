#pragma once

#include "affweights/membership.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace affweights {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
/// {"num": ..., "den": ...}
Json to_json(const Rational& q);
Json to_json(const std::vector<Integer>& xs);
Json to_json(const Content& b);
Json to_json(const HubVector& theta);
Json to_json(const RootVector& x);
Json to_json(const ReflectionWord& word);
Json to_json(const MembershipCertificate& cert);
Json to_json(const StringProfile& profile);

/// {"lambda", "k", "entries": [{"etaTilde", "content", "hub", "defect",
/// "orbit", "tClass"}...]} with entries in residue-tuple order.
Json to_json(const NbarTable& table);

/// Integers outside the int64 range are written as decimal strings.
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

/// "(0,1,1)"
std::string format_content(const Content& b);
/// "[3,-2,3]"
std::string format_hub(const HubVector& theta);
/// "-alpha_1 + 1/2 alpha_2", or "0"
std::string format_root(const RootVector& x);

/// Aligned text rendering of the orbit table: one row per element of the
/// closure with its hub, reflections, defect, residue tuple and a '*' on
/// each T-class representative.
void print_nbar_table(std::ostream& out, const NbarTable& table);

} // namespace affweights
