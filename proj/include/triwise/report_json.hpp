#pragma once

#include <string_view>

#include <json.hpp>

#include "triwise/claims.hpp"
#include "triwise/family.hpp"
#include "triwise/search.hpp"
#include "triwise/shift.hpp"
#include "triwise/stability.hpp"
#include "triwise/thresholds.hpp"
#include "triwise/walk.hpp"

namespace triwise {

using Json = nlohmann::ordered_json;

/// Rationals are written as "num/den" strings and intervals as decimal
/// endpoint strings rounded outward.
Json to_json(const Rational& value);
Json to_json(const Interval& value, int digits = 30);
Json to_json(const Subset& value);
Json to_json(const SizeProfile& profile);

/// {"n": n, "members": [[1,2], ...]}. With `generators` the members are the
/// minimal generators of an up-set and readers take the up-closure.
Json family_to_json(const SetFamily& family, bool generators = false);
SetFamily family_from_json(const Json& value);
/// Accepts a bare family object or a report embedding one under "family" or
/// "witness".
SetFamily family_from_json_document(std::string_view text);

Json to_json(const IntersectionCheck& check);
Json to_json(const SaturationTrace& trace);
Json to_json(const HitRecord& hits);
Json to_json(const ThresholdParams& params);
Json to_json(const ClaimPoint& point);
Json to_json(const ClaimReport& report, bool include_points = true);
Json to_json(const SearchReport& report);
Json to_json(const LemmaAudit& audit);
Json to_json(const StabilityConstants& constants);
Json to_json(const StabilityAudit& audit);

}  // namespace triwise
