#pragma once

#include <string>
#include <string_view>

#include "ep/nset.hpp"

namespace ep {

/// One JSON object, keys in the order n, p, e, member, class, witness.
/// Unclassified records carry class "member" or "nonmember".
std::string record_to_json(const MembershipRecord& r);
MembershipRecord record_from_json(std::string_view line);

std::string csv_header();
std::string record_to_csv(const MembershipRecord& r);
MembershipRecord record_from_csv(std::string_view line);

}  // namespace ep
