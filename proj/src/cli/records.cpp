#include "ep/records.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace ep {

namespace {

std::string class_label(const MembershipRecord& r) {
  if (r.classification) return to_string(*r.classification);
  return r.member ? "member" : "nonmember";
}

void apply_class_label(MembershipRecord& r, const std::string& label) {
  if (label == "member") {
    r.classification.reset();
  } else {
    r.classification = parse_member_class(label);
  }
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " field: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string record_to_json(const MembershipRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["e"] = r.e;
  j["member"] = r.member;
  j["class"] = class_label(r);
  j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

MembershipRecord record_from_json(std::string_view line) {
  const auto j = nlohmann::json::parse(line);
  MembershipRecord r;
  r.n = j.at("n").get<std::uint64_t>();
  r.p = j.at("p").get<std::uint32_t>();
  r.e = j.at("e").get<std::uint64_t>();
  r.member = j.at("member").get<bool>();
  apply_class_label(r, j.at("class").get<std::string>());
  if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::uint64_t>();
  return r;
}

std::string csv_header() { return "n,p,e,member,class,witness"; }

std::string record_to_csv(const MembershipRecord& r) {
  std::string out = std::to_string(r.n) + "," + std::to_string(r.p) + "," + std::to_string(r.e) + "," +
                    (r.member ? "true" : "false") + "," + class_label(r) + ",";
  if (r.witness) out += std::to_string(*r.witness);
  return out;
}

MembershipRecord record_from_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (cells.size() != 6) throw std::invalid_argument("CSV record needs 6 fields");
  MembershipRecord r;
  r.n = parse_u64(cells[0], "n");
  r.p = static_cast<std::uint32_t>(parse_u64(cells[1], "p"));
  r.e = parse_u64(cells[2], "e");
  if (cells[3] == "true") {
    r.member = true;
  } else if (cells[3] == "false") {
    r.member = false;
  } else {
    throw std::invalid_argument("bad member field");
  }
  apply_class_label(r, std::string(cells[4]));
  if (!cells[5].empty()) r.witness = parse_u64(cells[5], "witness");
  return r;
}

}  // namespace ep
