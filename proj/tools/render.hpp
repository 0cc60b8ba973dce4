#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "kucheck/claims.hpp"
#include "kucheck/explorer.hpp"

namespace kuc::render {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json };

Json event_json(const Model& m, const Event& e);
Json model_json(const Model& m);  // bare {"states":...,"P":...} object
Json model_record(const Model& m);
Json match_record(const Match& match);
Json violation_record(const Violation& v);
Json property_record(const Model& m, const PropertyReport& r);
Json claim_record(const Model& m, const ClaimReport& r);
Json error_record(const std::string& message);

void print_property_table(std::ostream& out, const Model& m,
                          const std::vector<PropertyReport>& reports);
void print_claim_table(std::ostream& out, const Model& m, const ClaimReport& report);

}  // namespace kuc::render
