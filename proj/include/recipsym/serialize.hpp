#pragma once

#include "recipsym/certificate.hpp"
#include "recipsym/enclosure.hpp"
#include "recipsym/sigma.hpp"
#include "recipsym/sweep.hpp"

#include <json.hpp>

#include <string>

namespace recipsym {

using Json = nlohmann::json;

// Rationals serialize as strings ("num/den" reduced, or "num" alone).
Json to_json(const Enclosure& enc);
Json to_json(const TableEntry& entry);
Json table_json(const SigmaTable& table);
std::string table_csv(const SigmaTable& table);

Json to_json(const InequalityReport& report);
Json to_json(const BoundStep& step);
Json to_json(const Certificate& cert);

Json to_json(const SweepReport& report);
Json to_json(const ConjectureReport& report);
std::string hits_csv(const SweepReport& report);
std::string hits_csv(const ConjectureReport& report);

}  // namespace recipsym
