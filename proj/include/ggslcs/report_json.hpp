#pragma once

#include <json.hpp>

#include "ggslcs/checks.hpp"
#include "ggslcs/lower_central.hpp"
#include "ggslcs/schedule.hpp"

namespace ggs {

// Reports keep insertion order and contain only strings, booleans and
// integers, so a parse/re-serialize round trip is byte identical.
using Json = nlohmann::ordered_json;

Json to_json(const CheckResult& r, bool with_timings);
Json to_json(const SeriesReport& r, const IntervalSchedule* sched, bool full_orders);
Json to_json(const IntervalSchedule& s);

}  // namespace ggs
