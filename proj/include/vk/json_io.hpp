#pragma once

#include <json.hpp>

#include "vk/diagram.hpp"
#include "vk/families.hpp"
#include "vk/invariants.hpp"
#include "vk/moves.hpp"
#include "vk/unknotting.hpp"

namespace vk {

using ordered_json = nlohmann::ordered_json;

// {"components":[[{"chord":1,"passage":"O","sign":1},...],...]}
ordered_json diagram_to_json(const GaussDiagram& d);

ordered_json writhe_to_json(const WritheVector& w);
ordered_json span_to_json(const SpanReport& span);
ordered_json ell_to_json(const EllReport& ell);

// {"writhe": {...}, "polynomial": "...", "span": {...}, "ell": n,
//  "lower_bound": [n,m], "minimal": bool, ...}
ordered_json invariants_report(const GaussDiagram& d);

ordered_json move_to_json(const Move& m);
Move move_from_json(const ordered_json& j);
ordered_json trace_to_json(const MoveTrace& t);
MoveTrace trace_from_json(const ordered_json& j);

ordered_json plan_to_json(const UnknottingPlan& p);
UnknottingPlan plan_from_json(const ordered_json& j);
ordered_json certificate_to_json(const GaussDiagram& d, const UnknottingCertificate& c);

ordered_json profile_to_json(const ExpectedProfile& p);
ordered_json search_result_to_json(const SearchResult& r);
ordered_json theorem_report_to_json(const TheoremReport& r);

}  // namespace vk
