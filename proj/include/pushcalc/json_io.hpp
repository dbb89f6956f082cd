#pragma once

#include <json.hpp>

#include "pushcalc/bigint.hpp"
#include "pushcalc/group_ring.hpp"
#include "pushcalc/mapping_orbits.hpp"
#include "pushcalc/matrix_embedding.hpp"
#include "pushcalc/point_push.hpp"
#include "pushcalc/wedge_monoid.hpp"

namespace pushcalc {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

/// [[coefficient, "word"], ...] in shortlex order.
Json ring_to_json(const RingElem& a);
RingElem ring_from_json(const Json& j, int rank = 0);

/// {"t1": ring, "p1": ring, ...}
Json module_to_json(const ModuleVec& v);
ModuleVec module_from_json(const Json& j, int rank = 0);

/// {"g", "d", "labels", "circles", "spheres"}
Json self_map_to_json(const SelfMapClass& h);
SelfMapClass self_map_from_json(const Json& j);

/// {"slope": [...], "blocks": [{"row", "col", "column"}]}
Json block_matrix_to_json(const ShiftedBlockMatrix& a);

/// {"pi1_gens", "classes", "action", "reflection", "charge", "f_classes"}
Json target_to_json(const TargetModel& t);
TargetModel target_from_json(const Json& j);

Json kernel_report_to_json(const KernelReport& r);

}  // namespace pushcalc
