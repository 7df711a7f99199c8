#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "ordcalc/abgroup.hpp"
#include "ordcalc/ahss.hpp"
#include "ordcalc/classify.hpp"
#include "ordcalc/group.hpp"
#include "ordcalc/superalgebra.hpp"
#include "ordcalc/supercohomology.hpp"

namespace ordcalc {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);

// Inputs.  Groups: {"cyclic": m} | {"symmetric": n} | {"table": [[..]], "labels": [..]}
// | {"permutations": [[..], ..], "degree": d} | {"product": [g, h]}.
FiniteGroup group_from_json(const Json& j);
// {"orientation": [0, 1, ..]} or a bare array
TimeReversalTag time_reversal_from_json(const Json& j, const FiniteGroup& g);
// {"points": n, "action": [[..] per element]} | {"fixed": n} | {"regular": true}
GSet gset_from_json(const Json& j, const FiniteGroup& g);
// {"components": [{"group": .., "objects": k}]} | {"discrete": n} | {"classifying": group} | {"point": true}
FiniteGroupoid groupoid_from_json(const Json& j);
// {"group": .., "eps": id}, or an array of those (one per component)
std::vector<SuperGroup> supergroups_from_json(const Json& j);
// {dim, parity: [..], unit: index or [..], field: "Q" | "Q(i)", c: [[i, j, k, "value"], ..]}
SuperAlgebra algebra_from_json(const Json& j);
QIMatrix matrix_from_json(const Json& j);

// Outputs.
Json to_json(const AbGroupExpr& g);
Json to_json(const SuperAlgebra& a);
Json to_json(const Page& p);
Json to_json(const SHResult& r);
Json to_json(const BosonicReport& r);
Json to_json(const ClassifyResponse& r);
Json to_json(const ZeroOneResult& r);
Json to_json(const TableResult& t);
Json to_json(const BrauerClass& c);

}  // namespace ordcalc
