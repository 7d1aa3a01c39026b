#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cgaskey/clebsch_gordan.hpp"
#include "cgaskey/family.hpp"
#include "cgaskey/graded_operator.hpp"
#include "cgaskey/report.hpp"

namespace cgaskey {

using Json = nlohmann::ordered_json;

/// Rationals are strings "num/den" (den omitted when 1). Parsing throws ParseError.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// Array of rows.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"degree", "blocks": [{"N", "rows", "cols", "entries"}]}
Json to_json(const GradedOperator& op);

/// {"family", "n_max", "parameters": {...}} with derived parameters included.
Json to_json(const FamilyInstance& inst);
FamilyInstance instance_from_json(const Json& j);

Json to_json(const Check& c);
Json to_json(const Report& r);

Json to_json(const CGBlock& b);
CGBlock cg_block_from_json(const Json& j);

Json to_json(const WeightData& w);
WeightData weight_data_from_json(const Json& j);

/// CG blocks and weights for N <= n_max.
struct Table {
    FamilyInstance instance;
    std::vector<CGBlock> blocks;
    std::vector<WeightData> weights;
};

Table make_table(const FamilyInstance& inst);
Json to_json(const Table& t);
Table table_from_json(const Json& j);

}  // namespace cgaskey
