#include "cgaskey/serialize.hpp"

#include "cgaskey/errors.hpp"

namespace cgaskey {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' is not an integer");
    return v.get<int>();
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a string");
    return Scalar::parse(j.get<std::string>());
}

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

Vector vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("vector must be an array");
    Vector out;
    for (const auto& e : j) out.push_back(scalar_from_json(e));
    return out;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.front().size();
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto row = vector_from_json(j[r]);
        if (row.size() != cols) throw ParseError("matrix rows have different lengths");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

Json to_json(const GradedOperator& op) {
    Json blocks = Json::array();
    for (int N : op.levels()) {
        const Matrix& b = op.block(N);
        blocks.push_back({{"N", N}, {"rows", b.rows()}, {"cols", b.cols()}, {"entries", to_json(b)}});
    }
    return {{"degree", op.degree()}, {"blocks", std::move(blocks)}};
}

Json to_json(const FamilyInstance& inst) {
    Json params = Json::object();
    for (const auto& [name, value] : inst.parameters()) params[name] = to_json(value);
    return {{"family", std::string(to_string(inst.kind()))}, {"n_max", inst.n_max()}, {"parameters", std::move(params)}};
}

FamilyInstance instance_from_json(const Json& j) {
    const Json& fam = field(j, "family");
    if (!fam.is_string()) throw ParseError("field 'family' is not a string");
    const FamilyKind kind = parse_family_kind(fam.get<std::string>());
    const Json& params = field(j, "parameters");
    if (!params.is_object()) throw ParseError("field 'parameters' is not an object");
    ParameterMap given;
    for (const auto& name : free_parameters(kind)) {
        if (!params.contains(name)) throw ParseError("missing parameter '" + name + "'");
        given[name] = scalar_from_json(params.at(name));
    }
    auto inst = FamilyInstance::from_parameters(kind, given, int_field(j, "n_max"));
    for (const auto& [name, value] : inst.parameters()) {
        if (params.contains(name) && scalar_from_json(params.at(name)) != value) {
            throw ParseError("derived parameter '" + name + "' does not match the free parameters");
        }
    }
    return inst;
}

Json to_json(const Check& c) {
    Json out = {{"name", c.name},
                {"status", to_string(c.status)},
                {"pass", c.passed()},
                {"checked_range", c.checked_range},
                {"identities", c.identities}};
    if (c.witness) {
        Json idx = Json::object();
        for (const auto& [k, v] : c.witness->indices) idx[k] = v;
        out["witness"] = {{"indices", std::move(idx)},
                          {"lhs", c.witness->lhs},
                          {"rhs", c.witness->rhs},
                          {"detail", c.witness->detail}};
    }
    if (!c.note.empty()) out[c.status == CheckStatus::Skipped ? "reason" : "note"] = c.note;
    return out;
}

Json to_json(const Report& r) {
    Json checks = Json::array();
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& c : r.checks) {
        checks.push_back(to_json(c));
        switch (c.status) {
            case CheckStatus::Pass: ++passed; break;
            case CheckStatus::Fail: ++failed; break;
            case CheckStatus::Skipped: ++skipped; break;
        }
    }
    return {{"suite", r.name},
            {"pass", r.passed()},
            {"counts", {{"passed", passed}, {"failed", failed}, {"skipped", skipped}}},
            {"identities", r.identities()},
            {"checks", std::move(checks)}};
}

Json to_json(const CGBlock& b) { return {{"N", b.N}, {"P", to_json(b.P)}}; }

CGBlock cg_block_from_json(const Json& j) {
    CGBlock b{int_field(j, "N"), matrix_from_json(field(j, "P"))};
    const auto dim = static_cast<std::size_t>(b.N + 1);
    if (b.N < 0 || b.P.rows() != dim || b.P.cols() != dim) throw ParseError("CG block has the wrong shape");
    return b;
}

Json to_json(const WeightData& w) {
    return {{"N", w.N}, {"omega", to_json(w.omega)}, {"omega_prime", to_json(w.omega_prime)}, {"normalization", "omega_0=1"}};
}

WeightData weight_data_from_json(const Json& j) {
    return {int_field(j, "N"), vector_from_json(field(j, "omega")), vector_from_json(field(j, "omega_prime"))};
}

Table make_table(const FamilyInstance& inst) {
    Table t{inst, {}, {}};
    for (int N = 0; N <= inst.n_max(); ++N) {
        t.blocks.push_back(cg_block(inst, N));
        t.weights.push_back(orthogonality_weights(t.blocks.back()));
    }
    return t;
}

Json to_json(const Table& t) {
    Json blocks = Json::array();
    for (const auto& b : t.blocks) blocks.push_back(to_json(b));
    Json weights = Json::array();
    for (const auto& w : t.weights) weights.push_back(to_json(w));
    return {{"instance", to_json(t.instance)}, {"blocks", std::move(blocks)}, {"weights", std::move(weights)}};
}

Table table_from_json(const Json& j) {
    Table t{instance_from_json(field(j, "instance")), {}, {}};
    const Json& blocks = field(j, "blocks");
    const Json& weights = field(j, "weights");
    if (!blocks.is_array() || !weights.is_array()) throw ParseError("blocks and weights must be arrays");
    for (const auto& b : blocks) t.blocks.push_back(cg_block_from_json(b));
    for (const auto& w : weights) t.weights.push_back(weight_data_from_json(w));
    return t;
}

}  // namespace cgaskey
