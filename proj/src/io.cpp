#include "rsinf/io.hpp"

namespace rsinf {

namespace {

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) throw InputError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(where + ": missing field \"" + key + "\"");
    return *it;
}

FieldElem elem(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return FieldElem(v.get<std::int64_t>());
    if (!v.is_string()) throw InputError(where + ": expected a scalar literal string");
    try {
        return FieldElem::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

std::vector<FieldElem> elems(const Json& v, const std::string& where) {
    if (!v.is_array()) throw InputError(where + ": expected an array");
    std::vector<FieldElem> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(elem(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Json partition_json(const Partition& p) {
    Json out = Json::array();
    for (int x : p.parts()) out.push_back(x);
    return out;
}

}  // namespace

WeightSpec parse_spec(std::string_view text) {
    const Json doc = parse_json(text);
    const Json& regions = field(doc, "regions", "spec");
    if (!regions.is_array()) throw InputError("regions: expected an array");

    std::vector<Region> out;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        const std::string at = "regions[" + std::to_string(i) + "]";
        const Json& r = regions[i];
        const Json& type = field(r, "type", at);
        if (!type.is_string()) throw InputError(at + ".type: expected a string");
        const auto t = type.get<std::string>();
        if (t == "finite") {
            out.push_back(FiniteRegion{elems(field(r, "values", at), at + ".values")});
        } else if (t == "omega") {
            out.push_back(OmegaRegion{elems(field(r, "exceptions", at), at + ".exceptions"),
                                      elem(field(r, "tail", at), at + ".tail")});
        } else if (t == "omega_star") {
            out.push_back(OmegaStarRegion{elem(field(r, "tail", at), at + ".tail"),
                                          elems(field(r, "exceptions", at), at + ".exceptions")});
        } else if (t == "zeta") {
            out.push_back(ZetaRegion{elem(field(r, "left_tail", at), at + ".left_tail"),
                                     elems(field(r, "exceptions", at), at + ".exceptions"),
                                     elem(field(r, "right_tail", at), at + ".right_tail")});
        } else {
            throw InputError(at + ".type: unknown region type \"" + t + "\"");
        }
    }
    try {
        return WeightSpec(std::move(out));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json spec_to_json(const WeightSpec& spec) {
    Json regions = Json::array();
    for (const auto& region : spec.regions()) {
        Json r;
        if (const auto* f = std::get_if<FiniteRegion>(&region)) {
            r["type"] = "finite";
            r["values"] = seq_to_json(f->values);
        } else if (const auto* o = std::get_if<OmegaRegion>(&region)) {
            r["type"] = "omega";
            r["exceptions"] = seq_to_json(o->exceptions);
            r["tail"] = o->tail.to_string();
        } else if (const auto* s = std::get_if<OmegaStarRegion>(&region)) {
            r["type"] = "omega_star";
            r["tail"] = s->tail.to_string();
            r["exceptions"] = seq_to_json(s->exceptions);
        } else {
            const auto& z = std::get<ZetaRegion>(region);
            r["type"] = "zeta";
            r["left_tail"] = z.left_tail.to_string();
            r["exceptions"] = seq_to_json(z.exceptions);
            r["right_tail"] = z.right_tail.to_string();
        }
        regions.push_back(std::move(r));
    }
    return Json{{"regions", std::move(regions)}};
}

EventuallyConstantSeq parse_block(std::string_view text) {
    const Json doc = parse_json(text);
    const Json& axis = field(doc, "axis", "block");
    if (!axis.is_string()) throw InputError("block.axis: expected a string");
    const auto a = axis.get<std::string>();
    const auto exceptions =
        doc.contains("exceptions") ? elems(doc["exceptions"], "block.exceptions") : std::vector<FieldElem>{};
    if (a == "neg") {
        if (doc.contains("right_tail")) throw InputError("block.right_tail: not allowed on axis neg");
        return EventuallyConstantSeq::neg(elem(field(doc, "left_tail", "block"), "block.left_tail"),
                                          exceptions);
    }
    if (a == "pos") {
        if (doc.contains("left_tail")) throw InputError("block.left_tail: not allowed on axis pos");
        return EventuallyConstantSeq::pos(exceptions,
                                          elem(field(doc, "right_tail", "block"), "block.right_tail"));
    }
    if (a == "all") {
        return EventuallyConstantSeq::all(elem(field(doc, "left_tail", "block"), "block.left_tail"),
                                          exceptions,
                                          elem(field(doc, "right_tail", "block"), "block.right_tail"));
    }
    throw InputError("block.axis: unknown axis \"" + a + "\"");
}

Json block_to_json(const EventuallyConstantSeq& f) {
    Json out;
    out["axis"] = to_string(f.axis());
    out["exceptions"] = seq_to_json(f.middle());
    if (f.left_base()) out["left_tail"] = f.left_base()->to_string();
    if (f.right_base()) out["right_tail"] = f.right_base()->to_string();
    return out;
}

TableauFamily parse_family(std::string_view text) {
    const Json doc = parse_json(text);
    const Json& list = doc.is_object() ? field(doc, "tableaux", "family") : doc;
    if (!list.is_array()) throw InputError("family: expected an array of tableaux");
    TableauFamily family;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string at = "tableaux[" + std::to_string(i) + "]";
        const Json& rows = field(list[i], "rows", at);
        if (!rows.is_array()) throw InputError(at + ".rows: expected an array");
        Tableau t;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            t.rows.push_back(elems(rows[j], at + ".rows[" + std::to_string(j) + "]"));
        }
        try {
            validate(t);
        } catch (const std::exception& e) {
            throw InputError(at + ": " + e.what());
        }
        family.tableaux.push_back(std::move(t));
    }
    try {
        validate(family);
    } catch (const std::exception& e) {
        throw InputError(std::string("family: ") + e.what());
    }
    return family;
}

Json family_to_json(const TableauFamily& family) {
    Json out = Json::array();
    for (const auto& t : family.tableaux) {
        Json rows = Json::array();
        for (const auto& row : t.rows) rows.push_back(seq_to_json(row));
        out.push_back(Json{{"class", t.anchor().to_string()}, {"rows", std::move(rows)}});
    }
    return out;
}

Json seq_to_json(std::span<const FieldElem> seq) {
    Json out = Json::array();
    for (const auto& x : seq) out.push_back(x.to_string());
    return out;
}

Json ideal_to_json(const IdealDescriptor& ideal) {
    if (ideal.is_zero()) return Json{{"ideal", "zero"}, {"reason", ideal.reason()}};
    const auto& q = ideal.quadruple();
    Json body;
    body["r"] = q.r;
    body["g"] = q.g;
    body["X"] = partition_json(q.X);
    body["Y"] = partition_json(q.Y);
    return Json{{"ideal", std::move(body)}};
}

}  // namespace rsinf
