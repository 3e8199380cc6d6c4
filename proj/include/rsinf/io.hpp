#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rsinf/classifier.hpp"
#include "rsinf/rs_infinite.hpp"
#include "rsinf/tableau.hpp"

namespace rsinf {

using Json = nlohmann::ordered_json;

// Input errors carry the offending location, e.g. "regions[1].tail: ...".
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

WeightSpec parse_spec(std::string_view text);
Json spec_to_json(const WeightSpec& spec);

// {"axis": ..., "exceptions": [...], "left_tail": ..., "right_tail": ...}
EventuallyConstantSeq parse_block(std::string_view text);
Json block_to_json(const EventuallyConstantSeq& f);

// [{"class": ..., "rows": [[...], ...]}, ...]
TableauFamily parse_family(std::string_view text);
Json family_to_json(const TableauFamily& family);

Json seq_to_json(std::span<const FieldElem> seq);
Json ideal_to_json(const IdealDescriptor& ideal);

}  // namespace rsinf
