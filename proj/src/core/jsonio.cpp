#include "core/jsonio.hpp"

#include <cmath>
#include <cstdio>

#include "core/error.hpp"

namespace fusionlens {

namespace {

void dump_value(const json& value, std::string& out) {
    switch (value.type()) {
        case json::value_t::null:
            out += "null";
            break;
        case json::value_t::boolean:
            out += value.get<bool>() ? "true" : "false";
            break;
        case json::value_t::number_integer:
            out += std::to_string(value.get<long long>());
            break;
        case json::value_t::number_unsigned:
            out += std::to_string(value.get<unsigned long long>());
            break;
        case json::value_t::number_float:
            out += format_double(value.get<double>());
            break;
        case json::value_t::string:
            out += json(value.get<std::string>()).dump();
            break;
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : value) {
                if (!first) out += ',';
                first = false;
                dump_value(item, out);
            }
            out += ']';
            break;
        }
        case json::value_t::object: {
            // nlohmann objects iterate in key-sorted order already.
            out += '{';
            bool first = true;
            for (auto it = value.begin(); it != value.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += json(it.key()).dump();
                out += ':';
                dump_value(it.value(), out);
            }
            out += '}';
            break;
        }
        default:
            raise(ErrorCode::invalid_argument, "unsupported JSON value type");
    }
}

}  // namespace

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        raise(ErrorCode::invalid_argument, "non-finite number in JSON output");
    }
    if (value == 0.0) value = 0.0;  // collapse -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string dump_canonical(const json& value) {
    std::string out;
    dump_value(value, out);
    return out;
}

json parse_json(const std::string& text, const std::string& what) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) {
        raise(ErrorCode::parse, "invalid JSON in " + what);
    }
    return parsed;
}

}  // namespace fusionlens
