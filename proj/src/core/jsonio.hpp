#ifndef FUSIONLENS_CORE_JSONIO_HPP
#define FUSIONLENS_CORE_JSONIO_HPP

#include <string>

#include <json.hpp>

namespace fusionlens {

using json = nlohmann::json;

// Canonical serialization used for every artifact this library writes:
// object keys in sorted order, floating-point numbers rendered with six
// significant digits ("%.6g"), -0 normalized to 0. Reruns with identical
// inputs therefore produce byte-identical files. Non-finite numbers are
// rejected.
std::string dump_canonical(const json& value);

// "%.6g" rendering of a single double, shared with dump_canonical.
std::string format_double(double value);

json parse_json(const std::string& text, const std::string& what);

}  // namespace fusionlens

#endif
