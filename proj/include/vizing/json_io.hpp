#ifndef VIZING_JSON_IO_HPP
#define VIZING_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "vizing/certificate.hpp"
#include "vizing/f_system.hpp"
#include "vizing/polynomial.hpp"

namespace viz {

using json = nlohmann::ordered_json;

/// Schema: { "d", "m", "F", "ldl", "rows", "provenance", "anchor_note",
/// "version": 1 } with rationals rendered "p/q" (or "p" when q = 1).
json certificate_to_json(const Certificate& c);
/// Throws std::runtime_error on malformed input.
Certificate certificate_from_json(const json& j);

json fsystem_to_json(const FSystem& fs);
json gb_to_json(const std::vector<Polynomial>& basis);
json verdict_to_json(const Verdict& v);

/// Canonical serialization used for files and --json output: two-space
/// indent plus trailing newline, so parse -> re-serialize is byte-identical.
std::string dump_canonical(const json& j);

void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

}  // namespace viz

#endif  // VIZING_JSON_IO_HPP
