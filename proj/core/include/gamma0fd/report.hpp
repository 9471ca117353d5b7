#pragma once

#include <string>

#include "gamma0fd/cosets.hpp"

namespace gamma0fd {

// Compact JSON documents for the command-line surface.  Key order is
// fixed ("n" first, payload, "schema" last) and all values are integers
// or strings, so re-parsing and re-serializing is byte-identical.
inline constexpr int report_schema = 1;

std::string width_json(modulus n);
std::string cosets_json(const coset_table& t);
std::string cusps_json(const coset_table& t);
std::string arcs_json(const coset_table& t);
std::string gluing_json(const coset_table& t);
std::string genus_json(const coset_table& t);

}  // namespace gamma0fd
