#pragma once

// Serialization helpers shared by the CLI and the sweep driver.
//
// Numbers are printed with 12 significant digits and −0 is normalized to 0,
// so identical inputs produce byte-identical reports. Complex numbers are
// rendered as "a+bi" / "a-bi".

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "plancherel/characters.hpp"
#include "plancherel/harmonic.hpp"

namespace plancherel {

/// Dispatches to make_named_group; kept as the front-end entry point.
GroupPtr parse_group_spec(std::string_view spec);

/// count seeded functions with real/imaginary parts uniform in [-1, 1).
/// Function i, element x is a pure function of (seed, i, x).
std::vector<GroupFunction> random_test_functions(const GroupPtr& group, std::size_t count,
                                                 std::uint64_t seed);

std::string format_real(double x);
std::string format_complex(cplx z);
/// Inverse of format_complex (accepts what format_complex emits).
cplx parse_complex(std::string_view text);

/// A JSON number rounded to 12 significant digits (null for non-finite).
nlohmann::json json_number(double x);

/// CSV: header "degree,class_0,…", then one line per irrep: degree followed
/// by one complex value per class.
std::string table_csv(const CharacterTable& table);
nlohmann::json table_json(const CharacterTable& table);

/// FNV-1a 64-bit, rendered as 16 hex digits.
std::string digest_hex(std::string_view bytes);

}  // namespace plancherel
