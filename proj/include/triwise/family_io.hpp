#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "triwise/family.hpp"

namespace triwise {

// Family text format:
//
//   # comment
//   n=5
//   1,2
//   2,3,5   # trailing comments are allowed
//   -       # the empty set
//
// The first non-comment line fixes n; every later non-blank line is one
// member given as comma-separated elements of [n].

SetFamily parse_family_text(std::string_view text);
std::string format_family_text(const SetFamily& family);

/// Reads either the text format or a JSON document. JSON input may be a bare
/// family object {"n":..,"members":[[..],..]} or any report that embeds one
/// under "family" or "witness".
SetFamily read_family_file(const std::filesystem::path& path);
SetFamily parse_family_document(std::string_view text);
void write_family_file(const std::filesystem::path& path, const SetFamily& family);

}  // namespace triwise
