#pragma once

// Textual formats: presentation files (.pc) and serialized groups (.grp).
// Both grammars are documented in docs/FORMATS.md.

#include <iosfwd>
#include <string>
#include <string_view>

#include "nilaut/pcgroup.hpp"

namespace nilaut {

struct PresentationFile {
  PcPresentation presentation;
  std::string name;
};

// Throws ParseError carrying the 1-based line and column of the problem.
PresentationFile parse_presentation(std::string_view text);
PresentationFile read_presentation_file(const std::string& path);

// Parses `x^2 * y^-1 * u` against the presentation's generator names; `1` is the empty word.
Word parse_word(const PcPresentation& pres, std::string_view text);

void write_group(std::ostream& os, const FiniteGroup& g);
std::string serialize_group(const FiniteGroup& g);
// Validates the table like build_group does (full scan up to `full_scan_cap`).
FiniteGroup parse_group(std::string_view text, std::size_t full_scan_cap = kDefaultFullScanCap);
FiniteGroup read_group_file(const std::string& path, std::size_t full_scan_cap = kDefaultFullScanCap);

std::string read_text_file(const std::string& path);

}  // namespace nilaut
