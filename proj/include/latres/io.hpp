#pragma once

#include "latres/diagram.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace latres
{

/**
 * latdiag text format, version 1:
 *
 *     latdiag 1
 *     n <count>
 *     u <i>: <id> <id> ...     (one line per element, upper covers left to right)
 *     l <i>: <id> <id> ...     (one line per element, lower covers left to right)
 *
 * Blank lines and lines starting with '#' are ignored. Parse errors throw
 * ParseError carrying the offending line number. Structural validity beyond
 * the syntax is left to validate_well_formed().
 */
Diagram parse_diagram(std::istream& in);
Diagram parse_diagram(const std::string& text);
Diagram read_diagram(const std::filesystem::path& path);

void write_diagram(std::ostream& out, const Diagram& d);
std::string format_diagram(const Diagram& d);
void save_diagram(const std::filesystem::path& path, const Diagram& d);

} // namespace latres
