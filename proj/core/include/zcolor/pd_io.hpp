#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zcolor/diagram.hpp"

namespace zcolor {

struct ParsedPd {
  Diagram diagram;
  LabelMap relabel;  // label in the text -> canonical label
};

/// Parses PD text: whitespace-separated `X[a,b,c,d]` terms (slots listed
/// counterclockwise from the incoming under-edge), `#` comments, and optional
/// `% component: a1 a2 ...` lines that pin a component's orientation. Signs are
/// derived from the orientation. Throws ParseError or DiagramError.
ParsedPd parse_pd_with_labels(std::string_view text);
Diagram parse_pd(std::string_view text);
Diagram read_pd_file(const std::string& path);

/// Canonical text: one `% component:` line per component, then the sorted
/// crossings on one line.
std::string serialize_pd(const Diagram& d);

}  // namespace zcolor
