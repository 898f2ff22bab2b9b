#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "trid/group.hpp"
#include "trid/trace_system.hpp"

namespace trid {

// Group table document (JSON):
//   {"order": n, "mul": [[...], ...], "names": ["e", ...], "label": "..."}
// "names" and "label" are optional.

FiniteGroup parse_group_document(std::string_view text, const TableOptions& opts = {});
std::string group_document(const FiniteGroup& g);

/// A family string ("C3", "S3", ...) or the path of a group table document.
FiniteGroup load_group(const std::string& spec, const TableOptions& opts = {});

enum class IdentityFormat { text, structured };

/// Text form, one term per line:
///   9·ζ_{1,e}ζ_{2,e}ζ_{3,e} = 3·ζ_{1,e}ζ_{2,e}tr[ζ_{3,e}]
///     − 3·ζ_{1,e}tr[ζ_{2,e}ζ_{3,e}]
///     + ...
/// Unit coefficients are written without the "1·". Element names must not
/// contain '}' or ']'.
std::string render_text(const TraceIdentity& id, const FiniteGroup& g);
TraceIdentity parse_text(std::string_view text, const FiniteGroup& g, Index m);

/// Structured form (JSON):
///   {"group": "C3" | {table document}, "m": 3, "target": ["e", "e", "e"],
///    "upsilon": 9, "terms": [{"gamma": 3, "k": 3, "l": 4, "rep": [...]}]}
/// Integers outside the int64 range are written as decimal strings.
std::string render_structured(const TraceIdentity& id, const FiniteGroup& g);

struct ParsedIdentity {
  std::shared_ptr<const FiniteGroup> group;
  Index m = 0;
  TraceIdentity identity;
};
ParsedIdentity parse_structured(std::string_view text, const TableOptions& opts = {});

std::string render_identity(const TraceIdentity& id, const FiniteGroup& g, IdentityFormat format);

}  // namespace trid
