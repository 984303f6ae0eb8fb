#pragma once

#include <optional>
#include <string>

#include "p3d/braid.hpp"

namespace p3d {

// Input of one job: "u=s2; beta=-2 1 2 1 -1", "le=++/+.", with an optional
// "n=4". Fields are separated by ';' or newlines. The rank is inferred when
// absent. Parse errors cite byte offsets into text.
struct JobInput {
  int n = 0;
  Perm u;
  Word w;
  std::optional<LeDiagram> le;
};

JobInput parse_job(const std::string& text, int n = 0);

}  // namespace p3d
