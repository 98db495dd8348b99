#pragma once

#include <string_view>

#include "termheat/corpus.hpp"

namespace termheat::testing {

// d1..d5 become ordinals 0..4.
inline constexpr std::string_view kTiny5 =
    R"({"id":"d1","title":"violence report","terms":["A","B","C"]}
{"id":"d2","title":"violence study","terms":["A","B"]}
{"id":"d3","title":"violence essay","terms":["A","C"]}
{"id":"d4","title":"peace note","terms":["B","C"]}
{"id":"d5","title":"violence memo","terms":["A"]}
)";

inline DocumentSet tiny5() { return parse_corpus(kTiny5).documents; }

}  // namespace termheat::testing
