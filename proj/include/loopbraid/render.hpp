#pragma once

#include <string>

#include "loopbraid/braid_words.hpp"

namespace loopbraid {

/// Top-to-bottom strand drawing, three text rows per token. Classical
/// crossings show only the over-strand in the middle row (the under-strand is
/// broken), welded crossings show 'o', and a wen on strand i shows '*'.
std::string render_ascii(const BraidWord& w);

/// Same layout as an SVG document. Best-effort visualization only.
std::string render_svg(const BraidWord& w);

}  // namespace loopbraid
