#pragma once

#include <functional>
#include <string>

namespace mitosis {

/// Draws a grid of 3-character cells with ASCII borders. Cells for which
/// `allowed` is false are left out entirely; filled cells show a "+".
/// Rows and columns are 1-based. Trailing spaces are stripped from each line.
std::string render_grid(int rows, int cols, const std::function<bool(int, int)>& allowed,
                        const std::function<bool(int, int)>& filled);

}  // namespace mitosis
