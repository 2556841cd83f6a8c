#include "mitosis/render.hpp"

namespace mitosis {

std::string render_grid(int rows, int cols, const std::function<bool(int, int)>& allowed,
                        const std::function<bool(int, int)>& filled) {
  auto ok = [&](int r, int c) {
    return r >= 1 && r <= rows && c >= 1 && c <= cols && allowed(r, c);
  };
  std::string out;
  auto emit = [&](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  };
  for (int r = 1; r <= rows + 1; ++r) {
    // Border above row r.
    std::string border;
    for (int c = 1; c <= cols + 1; ++c) {
      bool corner = ok(r - 1, c - 1) || ok(r - 1, c) || ok(r, c - 1) || ok(r, c);
      border += corner ? '+' : ' ';
      if (c <= cols) border += (ok(r - 1, c) || ok(r, c)) ? "---" : "   ";
    }
    emit(border);
    if (r > rows) break;
    std::string body;
    for (int c = 1; c <= cols + 1; ++c) {
      body += (ok(r, c - 1) || ok(r, c)) ? '|' : ' ';
      if (c <= cols) body += (ok(r, c) && filled(r, c)) ? " + " : "   ";
    }
    emit(body);
  }
  return out;
}

}  // namespace mitosis
