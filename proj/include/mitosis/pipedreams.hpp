#pragma once

// Pipe dreams for GL_n (faces of GZ through a_lambda) and skew pipe dreams for
// Sp_2n (faces of the adapted-string cone C_0), with their mitosis rules.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mitosis/instances.hpp"
#include "mitosis/parapolytope.hpp"

namespace mitosis {

class PipeDreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (row, column), both 1-based.
using Cell = std::pair<int, int>;

/// (2n-1) x n table; cell (i, j) is allowed when n - j < i < n + j.
struct SkewPipeDream {
  int n = 0;
  std::set<Cell> crosses;

  SkewPipeDream() = default;
  SkewPipeDream(int n, std::set<Cell> crosses);
  static SkewPipeDream full(int n);

  static bool allowed(int n, int row, int col) { return col >= 1 && col <= n && n - col < row && row < n + col; }
  bool has(int row, int col) const { return crosses.count({row, col}) > 0; }
  auto operator<=>(const SkewPipeDream&) const = default;
};

/// Cell of x^k_l.
Cell skew_cell_of(int k, int l, int n);
/// Inverse of skew_cell_of.
std::pair<int, int> skew_label_of(const Cell& cell, int n);

SkewPipeDream face_to_skew(const Parapolytope& cone, const Face& g);
Face skew_to_face(const Parapolytope& cone, const SkewPipeDream& d);

/// Faces of SP_lambda through 0 as size-2 skew pipe dreams: 0 = y1 at (2,1);
/// 0 = y4, y4 = y3/2, y3 = 2y2 down column 2.
SkewPipeDream sp4_face_to_skew(const Parapolytope& sp, const Face& g);
Face sp4_skew_to_face(const Parapolytope& sp, const SkewPipeDream& d);

std::set<SkewPipeDream> skew_mitosis(const SkewPipeDream& d, int i);
std::string render(const SkewPipeDream& d);

/// Right-justified staircase: row i has columns i..n-1. Cell (i, c) is the
/// equation t^i_{n-c} = t^{i-1}_{n-c} (t^0 = lambda).
struct GLPipeDream {
  int n = 0;
  std::set<Cell> crosses;

  GLPipeDream() = default;
  GLPipeDream(int n, std::set<Cell> crosses);
  static GLPipeDream full(int n);

  static bool allowed(int n, int row, int col) { return row >= 1 && row < n && col >= row && col < n; }
  bool has(int row, int col) const { return crosses.count({row, col}) > 0; }
  auto operator<=>(const GLPipeDream&) const = default;
};

/// gz must be gz_polytope of an n-element lambda; g must contain a_lambda.
GLPipeDream face_to_gl(const Parapolytope& gz, const Face& g);
Face gl_to_face(const Parapolytope& gz, const GLPipeDream& d);

std::set<GLPipeDream> gl_pipe_mitosis(const GLPipeDream& d, int i);
std::string render(const GLPipeDream& d);

/// Geometric mitosis M_i read back through the diagram encodings.
std::set<SkewPipeDream> skew_geometric_mitosis(const Parapolytope& cone, const SkewPipeDream& d, int i);
std::set<GLPipeDream> gl_geometric_mitosis(const Parapolytope& gz, const GLPipeDream& d, int i);

struct CorrespondenceReport {
  int faces = 0;   // chain-reachable faces visited
  int checks = 0;  // (face, i) pairs compared
  std::string witness;
  bool ok() const { return witness.empty(); }
};

/// Compares the combinatorial rule with geometric mitosis on every face reached
/// from the vertex by mitosis chains, for every i.
CorrespondenceReport check_skew_correspondence(int n);
CorrespondenceReport check_gl_correspondence(int n);

std::string cells_string(const std::set<Cell>& cells);

/// Applies mitosis_{steps[0]}, mitosis_{steps[1]}, ... to the collection
/// starting at {start}; returns every stage, the start included.
std::vector<std::set<SkewPipeDream>> skew_chain(const SkewPipeDream& start, const std::vector<int>& steps);
std::vector<std::set<GLPipeDream>> gl_chain(const GLPipeDream& start, const std::vector<int>& steps);
/// One block per stage, headed "start" or "M_i", diagrams separated by blank lines.
std::string render_chain(const std::vector<std::set<SkewPipeDream>>& stages, const std::vector<int>& steps);
std::string render_chain(const std::vector<std::set<GLPipeDream>>& stages, const std::vector<int>& steps);

}  // namespace mitosis
