#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlab/check.hpp"
#include "qlab/ring/multipoly.hpp"

namespace qlab::shapes {

using ring::MultiPoly;

using Cell = std::pair<int, int>;  // (row, col), row 1 on top

class SkewShape {
 public:
  // Translates so that min row = min col = 1 and sorts.  Throws if empty.
  explicit SkewShape(std::vector<Cell> cells);
  // sigma/rho in English notation; empty rows are dropped by the translation.
  static SkewShape from_partitions(const std::vector<int>& sigma, const std::vector<int>& rho);

  const std::vector<Cell>& cells() const { return cells_; }
  int col() const { return col_; }
  int row() const { return row_; }
  int area() const { return static_cast<int>(cells_.size()); }
  int maxdiag() const { return maxdiag_; }

  bool connected() const;
  // (sigma, rho) with rho padded by zeros, if the cell set is a skew diagram.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> partitions() const;

  std::string to_string() const;  // sigma/rho
  std::string ascii() const;

  friend bool operator==(const SkewShape& a, const SkewShape& b) { return a.cells_ == b.cells_; }
  friend bool operator<(const SkewShape& a, const SkewShape& b) { return a.cells_ < b.cells_; }

 private:
  std::vector<Cell> cells_;
  int col_ = 0, row_ = 0, maxdiag_ = 0;
};

// Connected skew shapes with area <= max_area, sorted, each once.
std::vector<SkewShape> enumerate_shapes(int max_area);

enum class Step { up, down, red, blue };
char step_char(Step s);  // U D R B

struct Motzkin2Path {
  std::vector<Step> steps;
  std::vector<int> start_heights() const;
  int height() const;
  bool valid() const;
  std::string to_string() const;
};

Motzkin2Path parse_path(const std::string& s);

std::vector<Motzkin2Path> enumerate_motzkin2(std::size_t length, int max_height);

// Product of generators at each step's starting height: red -> a, blue -> b, up -> c, down -> d.
struct Generators {
  std::function<MultiPoly(int)> a, b, c, d;
};
MultiPoly path_weight(const Motzkin2Path& p, const Generators& g);
// a_n = q^{n+1}y, b_n = q^{n+1}x, c_n = q^{n+1}xy, d_n = q^{n+1}.
Generators shape_generators();

// The weight as a word: (letter, height) -> multiplicity.
using WeightWord = std::map<std::pair<char, int>, int>;
WeightWord path_weight_word(const Motzkin2Path& p);
std::string word_to_string(const WeightWord& w);

// Boundary paths u, d as strings over {N, E}.
std::pair<std::string, std::string> phi_boundaries(const Motzkin2Path& p);
SkewShape shape_from_boundaries(const std::string& u, const std::string& d);
SkewShape phi(const Motzkin2Path& p);
// Reads the path back off the boundary pairs.
std::pair<std::string, std::string> shape_boundaries(const SkewShape& s);
Motzkin2Path phi_inverse(const SkewShape& s);

// 1 + sum over steps of (starting height + 1).
int path_area(const Motzkin2Path& p);

// Sum of x^col y^row q^area.
MultiPoly gen_poly_shapes(int max_area);
MultiPoly gen_poly_shapes(const std::vector<SkewShape>& shapes);
// qxy * wt over paths of height <= max_height, truncated to q-degree <= area_bound.
MultiPoly gen_poly_paths(int max_height, int area_bound);

// Paths with height <= max_height and area <= area_bound, i.e. length <= area_bound - 1.
std::vector<Motzkin2Path> paths_up_to_area(int max_height, int area_bound);

// Coefficients of q^0..q^{order-1} of a polynomial in x, y, q, each a polynomial in x, y.
std::vector<MultiPoly> by_q_degree(const MultiPoly& p, std::size_t order);

// The path drawn in the Motzkin path figure and the shape drawn as its image.
Motzkin2Path figure_path();
std::pair<std::string, std::string> figure_boundaries();

// Suites.
Report check_shapes_basic(int max_area);
Report bijection_audit(int max_height, int area_bound);
Report check_thm_main1(int m_max, int area_bound);
Report check_thm_bm(int area_bound);

}  // namespace qlab::shapes
