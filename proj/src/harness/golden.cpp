#include "qlab/harness/harness.hpp"
#include "qlab/kishore/kishore.hpp"
#include "qlab/shapes/shapes.hpp"

namespace qlab::harness {

std::vector<std::pair<std::string, std::string>> golden_documents() {
  std::vector<std::pair<std::string, std::string>> docs;

  std::string beta = "# beta_n in Z[q,t,u], n = 0..12\n";
  for (const auto& b : kishore::beta_hahn(13)) beta += std::to_string(b.n) + ": " + b.poly.to_string() + "\n";
  docs.emplace_back("beta.txt", beta);

  std::string gen = "# sum of x^col y^row q^area over connected skew shapes, area <= 10\n";
  auto byq = shapes::by_q_degree(shapes::gen_poly_shapes(10), 11);
  for (std::size_t a = 1; a < byq.size(); ++a) gen += "q^" + std::to_string(a) + ": " + byq[a].to_string() + "\n";
  docs.emplace_back("gen_poly_area10.txt", gen);

  auto p = shapes::figure_path();
  auto [u, d] = shapes::phi_boundaries(p);
  auto s = shapes::phi(p);
  std::string fig = "# the figure path and its image\n";
  fig += "path: " + p.to_string() + "\n";
  fig += "height: " + std::to_string(p.height()) + "\n";
  fig += "weight: " + shapes::word_to_string(shapes::path_weight_word(p)) + "\n";
  fig += "weight_monomial: " + shapes::path_weight(p, shapes::shape_generators()).to_string() + "\n";
  fig += "upper: " + u + "\n";
  fig += "lower: " + d + "\n";
  fig += "shape: " + s.to_string() + "\n";
  fig += "col,row,area,maxdiag: " + std::to_string(s.col()) + "," + std::to_string(s.row()) + "," +
         std::to_string(s.area()) + "," + std::to_string(s.maxdiag()) + "\n";
  fig += s.ascii();
  docs.emplace_back("figure.txt", fig);
  return docs;
}

}  // namespace qlab::harness
