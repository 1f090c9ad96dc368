// Walks through a small code over F_5: encode, measure distance, and decide
// deep holes three ways.
#include <iostream>

#include "gprs/gprs.hpp"

using namespace gprs;

int main() {
  const Field f5 = Field::of_order(5);
  const GprsCode code = GprsCode::create(f5, std::vector<Symbol>{0, 4}, 2);  // D = {1, 2, 3}
  std::cout << "code " << code.to_string() << ", length " << code.length() << ", d = "
            << minimum_distance(code, Mode::formula) << ", rho = " << covering_radius(code, Mode::formula) << "\n";

  const ReceivedWord c = encode(code, Polynomial(f5, {3, 2}));  // 2x + 3
  std::cout << "codeword of 2x+3: " << c.to_string() << "\n";

  // x^2 on D: degree k, so the subset-sum criterion applies.
  const ReceivedWord u = word_from_poly(code, Polynomial(f5, {0, 0, 1}));
  std::cout << "word of x^2: " << u.to_string() << ", d(u, C) = " << error_distance(code, u) << "\n";

  const DeepHoleVerdict oracle = is_deep_hole_oracle(code, u);
  const DeepHoleVerdict mds = is_deep_hole_mds_extension(code, u);
  const DeepHoleVerdict subset = thm14_criterion(code);
  std::cout << "oracle: " << (oracle.is_deep_hole ? "deep hole" : "not a deep hole") << "\n";
  std::cout << "mds extension: " << (mds.is_deep_hole ? "deep hole" : "not a deep hole");
  if (mds.witness) std::cout << ", singular columns " << witness_to_string(code, *mds.witness);
  std::cout << "\nsubset sums: " << (subset.is_deep_hole ? "deep hole" : "not a deep hole");
  if (subset.witness) std::cout << ", zero-sum subset " << witness_to_string(code, *subset.witness);
  std::cout << "\n";

  // (x - 4)^3 with 4 excluded: the shifted criterion decides.
  const GprsCode wide = GprsCode::create(f5, std::vector<Symbol>{4}, 2);
  const WordFamilySpec spec{FamilyKind::shifted_qminus2, 1, 0, 4, {0}};
  const ReceivedWord w = build_family_word(wide, spec);
  std::cout << "shifted word " << w.to_string() << " on " << wide.to_string() << ": criterion says "
            << (thm15_criterion(wide, Symbol{4}).is_deep_hole ? "deep hole" : "not a deep hole") << ", oracle says "
            << (is_deep_hole_oracle(wide, w).is_deep_hole ? "deep hole" : "not a deep hole") << "\n";
}
