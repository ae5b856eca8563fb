#pragma once

#include <vector>

#include "vk/gauss.hpp"
#include "vk/laurent.hpp"

namespace vk {

using PolyMatrix = std::vector<std::vector<LaurentPolynomial2>>;

// I - W, where W sends the incoming semi-arcs of each crossing to its outgoing ones through the
// 2x2 block [[1 - xy, x], [y, 0]] (positive) or its inverse (negative). Semi-arc k runs from
// circle position k to k + 1.
PolyMatrix sawollek_matrix(const GaussDiagram& d);

// Fraction-free elimination with exact Laurent division.
LaurentPolynomial2 determinant(const PolyMatrix& m);
// Laplace expansion memoized on column subsets; exponential, kept as a cross-check.
LaurentPolynomial2 determinant_by_cofactors(const PolyMatrix& m);

LaurentPolynomial2 sawollek_raw(const GaussDiagram& d);
// The raw determinant times (xy)^k, with k chosen so the least power of x is 0.
LaurentPolynomial2 normalize_sawollek(const LaurentPolynomial2& raw);
LaurentPolynomial2 normalized_sawollek(const GaussDiagram& d);
bool distinguishes_inverse(const GaussDiagram& d);

}  // namespace vk
