#ifndef GAUDINLAB_POLYNOMIAL_HPP
#define GAUDINLAB_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "gaudinlab/matrix.hpp"
#include "gaudinlab/rational.hpp"

namespace gaudinlab {

// Univariate polynomial over Q, coeffs[k] is the coefficient of t^k.
// Trailing zeros are stripped; the zero polynomial is the empty vector.
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
bool poly_is_zero(const Poly& p);
int poly_degree(const Poly& p);  // -1 for the zero polynomial

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Rat& c, const Poly& a);
Poly poly_derivative(const Poly& a);
Poly poly_monic(const Poly& a);

/// Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

Rat poly_eval(const Poly& p, const Rat& x);
QMatrix poly_eval_matrix(const Poly& p, const QMatrix& m);

/// Yun's squarefree decomposition: p = c * prod factor_i^mult_i with monic,
/// pairwise coprime, squarefree factors. Rejects the zero polynomial.
std::vector<std::pair<Poly, int>> squarefree_split(const Poly& p);

std::string poly_str(const Poly& p);  // human-readable, variable "t"

}  // namespace gaudinlab

#endif
