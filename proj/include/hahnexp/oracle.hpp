#ifndef HAHNEXP_ORACLE_HPP
#define HAHNEXP_ORACLE_HPP

#include <map>
#include <vector>

#include "hahnexp/rational.hpp"

namespace hahnexp {

// Naive reference model for series arithmetic over finitely many exponent
// basis points: sparse multivariate Laurent polynomials whose monomials are
// integer exponent vectors in lexicographic order (index 0 = smallest basis
// point). Deliberately self-contained: nothing here touches the series or
// Hahn types, so the two implementations can only agree by computing the
// same thing.

/// Exponent vector -> coefficient; std::vector's lexicographic operator<
/// is exactly the monomial order induced by the series field.
using LaurentPoly = std::map<std::vector<long>, Rational>;

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_neg(const LaurentPoly& a);
LaurentPoly laurent_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Sign of the coefficient at the lex-least monomial; 0 for the zero
/// polynomial.
int laurent_sign(const LaurentPoly& a);
int laurent_cmp(const LaurentPoly& a, const LaurentPoly& b);

/// Lex-least monomial (the valuation); empty optional for zero.
std::optional<std::vector<long>> laurent_valuation(const LaurentPoly& a);

} // namespace hahnexp

#endif
