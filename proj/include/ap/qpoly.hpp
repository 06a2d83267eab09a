#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ap/rational.hpp"

namespace ap {

/// Dense univariate polynomial over the rationals, coefficients low-to-high,
/// no trailing zero coefficients (the zero polynomial is the empty vector).
using QPoly = std::vector<Rational>;

QPoly qp_trim(QPoly p);
QPoly qp_from(std::initializer_list<long> coeffs);
bool qp_is_zero(const QPoly& p);
int qp_deg(const QPoly& p);  // deg(0) == -1
Rational qp_lead(const QPoly& p);
bool qp_is_monic(const QPoly& p);

QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const Rational& s);
QPoly qp_derivative(const QPoly& p);
Rational qp_eval(const QPoly& p, const Rational& x);

/// Quotient and remainder with deg(rem) < deg(b); b must be nonzero.
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);

/// Monic gcd.
QPoly qp_gcd(QPoly a, QPoly b);

/// Makes the polynomial monic (must be nonzero).
QPoly qp_monic(const QPoly& p);

/// Sturm sequence of p (p need not be squarefree; the sequence is of the
/// squarefree part's signs, which is what root counting requires).
std::vector<QPoly> sturm_sequence(const QPoly& p);

/// Number of distinct real roots of p in the open interval (a, b).
/// Requires p(a) != 0 and p(b) != 0.
int sturm_count(const std::vector<QPoly>& seq, const Rational& a, const Rational& b);

/// Interval evaluation: the image of [lo, hi] under p is contained in the
/// returned [min, max] (Horner with monotone interval bounds).
std::pair<Rational, Rational> qp_eval_interval(const QPoly& p, const Rational& lo, const Rational& hi);

/// Irreducibility over Q of a nonconstant polynomial (complete decision:
/// modular factorization, Hensel lifting and factor recombination).
bool qp_irreducible(const QPoly& p);

/// m-th cyclotomic polynomial (integer coefficients).
QPoly cyclotomic(unsigned m);

/// Minimal polynomial of 2*cos(2*pi/m) over Q, m >= 3: obtained from the
/// cyclotomic polynomial by the x + 1/x degree-halving substitution.
QPoly real_cyclotomic_minpoly(unsigned m);

/// Isolating interval (a, b) for the largest real root of p (squarefree,
/// with at least one real root); endpoints are non-roots.
std::pair<Rational, Rational> isolate_largest_root(const QPoly& p);

std::string qp_str(const QPoly& p, const std::string& var = "x");

}  // namespace ap
