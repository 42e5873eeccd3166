#ifndef SYMLAB_SYMLAB_HPP
#define SYMLAB_SYMLAB_HPP

#include "asymptotic.hpp"
#include "error.hpp"
#include "graded_family.hpp"
#include "groebner.hpp"
#include "ideal.hpp"
#include "ideal_ops.hpp"
#include "monomial.hpp"
#include "monomial_ideal.hpp"
#include "newton.hpp"
#include "order.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "simplex.hpp"
#include "symbolic_powers.hpp"
#include "text.hpp"
#include "valuation.hpp"

#endif
