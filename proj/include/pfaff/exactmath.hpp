#pragma once

#include "pfaff/exactmath/errors.hpp"
#include "pfaff/exactmath/factor.hpp"
#include "pfaff/exactmath/matrix.hpp"
#include "pfaff/exactmath/parse.hpp"
#include "pfaff/exactmath/poly.hpp"
#include "pfaff/exactmath/poly_gcd.hpp"
#include "pfaff/exactmath/quadratic.hpp"
#include "pfaff/exactmath/random.hpp"
#include "pfaff/exactmath/ratfunc.hpp"
#include "pfaff/exactmath/rational.hpp"
#include "pfaff/exactmath/symbol.hpp"
