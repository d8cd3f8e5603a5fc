#pragma once

#include "arith.hpp"
#include "bivar_poly.hpp"
#include "colon.hpp"
#include "conjecture.hpp"
#include "graded_oracle.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "unipoly.hpp"
#include "wlp_matrix.hpp"
