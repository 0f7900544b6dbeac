#pragma once

#include "agl/rational.hpp"
#include "agl/var.hpp"
#include "agl/poly.hpp"
#include "agl/ratfunc.hpp"
#include "agl/special.hpp"
#include "agl/shift.hpp"
#include "agl/permutation.hpp"
#include "agl/skew.hpp"
#include "agl/lattice.hpp"
#include "agl/generators.hpp"
#include "agl/matrix.hpp"
#include "agl/relations.hpp"
#include "agl/gt.hpp"
#include "agl/expr.hpp"
#include "agl/toy.hpp"
#include "agl/json.hpp"
