#pragma once

#include "tpa/algebra.hpp"
#include "tpa/constructions.hpp"
#include "tpa/error.hpp"
#include "tpa/graded.hpp"
#include "tpa/identity.hpp"
#include "tpa/io.hpp"
#include "tpa/linsolve.hpp"
#include "tpa/models.hpp"
#include "tpa/polynomial.hpp"
#include "tpa/scalar.hpp"
#include "tpa/solvers.hpp"
#include "tpa/tp_field.hpp"
