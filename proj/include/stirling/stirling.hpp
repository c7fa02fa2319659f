#pragma once

// Umbrella header: pulls in the whole library.

#include "arith.hpp"
#include "errors.hpp"
#include "permutations.hpp"
#include "polynomial.hpp"
#include "poset.hpp"
#include "shape.hpp"
#include "special_numbers.hpp"
#include "stirling_polynomials.hpp"
#include "systems.hpp"
#include "verify.hpp"
