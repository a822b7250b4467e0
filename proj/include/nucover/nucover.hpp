#pragma once

#include "nucover/bnb.hpp"
#include "nucover/cover.hpp"
#include "nucover/geometry.hpp"
#include "nucover/modulus.hpp"
#include "nucover/oracle.hpp"
#include "nucover/problem.hpp"
#include "nucover/test_functions.hpp"
