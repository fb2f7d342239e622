#pragma once

#include "band_matrix.hpp"
#include "bench.hpp"
#include "checks.hpp"
#include "counting.hpp"
#include "dense.hpp"
#include "errors.hpp"
#include "extended_float.hpp"
#include "inverse_core.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rational_function.hpp"
#include "scalar.hpp"
#include "symbolic_engine.hpp"
