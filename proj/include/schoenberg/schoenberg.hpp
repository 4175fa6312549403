#pragma once

#include "complex_coeffs.hpp"
#include "dimension_walk_complex.hpp"
#include "dimension_walk_real.hpp"
#include "disk_polys.hpp"
#include "errors.hpp"
#include "function_library.hpp"
#include "gegenbauer.hpp"
#include "json_io.hpp"
#include "quadrature.hpp"
#include "real_coeffs.hpp"
#include "spd.hpp"
