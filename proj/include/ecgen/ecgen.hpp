#pragma once

#include "ecgen/error.hpp"
#include "ecgen/mpint.hpp"
#include "ecgen/field.hpp"
#include "ecgen/curve.hpp"
#include "ecgen/point_format.hpp"
#include "ecgen/scalar_mul.hpp"
#include "ecgen/keygen.hpp"
#include "ecgen/curve_file.hpp"
