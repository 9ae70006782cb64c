#pragma once

// Umbrella header for the mmmnum library.

#include "atiyah_kodaira.hpp"
#include "char_numbers.hpp"
#include "flavor.hpp"
#include "newton.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"
#include "symmetric.hpp"
