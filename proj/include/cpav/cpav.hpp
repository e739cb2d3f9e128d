#pragma once

// Umbrella header.

#include "cpav/closedforms.hpp"
#include "cpav/common.hpp"
#include "cpav/families.hpp"
#include "cpav/golden.hpp"
#include "cpav/json_io.hpp"
#include "cpav/oracle.hpp"
#include "cpav/permutation.hpp"
#include "cpav/polynomial.hpp"
#include "cpav/series.hpp"
#include "cpav/verify.hpp"
