#pragma once

#include "arrangement.hpp"
#include "corollaries.hpp"
#include "dimension_search.hpp"
#include "errors.hpp"
#include "exact_linalg.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "witness.hpp"
