#pragma once

// Umbrella header: the carries-chain library in one include.

#include "carries/carries_matrix.hpp"
#include "carries/check.hpp"
#include "carries/combinatorics.hpp"
#include "carries/eigenstructure.hpp"
#include "carries/foulkes.hpp"
#include "carries/idempotents.hpp"
#include "carries/json_io.hpp"
#include "carries/matrix.hpp"
#include "carries/permutation.hpp"
#include "carries/polynomial.hpp"
#include "carries/rational.hpp"
#include "carries/rng.hpp"
#include "carries/shuffle_stats.hpp"
#include "carries/verify.hpp"
