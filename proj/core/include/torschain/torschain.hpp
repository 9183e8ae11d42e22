#pragma once

#include "torschain/chains.hpp"
#include "torschain/chainspace.hpp"
#include "torschain/errors.hpp"
#include "torschain/ff_linalg.hpp"
#include "torschain/greenseq.hpp"
#include "torschain/hall.hpp"
#include "torschain/index_set.hpp"
#include "torschain/rational.hpp"
#include "torschain/repcat.hpp"
#include "torschain/stability.hpp"
#include "torschain/torsion.hpp"
