#pragma once

#include "locmod/latticechain/case_matrices.hpp"
#include "locmod/latticechain/constants.hpp"
#include "locmod/latticechain/lattice.hpp"
