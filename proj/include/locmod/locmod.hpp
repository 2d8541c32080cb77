#pragma once

#include "locmod/charts.hpp"
#include "locmod/exactalg.hpp"
#include "locmod/latticechain.hpp"
#include "locmod/version.hpp"
#include "locmod/worstpoint.hpp"
