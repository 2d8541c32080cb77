#pragma once

#include "locmod/charts/chart.hpp"
#include "locmod/charts/mutation.hpp"
#include "locmod/charts/oracle.hpp"
#include "locmod/charts/symbolic.hpp"
#include "locmod/charts/verify.hpp"
