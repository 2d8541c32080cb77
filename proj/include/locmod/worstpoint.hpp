#pragma once

#include "locmod/worstpoint/census.hpp"
#include "locmod/worstpoint/npoint.hpp"
#include "locmod/worstpoint/symplectic.hpp"
