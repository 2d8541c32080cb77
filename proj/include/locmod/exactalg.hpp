#pragma once

#include "locmod/exactalg/error.hpp"
#include "locmod/exactalg/finite_field.hpp"
#include "locmod/exactalg/linalg.hpp"
#include "locmod/exactalg/matrix.hpp"
#include "locmod/exactalg/polynomial.hpp"
#include "locmod/exactalg/quotient_pi.hpp"
#include "locmod/exactalg/rational.hpp"
#include "locmod/exactalg/ring.hpp"
#include "locmod/exactalg/upoly.hpp"
