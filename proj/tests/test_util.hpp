#pragma once

#include <ostream>

#include <gtest/gtest.h>

#include "locmod/exactalg.hpp"

namespace locmod {

// readable gtest failure output
template <RingElement E>
void PrintTo(const Mat<E>& m, std::ostream* os) {
  *os << m.shape() << " " << m.str();
}

}  // namespace locmod

namespace testutil {

template <class F>
locmod::Errc code_of(F&& f) {
  try {
    f();
  } catch (const locmod::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return locmod::Errc::InvalidArgument;
}

}  // namespace testutil
