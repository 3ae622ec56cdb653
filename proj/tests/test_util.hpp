#pragma once

#include <doctest.h>

#include <string>

#include "moufang/error.hpp"
#include "moufang/loop.hpp"

namespace moufang::test {

// Error code thrown by f; fails the test when nothing is thrown.
ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no moufang::Error thrown");
  return ErrorCode::IoError;
}

inline Elem named(const Loop& l, const std::string& name) {
  for (Elem x = 0; x < l.order(); ++x)
    if (l.element_name(x) == name) return x;
  FAIL("no element named " << name);
  return 0;
}

}  // namespace moufang::test
