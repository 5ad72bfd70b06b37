// Copyright 2026 The Spataudio Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPATAUDIO_TESTS_SUPPORT_ERROR_MATCHERS_H_
#define SPATAUDIO_TESTS_SUPPORT_ERROR_MATCHERS_H_

#include <gtest/gtest.h>

#include <string>

#include "spataudio/error.h"

namespace spataudio::testing {

// Runs `f` and returns the kind of the spataudio::Error it throws.
template <typename F>
ErrorKind KindOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a spataudio::Error";
  return ErrorKind::kIo;
}

// Runs `f` and returns the message of the spataudio::Error it throws.
template <typename F>
std::string MessageOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  ADD_FAILURE() << "expected a spataudio::Error";
  return "";
}

}  // namespace spataudio::testing

#endif  // SPATAUDIO_TESTS_SUPPORT_ERROR_MATCHERS_H_
