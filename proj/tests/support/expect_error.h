// Copyright 2026 The evcoref Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVCOREF_TESTS_SUPPORT_EXPECT_ERROR_H_
#define EVCOREF_TESTS_SUPPORT_EXPECT_ERROR_H_

#include <gtest/gtest.h>

#include "evcoref/error.h"

#define EXPECT_ERROR_CODE(statement, error_code)                          \
  do {                                                                    \
    try {                                                                 \
      statement;                                                          \
      ADD_FAILURE() << "expected " << ::evcoref::ErrorCodeName(error_code); \
    } catch (const ::evcoref::Error& e) {                                 \
      EXPECT_EQ(e.code(), error_code) << e.what();                        \
    }                                                                     \
  } while (0)

#endif  // EVCOREF_TESTS_SUPPORT_EXPECT_ERROR_H_
