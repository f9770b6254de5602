// Copyright 2026 The ipoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <chrono>

#include "worked_examples.hpp"

namespace ipoly::cli {
namespace {

class WorkedExampleTest : public ::testing::TestWithParam<WorkedExample> {};

TEST_P(WorkedExampleTest, OracleThenLibrary) {
  const auto& e = GetParam();
  ASSERT_EQ(e.oracle(), e.expected) << "oracle disagrees with the literal";
  EXPECT_EQ(e.library(), e.expected);
}

INSTANTIATE_TEST_SUITE_P(
    Table, WorkedExampleTest, ::testing::ValuesIn(worked_examples()),
    [](const ::testing::TestParamInfo<WorkedExample>& info) {
      std::string s;
      for (char ch : info.param.name) {
        s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
      }
      return s + "_" + std::to_string(info.index);
    });

TEST(WorkedExampleTableTest, RunsUnderOneSecond) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_worked_examples();
  const auto dt = std::chrono::steady_clock::now() - t0;
  EXPECT_LT(std::chrono::duration<double>(dt).count(), 1.0);
  for (const auto& r : results) EXPECT_TRUE(r.oracle_ok && r.library_ok) << r.name << r.detail;
}

}  // namespace
}  // namespace ipoly::cli
