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

#pragma once

#include "ipoly/conv.hpp"
#include "ipoly/errors.hpp"
#include "ipoly/euclid.hpp"
#include "ipoly/ff.hpp"
#include "ipoly/instrument.hpp"
#include "ipoly/modmul.hpp"
#include "ipoly/mulbase.hpp"
#include "ipoly/reference.hpp"
#include "ipoly/region.hpp"
#include "ipoly/toeplitz.hpp"
