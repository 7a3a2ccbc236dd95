// Copyright 2026 The supercat Authors
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

#ifndef SUPERCAT_SUPERCAT_HPP
#define SUPERCAT_SUPERCAT_HPP

#include "supercat/bijections.hpp"
#include "supercat/enumerate.hpp"
#include "supercat/numbers.hpp"
#include "supercat/path.hpp"
#include "supercat/report.hpp"
#include "supercat/svg.hpp"
#include "supercat/verify.hpp"

#endif  // SUPERCAT_SUPERCAT_HPP
