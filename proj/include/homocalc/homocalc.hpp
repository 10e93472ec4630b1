// Copyright 2026 The homocalc Authors
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

#ifndef HOMOCALC_HOMOCALC_HPP_
#define HOMOCALC_HOMOCALC_HPP_

#include "homocalc/convexsets.hpp"
#include "homocalc/error.hpp"
#include "homocalc/fcalc.hpp"
#include "homocalc/homog.hpp"
#include "homocalc/lattice.hpp"
#include "homocalc/sphere.hpp"
#include "homocalc/verify.hpp"

#endif  // HOMOCALC_HOMOCALC_HPP_
