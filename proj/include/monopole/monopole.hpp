// Copyright 2026 The Monopole Harmonics Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MONOPOLE_MONOPOLE_HPP_
#define MONOPOLE_MONOPOLE_HPP_

#include "monopole/errors.hpp"
#include "monopole/exact_algebra.hpp"
#include "monopole/gauge_geometry.hpp"
#include "monopole/jacobi.hpp"
#include "monopole/monopole_harmonics.hpp"
#include "monopole/random.hpp"
#include "monopole/selection_rules.hpp"
#include "monopole/sphere_quadrature.hpp"
#include "monopole/wigner.hpp"

#endif  // MONOPOLE_MONOPOLE_HPP_
