// Copyright 2026 The clothoidfit Authors
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

#ifndef CLOTHOIDFIT_CLOTHOIDFIT_HPP
#define CLOTHOIDFIT_CLOTHOIDFIT_HPP

#include "clothoidfit/clothoid_curve.hpp"
#include "clothoidfit/errors.hpp"
#include "clothoidfit/fitter.hpp"
#include "clothoidfit/fresnel.hpp"
#include "clothoidfit/generalized_fresnel.hpp"

#endif // CLOTHOIDFIT_CLOTHOIDFIT_HPP
