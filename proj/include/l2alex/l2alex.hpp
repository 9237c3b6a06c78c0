// Copyright 2026 The l2alex Authors.
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

#pragma once

// Everything except the JSON, cache and check layers, which pull in
// nlohmann/json and OpenSSL.

#include "l2alex/dsl.hpp"
#include "l2alex/error.hpp"
#include "l2alex/exponent.hpp"
#include "l2alex/fk_formal.hpp"
#include "l2alex/formulas.hpp"
#include "l2alex/integer.hpp"
#include "l2alex/link_model.hpp"
#include "l2alex/link_spec.hpp"
#include "l2alex/norm_geometry.hpp"
#include "l2alex/torsion.hpp"
#include "l2alex/torsion_class.hpp"
