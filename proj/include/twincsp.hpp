// Copyright 2026 The twincsp Authors
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

#ifndef TWINCSP_HPP_
#define TWINCSP_HPP_

#include "twincsp/canonical.hpp"
#include "twincsp/csp.hpp"
#include "twincsp/enumeration.hpp"
#include "twincsp/error.hpp"
#include "twincsp/graph.hpp"
#include "twincsp/io.hpp"
#include "twincsp/trade.hpp"
#include "twincsp/twin.hpp"
#include "twincsp/vertex_set.hpp"

#endif  // TWINCSP_HPP_
