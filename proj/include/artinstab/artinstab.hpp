// Copyright 2026 The artinstab Authors
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

#ifndef ARTINSTAB_ARTINSTAB_HPP_
#define ARTINSTAB_ARTINSTAB_HPP_

#include "artinstab/catalog.hpp"
#include "artinstab/classify.hpp"
#include "artinstab/error.hpp"
#include "artinstab/graph.hpp"
#include "artinstab/oracle.hpp"
#include "artinstab/orbit.hpp"
#include "artinstab/stability.hpp"
#include "artinstab/twist.hpp"

#endif  // ARTINSTAB_ARTINSTAB_HPP_
