// Copyright 2026 The eprgame Authors
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

#ifndef EPRGAME_EPRGAME_HPP_
#define EPRGAME_EPRGAME_HPP_

#include "eprgame/family.hpp"
#include "eprgame/game.hpp"
#include "eprgame/io.hpp"
#include "eprgame/monte_carlo.hpp"
#include "eprgame/nash.hpp"
#include "eprgame/probability.hpp"
#include "eprgame/quantum_source.hpp"
#include "eprgame/random.hpp"
#include "eprgame/sweep.hpp"

#endif  // EPRGAME_EPRGAME_HPP_
