// Copyright 2026 The ptwalk Authors
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

#ifndef PTWALK_PTWALK_HPP_
#define PTWALK_PTWALK_HPP_

#include "ptwalk/centrality.hpp"
#include "ptwalk/errors.hpp"
#include "ptwalk/fixtures.hpp"
#include "ptwalk/graph.hpp"
#include "ptwalk/io.hpp"
#include "ptwalk/randnet.hpp"
#include "ptwalk/spectral.hpp"
#include "ptwalk/stats.hpp"
#include "ptwalk/walk.hpp"

#endif  // PTWALK_PTWALK_HPP_
