// Copyright 2026 The divlab Authors
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

#ifndef DIVLAB_DIVLAB_HPP
#define DIVLAB_DIVLAB_HPP

#include "divlab/channels.hpp"
#include "divlab/config.hpp"
#include "divlab/convexity.hpp"
#include "divlab/divergences.hpp"
#include "divlab/identities.hpp"
#include "divlab/io.hpp"
#include "divlab/matrix.hpp"
#include "divlab/parallel.hpp"
#include "divlab/random.hpp"
#include "divlab/stein.hpp"

#endif  // DIVLAB_DIVLAB_HPP
