// Copyright 2026 The qfm Authors
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

#include "qfm/alpha_engines.hpp"
#include "qfm/bitset.hpp"
#include "qfm/cut_engines.hpp"
#include "qfm/error.hpp"
#include "qfm/evaluate.hpp"
#include "qfm/fuzzy_core.hpp"
#include "qfm/fuzzy_number.hpp"
#include "qfm/probabilistic_engine.hpp"
#include "qfm/quantifier.hpp"
#include "qfm/ranking.hpp"
#include "qfm/ruspini.hpp"
#include "qfm/sandwich.hpp"
