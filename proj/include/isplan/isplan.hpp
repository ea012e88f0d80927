// Copyright 2026 The isplan Authors.
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

#pragma once

#include "isplan/discourse.hpp"
#include "isplan/discourse_model.hpp"
#include "isplan/document.hpp"
#include "isplan/error.hpp"
#include "isplan/interlingua.hpp"
#include "isplan/knowledge.hpp"
#include "isplan/lexicon.hpp"
#include "isplan/linearizer.hpp"
#include "isplan/pipeline.hpp"
#include "isplan/planner.hpp"
#include "isplan/stats.hpp"
