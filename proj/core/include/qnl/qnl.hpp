// Copyright 2026 The qnl Authors
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

#include "qnl/channels.hpp"
#include "qnl/error.hpp"
#include "qnl/format.hpp"
#include "qnl/linalg.hpp"
#include "qnl/measures.hpp"
#include "qnl/sampling.hpp"
#include "qnl/states.hpp"
#include "qnl/thresholds.hpp"
#include "qnl/werner_oracle.hpp"
