/*
 * Copyright 2026 The cyclepat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Everything except cyclepat/io.hpp, which additionally needs nlohmann/json.

#include "cyclepat/common.hpp"
#include "cyclepat/graph.hpp"
#include "cyclepat/pattern.hpp"
#include "cyclepat/lp.hpp"
#include "cyclepat/realize.hpp"
#include "cyclepat/parity.hpp"
#include "cyclepat/games.hpp"
#include "cyclepat/families.hpp"
#include "cyclepat/linear_form.hpp"
#include "cyclepat/ldt_probe.hpp"
#include "cyclepat/extended.hpp"
#include "cyclepat/random.hpp"
#include "cyclepat/instances.hpp"
