/**************************************************************************
 * qmds.hpp
 *
 * Copyright 2026 The qmds Authors
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
 **************************************************************************/

#pragma once

#include "qmds/bounds.hpp"
#include "qmds/classify.hpp"
#include "qmds/code.hpp"
#include "qmds/combinatorics.hpp"
#include "qmds/constructions.hpp"
#include "qmds/extension.hpp"
#include "qmds/field.hpp"
#include "qmds/matrix.hpp"
#include "qmds/poly.hpp"
#include "qmds/pseudoarc.hpp"
#include "qmds/serialize.hpp"
#include "qmds/weights.hpp"
