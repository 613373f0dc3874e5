// Copyright 2026 The qcsat Authors
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

#include "qcsat/amplifier.hpp"
#include "qcsat/cnf.hpp"
#include "qcsat/compiler.hpp"
#include "qcsat/entropy.hpp"
#include "qcsat/gates.hpp"
#include "qcsat/json_io.hpp"
#include "qcsat/lindblad.hpp"
#include "qcsat/pipeline.hpp"
#include "qcsat/simulator.hpp"
